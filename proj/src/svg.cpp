#include "graphtda/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

namespace graphtda::svg {

namespace {

std::string num(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

std::string label(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

char const* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

// Linear map of [lo, hi] onto the plotting square.
struct Scale
{
    double lo;
    double hi;

    double x(double v) const { return kMargin + (v - lo) / (hi - lo) * (kCanvas - 2 * kMargin); }
    double y(double v) const { return kCanvas - kMargin - (v - lo) / (hi - lo) * (kCanvas - 2 * kMargin); }
};

Scale fit(std::vector<double> const& coords)
{
    if (coords.empty())
        return {0.0, 1.0};
    auto [mn, mx] = std::minmax_element(coords.begin(), coords.end());
    double lo = *mn;
    double hi = *mx;
    if (lo == hi) {
        lo -= 1.0;
        hi += 1.0;
    }
    auto const pad = (hi - lo) * 0.05;
    return {lo - pad, hi + pad};
}

std::string header()
{
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(kCanvas) + "\" height=\""
         + std::to_string(kCanvas) + "\" viewBox=\"0 0 " + std::to_string(kCanvas) + " " + std::to_string(kCanvas)
         + "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

std::string axes(Scale const& s)
{
    auto const lo = num(kMargin);
    auto const hi = num(kCanvas - kMargin);
    std::string out;
    out += "<g stroke=\"black\" stroke-width=\"1\">\n";
    out += "<line x1=\"" + lo + "\" y1=\"" + hi + "\" x2=\"" + hi + "\" y2=\"" + hi + "\"/>\n";
    out += "<line x1=\"" + lo + "\" y1=\"" + hi + "\" x2=\"" + lo + "\" y2=\"" + lo + "\"/>\n";
    out += "</g>\n";
    out += "<line class=\"diagonal\" x1=\"" + num(s.x(s.lo)) + "\" y1=\"" + num(s.y(s.lo)) + "\" x2=\""
         + num(s.x(s.hi)) + "\" y2=\"" + num(s.y(s.hi)) + "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
    out += "<g font-family=\"sans-serif\" font-size=\"10\" fill=\"black\">\n";
    out += "<text x=\"" + lo + "\" y=\"" + num(kCanvas - 10) + "\">" + label(s.lo) + "</text>\n";
    out += "<text x=\"" + num(kCanvas - kMargin - 30) + "\" y=\"" + num(kCanvas - 10) + "\">" + label(s.hi)
         + "</text>\n";
    out += "<text x=\"2\" y=\"" + hi + "\">" + label(s.lo) + "</text>\n";
    out += "<text x=\"2\" y=\"" + num(kMargin + 4) + "\">" + label(s.hi) + "</text>\n";
    out += "</g>\n";
    return out;
}

} // namespace

std::string render_diagrams(std::span<PersistenceDiagram const> diagrams)
{
    std::vector<double> coords;
    for (auto const& d : diagrams) {
        for (auto const& p : d.points) {
            if (p.birth.is_finite())
                coords.push_back(p.birth.finite());
            if (p.death.is_finite())
                coords.push_back(p.death.finite());
        }
        for (auto const& e : d.essential)
            if (e.birth.is_finite())
                coords.push_back(e.birth.finite());
    }
    auto const s = fit(coords);
    auto clamp = [&](Value v) { return v.is_finite() ? v.finite() : (v.is_neg_inf() ? s.lo : s.hi); };

    std::string out = header() + axes(s);
    for (auto const& d : diagrams) {
        auto const* colour = kPalette[static_cast<std::size_t>(d.dimension) % std::size(kPalette)];
        out += "<g class=\"degree-" + std::to_string(d.dimension) + "\" fill=\"" + colour + "\" stroke=\"" + colour
             + "\">\n";
        for (auto const& p : d.points) {
            auto const radius = 3.0 * std::sqrt(static_cast<double>(p.multiplicity));
            out += "<circle class=\"point\" cx=\"" + num(s.x(clamp(p.birth))) + "\" cy=\"" + num(s.y(clamp(p.death)))
                 + "\" r=\"" + num(radius) + "\"/>\n";
        }
        for (auto const& e : d.essential) {
            auto const x = num(s.x(clamp(e.birth)));
            auto const top = static_cast<double>(kMargin);
            out += "<line class=\"ray\" x1=\"" + x + "\" y1=\"" + num(s.y(clamp(e.birth))) + "\" x2=\"" + x
                 + "\" y2=\"" + num(top) + "\" stroke-width=\"" + num(1.0 + e.multiplicity) + "\"/>\n";
            out += "<path d=\"M " + num(s.x(clamp(e.birth)) - 4) + " " + num(top + 6) + " L " + x + " " + num(top)
                 + " L " + num(s.x(clamp(e.birth)) + 4) + " " + num(top + 6) + " Z\"/>\n";
        }
        out += "</g>\n";
    }
    out += "</svg>\n";
    return out;
}

std::string render_extended(ExtendedGrid const& grid)
{
    auto const s = fit(grid.axis);
    auto const n = grid.axis.size();
    std::size_t peak = 0;
    for (auto const& row : grid.values)
        for (auto v : row)
            peak = std::max(peak, v);

    // Each sample owns the cell reaching halfway to its neighbours.
    auto edge = [&](std::size_t i, bool upper) {
        if (upper)
            return i + 1 < n ? (grid.axis[i] + grid.axis[i + 1]) / 2.0 : s.hi;
        return i > 0 ? (grid.axis[i - 1] + grid.axis[i]) / 2.0 : s.lo;
    };

    std::string out = header();
    out += "<g class=\"heatmap\" stroke=\"none\">\n";
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto const v = grid.values[i][j];
            auto const shade = peak == 0 ? 0.0 : static_cast<double>(v) / static_cast<double>(peak);
            auto const level = static_cast<int>(std::lround(255.0 * (1.0 - 0.85 * shade)));
            char colour[16];
            std::snprintf(colour, sizeof colour, "#%02x%02xff", level, level);
            auto const x0 = s.x(edge(i, false));
            auto const x1 = s.x(edge(i, true));
            auto const y0 = s.y(edge(j, true));
            auto const y1 = s.y(edge(j, false));
            out += "<rect x=\"" + num(x0) + "\" y=\"" + num(y0) + "\" width=\"" + num(x1 - x0) + "\" height=\""
                 + num(y1 - y0) + "\" fill=\"" + colour + "\" data-u=\"" + label(grid.axis[i]) + "\" data-v=\""
                 + label(grid.axis[j]) + "\" data-value=\"" + std::to_string(v) + "\"/>\n";
        }
    out += "</g>\n";
    out += axes(s);
    out += "</svg>\n";
    return out;
}

} // namespace graphtda::svg
