#include "graphtda/persistence.hpp"

#include <algorithm>

namespace graphtda {

void PersistenceDiagram::normalize()
{
    for (auto const& p : points)
        if (!(p.birth < p.death))
            throw std::invalid_argument("diagram point needs birth < death");

    std::sort(points.begin(), points.end(), [](auto const& a, auto const& b) {
        return std::tie(a.birth, a.death) < std::tie(b.birth, b.death);
    });
    std::vector<DiagramPoint> merged;
    for (auto const& p : points) {
        if (p.multiplicity == 0)
            continue;
        if (!merged.empty() && merged.back().birth == p.birth && merged.back().death == p.death)
            merged.back().multiplicity += p.multiplicity;
        else
            merged.push_back(p);
    }
    points = std::move(merged);

    std::sort(essential.begin(), essential.end(), [](auto const& a, auto const& b) { return a.birth < b.birth; });
    std::vector<EssentialPoint> merged_ess;
    for (auto const& e : essential) {
        if (e.multiplicity == 0)
            continue;
        if (!merged_ess.empty() && merged_ess.back().birth == e.birth)
            merged_ess.back().multiplicity += e.multiplicity;
        else
            merged_ess.push_back(e);
    }
    essential = std::move(merged_ess);
}

std::size_t PersistenceDiagram::proper_count() const
{
    std::size_t n = 0;
    for (auto const& p : points)
        n += p.multiplicity;
    return n;
}

std::size_t PersistenceDiagram::essential_count() const
{
    std::size_t n = 0;
    for (auto const& e : essential)
        n += e.multiplicity;
    return n;
}

namespace {

using Column = std::vector<std::size_t>; // sorted filtration positions

// Z/2 sum of two sorted columns.
void add_into(Column& target, Column const& source)
{
    Column out;
    out.reserve(target.size() + source.size());
    std::set_symmetric_difference(target.begin(), target.end(), source.begin(), source.end(),
                                  std::back_inserter(out));
    target.swap(out);
}

} // namespace

std::vector<PersistenceDiagram> reduce(FilteredComplex const& fc, int max_dim)
{
    if (max_dim < 0)
        throw std::invalid_argument("max_dim must be >= 0");
    if (fc.monotonicity_violation())
        throw std::invalid_argument("filtration is not monotone: a face has a larger value than its coface");

    auto const& k = fc.complex();
    auto const simplices = k.simplices();
    auto const values = fc.values();
    auto const top_dim = max_dim + 1;

    // Canonical index order is (dimension, vertices), so sorting stably by
    // value yields the (value, dimension, vertices) filtration order.
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < simplices.size(); ++i)
        if (simplices[i].dimension() <= top_dim)
            order.push_back(i);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a] < values[b]; });

    auto const n = order.size();
    std::vector<std::size_t> position(simplices.size(), 0);
    for (std::size_t p = 0; p < n; ++p)
        position[order[p]] = p;

    std::vector<Column> columns(n);
    std::vector<std::ptrdiff_t> pivot_owner(n, -1); // row -> column with that pivot
    std::vector<bool> cleared(n, false);
    std::vector<std::ptrdiff_t> killed_by(n, -1); // birth position -> death position

    for (int d = top_dim; d >= 1; --d) {
        for (std::size_t p = 0; p < n; ++p) {
            auto const& s = simplices[order[p]];
            if (s.dimension() != d || cleared[p])
                continue;
            Column col;
            for (auto const& face : s.boundary())
                col.push_back(position[*k.index_of(face)]);
            std::sort(col.begin(), col.end());
            while (!col.empty() && pivot_owner[col.back()] >= 0)
                add_into(col, columns[pivot_owner[col.back()]]);
            if (!col.empty()) {
                auto low = col.back();
                pivot_owner[low] = static_cast<std::ptrdiff_t>(p);
                killed_by[low] = static_cast<std::ptrdiff_t>(p);
                cleared[low] = true; // its own column would reduce to zero
                columns[p] = std::move(col);
            }
        }
    }

    std::vector<PersistenceDiagram> diagrams(static_cast<std::size_t>(max_dim) + 1);
    for (int r = 0; r <= max_dim; ++r)
        diagrams[r].dimension = r;

    for (std::size_t p = 0; p < n; ++p) {
        auto const idx = order[p];
        auto const r = simplices[idx].dimension();
        if (r > max_dim || !columns[p].empty())
            continue; // deaths, or births above the reported range
        if (killed_by[p] >= 0) {
            auto birth = values[idx];
            auto death = values[order[killed_by[p]]];
            if (birth < death)
                diagrams[r].points.push_back({birth, death, 1});
        } else {
            diagrams[r].essential.push_back({values[idx], 1});
        }
    }
    for (auto& d : diagrams)
        d.normalize();
    return diagrams;
}

PersistenceDiagram cornerpoints(FilteredComplex const& fc, int r)
{
    return reduce(fc, r).at(r);
}

std::size_t pbn(PersistenceDiagram const& d, PBNQuery q)
{
    Value const u(q.u);
    Value const v(q.v);
    std::size_t count = 0;
    for (auto const& p : d.points)
        if (p.birth <= u && p.death > v)
            count += p.multiplicity;
    for (auto const& e : d.essential)
        if (e.birth <= u)
            count += e.multiplicity;
    return count;
}

std::size_t pbn(FilteredComplex const& fc, int r, PBNQuery q)
{
    return pbn(cornerpoints(fc, r), q);
}

std::size_t sublevel_betti(PersistenceDiagram const& d, double u)
{
    Value const t(u);
    std::size_t count = 0;
    for (auto const& p : d.points)
        if (p.birth <= t && p.death > t)
            count += p.multiplicity;
    for (auto const& e : d.essential)
        if (e.birth <= t)
            count += e.multiplicity;
    return count;
}

ExtendedPersistence::ExtendedPersistence(ExtendedPair const& pair, int max_dim)
    : ascending_(reduce(pair.ascending, max_dim)), descending_(reduce(pair.descending, max_dim))
{
}

std::size_t ExtendedPersistence::pbn(int r, double u, double v) const
{
    if (u < v)
        return graphtda::pbn(ascending(r), PBNQuery(u, v));
    if (u > v)
        return graphtda::pbn(descending(r), PBNQuery(-u, -v));
    return sublevel_betti(ascending(r), u);
}

std::size_t extended_pbn(ExtendedPair const& pair, int r, double u, double v)
{
    return ExtendedPersistence(pair, r).pbn(r, u, v);
}

ExtendedGrid sample_extended_grid(ExtendedPersistence const& ext, int r, Execution exec)
{
    std::vector<double> critical;
    auto collect = [&](PersistenceDiagram const& d, double sign) {
        auto add = [&](Value x) {
            if (x.is_finite())
                critical.push_back(sign * x.finite());
        };
        for (auto const& p : d.points) {
            add(p.birth);
            add(p.death);
        }
        for (auto const& e : d.essential)
            add(e.birth);
    };
    for (int k = 0; k <= ext.max_dim(); ++k) {
        collect(ext.ascending(k), 1.0);
        collect(ext.descending(k), -1.0);
    }
    std::sort(critical.begin(), critical.end());
    critical.erase(std::unique(critical.begin(), critical.end()), critical.end());

    ExtendedGrid grid;
    grid.dimension = r;
    if (critical.empty()) {
        grid.axis = {-1.0, 0.0, 1.0};
    } else {
        auto const span = critical.back() - critical.front();
        auto const pad = span > 0 ? span / 10.0 : 1.0;
        grid.axis.push_back(critical.front() - pad);
        for (std::size_t i = 0; i < critical.size(); ++i) {
            if (i > 0)
                grid.axis.push_back((critical[i - 1] + critical[i]) / 2.0);
            grid.axis.push_back(critical[i]);
        }
        grid.axis.push_back(critical.back() + pad);
    }

    auto const n = grid.axis.size();
    grid.values.assign(n, std::vector<std::size_t>(n, 0));
    for_each_index(
        n,
        [&](std::size_t i) {
            for (std::size_t j = 0; j < n; ++j)
                grid.values[i][j] = ext.pbn(r, grid.axis[i], grid.axis[j]);
        },
        exec);
    return grid;
}

} // namespace graphtda
