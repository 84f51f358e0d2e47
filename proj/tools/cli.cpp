#include "cli.hpp"

#include "graphtda/filtration.hpp"
#include "graphtda/io.hpp"
#include "graphtda/metrics.hpp"
#include "graphtda/persistence.hpp"
#include "graphtda/svg.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>

namespace graphtda::cli {

namespace {

enum class Construction { clique, neighborhood, enclaveless, independent };
enum class Format { json, csv, svg };

struct RunConfig
{
    Construction construction = Construction::clique;
    int max_dim = 3;
    bool extended = false;
    Format format = Format::json;
    std::string output;
};

class ConfigError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

std::string construction_name(Construction c)
{
    switch (c) {
    case Construction::clique: return "clique";
    case Construction::neighborhood: return "neighborhood";
    case Construction::enclaveless: return "enclaveless";
    case Construction::independent: return "independent";
    }
    return "?";
}

void validate(RunConfig const& cfg, bool filtered)
{
    if (cfg.max_dim < 0)
        throw ConfigError("--max-dim must be >= 0");
    if (cfg.extended) {
        if (cfg.construction != Construction::clique && cfg.construction != Construction::independent)
            throw ConfigError("--extended pairs the clique and independent-set complexes; use --construction "
                              "clique or independent");
        if (cfg.format == Format::csv)
            throw ConfigError("--extended output is json or svg");
    } else if (filtered && cfg.construction == Construction::independent) {
        throw ConfigError("the independent-set complex has no weight filtration; use build, or persist --extended");
    }
}

void emit(RunConfig const& cfg, std::string const& text, std::ostream& out)
{
    if (cfg.output.empty())
        out << text;
    else
        try {
            io::write_file(cfg.output, text);
        } catch (std::runtime_error const& e) {
            throw ConfigError(e.what());
        }
}

SimplicialComplex build_complex(WeightedGraph const& g, Construction c, int cap)
{
    switch (c) {
    case Construction::clique: return clique_complex(g, cap);
    case Construction::neighborhood: return neighborhood_complex(g, cap);
    case Construction::enclaveless: return enclaveless_complex(g, cap);
    case Construction::independent: return independent_complex(g, cap);
    }
    throw std::logic_error("unknown construction");
}

FilteredComplex build_filtered(WeightedGraph const& g, Construction c, int cap)
{
    switch (c) {
    case Construction::clique: return filter_clique(g, cap);
    case Construction::neighborhood: return filter_neighborhood(g, cap);
    case Construction::enclaveless: return filter_enclaveless(g, cap);
    case Construction::independent: break;
    }
    throw std::logic_error("no filtration for this construction");
}

WeightedGraph load_graph(std::string const& path)
{
    return parse_graph(io::read_file(path));
}

int cmd_build(std::string const& input, RunConfig const& cfg, std::ostream& out)
{
    validate(cfg, false);
    auto g = load_graph(input);
    auto k = build_complex(g, cfg.construction, cfg.max_dim);
    // Betti numbers up to max_dim need the next dimension up.
    auto betti = betti_numbers(build_complex(g, cfg.construction, cfg.max_dim + 1), cfg.max_dim);

    io::Json doc;
    doc["construction"] = construction_name(cfg.construction);
    auto body = io::to_json(k);
    doc["vertices"] = body["vertices"];
    doc["facets"] = body["facets"];
    doc["betti"] = betti;
    if (cfg.construction != Construction::independent)
        doc["simplices"] = io::to_json(build_filtered(g, cfg.construction, cfg.max_dim))["simplices"];
    emit(cfg, doc.dump(2) + "\n", out);
    return ok;
}

io::Json diagrams_json(std::vector<PersistenceDiagram> const& diagrams)
{
    io::Json arr = io::Json::array();
    for (auto const& d : diagrams)
        arr.push_back(io::to_json(d));
    return arr;
}

io::Json grid_json(ExtendedGrid const& grid)
{
    io::Json g;
    g["dimension"] = grid.dimension;
    g["axis"] = grid.axis;
    g["values"] = grid.values;
    return g;
}

ExtendedGrid grid_from_json(io::Json const& j)
{
    ExtendedGrid grid;
    grid.dimension = j.at("dimension").get<int>();
    grid.axis = j.at("axis").get<std::vector<double>>();
    grid.values = j.at("values").get<std::vector<std::vector<std::size_t>>>();
    if (grid.values.size() != grid.axis.size())
        throw io::FormatError("grid values do not match the axis");
    for (auto const& row : grid.values)
        if (row.size() != grid.axis.size())
            throw io::FormatError("grid values do not match the axis");
    return grid;
}

int cmd_persist(std::string const& input, RunConfig const& cfg, int plot_dim, std::ostream& out)
{
    validate(cfg, true);
    auto g = load_graph(input);

    if (cfg.extended) {
        auto pair = extended_pair(g, cfg.max_dim + 1);
        ExtendedPersistence ext(pair, cfg.max_dim);
        if (cfg.format == Format::svg) {
            if (plot_dim > cfg.max_dim)
                throw ConfigError("--dimension exceeds --max-dim");
            emit(cfg, svg::render_extended(sample_extended_grid(ext, plot_dim)), out);
            return ok;
        }
        std::vector<PersistenceDiagram> asc;
        std::vector<PersistenceDiagram> desc;
        io::Json grids = io::Json::array();
        for (int r = 0; r <= cfg.max_dim; ++r) {
            asc.push_back(ext.ascending(r));
            desc.push_back(ext.descending(r));
            grids.push_back(grid_json(sample_extended_grid(ext, r)));
        }
        io::Json doc;
        doc["construction"] = construction_name(cfg.construction);
        doc["extended"] = true;
        doc["ascending"] = diagrams_json(asc);
        doc["descending"] = diagrams_json(desc);
        doc["grids"] = std::move(grids);
        emit(cfg, doc.dump(2) + "\n", out);
        return ok;
    }

    auto diagrams = reduce(build_filtered(g, cfg.construction, cfg.max_dim + 1), cfg.max_dim);
    switch (cfg.format) {
    case Format::csv: emit(cfg, io::diagrams_to_csv(diagrams), out); break;
    case Format::svg: emit(cfg, svg::render_diagrams(diagrams), out); break;
    case Format::json: {
        io::Json doc;
        doc["construction"] = construction_name(cfg.construction);
        doc["diagrams"] = diagrams_json(diagrams);
        emit(cfg, doc.dump(2) + "\n", out);
        break;
    }
    }
    return ok;
}

PersistenceDiagram pick(std::vector<PersistenceDiagram> const& ds, int r)
{
    for (auto const& d : ds)
        if (d.dimension == r)
            return d;
    PersistenceDiagram empty;
    empty.dimension = r;
    return empty;
}

int cmd_distance(std::string const& a, std::string const& b, std::optional<int> dim, RunConfig const& cfg,
                 std::ostream& out)
{
    auto da = io::load_diagrams(io::read_file(a));
    auto db = io::load_diagrams(io::read_file(b));

    std::string text;
    if (dim) {
        text = bottleneck(pick(da, *dim), pick(db, *dim)).to_string() + "\n";
    } else if (da.size() == 1 && db.size() == 1) {
        if (da[0].dimension != db[0].dimension)
            throw ConfigError("diagrams belong to different degrees (" + std::to_string(da[0].dimension) + " vs "
                              + std::to_string(db[0].dimension) + ")");
        text = bottleneck(da[0], db[0]).to_string() + "\n";
    } else {
        std::map<int, bool> degrees;
        for (auto const& d : da)
            degrees[d.dimension] = true;
        for (auto const& d : db)
            degrees[d.dimension] = true;
        for (auto const& [r, _] : degrees)
            text += std::to_string(r) + " " + bottleneck(pick(da, r), pick(db, r)).to_string() + "\n";
    }
    emit(cfg, text, out);
    return ok;
}

int cmd_plot(std::string const& input, std::optional<int> dim, RunConfig const& cfg, std::ostream& out)
{
    auto text = io::read_file(input);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        io::Json j;
        try {
            j = io::Json::parse(text);
        } catch (nlohmann::json::exception const& e) {
            throw io::FormatError(e.what());
        }
        if (j.contains("grids")) {
            auto r = dim.value_or(0);
            for (auto const& gj : j.at("grids"))
                if (gj.at("dimension").get<int>() == r) {
                    emit(cfg, svg::render_extended(grid_from_json(gj)), out);
                    return ok;
                }
            throw ConfigError("no extended grid for degree " + std::to_string(r));
        }
    }
    auto diagrams = io::load_diagrams(text);
    if (dim) {
        auto keep = pick(diagrams, *dim);
        diagrams = {keep};
    }
    emit(cfg, svg::render_diagrams(diagrams), out);
    return ok;
}

} // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Filtered simplicial complexes and persistence for weighted graphs"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string input;
    std::string second;
    std::optional<int> dimension;
    int max_dim = 3;

    std::map<std::string, Construction> const constructions{{"clique", Construction::clique},
                                                            {"neighborhood", Construction::neighborhood},
                                                            {"enclaveless", Construction::enclaveless},
                                                            {"independent", Construction::independent}};
    std::map<std::string, Format> const formats{{"json", Format::json}, {"csv", Format::csv}, {"svg", Format::svg}};

    auto add_common = [&](CLI::App* sub, bool complex_flags) {
        if (complex_flags) {
            sub->add_option("--construction", cfg.construction, "clique, neighborhood, enclaveless or independent")
                ->transform(CLI::CheckedTransformer(constructions, CLI::ignore_case));
            sub->add_option("--max-dim", max_dim, "highest homology degree / simplex dimension (default 3)");
            sub->add_flag("--extended", cfg.extended, "clique persistence of G paired with that of the completed "
                                                      "graph under -f");
            sub->add_option("--format", cfg.format, "json, csv or svg")
                ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        }
        sub->add_option("--output,-o", cfg.output, "write here instead of stdout");
    };

    auto* build = app.add_subcommand("build", "build a complex from an edge list");
    build->add_option("input", input, "edge-list file")->required();
    add_common(build, true);

    auto* persist = app.add_subcommand("persist", "persistence diagrams of a filtered complex");
    persist->add_option("input", input, "edge-list file")->required();
    persist->add_option("--dimension", dimension, "degree shown by --format svg --extended (default 0)");
    add_common(persist, true);

    auto* distance = app.add_subcommand("distance", "bottleneck distance between two diagram files");
    distance->add_option("first", input, "diagram file (json or csv)")->required();
    distance->add_option("second", second, "diagram file (json or csv)")->required();
    distance->add_option("--dimension", dimension, "compare only this degree");
    add_common(distance, false);

    auto* plot = app.add_subcommand("plot", "render a diagram or extended grid as SVG");
    plot->add_option("input", input, "diagram file written by persist")->required();
    plot->add_option("--dimension", dimension, "degree to draw");
    add_common(plot, false);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (CLI::ParseError const& e) {
        return app.exit(e, out, err) == 0 ? ok : usage_error;
    }
    cfg.max_dim = max_dim;

    try {
        apply_thread_env();
        if (*build)
            return cmd_build(input, cfg, out);
        if (*persist)
            return cmd_persist(input, cfg, dimension.value_or(0), out);
        if (*distance)
            return cmd_distance(input, second, dimension, cfg, out);
        if (*plot)
            return cmd_plot(input, dimension, cfg, out);
    } catch (ParseError const& e) {
        err << "error: " << input << ": " << e.what() << "\n";
        return input_error;
    } catch (io::FormatError const& e) {
        err << "error: malformed document: " << e.what() << "\n";
        return input_error;
    } catch (ConfigError const& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (std::invalid_argument const& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (std::length_error const& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (std::runtime_error const& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    } catch (std::exception const& e) {
        err << "internal error: " << e.what() << "\n";
        return internal_error;
    }
    return usage_error;
}

} // namespace graphtda::cli
