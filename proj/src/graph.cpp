#include "graphtda/graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace graphtda {

WeightedGraph::WeightedGraph(std::vector<std::string> vertices, std::vector<LabeledEdge> const& edges)
    : labels_(std::move(vertices))
{
    std::sort(labels_.begin(), labels_.end());
    if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end())
        throw std::invalid_argument("duplicate vertex label");

    auto const n = labels_.size();
    adjacency_.assign(n, {});
    edge_index_.assign(n * n, -1);
    edges_.reserve(edges.size());

    for (auto const& e : edges) {
        auto a = find(e.u);
        auto b = find(e.v);
        if (!a || !b)
            throw std::invalid_argument("edge endpoint is not a vertex: " + (!a ? e.u : e.v));
        if (*a == *b)
            throw std::invalid_argument("loop at vertex " + e.u);
        if (edge_index_[*a * n + *b] >= 0)
            throw std::invalid_argument("duplicate edge " + e.u + " " + e.v);
        edge_index_[*a * n + *b] = 0;
        edge_index_[*b * n + *a] = 0;
        edges_.push_back(Edge{std::min(*a, *b), std::max(*a, *b), e.weight});
    }

    std::sort(edges_.begin(), edges_.end(), [](Edge const& x, Edge const& y) {
        return std::tie(x.u, x.v) < std::tie(y.u, y.v);
    });
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        auto const& e = edges_[i];
        edge_index_[e.u * n + e.v] = static_cast<std::int32_t>(i);
        edge_index_[e.v * n + e.u] = static_cast<std::int32_t>(i);
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto& adj : adjacency_)
        std::sort(adj.begin(), adj.end());
}

std::optional<VertexId> WeightedGraph::find(std::string_view label) const
{
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label)
        return std::nullopt;
    return static_cast<VertexId>(it - labels_.begin());
}

bool WeightedGraph::adjacent(VertexId a, VertexId b) const
{
    return edge_index_.at(a * labels_.size() + b) >= 0;
}

std::optional<Value> WeightedGraph::weight(VertexId a, VertexId b) const
{
    auto idx = edge_index_.at(a * labels_.size() + b);
    if (idx < 0)
        return std::nullopt;
    return edges_[idx].weight;
}

bool WeightedGraph::fully_weighted() const
{
    return std::all_of(edges_.begin(), edges_.end(), [](Edge const& e) { return e.weight.has_value(); });
}

std::uint64_t WeightedGraph::closed_neighborhood_mask(VertexId v) const
{
    if (labels_.size() > 64)
        throw std::length_error("bitmask view needs at most 64 vertices");
    std::uint64_t mask = std::uint64_t{1} << v;
    for (auto u : adjacency_.at(v))
        mask |= std::uint64_t{1} << u;
    return mask;
}

// --- parsing ----------------------------------------------------------------

ParseError::ParseError(std::size_t line, std::string const& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line)
{
}

WeightedGraph parse_graph(std::string_view text)
{
    std::vector<std::string> vertices;
    std::map<std::string, bool, std::less<>> seen;
    std::vector<LabeledEdge> edges;
    std::map<std::pair<std::string, std::string>, std::size_t> edge_line;

    auto declare = [&](std::string const& v) {
        if (seen.emplace(v, true).second)
            vertices.push_back(v);
    };

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        std::istringstream in{std::string(line)};
        std::vector<std::string> tokens;
        for (std::string tok; in >> tok;)
            tokens.push_back(tok);
        if (tokens.empty() || tokens.front().front() == '#')
            continue;

        if (tokens.size() == 1) {
            declare(tokens[0]);
            continue;
        }
        if (tokens.size() != 3)
            throw ParseError(line_no, "expected 'u v w' or 'u', got " + std::to_string(tokens.size()) + " fields");

        auto const& u = tokens[0];
        auto const& v = tokens[1];
        if (u == v)
            throw ParseError(line_no, "loop at vertex '" + u + "'");

        Value w;
        try {
            w = Value::parse(tokens[2]);
        } catch (std::invalid_argument const&) {
            throw ParseError(line_no, "weight is not a finite number: '" + tokens[2] + "'");
        }
        if (!w.is_finite())
            throw ParseError(line_no, "weight is not a finite number: '" + tokens[2] + "'");

        auto key = std::minmax(u, v);
        auto [it, fresh] = edge_line.emplace(std::pair{key.first, key.second}, line_no);
        if (!fresh)
            throw ParseError(line_no, "duplicate edge '" + u + " " + v + "' (first on line "
                                          + std::to_string(it->second) + ")");
        declare(u);
        declare(v);
        edges.push_back(LabeledEdge{u, v, w});
    }

    if (vertices.empty())
        throw ParseError(line_no, "no vertices in input");
    return WeightedGraph(std::move(vertices), edges);
}

std::string format_graph(WeightedGraph const& g)
{
    std::string out;
    std::vector<bool> touched(g.vertex_count(), false);
    for (auto const& e : g.edges()) {
        touched[e.u] = touched[e.v] = true;
        out += g.label(e.u) + ' ' + g.label(e.v) + ' ' + (e.weight ? e.weight->to_string() : "0") + '\n';
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (!touched[v])
            out += g.label(v) + '\n';
    return out;
}

// --- constructions ----------------------------------------------------------

namespace {

std::vector<LabeledEdge> labeled_edges(WeightedGraph const& g)
{
    std::vector<LabeledEdge> out;
    out.reserve(g.edge_count());
    for (auto const& e : g.edges())
        out.push_back({g.label(e.u), g.label(e.v), e.weight});
    return out;
}

} // namespace

WeightedGraph complement(WeightedGraph const& g)
{
    std::vector<LabeledEdge> edges;
    auto const n = static_cast<VertexId>(g.vertex_count());
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b)
            if (!g.adjacent(a, b))
                edges.push_back({g.label(a), g.label(b), std::nullopt});
    return WeightedGraph(g.labels(), edges);
}

WeightedGraph threshold_subgraph(WeightedGraph const& g, Value t)
{
    std::vector<LabeledEdge> edges;
    for (auto const& e : g.edges())
        if (e.weight && *e.weight <= t)
            edges.push_back({g.label(e.u), g.label(e.v), e.weight});
    return WeightedGraph(g.labels(), edges);
}

std::string fresh_label(WeightedGraph const& g, std::string const& base)
{
    std::string label = base;
    while (g.find(label))
        label += '\'';
    return label;
}

WeightedGraph csusp(WeightedGraph const& g)
{
    auto x = fresh_label(g, "x");
    auto y = fresh_label(g, "y");
    auto edges = labeled_edges(g);
    for (auto const& v : g.labels()) {
        edges.push_back({x, v, std::nullopt});
        edges.push_back({v, y, std::nullopt});
    }
    auto vertices = g.labels();
    vertices.push_back(x);
    vertices.push_back(y);
    return WeightedGraph(std::move(vertices), edges);
}

WeightedGraph isusp(WeightedGraph const& g)
{
    auto x = fresh_label(g, "x");
    auto y = fresh_label(g, "y");
    auto edges = labeled_edges(g);
    edges.push_back({x, y, std::nullopt});
    auto vertices = g.labels();
    vertices.push_back(x);
    vertices.push_back(y);
    return WeightedGraph(std::move(vertices), edges);
}

WeightedGraph map_weights(WeightedGraph const& g, std::function<std::optional<Value>(Edge const&)> const& f)
{
    std::vector<LabeledEdge> edges;
    edges.reserve(g.edge_count());
    for (auto const& e : g.edges())
        edges.push_back({g.label(e.u), g.label(e.v), f(e)});
    return WeightedGraph(g.labels(), edges);
}

} // namespace graphtda
