#pragma once

#include "graphtda/value.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace graphtda {

/// Index of a vertex in a graph or complex. Indices follow the
/// lexicographic order of the vertex labels.
using VertexId = std::uint32_t;

/// Undirected edge with u < v. A missing weight means "unassigned".
struct Edge
{
    VertexId u = 0;
    VertexId v = 0;
    std::optional<Value> weight;

    friend bool operator==(Edge const&, Edge const&) = default;
};

/// Edge given by endpoint labels, for building graphs.
struct LabeledEdge
{
    std::string u;
    std::string v;
    std::optional<Value> weight;
};

/// Finite simple graph with optionally weighted edges. Immutable once built.
///
/// Vertices are string labels kept in lexicographic order; VertexId i is the
/// i-th label in that order. Construction rejects loops, parallel edges and
/// edges whose endpoints are not declared vertices (std::invalid_argument).
class WeightedGraph
{
public:
    WeightedGraph() = default;
    WeightedGraph(std::vector<std::string> vertices, std::vector<LabeledEdge> const& edges);

    std::size_t vertex_count() const { return labels_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    std::vector<std::string> const& labels() const { return labels_; }
    std::string const& label(VertexId v) const { return labels_.at(v); }
    std::optional<VertexId> find(std::string_view label) const;

    bool adjacent(VertexId a, VertexId b) const;
    std::optional<Value> weight(VertexId a, VertexId b) const;

    /// Sorted open neighborhood.
    std::span<VertexId const> neighbors(VertexId v) const { return adjacency_.at(v); }
    std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }

    /// Edges sorted by (u, v).
    std::span<Edge const> edges() const { return edges_; }

    /// True when every edge carries a weight.
    bool fully_weighted() const;

    /// Closed neighborhood N[v] as a bitmask; requires vertex_count() <= 64.
    std::uint64_t closed_neighborhood_mask(VertexId v) const;

    friend bool operator==(WeightedGraph const& a, WeightedGraph const& b)
    {
        return a.labels_ == b.labels_ && a.edges_ == b.edges_;
    }

private:
    std::vector<std::string> labels_;
    std::vector<Edge> edges_;
    std::vector<std::vector<VertexId>> adjacency_;
    std::vector<std::int32_t> edge_index_; // n*n, -1 when absent
};

class ParseError : public std::runtime_error
{
public:
    ParseError(std::size_t line, std::string const& message);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Reads the edge-list format: one record per line, "u v w" for an edge of
/// finite weight w or "u" for a vertex; blank lines and lines starting with
/// '#' are skipped. A document without any vertex is an error.
WeightedGraph parse_graph(std::string_view text);

/// Inverse of parse_graph for fully weighted graphs.
std::string format_graph(WeightedGraph const& g);

/// Same vertices, complementary edge set, all weights unassigned.
WeightedGraph complement(WeightedGraph const& g);

/// Keeps every vertex and the edges of weight <= t. Unweighted edges are dropped.
WeightedGraph threshold_subgraph(WeightedGraph const& g, Value t);

/// Returns a label not used in g, derived from base by appending primes.
std::string fresh_label(WeightedGraph const& g, std::string const& base);

/// Adds two fresh vertices joined to every old vertex but not to each other.
/// New edges are unweighted.
WeightedGraph csusp(WeightedGraph const& g);

/// Disjoint union with a single unweighted edge between two fresh vertices.
/// This is also the enclaveless-set suspension.
WeightedGraph isusp(WeightedGraph const& g);

/// Same graph with every edge weight replaced by f(old weight).
WeightedGraph map_weights(WeightedGraph const& g, std::function<std::optional<Value>(Edge const&)> const& f);

// --- isomorphism oracle -----------------------------------------------------

/// map[v] is the image in h of vertex v of g.
using VertexMap = std::vector<VertexId>;

/// Enumerates every edge-preserving bijection V(g) -> V(h) by backtracking
/// with degree pruning. visit returns false to stop early. Weights are
/// ignored. Meant for small graphs (a dozen vertices or so).
void for_each_isomorphism(WeightedGraph const& g, WeightedGraph const& h,
                          std::function<bool(VertexMap const&)> const& visit);

std::vector<VertexMap> isomorphisms(WeightedGraph const& g, WeightedGraph const& h);

} // namespace graphtda
