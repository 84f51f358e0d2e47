#pragma once

#include "graphtda/graph.hpp"
#include "graphtda/parallel.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace graphtda {

/// Nonempty set of distinct vertices, stored sorted.
class Simplex
{
public:
    Simplex() = default;
    /// Sorts; throws std::invalid_argument on empty input or repeated vertices.
    explicit Simplex(std::vector<VertexId> vertices);
    Simplex(std::initializer_list<VertexId> vertices) : Simplex(std::vector<VertexId>(vertices)) {}

    int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
    std::size_t size() const { return vertices_.size(); }
    std::span<VertexId const> vertices() const { return vertices_; }
    VertexId operator[](std::size_t i) const { return vertices_[i]; }

    bool contains(VertexId v) const;
    /// True when every vertex of this simplex is in other.
    bool is_face_of(Simplex const& other) const;

    /// The codimension-one faces, in the order obtained by dropping vertex 0, 1, ...
    std::vector<Simplex> boundary() const;

    friend bool operator==(Simplex const&, Simplex const&) = default;
    /// Canonical order: by dimension, then lexicographically by vertex.
    friend std::strong_ordering operator<=>(Simplex const& a, Simplex const& b);

private:
    std::vector<VertexId> vertices_;
};

struct SimplexHash
{
    std::size_t operator()(Simplex const& s) const noexcept;
};

/// Finite abstract simplicial complex over a labelled ground set.
///
/// The ground set is a sorted list of labels (usually the vertices of the
/// graph the complex came from); ground vertices need not appear in any
/// simplex. Simplices are kept in canonical order with a hash index, and the
/// inclusion-maximal ones are kept as the facet list.
class SimplicialComplex
{
public:
    SimplicialComplex() = default;

    /// Downward closure of generators, keeping faces of dimension <= max_dim.
    /// ground must be sorted and duplicate-free.
    static SimplicialComplex from_facets(std::vector<std::string> ground, std::vector<Simplex> const& generators,
                                         std::optional<int> max_dim = std::nullopt);

    std::vector<std::string> const& ground() const { return ground_; }
    std::span<Simplex const> simplices() const { return simplices_; }
    std::span<Simplex const> facets() const { return facets_; }
    std::size_t size() const { return simplices_.size(); }
    bool empty() const { return simplices_.empty(); }
    /// -1 for the empty complex.
    int dimension() const { return simplices_.empty() ? -1 : simplices_.back().dimension(); }

    bool contains(Simplex const& s) const { return index_.count(s) != 0; }
    std::optional<std::size_t> index_of(Simplex const& s) const;

    /// Number of simplices per dimension.
    std::vector<std::size_t> f_vector() const;

    /// Vertices that occur in some simplex.
    std::vector<VertexId> used_vertices() const;

    std::vector<std::string> labels_of(Simplex const& s) const;

    /// Brute-force check of closure under nonempty subsets.
    bool is_closed() const;

    /// Inclusion test through vertex labels, so the two ground sets may differ.
    bool is_subcomplex_of(SimplicialComplex const& other) const;

    friend bool operator==(SimplicialComplex const& a, SimplicialComplex const& b)
    {
        return a.ground_ == b.ground_ && a.simplices_ == b.simplices_;
    }

private:
    std::vector<std::string> ground_;
    std::vector<Simplex> simplices_;
    std::vector<Simplex> facets_;
    std::unordered_map<Simplex, std::size_t, SimplexHash> index_;
};

// --- constructions from graphs ---------------------------------------------

/// All cliques of g up to dimension max_dim. Facets come from a pivoting
/// Bron-Kerbosch search over maximal cliques.
SimplicialComplex clique_complex(WeightedGraph const& g, std::optional<int> max_dim = std::nullopt,
                                 Execution exec = Execution::parallel);

/// All nonempty subsets of closed neighborhoods N[v] = {v} + adj(v).
SimplicialComplex neighborhood_complex(WeightedGraph const& g, std::optional<int> max_dim = std::nullopt);

/// Upper bound on the vertex count for an uncapped enclaveless enumeration.
inline constexpr std::size_t kMaxUncappedEnclavelessVertices = 20;

/// All nonempty enclaveless sets (no member has its closed neighborhood
/// inside the set). Without max_dim the graph may have at most
/// kMaxUncappedEnclavelessVertices vertices; with a cap, at most 64.
/// Throws std::length_error beyond these guards.
SimplicialComplex enclaveless_complex(WeightedGraph const& g, std::optional<int> max_dim = std::nullopt,
                                      Execution exec = Execution::parallel);

/// Independent sets of g, i.e. the clique complex of its complement.
SimplicialComplex independent_complex(WeightedGraph const& g, std::optional<int> max_dim = std::nullopt);

/// True when no vertex of the set has its closed neighborhood inside it.
bool is_enclaveless(WeightedGraph const& g, std::span<VertexId const> set);

// --- complex operations ------------------------------------------------------

/// Vertices are the simplices of k (labelled "{a,b,...}"), simplices are
/// chains under strict inclusion.
SimplicialComplex barycentric_subdivision(SimplicialComplex const& k);

/// Graph on the ground set of k with its 1-simplices as unweighted edges.
WeightedGraph one_skeleton(SimplicialComplex const& k);

/// Betti numbers b_0..b_max_dim over Z/2 from boundary-matrix ranks.
std::vector<std::size_t> betti_numbers(SimplicialComplex const& k, int max_dim);

/// A vertex bijection from the used vertices of a onto those of b mapping
/// simplices onto simplices, found by running the graph isomorphism oracle
/// on the 1-skeletons and checking each candidate against the facets.
/// The returned map is indexed by ground vertex of a; unused entries are 0.
std::optional<VertexMap> find_complex_isomorphism(SimplicialComplex const& a, SimplicialComplex const& b);

} // namespace graphtda
