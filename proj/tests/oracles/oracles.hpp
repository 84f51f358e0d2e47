#pragma once

// Brute-force reference computations. Everything here works straight from
// the definitions and shares no code paths with the library beyond its
// data types.

#include "graphtda/complex.hpp"
#include "graphtda/filtration.hpp"
#include "graphtda/graph.hpp"
#include "graphtda/persistence.hpp"

#include <cstdint>
#include <vector>

namespace oracle {

using graphtda::FilteredComplex;
using graphtda::PersistenceDiagram;
using graphtda::Simplex;
using graphtda::SimplicialComplex;
using graphtda::Value;
using graphtda::WeightedGraph;

// dim Im(H_r(X_u) -> H_r(X_v)) over Z/2 for u <= v, by Gaussian elimination
// on explicit chain vectors. With u == v this is the Betti number of X_u.
std::size_t rank_image(FilteredComplex const& fc, int r, Value u, Value v);

// Betti numbers of a plain complex through the same elimination code.
std::vector<std::size_t> betti(SimplicialComplex const& k, int max_dim);

// Diagram of degree r recovered from ranks at the distinct filtration
// values by inclusion-exclusion.
PersistenceDiagram diagram_from_ranks(FilteredComplex const& fc, int r);

// Vertex subsets as bitmasks (n <= 20).
bool is_clique(WeightedGraph const& g, std::uint32_t mask);
bool is_independent(WeightedGraph const& g, std::uint32_t mask);
bool in_closed_neighborhood(WeightedGraph const& g, std::uint32_t mask);
bool is_enclaveless(WeightedGraph const& g, std::uint32_t mask);

// Complex of all nonempty masks accepted by pred, optionally capped.
template<typename Pred>
SimplicialComplex complex_of(WeightedGraph const& g, Pred pred, int max_dim = 64)
{
    std::vector<Simplex> all;
    auto const n = static_cast<std::uint32_t>(g.vertex_count());
    for (std::uint32_t m = 1; m < (1u << n); ++m) {
        if (static_cast<int>(__builtin_popcount(m)) - 1 > max_dim || !pred(g, m))
            continue;
        std::vector<graphtda::VertexId> vs;
        for (std::uint32_t i = 0; i < n; ++i)
            if (m >> i & 1u)
                vs.push_back(i);
        all.emplace_back(std::move(vs));
    }
    return SimplicialComplex::from_facets(g.labels(), all);
}

// Smallest edge weight t such that sigma lies in some closed neighborhood
// of G_t (resp. in some enclaveless set of G_t); +inf when there is none.
// Only meaningful for simplices of dimension >= 1.
Value nb_value(WeightedGraph const& g, Simplex const& sigma);

// Per-threshold table for the enclaveless definition: for each distinct
// weight t, which masks have an enclaveless superset in G_t.
class EnclavelessLevels
{
public:
    explicit EnclavelessLevels(WeightedGraph const& g);
    Value value(Simplex const& sigma) const;

private:
    std::vector<Value> levels_;
    std::vector<std::vector<bool>> covered_;
};

// Bottleneck distance from every partial injection between the proper
// points (unmatched points go to the diagonal) and every permutation of the
// essential points.
Value bottleneck_partial(PersistenceDiagram const& a, PersistenceDiagram const& b);

// Same, as a literal bijection between augmented multisets: a gets |b|
// diagonal slots, b gets |a|. Factorial cost, keep both sides tiny.
Value bottleneck_augmented(PersistenceDiagram const& a, PersistenceDiagram const& b);

// min over all vertex permutations that preserve adjacency of the largest
// weight difference; +inf when none does.
Value pseudodistance_permutations(WeightedGraph const& g, WeightedGraph const& h);

} // namespace oracle
