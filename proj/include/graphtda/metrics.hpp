#pragma once

#include "graphtda/graph.hpp"
#include "graphtda/persistence.hpp"
#include "graphtda/value.hpp"

#include <optional>
#include <vector>

namespace graphtda {

/// A point of the extended plane, birth first.
struct Cornerpoint
{
    Value birth;
    Value death;
};

/// Matching cost between two proper cornerpoints:
///   min( max(|u - u'|, |v - v'|), max((v - u)/2, (v' - u')/2) ).
/// Equal infinite coordinates are at distance 0, different ones at +inf.
Value dhat(Cornerpoint p, Cornerpoint q);

/// Optimal matching between two diagrams of the same degree, with points
/// expanded by multiplicity. first/second index the expanded proper points
/// of each diagram; std::nullopt stands for the diagonal. Essential points
/// are listed separately and matched in birth order.
struct Matching
{
    struct Pair
    {
        std::optional<std::size_t> first;
        std::optional<std::size_t> second;
        Value cost;
    };

    std::vector<Pair> proper;
    std::vector<Pair> essential;
    Value cost;
};

/// Proper points of d, one entry per unit of multiplicity, in diagram order.
std::vector<Cornerpoint> expand_points(PersistenceDiagram const& d);

/// Essential births of d, one entry per unit of multiplicity, ascending.
std::vector<Value> expand_essential(PersistenceDiagram const& d);

/// Bottleneck matching. Proper points may go to the diagonal; essential
/// points only match essential points, at cost |b - b'|. The cost is +inf
/// when the essential counts differ. Throws std::invalid_argument when the
/// diagrams belong to different degrees.
Matching bottleneck_matching(PersistenceDiagram const& a, PersistenceDiagram const& b);

Value bottleneck(PersistenceDiagram const& a, PersistenceDiagram const& b);

/// Min over graph isomorphisms psi of max over edges e of |f(e) - f'(psi(e))|,
/// +inf when the graphs are not isomorphic. This upper-bounds the natural
/// pseudodistance between the filtered complexes built from the two graphs.
Value pseudodistance_iso(WeightedGraph const& g1, WeightedGraph const& g2);

} // namespace graphtda
