#pragma once

#include "graphtda/complex.hpp"
#include "graphtda/parallel.hpp"
#include "graphtda/value.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace graphtda {

/// A simplicial complex with a value per simplex, aligned with
/// complex().simplices(). The builders below always produce monotone values
/// (a face never exceeds its cofaces); hand-built instances are checked by
/// is_monotone() and by reduce().
class FilteredComplex
{
public:
    FilteredComplex() = default;
    FilteredComplex(SimplicialComplex complex, std::vector<Value> values);

    SimplicialComplex const& complex() const { return complex_; }
    std::span<Value const> values() const { return values_; }
    Value value(std::size_t index) const { return values_.at(index); }
    /// Throws std::out_of_range when s is not in the complex.
    Value value(Simplex const& s) const;

    /// First (face, coface) index pair violating monotonicity, if any.
    std::optional<std::pair<std::size_t, std::size_t>> monotonicity_violation() const;
    bool is_monotone() const { return !monotonicity_violation(); }

    /// Simplices of dimension >= min_dim with value <= t, in canonical order.
    std::vector<Simplex> sublevel_simplices(Value t, int min_dim = 0) const;

    friend bool operator==(FilteredComplex const&, FilteredComplex const&) = default;

private:
    SimplicialComplex complex_;
    std::vector<Value> values_;
};

/// Vertex rule shared by the three filtrations: the minimum weight of the
/// edges incident on v, or -inf when v is isolated.
Value vertex_value(WeightedGraph const& g, VertexId v);

/// Clique filtration: vertices by the vertex rule, higher simplices by the
/// maximum weight over the clique's edges. Requires every edge weighted.
FilteredComplex filter_clique(WeightedGraph const& g, std::optional<int> max_dim = std::nullopt,
                              Execution exec = Execution::parallel);

/// Neighborhood filtration: a simplex s of dimension >= 1 gets the smallest
/// t at which s sits inside a closed neighborhood of the threshold graph,
///   min over witnesses w of max over u in s - {w} of f(w, u),
/// with w ranging over the vertices adjacent to all of s - {w}.
FilteredComplex filter_neighborhood(WeightedGraph const& g, std::optional<int> max_dim = std::nullopt,
                                    Execution exec = Execution::parallel);

/// Enclaveless filtration: a simplex s of dimension >= 1 gets the smallest
/// t at which s is enclaveless in the threshold graph,
///   max over v in s of min over edges (v, u), u outside s, of f(v, u).
FilteredComplex filter_enclaveless(WeightedGraph const& g, std::optional<int> max_dim = std::nullopt,
                                   Execution exec = Execution::parallel);

/// Complete graph on V(g); edges of g keep their weight, the others get +inf.
WeightedGraph extend_weights(WeightedGraph const& g);

/// Ascending clique filtration of (G, f) and descending clique filtration of
/// the completed graph under -f (non-edges of G enter at -inf).
struct ExtendedPair
{
    FilteredComplex ascending;
    FilteredComplex descending;
};

ExtendedPair extended_pair(WeightedGraph const& g, std::optional<int> max_dim = std::nullopt,
                           Execution exec = Execution::parallel);

} // namespace graphtda
