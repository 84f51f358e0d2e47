#include "graphtda/filtration.hpp"

#include <algorithm>
#include <stdexcept>

namespace graphtda {

FilteredComplex::FilteredComplex(SimplicialComplex complex, std::vector<Value> values)
    : complex_(std::move(complex)), values_(std::move(values))
{
    if (values_.size() != complex_.size())
        throw std::invalid_argument("FilteredComplex: one value per simplex required");
}

Value FilteredComplex::value(Simplex const& s) const
{
    auto idx = complex_.index_of(s);
    if (!idx)
        throw std::out_of_range("simplex not in complex");
    return values_[*idx];
}

std::optional<std::pair<std::size_t, std::size_t>> FilteredComplex::monotonicity_violation() const
{
    auto const simplices = complex_.simplices();
    for (std::size_t i = 0; i < simplices.size(); ++i)
        for (auto const& face : simplices[i].boundary()) {
            auto j = *complex_.index_of(face);
            if (values_[i] < values_[j])
                return std::pair{j, i};
        }
    return std::nullopt;
}

std::vector<Simplex> FilteredComplex::sublevel_simplices(Value t, int min_dim) const
{
    std::vector<Simplex> out;
    auto const simplices = complex_.simplices();
    for (std::size_t i = 0; i < simplices.size(); ++i)
        if (simplices[i].dimension() >= min_dim && values_[i] <= t)
            out.push_back(simplices[i]);
    return out;
}

Value vertex_value(WeightedGraph const& g, VertexId v)
{
    auto nbrs = g.neighbors(v);
    if (nbrs.empty())
        return Value::neg_inf();
    std::optional<Value> best;
    for (auto u : nbrs) {
        auto w = g.weight(v, u);
        if (!w)
            throw std::invalid_argument("filtration needs every edge weighted");
        if (!best || *w < *best)
            best = *w;
    }
    return *best;
}

namespace {

Value edge_weight(WeightedGraph const& g, VertexId a, VertexId b)
{
    auto w = g.weight(a, b);
    if (!w)
        throw std::invalid_argument("filtration needs every edge weighted");
    return *w;
}

template<typename Rule>
FilteredComplex assign(WeightedGraph const& g, SimplicialComplex complex, Rule rule, Execution exec)
{
    if (!g.fully_weighted())
        throw std::invalid_argument("filtration needs every edge weighted");
    auto const simplices = complex.simplices();
    std::vector<Value> values(simplices.size());
    for_each_index(
        simplices.size(),
        [&](std::size_t i) {
            auto const& s = simplices[i];
            values[i] = s.dimension() == 0 ? vertex_value(g, s[0]) : rule(s);
        },
        exec);
    return FilteredComplex(std::move(complex), std::move(values));
}

} // namespace

FilteredComplex filter_clique(WeightedGraph const& g, std::optional<int> max_dim, Execution exec)
{
    auto rule = [&g](Simplex const& s) {
        Value top = Value::neg_inf();
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                top = std::max(top, edge_weight(g, s[i], s[j]));
        return top;
    };
    return assign(g, clique_complex(g, max_dim, exec), rule, exec);
}

FilteredComplex filter_neighborhood(WeightedGraph const& g, std::optional<int> max_dim, Execution exec)
{
    auto rule = [&g](Simplex const& s) {
        std::optional<Value> best;
        for (VertexId w = 0; w < g.vertex_count(); ++w) {
            Value reach = Value::neg_inf();
            bool witness = true;
            for (auto u : s.vertices()) {
                if (u == w)
                    continue;
                if (!g.adjacent(w, u)) {
                    witness = false;
                    break;
                }
                reach = std::max(reach, edge_weight(g, w, u));
            }
            if (witness && (!best || reach < *best))
                best = reach;
        }
        // Every simplex of the neighborhood complex has a witness.
        return best.value_or(Value::pos_inf());
    };
    return assign(g, neighborhood_complex(g, max_dim), rule, exec);
}

FilteredComplex filter_enclaveless(WeightedGraph const& g, std::optional<int> max_dim, Execution exec)
{
    auto rule = [&g](Simplex const& s) {
        Value worst = Value::neg_inf();
        for (auto v : s.vertices()) {
            std::optional<Value> exit;
            for (auto u : g.neighbors(v))
                if (!s.contains(u)) {
                    auto w = edge_weight(g, v, u);
                    if (!exit || w < *exit)
                        exit = w;
                }
            if (!exit)
                return Value::pos_inf(); // v is an enclave: s is not in the complex
            worst = std::max(worst, *exit);
        }
        return worst;
    };
    return assign(g, enclaveless_complex(g, max_dim, exec), rule, exec);
}

WeightedGraph extend_weights(WeightedGraph const& g)
{
    std::vector<LabeledEdge> edges;
    auto const n = static_cast<VertexId>(g.vertex_count());
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b) {
            auto w = g.adjacent(a, b) ? g.weight(a, b) : std::optional<Value>(Value::pos_inf());
            edges.push_back({g.label(a), g.label(b), w});
        }
    return WeightedGraph(g.labels(), edges);
}

ExtendedPair extended_pair(WeightedGraph const& g, std::optional<int> max_dim, Execution exec)
{
    auto negated = map_weights(extend_weights(g), [](Edge const& e) -> std::optional<Value> {
        if (!e.weight)
            throw std::invalid_argument("extended_pair needs every edge weighted");
        return -*e.weight;
    });
    return ExtendedPair{filter_clique(g, max_dim, exec), filter_clique(negated, max_dim, exec)};
}

} // namespace graphtda
