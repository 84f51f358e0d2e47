#pragma once

#include "graphtda/complex.hpp"
#include "graphtda/filtration.hpp"
#include "graphtda/graph.hpp"
#include "graphtda/persistence.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace testing_support {

using namespace graphtda;

inline std::string vname(std::size_t i)
{
    // v00, v01, ... keeps label order equal to index order
    std::string s = "v";
    if (i < 10)
        s += '0';
    return s + std::to_string(i);
}

inline WeightedGraph graph(std::vector<std::string> vertices, std::vector<LabeledEdge> const& edges)
{
    return WeightedGraph(std::move(vertices), edges);
}

inline WeightedGraph complete_graph(std::size_t n, double weight = 1.0)
{
    std::vector<std::string> vs;
    std::vector<LabeledEdge> es;
    for (std::size_t i = 0; i < n; ++i)
        vs.push_back(vname(i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            es.push_back({vname(i), vname(j), Value(weight)});
    return {vs, es};
}

inline WeightedGraph cycle_graph(std::size_t n)
{
    std::vector<std::string> vs;
    std::vector<LabeledEdge> es;
    for (std::size_t i = 0; i < n; ++i)
        vs.push_back(vname(i));
    for (std::size_t i = 0; i < n; ++i)
        es.push_back({vname(i), vname((i + 1) % n), Value(static_cast<double>(i + 1))});
    return {vs, es};
}

// Erdos-Renyi graph; integer weights in [1, max_weight] make ties common.
inline WeightedGraph random_graph(std::mt19937_64& rng, std::size_t n, double p, int max_weight = 6)
{
    std::bernoulli_distribution edge(p);
    std::uniform_int_distribution<int> w(1, max_weight);
    std::vector<std::string> vs;
    std::vector<LabeledEdge> es;
    for (std::size_t i = 0; i < n; ++i)
        vs.push_back(vname(i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (edge(rng))
                es.push_back({vname(i), vname(j), Value(static_cast<double>(w(rng)))});
    return {vs, es};
}

inline WeightedGraph random_real_graph(std::mt19937_64& rng, std::size_t n, double p)
{
    std::bernoulli_distribution edge(p);
    std::uniform_real_distribution<double> w(0.0, 10.0);
    std::vector<std::string> vs;
    std::vector<LabeledEdge> es;
    for (std::size_t i = 0; i < n; ++i)
        vs.push_back(vname(i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (edge(rng))
                es.push_back({vname(i), vname(j), Value(w(rng))});
    return {vs, es};
}

inline SimplicialComplex random_complex(std::mt19937_64& rng, std::size_t n, std::size_t facets, std::size_t max_size)
{
    std::vector<std::string> vs;
    for (std::size_t i = 0; i < n; ++i)
        vs.push_back(vname(i));
    std::uniform_int_distribution<std::size_t> size(1, max_size);
    std::vector<Simplex> gens;
    for (std::size_t f = 0; f < facets; ++f) {
        std::vector<VertexId> ids(n);
        for (std::size_t i = 0; i < n; ++i)
            ids[i] = static_cast<VertexId>(i);
        std::shuffle(ids.begin(), ids.end(), rng);
        ids.resize(std::min(size(rng), n));
        std::sort(ids.begin(), ids.end());
        gens.emplace_back(ids);
    }
    return SimplicialComplex::from_facets(vs, gens);
}

// Monotone values: each simplex gets the max over its faces plus a small
// random step, zero half of the time.
inline FilteredComplex random_filtration(std::mt19937_64& rng, SimplicialComplex k, int max_start = 4)
{
    std::uniform_int_distribution<int> start(0, max_start);
    std::uniform_int_distribution<int> step(0, 3);
    std::vector<Value> values(k.size());
    auto all = k.simplices();
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (all[i].dimension() == 0) {
            values[i] = static_cast<double>(start(rng));
            continue;
        }
        Value top = Value::neg_inf();
        for (auto const& f : all[i].boundary())
            top = std::max(top, values[*k.index_of(f)]);
        auto s = step(rng);
        values[i] = top.finite() + (s < 2 ? 0 : s - 1);
    }
    return {std::move(k), std::move(values)};
}

inline PersistenceDiagram random_diagram(std::mt19937_64& rng, int dimension, std::size_t proper,
                                         std::size_t essential)
{
    std::uniform_int_distribution<int> coord(0, 20);
    PersistenceDiagram d;
    d.dimension = dimension;
    for (std::size_t i = 0; i < proper; ++i) {
        int b = coord(rng);
        int e = coord(rng);
        if (b == e)
            ++e;
        if (b > e)
            std::swap(b, e);
        d.points.push_back({b / 2.0, e / 2.0, 1});
    }
    for (std::size_t i = 0; i < essential; ++i)
        d.essential.push_back({coord(rng) / 2.0, 1});
    d.normalize();
    return d;
}

inline std::vector<Value> critical_values(FilteredComplex const& fc)
{
    std::vector<Value> v(fc.values().begin(), fc.values().end());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace testing_support
