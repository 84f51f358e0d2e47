#include "graphtda/complex.hpp"
#include "graphtda/kernels.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace graphtda {

namespace {

kernels::AdjacencyLists adjacency_of(WeightedGraph const& g)
{
    kernels::AdjacencyLists adj(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        auto n = g.neighbors(v);
        adj[v].assign(n.begin(), n.end());
    }
    return adj;
}

Simplex from_mask(std::uint64_t mask)
{
    std::vector<VertexId> verts;
    for (; mask != 0; mask &= mask - 1)
        verts.push_back(static_cast<VertexId>(std::countr_zero(mask)));
    return Simplex(std::move(verts));
}

} // namespace

SimplicialComplex clique_complex(WeightedGraph const& g, std::optional<int> max_dim, Execution exec)
{
    auto cliques = kernels::maximal_cliques(adjacency_of(g), exec);
    std::vector<Simplex> facets;
    facets.reserve(cliques.size());
    for (auto& c : cliques)
        facets.emplace_back(std::move(c));
    return SimplicialComplex::from_facets(g.labels(), facets, max_dim);
}

SimplicialComplex neighborhood_complex(WeightedGraph const& g, std::optional<int> max_dim)
{
    std::vector<Simplex> hoods;
    hoods.reserve(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        auto n = g.neighbors(v);
        std::vector<VertexId> closed(n.begin(), n.end());
        closed.push_back(v);
        hoods.emplace_back(std::move(closed));
    }
    // Only the inclusion-maximal neighborhoods need to be expanded.
    std::sort(hoods.begin(), hoods.end());
    hoods.erase(std::unique(hoods.begin(), hoods.end()), hoods.end());
    std::vector<Simplex> facets;
    for (std::size_t i = 0; i < hoods.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = i + 1; j < hoods.size() && !dominated; ++j)
            dominated = hoods[i].is_face_of(hoods[j]);
        if (!dominated)
            facets.push_back(hoods[i]);
    }
    return SimplicialComplex::from_facets(g.labels(), facets, max_dim);
}

bool is_enclaveless(WeightedGraph const& g, std::span<VertexId const> set)
{
    for (auto v : set) {
        bool escapes = false;
        for (auto u : g.neighbors(v))
            if (std::find(set.begin(), set.end(), u) == set.end()) {
                escapes = true;
                break;
            }
        if (!escapes)
            return false;
    }
    return true;
}

SimplicialComplex enclaveless_complex(WeightedGraph const& g, std::optional<int> max_dim, Execution exec)
{
    auto const n = g.vertex_count();
    if (n > 64)
        throw std::length_error("enclaveless_complex: more than 64 vertices");
    if (!max_dim && n > kMaxUncappedEnclavelessVertices)
        throw std::length_error("enclaveless_complex: uncapped enumeration limited to "
                                + std::to_string(kMaxUncappedEnclavelessVertices) + " vertices; pass max_dim");
    if (max_dim && *max_dim < 0)
        throw std::invalid_argument("max_dim must be >= 0");

    std::vector<std::uint64_t> nb(n);
    for (VertexId v = 0; v < n; ++v)
        nb[v] = g.closed_neighborhood_mask(v);

    auto const max_size = max_dim ? std::min<std::size_t>(n, *max_dim + 1) : n;
    auto sets = kernels::enclaveless_sets(nb, max_size, exec);
    std::vector<Simplex> facets;
    for (auto m : kernels::maximal_masks(sets, n))
        facets.push_back(from_mask(m));
    return SimplicialComplex::from_facets(g.labels(), facets, max_dim);
}

SimplicialComplex independent_complex(WeightedGraph const& g, std::optional<int> max_dim)
{
    return clique_complex(complement(g), max_dim);
}

SimplicialComplex barycentric_subdivision(SimplicialComplex const& k)
{
    auto const simplices = k.simplices();

    std::vector<std::string> names;
    names.reserve(simplices.size());
    for (auto const& s : simplices) {
        std::string name = "{";
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i)
                name += ',';
            name += k.ground()[s[i]];
        }
        names.push_back(name + "}");
    }

    std::vector<std::size_t> order(names.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return names[a] < names[b]; });
    std::vector<VertexId> vertex_of(names.size());
    std::vector<std::string> ground;
    ground.reserve(names.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
        vertex_of[order[r]] = static_cast<VertexId>(r);
        ground.push_back(names[order[r]]);
    }

    // Maximal chains are the complete flags of the facets: one per ordering
    // of a facet's vertices.
    std::vector<Simplex> chains;
    for (auto const& facet : k.facets()) {
        std::vector<VertexId> perm(facet.vertices().begin(), facet.vertices().end());
        do {
            std::vector<VertexId> chain;
            std::vector<VertexId> prefix;
            for (auto v : perm) {
                prefix.push_back(v);
                chain.push_back(vertex_of[*k.index_of(Simplex(prefix))]);
            }
            chains.emplace_back(std::move(chain));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return SimplicialComplex::from_facets(std::move(ground), chains);
}

WeightedGraph one_skeleton(SimplicialComplex const& k)
{
    std::vector<LabeledEdge> edges;
    for (auto const& s : k.simplices()) {
        if (s.dimension() < 1)
            continue;
        if (s.dimension() > 1)
            break;
        edges.push_back({k.ground()[s[0]], k.ground()[s[1]], std::nullopt});
    }
    return WeightedGraph(k.ground(), edges);
}

std::optional<VertexMap> find_complex_isomorphism(SimplicialComplex const& a, SimplicialComplex const& b)
{
    if (a.f_vector() != b.f_vector())
        return std::nullopt;

    // 1-skeletons on the used vertices only, so unused ground labels do not
    // have to match up.
    auto restricted = [](SimplicialComplex const& k, std::vector<VertexId>& used) {
        used = k.used_vertices();
        std::vector<std::string> labels;
        for (auto v : used)
            labels.push_back(k.ground()[v]);
        std::vector<LabeledEdge> edges;
        for (auto const& s : k.simplices())
            if (s.dimension() == 1)
                edges.push_back({k.ground()[s[0]], k.ground()[s[1]], std::nullopt});
        return WeightedGraph(std::move(labels), edges);
    };
    std::vector<VertexId> used_a;
    std::vector<VertexId> used_b;
    auto ga = restricted(a, used_a);
    auto gb = restricted(b, used_b);

    std::optional<VertexMap> found;
    for_each_isomorphism(ga, gb, [&](VertexMap const& m) {
        VertexMap full(a.ground().size(), 0);
        for (std::size_t i = 0; i < used_a.size(); ++i)
            full[used_a[i]] = used_b[m[i]];
        for (auto const& f : a.facets()) {
            std::vector<VertexId> image;
            for (auto v : f.vertices())
                image.push_back(full[v]);
            if (!b.contains(Simplex(std::move(image))))
                return true;
        }
        found = std::move(full);
        return false;
    });
    return found;
}

} // namespace graphtda
