#include "graphtda/kernels.hpp"

#include <algorithm>
#include <bit>

namespace graphtda::kernels {

namespace detail {

namespace {

using Set = std::vector<VertexId>;

Set intersect(Set const& a, std::span<VertexId const> b)
{
    Set out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::size_t intersection_size(Set const& a, std::span<VertexId const> b)
{
    std::size_t n = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else {
            ++n;
            ++i;
            ++j;
        }
    }
    return n;
}

// Bron-Kerbosch with Tomita pivoting.
void bron_kerbosch(AdjacencyLists const& adj, Set& r, Set p, Set x, CliqueList& out)
{
    if (p.empty()) {
        if (x.empty()) {
            auto clique = r;
            std::sort(clique.begin(), clique.end());
            out.push_back(std::move(clique));
        }
        return;
    }

    VertexId pivot = p.front();
    std::size_t best = 0;
    for (auto const* pool : {&p, &x})
        for (auto u : *pool) {
            auto k = intersection_size(p, adj[u]);
            if (k > best) {
                best = k;
                pivot = u;
            }
        }

    Set candidates;
    std::set_difference(p.begin(), p.end(), adj[pivot].begin(), adj[pivot].end(), std::back_inserter(candidates));
    for (auto v : candidates) {
        r.push_back(v);
        bron_kerbosch(adj, r, intersect(p, adj[v]), intersect(x, adj[v]), out);
        r.pop_back();
        p.erase(std::lower_bound(p.begin(), p.end(), v));
        x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
}

bool extension_is_enclaveless(std::span<std::uint64_t const> nb, std::uint64_t set)
{
    for (auto rest = set; rest != 0; rest &= rest - 1) {
        auto v = std::countr_zero(rest);
        if ((nb[v] & ~set) == 0)
            return false;
    }
    return true;
}

void grow(std::span<std::uint64_t const> nb, std::size_t max_size, std::uint64_t set, std::size_t size, VertexId last,
          MaskList& out)
{
    out.push_back(set);
    if (size == max_size)
        return;
    for (auto w = last + 1; w < nb.size(); ++w) {
        auto next = set | (std::uint64_t{1} << w);
        // Supersets of a set with an enclave have the same enclave.
        if (extension_is_enclaveless(nb, next))
            grow(nb, max_size, next, size + 1, static_cast<VertexId>(w), out);
    }
}

} // namespace

void cliques_from_root(AdjacencyLists const& adjacency, VertexId root, CliqueList& out)
{
    Set p;
    Set x;
    for (auto u : adjacency[root])
        (u > root ? p : x).push_back(u);
    Set r{root};
    bron_kerbosch(adjacency, r, std::move(p), std::move(x), out);
}

void enclaveless_from_root(std::span<std::uint64_t const> closed_neighborhoods, std::size_t max_size, VertexId root,
                           MaskList& out)
{
    if (max_size == 0)
        return;
    auto single = std::uint64_t{1} << root;
    if (extension_is_enclaveless(closed_neighborhoods, single))
        grow(closed_neighborhoods, max_size, single, 1, root, out);
}

} // namespace detail

namespace serial {

CliqueList maximal_cliques(AdjacencyLists const& adjacency)
{
    CliqueList out;
    for (VertexId v = 0; v < adjacency.size(); ++v)
        detail::cliques_from_root(adjacency, v, out);
    std::sort(out.begin(), out.end());
    return out;
}

MaskList enclaveless_sets(std::span<std::uint64_t const> closed_neighborhoods, std::size_t max_size)
{
    MaskList out;
    for (VertexId v = 0; v < closed_neighborhoods.size(); ++v)
        detail::enclaveless_from_root(closed_neighborhoods, max_size, v, out);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace serial

MaskList maximal_masks(MaskList const& sorted_masks, std::size_t vertex_count)
{
    MaskList out;
    for (auto m : sorted_masks) {
        bool maximal = true;
        for (std::size_t w = 0; w < vertex_count && maximal; ++w) {
            auto bit = std::uint64_t{1} << w;
            if ((m & bit) == 0 && std::binary_search(sorted_masks.begin(), sorted_masks.end(), m | bit))
                maximal = false;
        }
        if (maximal)
            out.push_back(m);
    }
    return out;
}

} // namespace graphtda::kernels
