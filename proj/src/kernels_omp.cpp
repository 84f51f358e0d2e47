#include "graphtda/kernels.hpp"

#include <algorithm>
#include <cstdint>

namespace graphtda::kernels::omp {

namespace {

// Runs search(root, bucket) for every root in parallel, one bucket per root,
// then concatenates the buckets in root order and sorts.
template<typename Item, typename Search>
std::vector<Item> fan_out(std::size_t roots, Search search)
{
    std::vector<std::vector<Item>> buckets(roots);
    auto const n = static_cast<std::int64_t>(roots);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t r = 0; r < n; ++r)
        search(static_cast<VertexId>(r), buckets[r]);

    std::size_t total = 0;
    for (auto const& b : buckets)
        total += b.size();
    std::vector<Item> out;
    out.reserve(total);
    for (auto& b : buckets)
        std::move(b.begin(), b.end(), std::back_inserter(out));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

CliqueList maximal_cliques(AdjacencyLists const& adjacency)
{
    return fan_out<std::vector<VertexId>>(adjacency.size(), [&](VertexId root, CliqueList& out) {
        detail::cliques_from_root(adjacency, root, out);
    });
}

MaskList enclaveless_sets(std::span<std::uint64_t const> closed_neighborhoods, std::size_t max_size)
{
    return fan_out<std::uint64_t>(closed_neighborhoods.size(), [&](VertexId root, MaskList& out) {
        detail::enclaveless_from_root(closed_neighborhoods, max_size, root, out);
    });
}

} // namespace graphtda::kernels::omp
