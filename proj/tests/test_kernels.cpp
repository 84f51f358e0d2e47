#include "catch_amalgamated.hpp"

#include "graphtda/kernels.hpp"
#include "graphtda/parallel.hpp"
#include "support.hpp"

#include <cstdlib>

using namespace graphtda;
using namespace testing_support;

namespace {

kernels::AdjacencyLists adjacency(WeightedGraph const& g)
{
    kernels::AdjacencyLists out(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        out[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    return out;
}

std::vector<std::uint64_t> closed(WeightedGraph const& g)
{
    std::vector<std::uint64_t> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        out.push_back(g.closed_neighborhood_mask(v));
    return out;
}

} // namespace

TEST_CASE("maximal cliques: serial and OpenMP agree", "[kernels]")
{
    std::mt19937_64 rng(501);
    for (int i = 0; i < 30; ++i) {
        std::uniform_int_distribution<std::size_t> n(1, 40);
        std::uniform_real_distribution<double> p(0.1, 0.8);
        auto g = random_graph(rng, n(rng), p(rng));
        auto adj = adjacency(g);
        auto s = kernels::serial::maximal_cliques(adj);
        CHECK(s == kernels::omp::maximal_cliques(adj));
        CHECK(std::is_sorted(s.begin(), s.end()));
        // every clique is maximal: no outside vertex adjacent to all members
        for (auto const& c : s)
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                if (std::find(c.begin(), c.end(), v) != c.end())
                    continue;
                bool all = std::all_of(c.begin(), c.end(), [&](VertexId u) { return g.adjacent(u, v); });
                CHECK_FALSE(all);
            }
    }
    CHECK(kernels::serial::maximal_cliques({}).empty());
}

TEST_CASE("enclaveless sets: serial and OpenMP agree", "[kernels]")
{
    std::mt19937_64 rng(503);
    for (int i = 0; i < 30; ++i) {
        std::uniform_int_distribution<std::size_t> n(1, 14);
        auto g = random_graph(rng, n(rng), 0.4);
        auto nb = closed(g);
        for (std::size_t cap : {std::size_t{2}, std::size_t{4}, g.vertex_count()}) {
            auto s = kernels::serial::enclaveless_sets(nb, cap);
            CHECK(s == kernels::omp::enclaveless_sets(nb, cap));
            CHECK(kernels::maximal_masks(s, g.vertex_count()).size() <= s.size());
        }
    }
}

TEST_CASE("maximal_masks", "[kernels]")
{
    kernels::MaskList masks{0b001, 0b011, 0b100, 0b110};
    std::sort(masks.begin(), masks.end());
    CHECK(kernels::maximal_masks(masks, 3) == kernels::MaskList{0b011, 0b110});
}

TEST_CASE("thread limit", "[kernels]")
{
    auto const before = thread_limit();
    set_thread_limit(2);
    CHECK(thread_limit() == 2);
    set_thread_limit(0);
    CHECK(thread_limit() == before);

    ::setenv("GRAPHTDA_THREADS", "3", 1);
    CHECK(apply_thread_env() == 3);
    CHECK(thread_limit() == 3);
    ::setenv("GRAPHTDA_THREADS", "zz", 1);
    CHECK_THROWS_AS(apply_thread_env(), std::invalid_argument);
    ::unsetenv("GRAPHTDA_THREADS");
    set_thread_limit(0);

    std::vector<int> hits(1000, 0);
    for_each_index(hits.size(), [&](std::size_t i) { hits[i] += 1; }, Execution::parallel);
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
}
