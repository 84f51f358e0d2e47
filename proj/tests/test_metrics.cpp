#include "catch_amalgamated.hpp"

#include "graphtda/metrics.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace graphtda;
using namespace testing_support;

namespace {

PersistenceDiagram diagram(std::vector<DiagramPoint> points, std::vector<EssentialPoint> essential = {}, int r = 0)
{
    PersistenceDiagram d{r, std::move(points), std::move(essential)};
    d.normalize();
    return d;
}

} // namespace

TEST_CASE("dhat", "[metrics]")
{
    CHECK(dhat({1.0, 3.0}, {1.0, 3.0}) == Value(0.0));
    CHECK(dhat({1.0, 3.0}, {10.0, 10.1}) == Value(1.0));
    CHECK(dhat({0.0, 2.0}, {0.0, 4.0}) == Value(2.0));
    CHECK(dhat({Value::neg_inf(), 2.0}, {Value::neg_inf(), 3.0}) == Value(1.0));
    CHECK(dhat({Value::neg_inf(), 2.0}, {0.0, 3.0}) == Value::pos_inf());

    std::mt19937_64 rng(401);
    for (int i = 0; i < 100; ++i) {
        auto a = random_diagram(rng, 0, 1, 0).points[0];
        auto b = random_diagram(rng, 0, 1, 0).points[0];
        Cornerpoint p{a.birth, a.death};
        Cornerpoint q{b.birth, b.death};
        CHECK(dhat(p, q) == dhat(q, p));
        CHECK(dhat(p, p) == Value(0.0));
    }
}

TEST_CASE("bottleneck examples", "[metrics]")
{
    auto d = diagram({{0.0, 2.0, 1}, {1.0, 5.0, 2}}, {{0.0, 1}});
    CHECK(bottleneck(d, d) == Value(0.0));
    CHECK(bottleneck(diagram({{1.0, 3.0, 1}}), diagram({})) == Value(1.0));

    auto a = diagram({{0.0, 4.0, 1}, {0.0, 6.0, 1}});
    auto b = diagram({{0.0, 5.0, 1}});
    CHECK(bottleneck(a, b) == oracle::bottleneck_augmented(a, b));
    CHECK(bottleneck(a, b) == Value(2.0));

    CHECK(bottleneck(diagram({}, {{0.0, 1}}), diagram({})) == Value::pos_inf());
    CHECK(bottleneck(diagram({}, {{0.0, 1}}), diagram({}, {{2.5, 1}})) == Value(2.5));
    CHECK(bottleneck(diagram({}, {{Value::neg_inf(), 1}}), diagram({}, {{Value::neg_inf(), 1}})) == Value(0.0));
    CHECK_THROWS_AS(bottleneck(diagram({}, {}, 0), diagram({}, {}, 1)), std::invalid_argument);
    CHECK(bottleneck(diagram({}), diagram({})) == Value(0.0));
}

TEST_CASE("matching witnesses the cost", "[metrics]")
{
    std::mt19937_64 rng(409);
    for (int i = 0; i < 50; ++i) {
        auto a = random_diagram(rng, 1, 4, 2);
        auto b = random_diagram(rng, 1, 3, 2);
        auto m = bottleneck_matching(a, b);
        auto pa = expand_points(a);
        auto pb = expand_points(b);
        std::vector<int> seen_a(pa.size()), seen_b(pb.size());
        Value worst = 0.0;
        for (auto const& p : m.proper) {
            if (p.first)
                ++seen_a[*p.first];
            if (p.second)
                ++seen_b[*p.second];
            worst = std::max(worst, p.cost);
        }
        for (auto const& p : m.essential)
            worst = std::max(worst, p.cost);
        CHECK(std::all_of(seen_a.begin(), seen_a.end(), [](int c) { return c == 1; }));
        CHECK(std::all_of(seen_b.begin(), seen_b.end(), [](int c) { return c == 1; }));
        CHECK(worst == m.cost);
        CHECK(m.cost == bottleneck(a, b));
    }
}

TEST_CASE("bottleneck against exhaustive matching", "[metrics][oracle]")
{
    std::mt19937_64 rng(419);
    std::uniform_int_distribution<std::size_t> count(0, 6);
    std::uniform_int_distribution<std::size_t> small(0, 3);
    std::uniform_int_distribution<std::size_t> ess(0, 2);
    for (int i = 0; i < 200; ++i) {
        auto a = random_diagram(rng, 0, count(rng), 0);
        auto b = random_diagram(rng, 0, count(rng), 0);
        REQUIRE(bottleneck(a, b) == oracle::bottleneck_partial(a, b));
        auto c = random_diagram(rng, 0, small(rng), ess(rng));
        auto d = random_diagram(rng, 0, small(rng), ess(rng));
        REQUIRE(oracle::bottleneck_partial(c, d) == oracle::bottleneck_augmented(c, d));
        REQUIRE(bottleneck(c, d) == oracle::bottleneck_augmented(c, d));
    }
}

TEST_CASE("bottleneck is a pseudometric", "[metrics]")
{
    std::mt19937_64 rng(421);
    std::uniform_int_distribution<std::size_t> count(0, 6);
    for (int i = 0; i < 100; ++i) {
        auto a = random_diagram(rng, 0, count(rng), 1);
        auto b = random_diagram(rng, 0, count(rng), 1);
        auto c = random_diagram(rng, 0, count(rng), 1);
        CHECK(bottleneck(a, a) == Value(0.0));
        CHECK(bottleneck(a, b) == bottleneck(b, a));
        auto ab = bottleneck(a, b).finite();
        auto bc = bottleneck(b, c).finite();
        auto ac = bottleneck(a, c).finite();
        CHECK(ac <= ab + bc + 1e-12);
    }
}

TEST_CASE("pseudodistance over isomorphisms", "[metrics]")
{
    auto k3a = graph({"a", "b", "c"}, {{"a", "b", 1.0}, {"b", "c", 2.0}, {"a", "c", 3.0}});
    auto k3b = graph({"a", "b", "c"}, {{"a", "b", 1.0}, {"b", "c", 2.0}, {"a", "c", 4.0}});
    CHECK(pseudodistance_iso(k3a, k3a) == Value(0.0));
    CHECK(pseudodistance_iso(k3a, k3b) == Value(1.0));
    CHECK(pseudodistance_iso(cycle_graph(4), complete_graph(4)) == Value::pos_inf());
    CHECK_THROWS_AS(pseudodistance_iso(csusp(k3a), csusp(k3a)), std::invalid_argument);

    std::mt19937_64 rng(431);
    for (int i = 0; i < 30; ++i) {
        auto g = random_graph(rng, 6, 0.5, 4);
        auto h = random_graph(rng, 6, 0.5, 4);
        CHECK(pseudodistance_iso(g, h) == oracle::pseudodistance_permutations(g, h));
        // relabel h to get a guaranteed isomorphic partner
        std::vector<std::string> names;
        for (std::size_t v = 0; v < 6; ++v)
            names.push_back(vname(5 - v));
        std::vector<LabeledEdge> es;
        for (auto const& e : g.edges())
            es.push_back({names[e.u], names[e.v], Value(e.weight->finite() + (e.u % 2 ? 0.5 : 0.0))});
        WeightedGraph moved(names, es);
        CHECK(pseudodistance_iso(g, moved) == oracle::pseudodistance_permutations(g, moved));
        CHECK(pseudodistance_iso(g, moved) <= Value(0.5));
    }
}
