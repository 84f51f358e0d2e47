#include "catch_amalgamated.hpp"

#include "support.hpp"

#include <cmath>
#include <limits>
#include <set>

using namespace graphtda;
using namespace testing_support;

namespace {

std::set<std::pair<std::string, std::string>> edge_labels(WeightedGraph const& g)
{
    std::set<std::pair<std::string, std::string>> out;
    for (auto const& e : g.edges())
        out.emplace(g.label(e.u), g.label(e.v));
    return out;
}

std::size_t parse_error_line(std::string_view text)
{
    try {
        parse_graph(text);
    } catch (ParseError const& e) {
        return e.line();
    }
    return 0;
}

} // namespace

TEST_CASE("Value ordering and sentinels", "[value]")
{
    CHECK(Value::neg_inf() < Value(-1e300));
    CHECK(Value(1e300) < Value::pos_inf());
    CHECK(Value(-0.0) == Value(0.0));
    CHECK_THROWS_AS(Value(std::numeric_limits<double>::infinity()), std::invalid_argument);
    CHECK_THROWS_AS(Value(std::nan("")), std::invalid_argument);
    CHECK_THROWS(Value::pos_inf().finite());
    CHECK(-Value::pos_inf() == Value::neg_inf());
    CHECK(abs_diff(Value::pos_inf(), Value::pos_inf()) == Value(0.0));
    CHECK(abs_diff(Value::pos_inf(), Value(3.0)) == Value::pos_inf());
    CHECK(abs_diff(Value(1.5), Value(4.0)) == Value(2.5));
    CHECK(half_span(Value(1.0), Value(4.0)) == Value(1.5));
    CHECK(half_span(Value::neg_inf(), Value(4.0)) == Value::pos_inf());
    for (auto v : {Value::neg_inf(), Value::pos_inf(), Value(0.1), Value(-2.5), Value(1e-300)})
        CHECK(Value::parse(v.to_string()) == v);
    CHECK(Value(2.0).to_string() == "2");
    CHECK(Value::pos_inf().to_string() == "inf");
}

TEST_CASE("parse_graph reads edges and isolated vertices", "[graph]")
{
    auto g = parse_graph("a b 1.0\nb c 2.0");
    CHECK(g.labels() == std::vector<std::string>{"a", "b", "c"});
    CHECK(g.edge_count() == 2);
    CHECK(g.weight(*g.find("a"), *g.find("b")) == Value(1.0));
    CHECK(g.weight(*g.find("c"), *g.find("b")) == Value(2.0));
    CHECK_FALSE(g.adjacent(*g.find("a"), *g.find("c")));

    auto h = parse_graph("# comment\n\nz\n  x y -3.5  \n# trailing\n");
    CHECK(h.labels() == std::vector<std::string>{"x", "y", "z"});
    CHECK(h.degree(*h.find("z")) == 0);
    CHECK(h.weight(0, 1) == Value(-3.5));

    // vertex declared after its edge is not a duplicate
    CHECK(parse_graph("a b 1\na\n").vertex_count() == 2);
}

TEST_CASE("parse_graph rejects malformed input with line numbers", "[graph]")
{
    CHECK(parse_error_line("a a 1.0") == 1);
    CHECK(parse_error_line("a b 1\na b 2") == 2);
    CHECK(parse_error_line("a b 1\nb a 2") == 2);
    CHECK(parse_error_line("a b 1\n\nb c x") == 3);
    CHECK(parse_error_line("a b inf") == 1);
    CHECK(parse_error_line("a b nan") == 1);
    CHECK(parse_error_line("a b 1 2") == 1);
    CHECK(parse_error_line("a b") == 1);
    CHECK(parse_error_line("") > 0);
    CHECK(parse_error_line("# only a comment\n") > 0);
}

TEST_CASE("format_graph round-trips", "[graph]")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        auto g = random_real_graph(rng, 7, 0.4);
        CHECK(parse_graph(format_graph(g)) == g);
    }
}

TEST_CASE("constructor invariants", "[graph]")
{
    CHECK_THROWS_AS(graph({"a", "a"}, {}), std::invalid_argument);
    CHECK_THROWS_AS(graph({"a"}, {{"a", "b", Value(1.0)}}), std::invalid_argument);
    CHECK_THROWS_AS(graph({"a"}, {{"a", "a", Value(1.0)}}), std::invalid_argument);
    CHECK_THROWS_AS(graph({"a", "b"}, {{"a", "b", Value(1.0)}, {"b", "a", Value(2.0)}}), std::invalid_argument);
}

TEST_CASE("complement", "[graph]")
{
    CHECK(complement(complete_graph(3)).edge_count() == 0);
    auto e4 = graph({"1", "2", "3", "4"}, {});
    CHECK(complement(e4).edge_count() == 6);

    auto c4 = graph({"1", "2", "3", "4"}, {{"1", "2", 1.0}, {"2", "3", 2.0}, {"3", "4", 3.0}, {"4", "1", 4.0}});
    CHECK(edge_labels(complement(c4)) == std::set<std::pair<std::string, std::string>>{{"1", "3"}, {"2", "4"}});
    auto cc4 = complement(c4);
    for (auto const& e : cc4.edges())
        CHECK_FALSE(e.weight.has_value());

    std::mt19937_64 rng(3);
    for (int i = 0; i < 30; ++i) {
        auto g = random_graph(rng, 8, 0.5);
        CHECK(edge_labels(complement(complement(g))) == edge_labels(g));
        CHECK(complement(g).edge_count() + g.edge_count() == 28);
    }
}

TEST_CASE("threshold_subgraph", "[graph]")
{
    auto p = graph({"a", "b", "c"}, {{"a", "b", 1.0}, {"b", "c", 2.0}});
    CHECK(edge_labels(threshold_subgraph(p, 1.0)) == std::set<std::pair<std::string, std::string>>{{"a", "b"}});
    auto t0 = threshold_subgraph(p, 0.0);
    CHECK(t0.edge_count() == 0);
    CHECK(t0.vertex_count() == 3);
    CHECK(threshold_subgraph(p, 2.0) == p);

    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        auto g = random_graph(rng, 8, 0.5);
        for (int t = 0; t < 7; ++t) {
            auto lo = edge_labels(threshold_subgraph(g, t));
            auto hi = edge_labels(threshold_subgraph(g, t + 1));
            CHECK(std::includes(hi.begin(), hi.end(), lo.begin(), lo.end()));
        }
    }
}

TEST_CASE("csusp and isusp", "[graph]")
{
    auto c4 = cycle_graph(4);
    auto s = csusp(c4);
    CHECK(s.vertex_count() == 6);
    CHECK(s.edge_count() == 12);

    auto v = csusp(graph({"v"}, {}));
    CHECK(v.vertex_count() == 3);
    CHECK(v.edge_count() == 2);
    CHECK(v.degree(*v.find("v")) == 2);

    auto empty = csusp(WeightedGraph());
    CHECK(empty.vertex_count() == 2);
    CHECK(empty.edge_count() == 0);

    CHECK(isusp(WeightedGraph()).edge_count() == 1);
    auto k2 = isusp(complete_graph(2));
    CHECK(k2.vertex_count() == 4);
    CHECK(k2.edge_count() == 2);
    auto i4 = isusp(c4);
    CHECK(i4.vertex_count() == 6);
    CHECK(i4.edge_count() == 5);

    // fresh labels never collide
    auto xy = graph({"x", "y", "x'"}, {});
    auto sx = csusp(xy);
    CHECK(sx.vertex_count() == 5);

    std::mt19937_64 rng(8);
    for (int i = 0; i < 20; ++i) {
        auto g = random_graph(rng, 6, 0.5);
        CHECK(csusp(g).edge_count() == g.edge_count() + 2 * g.vertex_count());
        CHECK(isusp(g).edge_count() == g.edge_count() + 1);
    }
}

TEST_CASE("isomorphisms", "[graph]")
{
    CHECK(isomorphisms(complete_graph(3), complete_graph(3)).size() == 6);
    CHECK(isomorphisms(cycle_graph(4), complete_graph(4)).empty());
    auto p = graph({"a", "b", "c"}, {{"a", "b", 1.0}, {"b", "c", 2.0}});
    auto q = graph({"x", "y", "z"}, {{"x", "y", 1.0}, {"y", "z", 1.0}});
    CHECK(isomorphisms(p, q).size() == 2);
    CHECK(isomorphisms(cycle_graph(5), cycle_graph(5)).size() == 10);

    // identity always present; count equals brute-force permutation count
    std::mt19937_64 rng(21);
    for (int i = 0; i < 25; ++i) {
        auto g = random_graph(rng, 6, 0.4);
        auto maps = isomorphisms(g, g);
        VertexMap id(6);
        for (VertexId k = 0; k < 6; ++k)
            id[k] = k;
        CHECK(std::find(maps.begin(), maps.end(), id) != maps.end());

        std::size_t brute = 0;
        std::vector<VertexId> perm = id;
        do {
            bool ok = true;
            for (auto const& e : g.edges())
                ok = ok && g.adjacent(perm[e.u], perm[e.v]);
            brute += ok;
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(maps.size() == brute);
    }
}
