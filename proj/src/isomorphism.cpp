#include "graphtda/graph.hpp"

#include <algorithm>

namespace graphtda {

namespace {

struct IsoSearch
{
    WeightedGraph const& g;
    WeightedGraph const& h;
    std::function<bool(VertexMap const&)> const& visit;

    std::vector<VertexId> order;        // g vertices in placement order
    VertexMap map;                      // g -> h
    std::vector<bool> used;             // h vertices taken
    std::vector<std::size_t> g_profile; // degree-sequence signature per vertex
    std::vector<std::size_t> h_profile;

    bool stopped = false;

    // Sum of neighbor degrees: cheap refinement of plain degree.
    static std::vector<std::size_t> profile(WeightedGraph const& x)
    {
        std::vector<std::size_t> p(x.vertex_count());
        for (VertexId v = 0; v < x.vertex_count(); ++v) {
            std::size_t s = 0;
            for (auto u : x.neighbors(v))
                s += x.degree(u);
            p[v] = x.degree(v) * 1'000'003 + s;
        }
        return p;
    }

    void plan()
    {
        // Place next the vertex with the most already-placed neighbors, so
        // adjacency constraints kick in as early as possible.
        auto const n = g.vertex_count();
        std::vector<bool> placed(n, false);
        std::vector<std::size_t> links(n, 0);
        for (std::size_t step = 0; step < n; ++step) {
            VertexId best = 0;
            bool have = false;
            for (VertexId v = 0; v < n; ++v) {
                if (placed[v])
                    continue;
                if (!have || links[v] > links[best]
                    || (links[v] == links[best] && g.degree(v) > g.degree(best))) {
                    best = v;
                    have = true;
                }
            }
            placed[best] = true;
            order.push_back(best);
            for (auto u : g.neighbors(best))
                ++links[u];
        }
    }

    bool consistent(std::size_t depth, VertexId target) const
    {
        auto const v = order[depth];
        for (std::size_t k = 0; k < depth; ++k) {
            auto const w = order[k];
            if (g.adjacent(v, w) != h.adjacent(target, map[w]))
                return false;
        }
        return true;
    }

    void extend(std::size_t depth)
    {
        if (stopped)
            return;
        if (depth == order.size()) {
            if (!visit(map))
                stopped = true;
            return;
        }
        auto const v = order[depth];
        for (VertexId c = 0; c < h.vertex_count() && !stopped; ++c) {
            if (used[c] || h_profile[c] != g_profile[v] || !consistent(depth, c))
                continue;
            used[c] = true;
            map[v] = c;
            extend(depth + 1);
            used[c] = false;
        }
    }
};

} // namespace

void for_each_isomorphism(WeightedGraph const& g, WeightedGraph const& h,
                          std::function<bool(VertexMap const&)> const& visit)
{
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
        return;

    IsoSearch s{g, h, visit, {}, VertexMap(g.vertex_count(), 0), std::vector<bool>(h.vertex_count(), false),
                IsoSearch::profile(g), IsoSearch::profile(h)};

    auto a = s.g_profile;
    auto b = s.h_profile;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
        return;

    s.plan();
    s.extend(0);
}

std::vector<VertexMap> isomorphisms(WeightedGraph const& g, WeightedGraph const& h)
{
    std::vector<VertexMap> out;
    for_each_isomorphism(g, h, [&](VertexMap const& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

} // namespace graphtda
