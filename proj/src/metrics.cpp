#include "graphtda/metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace graphtda {

Value dhat(Cornerpoint p, Cornerpoint q)
{
    auto const shift = std::max(abs_diff(p.birth, q.birth), abs_diff(p.death, q.death));
    auto const via_diagonal = std::max(half_span(p.birth, p.death), half_span(q.birth, q.death));
    return std::min(shift, via_diagonal);
}

std::vector<Cornerpoint> expand_points(PersistenceDiagram const& d)
{
    std::vector<Cornerpoint> out;
    for (auto const& p : d.points)
        for (std::size_t k = 0; k < p.multiplicity; ++k)
            out.push_back({p.birth, p.death});
    return out;
}

std::vector<Value> expand_essential(PersistenceDiagram const& d)
{
    std::vector<Value> out;
    for (auto const& e : d.essential)
        for (std::size_t k = 0; k < e.multiplicity; ++k)
            out.push_back(e.birth);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Kuhn's augmenting-path matching on the threshold graph cost <= limit.
class ThresholdMatcher
{
public:
    explicit ThresholdMatcher(std::vector<std::vector<Value>> const& cost) : cost_(cost) {}

    bool perfect(Value limit, std::vector<std::ptrdiff_t>* match_of_right = nullptr)
    {
        auto const n = cost_.size();
        right_.assign(n, -1);
        for (std::size_t i = 0; i < n; ++i) {
            seen_.assign(n, false);
            if (!augment(i, limit))
                return false;
        }
        if (match_of_right)
            *match_of_right = right_;
        return true;
    }

private:
    bool augment(std::size_t i, Value limit)
    {
        for (std::size_t j = 0; j < cost_.size(); ++j) {
            if (seen_[j] || cost_[i][j] > limit)
                continue;
            seen_[j] = true;
            if (right_[j] < 0 || augment(static_cast<std::size_t>(right_[j]), limit)) {
                right_[j] = static_cast<std::ptrdiff_t>(i);
                return true;
            }
        }
        return false;
    }

    std::vector<std::vector<Value>> const& cost_;
    std::vector<std::ptrdiff_t> right_;
    std::vector<bool> seen_;
};

} // namespace

Matching bottleneck_matching(PersistenceDiagram const& a, PersistenceDiagram const& b)
{
    if (a.dimension != b.dimension)
        throw std::invalid_argument("bottleneck distance compares diagrams of the same degree");

    Matching m;
    m.cost = Value(0.0);

    // Cornerlines: sorted order is optimal for the max of |b_i - b'_i| on a line.
    auto ea = expand_essential(a);
    auto eb = expand_essential(b);
    for (std::size_t i = 0; i < std::max(ea.size(), eb.size()); ++i) {
        Matching::Pair pair;
        if (i < ea.size())
            pair.first = i;
        if (i < eb.size())
            pair.second = i;
        pair.cost = (pair.first && pair.second) ? abs_diff(ea[i], eb[i]) : Value::pos_inf();
        m.cost = std::max(m.cost, pair.cost);
        m.essential.push_back(pair);
    }

    // Proper points, each side augmented with diagonal slots for the other.
    auto pa = expand_points(a);
    auto pb = expand_points(b);
    auto const na = pa.size();
    auto const nb = pb.size();
    auto const n = na + nb;
    if (n == 0)
        return m;

    std::vector<std::vector<Value>> cost(n, std::vector<Value>(n, Value(0.0)));
    std::vector<Value> candidates{Value(0.0)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Value c(0.0);
            if (i < na && j < nb)
                c = dhat(pa[i], pb[j]);
            else if (i < na)
                c = half_span(pa[i].birth, pa[i].death);
            else if (j < nb)
                c = half_span(pb[j].birth, pb[j].death);
            cost[i][j] = c;
            candidates.push_back(c);
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    // The optimum is one of the pair costs: binary search the smallest
    // candidate that admits a perfect matching.
    ThresholdMatcher matcher(cost);
    std::size_t lo = 0;
    std::size_t hi = candidates.size() - 1;
    while (lo < hi) {
        auto mid = (lo + hi) / 2;
        if (matcher.perfect(candidates[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    std::vector<std::ptrdiff_t> right;
    matcher.perfect(candidates[lo], &right);

    Value proper_cost(0.0);
    for (std::size_t j = 0; j < n; ++j) {
        auto i = static_cast<std::size_t>(right[j]);
        if (i >= na && j >= nb)
            continue; // diagonal to diagonal
        Matching::Pair pair;
        if (i < na)
            pair.first = i;
        if (j < nb)
            pair.second = j;
        pair.cost = cost[i][j];
        proper_cost = std::max(proper_cost, pair.cost);
        m.proper.push_back(pair);
    }
    std::sort(m.proper.begin(), m.proper.end(), [na, nb](auto const& x, auto const& y) {
        auto key = [&](auto const& p) {
            return std::pair{p.first.value_or(na), p.second.value_or(nb)};
        };
        return key(x) < key(y);
    });
    m.cost = std::max(m.cost, proper_cost);
    return m;
}

Value bottleneck(PersistenceDiagram const& a, PersistenceDiagram const& b)
{
    return bottleneck_matching(a, b).cost;
}

Value pseudodistance_iso(WeightedGraph const& g1, WeightedGraph const& g2)
{
    if (!g1.fully_weighted() || !g2.fully_weighted())
        throw std::invalid_argument("pseudodistance_iso needs weighted graphs");

    std::optional<Value> best;
    for_each_isomorphism(g1, g2, [&](VertexMap const& psi) {
        Value worst(0.0);
        for (auto const& e : g1.edges()) {
            worst = std::max(worst, abs_diff(*e.weight, *g2.weight(psi[e.u], psi[e.v])));
            if (best && worst >= *best)
                break;
        }
        if (!best || worst < *best)
            best = worst;
        return *best != Value(0.0);
    });
    return best.value_or(Value::pos_inf());
}

} // namespace graphtda
