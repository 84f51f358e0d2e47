#include "graphtda/complex.hpp"

#include <bit>

namespace graphtda {

namespace {

class BitColumn
{
public:
    explicit BitColumn(std::size_t bits) : words_((bits + 63) / 64, 0) {}

    void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

    // Index of the highest set bit, or -1 when zero.
    std::ptrdiff_t pivot() const
    {
        for (auto w = words_.size(); w-- > 0;)
            if (words_[w] != 0)
                return static_cast<std::ptrdiff_t>(w * 64 + 63 - std::countl_zero(words_[w]));
        return -1;
    }

    void add(BitColumn const& other)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] ^= other.words_[i];
    }

private:
    std::vector<std::uint64_t> words_;
};

// Rank over Z/2 of the boundary map from dimension d to d - 1.
std::size_t boundary_rank(SimplicialComplex const& k, std::vector<std::size_t> const& offset,
                          std::vector<std::size_t> const& count, int d)
{
    if (d < 1 || d >= static_cast<int>(count.size()) || count[d] == 0)
        return 0;
    auto const rows = count[d - 1];
    std::vector<std::ptrdiff_t> owner(rows, -1);
    std::vector<BitColumn> reduced;
    auto const simplices = k.simplices();

    std::size_t rank = 0;
    for (std::size_t j = 0; j < count[d]; ++j) {
        BitColumn col(rows);
        for (auto const& face : simplices[offset[d] + j].boundary())
            col.flip(*k.index_of(face) - offset[d - 1]);
        for (auto low = col.pivot(); low >= 0 && owner[low] >= 0; low = col.pivot())
            col.add(reduced[owner[low]]);
        auto low = col.pivot();
        if (low >= 0) {
            owner[low] = static_cast<std::ptrdiff_t>(reduced.size());
            reduced.push_back(std::move(col));
            ++rank;
        }
    }
    return rank;
}

} // namespace

std::vector<std::size_t> betti_numbers(SimplicialComplex const& k, int max_dim)
{
    if (max_dim < 0)
        throw std::invalid_argument("max_dim must be >= 0");
    auto const top = static_cast<std::size_t>(max_dim) + 2;
    std::vector<std::size_t> count(top, 0);
    std::vector<std::size_t> offset(top, 0);
    auto const simplices = k.simplices();
    for (std::size_t i = simplices.size(); i-- > 0;) {
        auto d = static_cast<std::size_t>(simplices[i].dimension());
        if (d < top) {
            ++count[d];
            offset[d] = i;
        }
    }

    std::vector<std::size_t> ranks(top + 1, 0);
    for (int d = 1; d < static_cast<int>(top); ++d)
        ranks[d] = boundary_rank(k, offset, count, d);

    std::vector<std::size_t> betti(static_cast<std::size_t>(max_dim) + 1);
    for (std::size_t d = 0; d < betti.size(); ++d)
        betti[d] = count[d] - ranks[d] - ranks[d + 1];
    return betti;
}

} // namespace graphtda
