#include "graphtda/complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace graphtda {

Simplex::Simplex(std::vector<VertexId> vertices)
    : vertices_(std::move(vertices))
{
    if (vertices_.empty())
        throw std::invalid_argument("simplex must be nonempty");
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw std::invalid_argument("simplex has a repeated vertex");
}

bool Simplex::contains(VertexId v) const
{
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_face_of(Simplex const& other) const
{
    return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(), vertices_.end());
}

std::vector<Simplex> Simplex::boundary() const
{
    std::vector<Simplex> faces;
    if (vertices_.size() < 2)
        return faces;
    faces.reserve(vertices_.size());
    for (std::size_t skip = 0; skip < vertices_.size(); ++skip) {
        Simplex f;
        f.vertices_.reserve(vertices_.size() - 1);
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            if (i != skip)
                f.vertices_.push_back(vertices_[i]);
        faces.push_back(std::move(f));
    }
    return faces;
}

std::strong_ordering operator<=>(Simplex const& a, Simplex const& b)
{
    if (auto c = a.vertices_.size() <=> b.vertices_.size(); c != 0)
        return c;
    return std::lexicographical_compare_three_way(a.vertices_.begin(), a.vertices_.end(), b.vertices_.begin(),
                                                  b.vertices_.end());
}

std::size_t SimplexHash::operator()(Simplex const& s) const noexcept
{
    // FNV-1a over the vertex ids.
    std::size_t h = 1469598103934665603ull;
    for (auto v : s.vertices()) {
        h ^= v;
        h *= 1099511628211ull;
    }
    return h;
}

// --- SimplicialComplex --------------------------------------------------------

namespace {

void add_faces(std::span<VertexId const> verts, std::size_t max_size, std::unordered_set<Simplex, SimplexHash>& out)
{
    auto const n = verts.size();
    if (n > 62)
        throw std::length_error("facet too large to enumerate its faces");
    std::vector<VertexId> buf;
    buf.reserve(std::min(n, max_size));
    // Enumerate subsets of size <= max_size by a stack of indices.
    std::vector<std::size_t> idx;
    idx.reserve(max_size);
    std::size_t next = 0;
    while (true) {
        if (next < n && idx.size() < max_size) {
            idx.push_back(next);
            buf.push_back(verts[next]);
            out.insert(Simplex(buf));
            ++next;
            continue;
        }
        if (idx.empty())
            break;
        next = idx.back() + 1;
        idx.pop_back();
        buf.pop_back();
    }
}

} // namespace

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> ground, std::vector<Simplex> const& generators,
                                                 std::optional<int> max_dim)
{
    if (!std::is_sorted(ground.begin(), ground.end())
        || std::adjacent_find(ground.begin(), ground.end()) != ground.end())
        throw std::invalid_argument("ground labels must be sorted and unique");
    if (max_dim && *max_dim < 0)
        throw std::invalid_argument("max_dim must be >= 0");

    auto const max_size = max_dim ? static_cast<std::size_t>(*max_dim) + 1 : std::size_t(64);

    std::unordered_set<Simplex, SimplexHash> all;
    for (auto const& f : generators) {
        if (f.vertices().back() >= ground.size())
            throw std::invalid_argument("simplex vertex outside the ground set");
        add_faces(f.vertices(), max_size, all);
    }

    SimplicialComplex k;
    k.ground_ = std::move(ground);
    k.simplices_.assign(all.begin(), all.end());
    std::sort(k.simplices_.begin(), k.simplices_.end());
    k.index_.reserve(k.simplices_.size());
    for (std::size_t i = 0; i < k.simplices_.size(); ++i)
        k.index_.emplace(k.simplices_[i], i);

    std::vector<bool> covered(k.simplices_.size(), false);
    for (auto const& s : k.simplices_)
        for (auto const& f : s.boundary())
            covered[k.index_.at(f)] = true;
    for (std::size_t i = 0; i < k.simplices_.size(); ++i)
        if (!covered[i])
            k.facets_.push_back(k.simplices_[i]);
    return k;
}

std::optional<std::size_t> SimplicialComplex::index_of(Simplex const& s) const
{
    auto it = index_.find(s);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const
{
    std::vector<std::size_t> f(static_cast<std::size_t>(dimension() + 1), 0);
    for (auto const& s : simplices_)
        ++f[s.dimension()];
    return f;
}

std::vector<VertexId> SimplicialComplex::used_vertices() const
{
    std::vector<VertexId> out;
    for (auto const& s : simplices_) {
        if (s.dimension() > 0)
            break;
        out.push_back(s[0]);
    }
    return out;
}

std::vector<std::string> SimplicialComplex::labels_of(Simplex const& s) const
{
    std::vector<std::string> out;
    out.reserve(s.size());
    for (auto v : s.vertices())
        out.push_back(ground_.at(v));
    return out;
}

bool SimplicialComplex::is_closed() const
{
    for (auto const& s : simplices_) {
        auto const n = s.size();
        if (n > 20)
            throw std::length_error("is_closed: simplex too large for exhaustive subset check");
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            std::vector<VertexId> sub;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i))
                    sub.push_back(s[i]);
            if (!contains(Simplex(std::move(sub))))
                return false;
        }
    }
    return true;
}

bool SimplicialComplex::is_subcomplex_of(SimplicialComplex const& other) const
{
    std::vector<std::optional<VertexId>> translate(ground_.size());
    for (std::size_t i = 0; i < ground_.size(); ++i) {
        auto it = std::lower_bound(other.ground_.begin(), other.ground_.end(), ground_[i]);
        if (it != other.ground_.end() && *it == ground_[i])
            translate[i] = static_cast<VertexId>(it - other.ground_.begin());
    }
    for (auto const& s : simplices_) {
        std::vector<VertexId> image;
        image.reserve(s.size());
        for (auto v : s.vertices()) {
            if (!translate[v])
                return false;
            image.push_back(*translate[v]);
        }
        if (!other.contains(Simplex(std::move(image))))
            return false;
    }
    return true;
}

} // namespace graphtda
