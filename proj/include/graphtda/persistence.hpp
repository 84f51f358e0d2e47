#pragma once

#include "graphtda/filtration.hpp"
#include "graphtda/value.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace graphtda {

/// Proper cornerpoint (birth < death) with multiplicity.
struct DiagramPoint
{
    Value birth;
    Value death;
    std::size_t multiplicity = 1;

    friend bool operator==(DiagramPoint const&, DiagramPoint const&) = default;
};

/// Cornerpoint at infinity (a class that never dies).
struct EssentialPoint
{
    Value birth;
    std::size_t multiplicity = 1;

    friend bool operator==(EssentialPoint const&, EssentialPoint const&) = default;
};

/// Persistence diagram of one homology degree. Points are kept merged
/// (one entry per location) and sorted by (birth, death).
struct PersistenceDiagram
{
    int dimension = 0;
    std::vector<DiagramPoint> points;
    std::vector<EssentialPoint> essential;

    /// Merges coincident entries, drops multiplicity-zero ones and sorts.
    /// Throws std::invalid_argument on a point with birth >= death.
    void normalize();

    std::size_t proper_count() const;
    std::size_t essential_count() const;

    friend bool operator==(PersistenceDiagram const&, PersistenceDiagram const&) = default;
};

/// Query point of the open half-plane u < v.
struct PBNQuery
{
    double u;
    double v;

    PBNQuery(double u_, double v_) : u(u_), v(v_)
    {
        if (!(u < v))
            throw std::invalid_argument("PBN query needs u < v");
    }
};

/// Diagrams for degrees 0..max_dim by Z/2 column reduction with clearing.
/// Simplices enter in (value, dimension, vertex order) order; pairs with
/// birth == death are dropped. Throws std::invalid_argument when the values
/// are not monotone on faces.
std::vector<PersistenceDiagram> reduce(FilteredComplex const& fc, int max_dim);

/// The degree-r diagram.
PersistenceDiagram cornerpoints(FilteredComplex const& fc, int r);

/// Persistent Betti number at (u, v): classes with birth <= u and
/// death > v, essential ones counted when birth <= u.
std::size_t pbn(PersistenceDiagram const& d, PBNQuery q);
std::size_t pbn(FilteredComplex const& fc, int r, PBNQuery q);

/// Betti number of the sublevel set at u (the v -> u limit of pbn).
std::size_t sublevel_betti(PersistenceDiagram const& d, double u);

/// Diagrams of both halves of an extended pair, computed once and queried
/// on the whole plane.
class ExtendedPersistence
{
public:
    ExtendedPersistence(ExtendedPair const& pair, int max_dim);

    PersistenceDiagram const& ascending(int r) const { return ascending_.at(r); }
    PersistenceDiagram const& descending(int r) const { return descending_.at(r); }
    int max_dim() const { return static_cast<int>(ascending_.size()) - 1; }

    /// u < v: ascending pbn at (u, v). u > v: descending pbn at (-u, -v).
    /// u == v: Betti number of the ascending sublevel set at u.
    std::size_t pbn(int r, double u, double v) const;

private:
    std::vector<PersistenceDiagram> ascending_;
    std::vector<PersistenceDiagram> descending_;
};

std::size_t extended_pbn(ExtendedPair const& pair, int r, double u, double v);

/// Extended PBN sampled on a square grid covering both half-planes.
/// values[i][j] is the degree-r value at (axis[i], axis[j]).
struct ExtendedGrid
{
    int dimension = 0;
    std::vector<double> axis;
    std::vector<std::vector<std::size_t>> values;
};

/// Axis: every finite diagram coordinate of the ascending diagrams and the
/// negated coordinates of the descending ones, plus midpoints between
/// neighbours and one point beyond each end, so every cell of constant
/// value is hit.
ExtendedGrid sample_extended_grid(ExtendedPersistence const& ext, int r, Execution exec = Execution::parallel);

} // namespace graphtda
