#pragma once

// Combinatorial enumeration kernels. Each kernel has a serial reference
// implementation and an OpenMP implementation splitting the search tree at
// its root; the parallel results are merged into the same canonical order
// as the serial ones, so the two are interchangeable bit for bit.

#include "graphtda/graph.hpp"
#include "graphtda/parallel.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace graphtda::kernels {

/// Sorted adjacency lists; adjacency[v] holds the neighbors of v.
using AdjacencyLists = std::vector<std::vector<VertexId>>;

/// Maximal cliques as sorted vertex lists, sorted lexicographically.
/// Isolated vertices are maximal cliques of size one.
using CliqueList = std::vector<std::vector<VertexId>>;

/// Enclaveless sets as bitmasks over at most 64 vertices, ascending.
using MaskList = std::vector<std::uint64_t>;

namespace serial {
CliqueList maximal_cliques(AdjacencyLists const& adjacency);
MaskList enclaveless_sets(std::span<std::uint64_t const> closed_neighborhoods, std::size_t max_size);
} // namespace serial

namespace omp {
CliqueList maximal_cliques(AdjacencyLists const& adjacency);
MaskList enclaveless_sets(std::span<std::uint64_t const> closed_neighborhoods, std::size_t max_size);
} // namespace omp

inline CliqueList maximal_cliques(AdjacencyLists const& adjacency, Execution exec)
{
    return exec == Execution::serial ? serial::maximal_cliques(adjacency) : omp::maximal_cliques(adjacency);
}

/// Every nonempty enclaveless set of size <= max_size. A set Y is
/// enclaveless when (closed_neighborhoods[v] & ~Y) != 0 for each v in Y.
inline MaskList enclaveless_sets(std::span<std::uint64_t const> closed_neighborhoods, std::size_t max_size,
                                 Execution exec)
{
    return exec == Execution::serial ? serial::enclaveless_sets(closed_neighborhoods, max_size)
                                     : omp::enclaveless_sets(closed_neighborhoods, max_size);
}

/// Keeps the masks with no single-vertex extension in the list.
/// Input must be sorted ascending.
MaskList maximal_masks(MaskList const& sorted_masks, std::size_t vertex_count);

namespace detail {

// Shared search bodies; the two front ends differ only in how they drive
// the root loop.
void cliques_from_root(AdjacencyLists const& adjacency, VertexId root, CliqueList& out);
void enclaveless_from_root(std::span<std::uint64_t const> closed_neighborhoods, std::size_t max_size, VertexId root,
                           MaskList& out);

} // namespace detail

} // namespace graphtda::kernels
