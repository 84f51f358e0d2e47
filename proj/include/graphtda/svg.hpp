#pragma once

#include "graphtda/persistence.hpp"

#include <span>
#include <string>

namespace graphtda::svg {

inline constexpr int kCanvas = 600;
inline constexpr int kMargin = 30; // 5% of the canvas

/// Persistence diagrams drawn on one set of axes: the diagonal, proper
/// points as discs with area proportional to multiplicity, and essential
/// points as upward rays. Colour encodes the homology degree. Points born
/// at -inf sit on the left edge.
std::string render_diagrams(std::span<PersistenceDiagram const> diagrams);

/// Heat map of a sampled extended PBN over both half-planes, with the
/// diagonal drawn on top. Darker cells carry larger values.
std::string render_extended(ExtendedGrid const& grid);

} // namespace graphtda::svg
