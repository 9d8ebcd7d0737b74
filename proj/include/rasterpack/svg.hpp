#pragma once

#include <string>

#include "rasterpack/layout.hpp"

namespace rasterpack {

/// SVG drawing of the container and every placed piece, one group per piece.
/// Cells are drawn as rectangles built from row strips; runs of rows with the
/// same strip are merged. One pixel maps to one user unit, y pointing up.
/// Throws ValidationError for a layout without pieces.
std::string render_svg(const Problem& problem, const Layout& layout);

}  // namespace rasterpack
