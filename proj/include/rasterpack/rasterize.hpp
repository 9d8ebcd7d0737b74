#pragma once

#include "rasterpack/geometry.hpp"
#include "rasterpack/pixel_shape.hpp"

namespace rasterpack {

/// Maximum chord deviation, in pixels, when arcs are flattened.
inline constexpr double kArcTolerancePx = 0.25;

/// Cell (i, j) is set iff the pixel center (i + 0.5, j + 0.5) of the scaled
/// outline lies inside the outer boundary and outside every hole. Throws
/// EmptyRaster when no center is covered.
PixelShape rasterize(const Outline& outline, double scale);

/// Rotates counter-clockwise by `degrees` and rasterizes. Multiples of 90 are
/// exact grid rotations of rasterize(outline, scale); other angles rotate the
/// vector outline about its bounding-box center and re-rasterize.
PixelShape rotate_and_rasterize(const Outline& outline, int degrees, double scale);

}  // namespace rasterpack
