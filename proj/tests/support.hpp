#pragma once

#include <string>
#include <vector>

#include "rasterpack/layout.hpp"

namespace testing_support {

using namespace rasterpack;

inline PixelShape block(int l, int w) {
  std::vector<Cell> c;
  for (int y = 0; y < w; ++y) {
    for (int x = 0; x < l; ++x) c.push_back({x, y});
  }
  return PixelShape::recentered(c);
}

/// One shape class per raster, one piece per shape, orientation 0 only.
inline Problem problem_of(const std::vector<PixelShape>& rasters, int width,
                          const std::string& name = "toy") {
  std::vector<ShapeClass> shapes;
  std::vector<int> piece_shape;
  for (std::size_t i = 0; i < rasters.size(); ++i) {
    shapes.push_back({"s" + std::to_string(i), {{0, rasters[i]}}});
    piece_shape.push_back(static_cast<int>(i));
  }
  return Problem(name, width, shapes, piece_shape);
}

inline Layout layout_of(std::vector<Cell> pos, int length) {
  Layout l;
  l.orient.assign(pos.size(), 0);
  l.pos = std::move(pos);
  l.length = length;
  return l;
}

}  // namespace testing_support
