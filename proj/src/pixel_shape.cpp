#include "rasterpack/pixel_shape.hpp"

#include <algorithm>

#include "rasterpack/errors.hpp"

namespace rasterpack {

PixelShape PixelShape::recentered(std::vector<Cell> cells) {
  if (cells.empty()) throw EmptyRaster("shape has no cells");
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());

  int min_x = cells.front().x, max_x = min_x;
  int min_y = cells.front().y, max_y = min_y;
  for (const auto& c : cells) {
    min_x = std::min(min_x, c.x);
    max_x = std::max(max_x, c.x);
    min_y = std::min(min_y, c.y);
    max_y = std::max(max_y, c.y);
  }
  PixelShape s;
  s.length_ = max_x - min_x + 1;
  s.width_ = max_y - min_y + 1;
  const Cell shift{min_x + s.length_ / 2, min_y + s.width_ / 2};
  for (auto& c : cells) c = c - shift;
  s.cells_ = std::move(cells);
  return s;
}

bool PixelShape::contains(Cell c) const {
  return std::binary_search(cells_.begin(), cells_.end(), c);
}

PixelShape rotate_quarter_turns(const PixelShape& shape, int quarter_turns) {
  quarter_turns = ((quarter_turns % 4) + 4) % 4;
  if (quarter_turns == 0) return shape;
  std::vector<Cell> out;
  out.reserve(shape.cells().size());
  for (const auto& c : shape.cells()) {
    switch (quarter_turns) {
      case 1: out.push_back({-c.y, c.x}); break;
      case 2: out.push_back({-c.x, -c.y}); break;
      default: out.push_back({c.y, -c.x}); break;
    }
  }
  return PixelShape::recentered(std::move(out));
}

}  // namespace rasterpack
