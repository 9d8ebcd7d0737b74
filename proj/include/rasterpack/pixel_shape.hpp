#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace rasterpack {

/// Integer grid coordinate. x runs along the strip length, y across its width.
struct Cell {
  int x = 0;
  int y = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
  /// Row-major order: by y, then x.
  friend auto operator<=>(const Cell& a, const Cell& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
  Cell operator+(Cell o) const { return {x + o.x, y + o.y}; }
  Cell operator-(Cell o) const { return {x - o.x, y - o.y}; }
  Cell operator-() const { return {-x, -y}; }
};

enum class Axis { horizontal, vertical };

inline int along(Cell c, Axis a) { return a == Axis::horizontal ? c.x : c.y; }
inline int across(Cell c, Axis a) { return a == Axis::horizontal ? c.y : c.x; }
inline Cell make_cell(int along_v, int across_v, Axis a) {
  return a == Axis::horizontal ? Cell{along_v, across_v} : Cell{across_v, along_v};
}

/// Finite cell set stored relative to its reference point.
///
/// The reference point is the floored center of the bounding box: a cell at
/// local bounding-box coordinate (a, b) is stored as (a - l/2, b - w/2) with
/// integer division. Cells are kept sorted in row-major order.
class PixelShape {
 public:
  PixelShape() = default;

  /// Builds a shape from cells at arbitrary coordinates, re-centering them on
  /// the reference point. Duplicate cells are merged. Throws EmptyRaster on an
  /// empty input.
  static PixelShape recentered(std::vector<Cell> cells);

  std::span<const Cell> cells() const { return cells_; }
  int length() const { return length_; }
  int width() const { return width_; }
  std::int64_t area() const { return static_cast<std::int64_t>(cells_.size()); }

  /// Offset extremes; min_x() == -(length() / 2) by construction.
  int min_x() const { return -(length_ / 2); }
  int max_x() const { return length_ - 1 - length_ / 2; }
  int min_y() const { return -(width_ / 2); }
  int max_y() const { return width_ - 1 - width_ / 2; }

  bool contains(Cell c) const;

  friend bool operator==(const PixelShape&, const PixelShape&) = default;

 private:
  std::vector<Cell> cells_;
  int length_ = 0;
  int width_ = 0;
};

/// Exact grid rotation by quarter_turns * 90 degrees counter-clockwise.
PixelShape rotate_quarter_turns(const PixelShape& shape, int quarter_turns);

}  // namespace rasterpack
