#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "rasterpack/pixel_shape.hpp"
#include "rasterpack/scanline.hpp"

namespace rasterpack {

/// Raster no-fit polygon of an ordered pair (a, b).
///
/// A relative offset u = v_b - v_a belongs to the NFP iff b placed at v_b
/// intersects a placed at v_a. The cell set is kept as a double scanline so
/// membership and directional penetration depth are a line lookup plus a
/// binary search (O(1) on monotone rows/columns). Corners found by a
/// segment test on the contour feed the reduced line search.
class Nfp {
 public:
  Nfp() = default;

  /// Wraps an explicit cell set (relative offsets) and detects its corners.
  static Nfp from_cells(std::span<const Cell> cells);

  const DoubleScanline& scanlines() const { return ds_; }
  /// Row strips for Axis::horizontal, column strips for Axis::vertical.
  const StripLines& lines(Axis axis) const {
    return axis == Axis::horizontal ? ds_.rows : ds_.cols;
  }
  std::span<const Cell> corners() const { return corners_; }
  bool y_monotone() const { return y_monotone_; }
  bool x_monotone() const { return x_monotone_; }
  Cell bbox_min() const { return bbox_min_; }
  Cell bbox_max() const { return bbox_max_; }
  bool empty() const { return ds_.strip_count() == 0; }

  bool contains(Cell u) const { return ds_.rows.find(u.y, u.x) != nullptr; }

  /// Smallest |s| such that u + s * axis leaves the NFP; 0 when u is outside.
  int penetration_depth(Cell u, Axis axis) const;

  /// min(horizontal depth, vertical depth).
  int pair_penalty(Cell u) const {
    const Strip* row = ds_.rows.find(u.y, u.x);
    if (row == nullptr) return 0;
    const int h = std::min(u.x - row->lo, row->hi - u.x) + 1;
    if (h == 1) return 1;
    const Strip* col = ds_.cols.find(u.x, u.y);
    const int v = std::min(u.y - col->lo, col->hi - u.y) + 1;
    return std::min(h, v);
  }

  /// Line-search candidates on one sweep line: strip endpoints and projected
  /// corner coordinates, restricted to [lo, hi] and to positions inside the
  /// NFP. For Axis::horizontal `line` is a row (u.y) and positions are u.x;
  /// for Axis::vertical it is a column and positions are u.y. Appends to out
  /// without sorting.
  void candidate_offsets(int line, Axis axis, int lo, int hi,
                         std::vector<int>& out) const;
  /// Sorted, de-duplicated candidates over the whole line.
  std::vector<int> candidate_offsets(int line, Axis axis) const;

 private:
  friend Nfp build_nfp(const PixelShape& a, const PixelShape& b);
  static Nfp from_bitmap(const Bitmap& bm);

  DoubleScanline ds_;
  std::vector<Cell> corners_;
  std::vector<int> corner_x_;  // sorted unique x of corners
  std::vector<int> corner_y_;  // sorted unique y of corners
  bool y_monotone_ = false;
  bool x_monotone_ = false;
  Cell bbox_min_{};
  Cell bbox_max_{};
};

/// NFP(a, b) = a (+) (-b), built by pairing row strips of a and b.
Nfp build_nfp(const PixelShape& a, const PixelShape& b);

/// Cells of the set with at least one 4-neighbor outside it.
std::vector<Cell> contour_cells(const Bitmap& bm);

/// Segment-test corner detector on a binary image: a contour cell is a corner
/// when at least 9 contiguous cells of the radius-3 Bresenham circle lie
/// outside the set, followed by 3x3 non-maximum suppression. Sets whose
/// bounding box is smaller than 7x7 in both directions return every contour
/// cell. Result is sorted row-major.
std::vector<Cell> detect_corners(const Bitmap& bm);
std::vector<Cell> detect_corners(const DoubleScanline& ds);

}  // namespace rasterpack
