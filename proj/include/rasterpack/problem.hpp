#pragma once

#include <string>
#include <vector>

#include "rasterpack/nfp.hpp"
#include "rasterpack/pixel_shape.hpp"

namespace rasterpack {

struct OrientedShape {
  int degrees = 0;
  PixelShape raster;
};

/// One distinct shape and its rasters, one per allowed orientation. Index 0
/// is always the unrotated raster.
struct ShapeClass {
  std::string id;
  std::vector<OrientedShape> orientations;
};

/// Inclusive integer interval.
struct Range {
  int lo = 0;
  int hi = -1;

  bool empty() const { return lo > hi; }
  bool contains(int v) const { return lo <= v && v <= hi; }
};

/// Rasterized packing instance: container width, shape classes and the
/// expanded piece list.
class Problem {
 public:
  Problem() = default;
  Problem(std::string name, int width, std::vector<ShapeClass> shapes,
          std::vector<int> piece_shape);

  const std::string& name() const { return name_; }
  int width() const { return width_; }
  int piece_count() const { return static_cast<int>(piece_shape_.size()); }
  const std::vector<ShapeClass>& shapes() const { return shapes_; }

  int shape_of(int piece) const { return piece_shape_[piece]; }
  int orientation_count(int piece) const {
    return static_cast<int>(shapes_[piece_shape_[piece]].orientations.size());
  }
  const PixelShape& raster(int piece, int orient) const {
    return shapes_[piece_shape_[piece]].orientations[orient].raster;
  }
  int degrees(int piece, int orient) const {
    return shapes_[piece_shape_[piece]].orientations[orient].degrees;
  }
  /// Dense index of (shape, orientation) over all shape classes.
  int oriented_id(int piece, int orient) const {
    return first_oriented_[piece_shape_[piece]] + orient;
  }
  int oriented_count() const { return oriented_total_; }
  const PixelShape& oriented_raster(int oriented) const;

  /// Reference-point x positions keeping the piece inside [0, length).
  Range x_range(int piece, int orient, int length) const {
    const auto& r = raster(piece, orient);
    return {-r.min_x(), length - 1 - r.max_x()};
  }
  Range y_range(int piece, int orient) const {
    const auto& r = raster(piece, orient);
    return {-r.min_y(), width_ - 1 - r.max_y()};
  }
  bool fits(int piece, int orient, int length) const {
    return !x_range(piece, orient, length).empty() && !y_range(piece, orient).empty();
  }

  /// No feasible layout is shorter than this.
  int length_lower_bound() const;

 private:
  std::string name_;
  int width_ = 0;
  std::vector<ShapeClass> shapes_;
  std::vector<int> piece_shape_;
  std::vector<int> first_oriented_;
  std::vector<std::pair<int, int>> oriented_index_;  // oriented id -> (shape, orient)
  int oriented_total_ = 0;
};

/// NFPs for every ordered pair of oriented shape classes. Pieces sharing a
/// shape share its entries.
class NfpTable {
 public:
  NfpTable() = default;
  explicit NfpTable(const Problem& problem);

  /// NFP(a, b) for oriented ids a and b: offsets v_b - v_a where they overlap.
  const Nfp& get(int oriented_a, int oriented_b) const {
    return table_[static_cast<std::size_t>(oriented_a) * count_ + oriented_b];
  }
  const Nfp& for_pieces(const Problem& p, int i, int oi, int j, int oj) const {
    return get(p.oriented_id(i, oi), p.oriented_id(j, oj));
  }
  int oriented_count() const { return count_; }

  /// Replaces one entry. Used by fault-injection checks.
  void replace(int oriented_a, int oriented_b, Nfp nfp) {
    table_[static_cast<std::size_t>(oriented_a) * count_ + oriented_b] = std::move(nfp);
  }

 private:
  int count_ = 0;
  std::vector<Nfp> table_;
};

}  // namespace rasterpack
