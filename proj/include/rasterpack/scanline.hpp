#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rasterpack/pixel_shape.hpp"

namespace rasterpack {

/// Closed run [lo, hi] of consecutive cells on one row or column.
struct Strip {
  int lo = 0;
  int hi = 0;

  friend bool operator==(const Strip&, const Strip&) = default;
};

/// Strips grouped by line index (row y for horizontal strips, column x for
/// vertical ones). Lines are stored contiguously so lookup is O(1).
class StripLines {
 public:
  StripLines() = default;
  /// lines[i] holds the strips of line first_line + i, sorted by lo.
  StripLines(int first_line, const std::vector<std::vector<Strip>>& lines);

  int first_line() const { return first_; }
  int line_count() const { return static_cast<int>(begin_.size()) - 1; }
  int last_line() const { return first_ + line_count() - 1; }
  std::size_t strip_count() const { return strips_.size(); }

  /// Strips on the given absolute line; empty outside the stored range.
  std::span<const Strip> line(int index) const {
    const int i = index - first_;
    if (i < 0 || i >= line_count()) return {};
    return {strips_.data() + begin_[i], strips_.data() + begin_[i + 1]};
  }

  /// Strip containing position p on the line, or nullptr.
  const Strip* find(int index, int p) const;

  /// True when strips on every line are sorted, disjoint and non-adjacent.
  bool maximal() const;

 private:
  int first_ = 0;
  std::vector<std::uint32_t> begin_{0};
  std::vector<Strip> strips_;
};

/// A cell set encoded as both row strips and column strips.
struct DoubleScanline {
  StripLines rows;  // indexed by y, strips span x
  StripLines cols;  // indexed by x, strips span y

  /// Number of horizontal strips.
  std::size_t strip_count() const { return rows.strip_count(); }
};

/// Dense occupancy grid used while building scanlines.
class Bitmap {
 public:
  Bitmap(Cell origin, int length, int width)
      : origin_(origin), length_(length), width_(width),
        bits_(static_cast<std::size_t>(length) * width, 0) {}

  Cell origin() const { return origin_; }
  int length() const { return length_; }
  int width() const { return width_; }

  bool test(Cell c) const {
    const int a = c.x - origin_.x, b = c.y - origin_.y;
    if (a < 0 || b < 0 || a >= length_ || b >= width_) return false;
    return bits_[static_cast<std::size_t>(b) * length_ + a] != 0;
  }
  void set(Cell c) {
    bits_[static_cast<std::size_t>(c.y - origin_.y) * length_ + (c.x - origin_.x)] = 1;
  }

 private:
  Cell origin_;
  int length_;
  int width_;
  std::vector<std::uint8_t> bits_;
};

DoubleScanline encode(const PixelShape& shape);
DoubleScanline encode(std::span<const Cell> cells);
DoubleScanline encode(const Bitmap& bitmap);
/// Column strips computed from row strips.
StripLines transpose(const StripLines& rows);

std::vector<Cell> decode_lines(const StripLines& lines, Axis axis);
std::vector<Cell> decode_rows(const DoubleScanline& ds);
std::vector<Cell> decode_cols(const DoubleScanline& ds);
/// Row-major cell set; throws InconsistentEncoding if rows and columns disagree.
std::vector<Cell> decode_cells(const DoubleScanline& ds);
PixelShape decode(const DoubleScanline& ds);

}  // namespace rasterpack
