#include "rasterpack/scanline.hpp"

#include <algorithm>
#include <climits>

#include "rasterpack/errors.hpp"

namespace rasterpack {

StripLines::StripLines(int first_line,
                       const std::vector<std::vector<Strip>>& lines)
    : first_(first_line) {
  begin_.reserve(lines.size() + 1);
  for (const auto& l : lines) {
    strips_.insert(strips_.end(), l.begin(), l.end());
    begin_.push_back(static_cast<std::uint32_t>(strips_.size()));
  }
}

const Strip* StripLines::find(int index, int p) const {
  const auto l = line(index);
  if (l.empty()) return nullptr;
  if (l.size() == 1) {
    return (l[0].lo <= p && p <= l[0].hi) ? l.data() : nullptr;
  }
  auto it = std::upper_bound(l.begin(), l.end(), p,
                             [](int v, const Strip& s) { return v < s.lo; });
  if (it == l.begin()) return nullptr;
  --it;
  return p <= it->hi ? &*it : nullptr;
}

bool StripLines::maximal() const {
  for (int i = first_; i <= last_line(); ++i) {
    const auto l = line(i);
    for (std::size_t k = 0; k < l.size(); ++k) {
      if (l[k].lo > l[k].hi) return false;
      if (k > 0 && l[k].lo <= l[k - 1].hi + 1) return false;
    }
  }
  return true;
}

namespace {

Bitmap to_bitmap(std::span<const Cell> cells) {
  int min_x = INT_MAX, min_y = INT_MAX, max_x = INT_MIN, max_y = INT_MIN;
  for (const auto& c : cells) {
    min_x = std::min(min_x, c.x);
    min_y = std::min(min_y, c.y);
    max_x = std::max(max_x, c.x);
    max_y = std::max(max_y, c.y);
  }
  Bitmap bm({min_x, min_y}, max_x - min_x + 1, max_y - min_y + 1);
  for (const auto& c : cells) bm.set(c);
  return bm;
}

}  // namespace

DoubleScanline encode(const Bitmap& bm) {
  const Cell o = bm.origin();
  std::vector<std::vector<Strip>> rows(bm.width()), cols(bm.length());
  for (int b = 0; b < bm.width(); ++b) {
    int a = 0;
    while (a < bm.length()) {
      if (!bm.test({o.x + a, o.y + b})) {
        ++a;
        continue;
      }
      const int start = a;
      while (a < bm.length() && bm.test({o.x + a, o.y + b})) ++a;
      rows[b].push_back({o.x + start, o.x + a - 1});
    }
  }
  for (int a = 0; a < bm.length(); ++a) {
    int b = 0;
    while (b < bm.width()) {
      if (!bm.test({o.x + a, o.y + b})) {
        ++b;
        continue;
      }
      const int start = b;
      while (b < bm.width() && bm.test({o.x + a, o.y + b})) ++b;
      cols[a].push_back({o.y + start, o.y + b - 1});
    }
  }
  return {StripLines(o.y, rows), StripLines(o.x, cols)};
}

DoubleScanline encode(std::span<const Cell> cells) {
  if (cells.empty()) return {};
  return encode(to_bitmap(cells));
}

DoubleScanline encode(const PixelShape& shape) { return encode(shape.cells()); }

StripLines transpose(const StripLines& rows) {
  std::vector<Cell> cells = decode_lines(rows, Axis::horizontal);
  if (cells.empty()) return {};
  return encode(to_bitmap(cells)).cols;
}

std::vector<Cell> decode_lines(const StripLines& lines, Axis axis) {
  std::vector<Cell> out;
  for (int i = lines.first_line(); i <= lines.last_line(); ++i) {
    for (const auto& s : lines.line(i)) {
      for (int p = s.lo; p <= s.hi; ++p) out.push_back(make_cell(p, i, axis));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cell> decode_rows(const DoubleScanline& ds) {
  return decode_lines(ds.rows, Axis::horizontal);
}

std::vector<Cell> decode_cols(const DoubleScanline& ds) {
  return decode_lines(ds.cols, Axis::vertical);
}

std::vector<Cell> decode_cells(const DoubleScanline& ds) {
  auto rows = decode_rows(ds);
  if (rows != decode_cols(ds)) {
    throw InconsistentEncoding("row and column strips encode different cells");
  }
  return rows;
}

PixelShape decode(const DoubleScanline& ds) {
  return PixelShape::recentered(decode_cells(ds));
}

}  // namespace rasterpack
