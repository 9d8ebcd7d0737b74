#include "rasterpack/nfp.hpp"

#include <algorithm>
#include <array>
#include <climits>

namespace rasterpack {

namespace {

// Radius-3 Bresenham circle, contiguous order.
constexpr std::array<Cell, 16> kCircle = {{{0, 3},  {1, 3},   {2, 2},   {3, 1},
                                           {3, 0},  {3, -1},  {2, -2},  {1, -3},
                                           {0, -3}, {-1, -3}, {-2, -2}, {-3, -1},
                                           {-3, 0}, {-3, 1},  {-2, 2},  {-1, 3}}};
constexpr int kArcLength = 9;
constexpr int kSmallExtent = 7;

int longest_outside_arc(const Bitmap& bm, Cell c) {
  std::array<bool, 16> out{};
  for (std::size_t i = 0; i < kCircle.size(); ++i) out[i] = !bm.test(c + kCircle[i]);
  int best = 0, run = 0;
  // two passes handle wrap-around
  for (int i = 0; i < 32; ++i) {
    run = out[i % 16] ? run + 1 : 0;
    best = std::max(best, run);
  }
  return std::min(best, 16);
}

int window_outside(const Bitmap& bm, Cell c) {
  int n = 0;
  for (int dy = -3; dy <= 3; ++dy) {
    for (int dx = -3; dx <= 3; ++dx) n += bm.test({c.x + dx, c.y + dy}) ? 0 : 1;
  }
  return n;
}

bool monotone(const StripLines& lines) {
  if (lines.line_count() == 0) return false;
  const Strip* prev = nullptr;
  for (int i = lines.first_line(); i <= lines.last_line(); ++i) {
    const auto l = lines.line(i);
    if (l.size() != 1) return false;
    if (prev != nullptr &&
        (l[0].lo > prev->hi + 1 || prev->lo > l[0].hi + 1)) {
      return false;
    }
    prev = l.data();
  }
  return true;
}

void merge_strips(std::vector<Strip>& v) {
  if (v.empty()) return;
  std::sort(v.begin(), v.end(), [](const Strip& a, const Strip& b) { return a.lo < b.lo; });
  std::size_t w = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i].lo <= v[w].hi + 1) {
      v[w].hi = std::max(v[w].hi, v[i].hi);
    } else {
      v[++w] = v[i];
    }
  }
  v.resize(w + 1);
}

}  // namespace

std::vector<Cell> contour_cells(const Bitmap& bm) {
  std::vector<Cell> out;
  const Cell o = bm.origin();
  for (int b = 0; b < bm.width(); ++b) {
    for (int a = 0; a < bm.length(); ++a) {
      const Cell c{o.x + a, o.y + b};
      if (!bm.test(c)) continue;
      if (!bm.test({c.x - 1, c.y}) || !bm.test({c.x + 1, c.y}) ||
          !bm.test({c.x, c.y - 1}) || !bm.test({c.x, c.y + 1})) {
        out.push_back(c);
      }
    }
  }
  return out;
}

std::vector<Cell> detect_corners(const Bitmap& bm) {
  auto contour = contour_cells(bm);
  if (bm.length() < kSmallExtent && bm.width() < kSmallExtent) return contour;

  std::vector<Cell> candidates;
  std::vector<int> scores;
  for (const auto& c : contour) {
    if (longest_outside_arc(bm, c) >= kArcLength) {
      candidates.push_back(c);
      scores.push_back(window_outside(bm, c));
    }
  }
  // candidates are row-major sorted, so neighbours can be found by search
  auto score_at = [&](Cell c) {
    auto it = std::lower_bound(candidates.begin(), candidates.end(), c);
    if (it == candidates.end() || *it != c) return -1;
    return scores[static_cast<std::size_t>(it - candidates.begin())];
  };
  std::vector<Cell> corners;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool keep = true;
    for (int dy = -1; dy <= 1 && keep; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) {
        if ((dx != 0 || dy != 0) &&
            score_at({candidates[i].x + dx, candidates[i].y + dy}) > scores[i]) {
          keep = false;
          break;
        }
      }
    }
    if (keep) corners.push_back(candidates[i]);
  }
  return corners;
}

std::vector<Cell> detect_corners(const DoubleScanline& ds) {
  const auto cells = decode_rows(ds);
  if (cells.empty()) return {};
  int min_x = INT_MAX, max_x = INT_MIN;
  for (const auto& c : cells) {
    min_x = std::min(min_x, c.x);
    max_x = std::max(max_x, c.x);
  }
  Bitmap bm({min_x, ds.rows.first_line()}, max_x - min_x + 1, ds.rows.line_count());
  for (const auto& c : cells) bm.set(c);
  return detect_corners(bm);
}

Nfp Nfp::from_bitmap(const Bitmap& bm) {
  Nfp n;
  n.ds_ = encode(bm);
  if (n.ds_.strip_count() == 0) return n;
  n.corners_ = detect_corners(bm);
  for (const auto& c : n.corners_) {
    n.corner_x_.push_back(c.x);
    n.corner_y_.push_back(c.y);
  }
  for (auto* v : {&n.corner_x_, &n.corner_y_}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  n.y_monotone_ = monotone(n.ds_.rows);
  n.x_monotone_ = monotone(n.ds_.cols);
  n.bbox_min_ = {n.ds_.cols.first_line(), n.ds_.rows.first_line()};
  n.bbox_max_ = {n.ds_.cols.last_line(), n.ds_.rows.last_line()};
  return n;
}

Nfp Nfp::from_cells(std::span<const Cell> cells) {
  if (cells.empty()) return {};
  int min_x = INT_MAX, min_y = INT_MAX, max_x = INT_MIN, max_y = INT_MIN;
  for (const auto& c : cells) {
    min_x = std::min(min_x, c.x);
    min_y = std::min(min_y, c.y);
    max_x = std::max(max_x, c.x);
    max_y = std::max(max_y, c.y);
  }
  Bitmap bm({min_x, min_y}, max_x - min_x + 1, max_y - min_y + 1);
  for (const auto& c : cells) bm.set(c);
  return from_bitmap(bm);
}

int Nfp::penetration_depth(Cell u, Axis axis) const {
  const Strip* s = axis == Axis::horizontal ? ds_.rows.find(u.y, u.x)
                                            : ds_.cols.find(u.x, u.y);
  if (s == nullptr) return 0;
  const int p = along(u, axis);
  return std::min(p - s->lo, s->hi - p) + 1;
}

void Nfp::candidate_offsets(int line, Axis axis, int lo, int hi,
                            std::vector<int>& out) const {
  const auto strips = axis == Axis::horizontal ? ds_.rows.line(line) : ds_.cols.line(line);
  const auto& coords = axis == Axis::horizontal ? corner_x_ : corner_y_;
  for (const auto& s : strips) {
    const int a = std::max(s.lo, lo);
    const int b = std::min(s.hi, hi);
    if (a > b) continue;
    out.push_back(a);
    if (b != a) out.push_back(b);
    auto it = std::upper_bound(coords.begin(), coords.end(), a);
    for (; it != coords.end() && *it < b; ++it) out.push_back(*it);
  }
}

std::vector<int> Nfp::candidate_offsets(int line, Axis axis) const {
  std::vector<int> out;
  candidate_offsets(line, axis, INT_MIN, INT_MAX, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Nfp build_nfp(const PixelShape& a, const PixelShape& b) {
  const auto ra = encode(a).rows;
  const auto rb = encode(b).rows;
  const int first = a.min_y() - b.max_y();
  const int count = a.width() + b.width() - 1;
  std::vector<std::vector<Strip>> rows(static_cast<std::size_t>(count));
  for (int ya = ra.first_line(); ya <= ra.last_line(); ++ya) {
    for (int yb = rb.first_line(); yb <= rb.last_line(); ++yb) {
      auto& acc = rows[static_cast<std::size_t>(ya - yb - first)];
      for (const auto& sa : ra.line(ya)) {
        for (const auto& sb : rb.line(yb)) acc.push_back({sa.lo - sb.hi, sa.hi - sb.lo});
      }
    }
  }
  for (auto& r : rows) merge_strips(r);

  const int min_x = a.min_x() - b.max_x();
  Bitmap bm({min_x, first}, a.length() + b.length() - 1, count);
  for (int i = 0; i < count; ++i) {
    for (const auto& s : rows[static_cast<std::size_t>(i)]) {
      for (int x = s.lo; x <= s.hi; ++x) bm.set({x, first + i});
    }
  }
  return Nfp::from_bitmap(bm);
}

}  // namespace rasterpack
