#include "rasterpack/rasterize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rasterpack/errors.hpp"

namespace rasterpack {

namespace {

using Ring = std::vector<Vec2>;

std::vector<Ring> scaled_rings(const Outline& outline, double scale) {
  std::vector<Ring> rings;
  const double tol = kArcTolerancePx / scale;
  rings.push_back(flatten(outline.outer, tol));
  for (const auto& h : outline.holes) rings.push_back(flatten(h, tol));
  for (auto& r : rings) {
    for (auto& p : r) p = {p.x * scale, p.y * scale};
  }
  return rings;
}

// Even-odd scan conversion over all rings. A center exactly on an edge
// crossing is inside iff it sits at the start of a span, which gives the
// bottom/left-inclusive rule.
PixelShape scan_convert(const std::vector<Ring>& rings) {
  double min_y = rings.front().front().y, max_y = min_y;
  for (const auto& r : rings) {
    for (const auto& p : r) {
      min_y = std::min(min_y, p.y);
      max_y = std::max(max_y, p.y);
    }
  }
  std::vector<Cell> cells;
  std::vector<double> xs;
  const int j0 = static_cast<int>(std::floor(min_y)) - 1;
  const int j1 = static_cast<int>(std::ceil(max_y)) + 1;
  for (int j = j0; j <= j1; ++j) {
    const double yc = j + 0.5;
    xs.clear();
    for (const auto& r : rings) {
      for (std::size_t i = 0, k = r.size() - 1; i < r.size(); k = i++) {
        const Vec2& a = r[i];
        const Vec2& b = r[k];
        if ((a.y > yc) != (b.y > yc)) {
          xs.push_back(a.x + (yc - a.y) * (b.x - a.x) / (b.y - a.y));
        }
      }
    }
    std::sort(xs.begin(), xs.end());
    for (std::size_t s = 0; s + 1 < xs.size(); s += 2) {
      const int i_begin = static_cast<int>(std::ceil(xs[s] - 0.5));
      const int i_end = static_cast<int>(std::ceil(xs[s + 1] - 0.5));
      for (int i = i_begin; i < i_end; ++i) cells.push_back({i, j});
    }
  }
  if (cells.empty()) {
    throw EmptyRaster("no pixel center inside the outline at this scale");
  }
  return PixelShape::recentered(std::move(cells));
}

}  // namespace

PixelShape rasterize(const Outline& outline, double scale) {
  return scan_convert(scaled_rings(outline, scale));
}

PixelShape rotate_and_rasterize(const Outline& outline, int degrees, double scale) {
  const int norm = ((degrees % 360) + 360) % 360;
  if (norm % 90 == 0) {
    return rotate_quarter_turns(rasterize(outline, scale), norm / 90);
  }
  auto rings = scaled_rings(outline, scale);
  const BoundingBox box = bounding_box(rings.front());
  const double cx = (box.min_x + box.max_x) / 2.0;
  const double cy = (box.min_y + box.max_y) / 2.0;
  const double rad = norm * std::numbers::pi / 180.0;
  const double c = std::cos(rad), s = std::sin(rad);
  for (auto& r : rings) {
    for (auto& p : r) {
      const double dx = p.x - cx, dy = p.y - cy;
      p = {cx + c * dx - s * dy, cy + s * dx + c * dy};
    }
  }
  return scan_convert(rings);
}

}  // namespace rasterpack
