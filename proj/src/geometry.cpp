#include "rasterpack/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "rasterpack/errors.hpp"

namespace rasterpack {

namespace {

constexpr double kClosureTolerance = 1e-9;

double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }

double distance(Vec2 a, Vec2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

void check_closed(const Contour& c, const char* what) {
  if (c.segments.empty()) {
    throw ValidationError(std::string(what) + " has no segments");
  }
  for (std::size_t i = 0; i < c.segments.size(); ++i) {
    const auto& next = c.segments[(i + 1) % c.segments.size()];
    if (distance(segment_end(c.segments[i]), segment_start(next)) >
        kClosureTolerance) {
      throw ValidationError(std::string(what) + " is not closed at segment " +
                            std::to_string(i));
    }
  }
}

}  // namespace

Vec2 ArcSegment::start() const {
  const double a = deg_to_rad(start_deg);
  return {center.x + radius * std::cos(a), center.y + radius * std::sin(a)};
}

Vec2 ArcSegment::end() const {
  const double a = deg_to_rad(end_deg);
  return {center.x + radius * std::cos(a), center.y + radius * std::sin(a)};
}

double ArcSegment::sweep_deg() const {
  double s = ccw ? end_deg - start_deg : start_deg - end_deg;
  s = std::fmod(s, 360.0);
  if (s <= 0.0) s += 360.0;
  return s;
}

Vec2 segment_start(const Segment& s) {
  return std::visit(
      [](const auto& seg) -> Vec2 {
        if constexpr (std::is_same_v<std::decay_t<decltype(seg)>, LineSegment>) {
          return seg.from;
        } else {
          return seg.start();
        }
      },
      s);
}

Vec2 segment_end(const Segment& s) {
  return std::visit(
      [](const auto& seg) -> Vec2 {
        if constexpr (std::is_same_v<std::decay_t<decltype(seg)>, LineSegment>) {
          return seg.to;
        } else {
          return seg.end();
        }
      },
      s);
}

Contour Contour::polygon(const std::vector<Vec2>& vertices) {
  Contour c;
  c.segments.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    c.segments.emplace_back(
        LineSegment{vertices[i], vertices[(i + 1) % vertices.size()]});
  }
  return c;
}

std::vector<Vec2> flatten(const Contour& contour, double max_deviation) {
  std::vector<Vec2> ring;
  for (const auto& seg : contour.segments) {
    if (const auto* line = std::get_if<LineSegment>(&seg)) {
      ring.push_back(line->from);
      continue;
    }
    const auto& arc = std::get<ArcSegment>(seg);
    const double sweep = deg_to_rad(arc.sweep_deg());
    // sagitta r(1 - cos(theta/2)) <= max_deviation
    double step = sweep;
    if (arc.radius > max_deviation) {
      step = 2.0 * std::acos(1.0 - max_deviation / arc.radius);
    }
    const int pieces =
        std::max(1, static_cast<int>(std::ceil(sweep / step - 1e-12)));
    const double dir = arc.ccw ? 1.0 : -1.0;
    const double a0 = deg_to_rad(arc.start_deg);
    for (int i = 0; i < pieces; ++i) {
      const double a = a0 + dir * sweep * i / pieces;
      ring.push_back({arc.center.x + arc.radius * std::cos(a),
                      arc.center.y + arc.radius * std::sin(a)});
    }
  }
  return ring;
}

double signed_area(const std::vector<Vec2>& ring) {
  double twice = 0.0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Vec2& p = ring[i];
    const Vec2& q = ring[(i + 1) % ring.size()];
    twice += p.x * q.y - q.x * p.y;
  }
  return twice / 2.0;
}

BoundingBox bounding_box(const std::vector<Vec2>& ring) {
  BoundingBox b{ring.front().x, ring.front().y, ring.front().x, ring.front().y};
  for (const auto& p : ring) {
    b.min_x = std::min(b.min_x, p.x);
    b.min_y = std::min(b.min_y, p.y);
    b.max_x = std::max(b.max_x, p.x);
    b.max_y = std::max(b.max_y, p.y);
  }
  return b;
}

bool point_in_ring(const std::vector<Vec2>& ring, Vec2 p) {
  bool inside = false;
  for (std::size_t i = 0, j = ring.size() - 1; i < ring.size(); j = i++) {
    const Vec2& a = ring[i];
    const Vec2& b = ring[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

void validate(const Outline& outline) {
  check_closed(outline.outer, "outer boundary");
  const auto outer = flatten(outline.outer, 1e-3);
  if (outer.size() < 3 || std::abs(signed_area(outer)) <= 0.0) {
    throw ValidationError("outer boundary has zero area");
  }
  for (std::size_t h = 0; h < outline.holes.size(); ++h) {
    check_closed(outline.holes[h], "hole");
    const auto ring = flatten(outline.holes[h], 1e-3);
    if (ring.size() < 3 || std::abs(signed_area(ring)) <= 0.0) {
      throw ValidationError("hole " + std::to_string(h) + " has zero area");
    }
    for (const auto& v : ring) {
      if (!point_in_ring(outer, v)) {
        throw ValidationError("hole " + std::to_string(h) +
                              " is not inside the outer boundary");
      }
    }
  }
}

}  // namespace rasterpack
