#pragma once

#include <variant>
#include <vector>

namespace rasterpack {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

struct LineSegment {
  Vec2 from;
  Vec2 to;
};

/// Circular arc from start_deg to end_deg, swept counter-clockwise when ccw is set.
struct ArcSegment {
  Vec2 center;
  double radius = 0.0;
  double start_deg = 0.0;
  double end_deg = 0.0;
  bool ccw = true;

  Vec2 start() const;
  Vec2 end() const;
  /// Swept angle in degrees, in (0, 360].
  double sweep_deg() const;
};

using Segment = std::variant<LineSegment, ArcSegment>;

Vec2 segment_start(const Segment& s);
Vec2 segment_end(const Segment& s);

/// A closed chain of boundary elements.
struct Contour {
  std::vector<Segment> segments;

  static Contour polygon(const std::vector<Vec2>& vertices);
};

struct Outline {
  Contour outer;
  std::vector<Contour> holes;
};

struct BoundingBox {
  double min_x, min_y, max_x, max_y;
};

/// Polyline approximation of a contour. Arcs are split so that the chord
/// deviation stays within max_deviation (model units). The closing vertex is
/// not repeated.
std::vector<Vec2> flatten(const Contour& contour, double max_deviation);

double signed_area(const std::vector<Vec2>& ring);
BoundingBox bounding_box(const std::vector<Vec2>& ring);

/// Crossing-number test. Points on a left or bottom edge count as inside,
/// points on a right or top edge as outside.
bool point_in_ring(const std::vector<Vec2>& ring, Vec2 p);

/// Throws ValidationError when the chain is open, the outer boundary has zero
/// area, or a hole is not inside the outer boundary.
void validate(const Outline& outline);

}  // namespace rasterpack
