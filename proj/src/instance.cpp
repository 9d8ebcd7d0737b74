#include "rasterpack/instance.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "rasterpack/errors.hpp"
#include "rasterpack/rasterize.hpp"

namespace rasterpack {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) fail(where, "expected a number");
  return v.get<double>();
}

int integer(const json& v, const std::string& where) {
  if (!v.is_number_integer()) fail(where, "expected an integer");
  return v.get<int>();
}

Vec2 point(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2) fail(where, "expected [x, y]");
  return {number(v[0], where + "[0]"), number(v[1], where + "[1]")};
}

Segment segment(const json& v, const std::string& where) {
  if (v.contains("line")) {
    const auto& l = v["line"];
    if (!l.is_array() || l.size() != 2) fail(where + ".line", "expected two points");
    return LineSegment{point(l[0], where + ".line[0]"), point(l[1], where + ".line[1]")};
  }
  if (v.contains("arc")) {
    const auto& a = v["arc"];
    const std::string w = where + ".arc";
    ArcSegment arc;
    arc.center = point(field(a, "center", w), w + ".center");
    arc.radius = number(field(a, "radius", w), w + ".radius");
    arc.start_deg = number(field(a, "start_deg", w), w + ".start_deg");
    arc.end_deg = number(field(a, "end_deg", w), w + ".end_deg");
    if (a.contains("ccw")) {
      if (!a["ccw"].is_boolean()) fail(w + ".ccw", "expected a boolean");
      arc.ccw = a["ccw"].get<bool>();
    }
    if (!(arc.radius > 0.0)) throw ValidationError(w + ".radius must be positive");
    return arc;
  }
  fail(where, "expected a 'line' or 'arc' segment");
}

Contour contour(const json& v, const std::string& where) {
  if (!v.is_object()) fail(where, "expected an object");
  if (v.contains("points")) {
    const auto& pts = v["points"];
    if (!pts.is_array()) fail(where + ".points", "expected an array");
    std::vector<Vec2> ring;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      ring.push_back(point(pts[i], where + ".points[" + std::to_string(i) + "]"));
    }
    if (ring.size() < 3) throw ValidationError(where + " needs at least 3 points");
    return Contour::polygon(ring);
  }
  if (v.contains("segments")) {
    const auto& segs = v["segments"];
    if (!segs.is_array()) fail(where + ".segments", "expected an array");
    Contour c;
    for (std::size_t i = 0; i < segs.size(); ++i) {
      c.segments.push_back(segment(segs[i], where + ".segments[" + std::to_string(i) + "]"));
    }
    return c;
  }
  fail(where, "expected 'points' or 'segments'");
}

ShapeSpec shape(const json& v, const std::string& where) {
  ShapeSpec s;
  const auto& id = field(v, "id", where);
  if (!id.is_string()) fail(where + ".id", "expected a string");
  s.id = id.get<std::string>();
  s.count = v.contains("count") ? integer(v["count"], where + ".count") : 1;
  if (s.count < 1) throw ValidationError(where + ".count must be at least 1");

  const auto& orients = field(v, "orientations", where);
  if (!orients.is_array()) fail(where + ".orientations", "expected an array");
  std::set<int> seen;
  for (std::size_t i = 0; i < orients.size(); ++i) {
    const int d = integer(orients[i], where + ".orientations[" + std::to_string(i) + "]");
    const int norm = ((d % 360) + 360) % 360;
    if (!seen.insert(norm).second) {
      throw ValidationError(where + ".orientations lists " + std::to_string(d) + " twice");
    }
    s.orientations.push_back(norm);
  }
  if (s.orientations.empty()) throw ValidationError(where + ".orientations is empty");
  if (!seen.contains(0)) throw ValidationError(where + ".orientations must contain 0");

  const auto& outline = field(v, "outline", where);
  s.outline.outer = contour(field(outline, "outer", where + ".outline"), where + ".outline.outer");
  if (outline.contains("holes")) {
    const auto& holes = outline["holes"];
    if (!holes.is_array()) fail(where + ".outline.holes", "expected an array");
    for (std::size_t i = 0; i < holes.size(); ++i) {
      const std::string w = where + ".outline.holes[" + std::to_string(i) + "]";
      if (holes[i].is_object() && holes[i].contains("holes")) {
        throw ValidationError(w + " has nested holes");
      }
      s.outline.holes.push_back(contour(holes[i], w));
    }
  }
  try {
    validate(s.outline);
  } catch (const ValidationError& e) {
    throw ValidationError(where + ": " + e.what());
  }
  return s;
}

std::string line_context(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

int InstanceFile::piece_count() const {
  int n = 0;
  for (const auto& s : shapes) n += s.count;
  return n;
}

InstanceFile parse_instance_text(std::string_view text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(source + ": " + line_context(text, e.byte > 0 ? e.byte - 1 : 0) +
                     ": malformed JSON");
  }
  InstanceFile inst;
  const auto& name = field(doc, "name", source);
  if (!name.is_string()) fail(source + ".name", "expected a string");
  inst.name = name.get<std::string>();
  inst.container_width = number(field(doc, "container_width", source), source + ".container_width");
  if (!(inst.container_width > 0.0)) {
    throw ValidationError(source + ".container_width must be positive");
  }
  const auto& shapes = field(doc, "shapes", source);
  if (!shapes.is_array()) fail(source + ".shapes", "expected an array");
  if (shapes.empty()) throw ValidationError(source + ".shapes is empty");
  std::set<std::string> ids;
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    auto s = shape(shapes[i], source + ".shapes[" + std::to_string(i) + "]");
    if (!ids.insert(s.id).second) throw ValidationError("duplicate shape id '" + s.id + "'");
    inst.shapes.push_back(std::move(s));
  }
  return inst;
}

InstanceFile parse_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance_text(buf.str(), path);
}

Problem make_problem(const InstanceFile& instance, int width_px) {
  if (width_px < 1) throw ValidationError("width_px must be positive");
  const double scale = width_px / instance.container_width;
  std::vector<ShapeClass> classes;
  std::vector<int> piece_shape;
  for (const auto& s : instance.shapes) {
    ShapeClass c;
    c.id = s.id;
    std::vector<int> degs = s.orientations;
    std::stable_partition(degs.begin(), degs.end(), [](int d) { return d == 0; });
    for (int d : degs) {
      try {
        c.orientations.push_back({d, rotate_and_rasterize(s.outline, d, scale)});
      } catch (const EmptyRaster&) {
        throw EmptyRaster("shape '" + s.id + "' covers no pixel at width " +
                          std::to_string(width_px));
      }
    }
    for (int k = 0; k < s.count; ++k) piece_shape.push_back(static_cast<int>(classes.size()));
    classes.push_back(std::move(c));
  }
  return Problem(instance.name, width_px, std::move(classes), std::move(piece_shape));
}

}  // namespace rasterpack
