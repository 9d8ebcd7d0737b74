#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rasterpack/geometry.hpp"
#include "rasterpack/problem.hpp"

namespace rasterpack {

struct ShapeSpec {
  std::string id;
  Outline outline;
  int count = 1;
  std::vector<int> orientations;  // degrees in [0, 360), contains 0
};

/// Packing instance in model units.
struct InstanceFile {
  std::string name;
  double container_width = 0.0;
  std::vector<ShapeSpec> shapes;

  int piece_count() const;
};

/// Reads a JSON instance. Throws ParseError for malformed documents or
/// fields of the wrong type, ValidationError for violated invariants.
InstanceFile parse_instance(const std::string& path);
InstanceFile parse_instance_text(std::string_view text, const std::string& source = "<text>");

/// Rasterizes every shape at every orientation with the container width
/// mapped to width_px pixels. Pieces are numbered shape by shape.
Problem make_problem(const InstanceFile& instance, int width_px);

}  // namespace rasterpack
