#pragma once

#include <stdexcept>
#include <string>

namespace rasterpack {

/// No pixel center falls inside the outline at the requested scale.
class EmptyRaster : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Row strips and column strips of a double scanline describe different cell sets.
class InconsistentEncoding : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The piece does not fit the container along the searched axis.
class NoValidPosition : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PieceExceedsWidth : public std::runtime_error {
 public:
  explicit PieceExceedsWidth(int piece)
      : std::runtime_error("piece " + std::to_string(piece) +
                           " is wider than the container"),
        piece_(piece) {}

  int piece() const noexcept { return piece_; }

 private:
  int piece_;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rasterpack
