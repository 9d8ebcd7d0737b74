#pragma once

#include <cstdint>
#include <vector>

#include "rasterpack/pixel_shape.hpp"
#include "rasterpack/problem.hpp"

namespace rasterpack {

/// Reference-point positions and orientation indices of all pieces, plus the
/// current container length. The width lives in the Problem.
struct Layout {
  std::vector<Cell> pos;
  std::vector<int> orient;
  int length = 0;

  friend bool operator==(const Layout&, const Layout&) = default;
};

bool contained(const Problem& problem, const Layout& layout, int piece);
bool contained(const Problem& problem, const Layout& layout);

/// Overlap penalty f_ij of two placed pieces.
int pair_penalty(const Problem& problem, const NfpTable& table,
                 const Layout& layout, int i, int j);

/// Total unweighted penalty F.
std::int64_t total_penalty(const Problem& problem, const NfpTable& table,
                           const Layout& layout);

/// Sum of piece areas at their placed orientations.
std::int64_t placed_area(const Problem& problem, const Layout& layout);

}  // namespace rasterpack
