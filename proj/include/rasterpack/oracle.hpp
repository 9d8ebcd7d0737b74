#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "rasterpack/layout.hpp"
#include "rasterpack/search.hpp"

// Brute-force reference computations. Nothing here calls the NFP engine or
// the scanline code; they work on plain cell lists.
namespace rasterpack::oracle {

/// Dense membership grid over a cell list.
class CellGrid {
 public:
  explicit CellGrid(std::span<const Cell> cells);
  bool test(Cell c) const;

 private:
  Cell min_{};
  int length_ = 0;
  int width_ = 0;
  std::vector<char> bits_;
};

/// True iff a and b shifted by u share a cell.
bool intersects(const CellGrid& a, std::span<const Cell> b, Cell u);

/// Every offset u in the padded window at which a and b + u intersect, row-major.
std::vector<Cell> brute_nfp(std::span<const Cell> a, std::span<const Cell> b);

/// Smallest |s| with a and b + u + s*axis disjoint.
int brute_depth(std::span<const Cell> a, std::span<const Cell> b, Cell u, Axis axis);

/// min(horizontal, vertical) brute-force depth.
int brute_pair_penalty(std::span<const Cell> a, std::span<const Cell> b, Cell u);

struct LayoutCheck {
  bool contained = true;
  std::int64_t shared_cells = 0;  // cells covered by more than one piece

  bool feasible() const { return contained && shared_cells == 0; }
};

/// Paints every piece into the container grid and counts collisions.
LayoutCheck check_layout(const Problem& problem, const Layout& layout);

/// Random cell set in a grid of at most max_grid x max_grid, never empty.
/// Mixes sparse noise, unions of rectangles and comb-like rows.
std::vector<Cell> random_cells(Rng& rng, int max_grid);
PixelShape random_shape(Rng& rng, int max_grid);

struct OracleReport {
  int pairs = 0;
  std::int64_t offsets_checked = 0;
  int nfp_mismatches = 0;
  int depth_checks = 0;
  int depth_mismatches = 0;
  int layout_checks = 0;
  int layout_mismatches = 0;

  bool ok() const { return nfp_mismatches == 0 && depth_mismatches == 0 && layout_mismatches == 0; }
};

/// Compares the engine against the brute-force definitions on random shapes.
/// With inject_fault the first engine NFP loses one cell, which must be caught.
OracleReport run_oracle(std::uint64_t seed, int pairs, int max_grid, bool inject_fault);

void print_report(std::ostream& out, const OracleReport& report);

}  // namespace rasterpack::oracle
