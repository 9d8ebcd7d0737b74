#include "rasterpack/oracle.hpp"

#include <algorithm>
#include <climits>

#include "rasterpack/scanline.hpp"

namespace rasterpack::oracle {

CellGrid::CellGrid(std::span<const Cell> cells) {
  if (cells.empty()) return;
  Cell lo{INT_MAX, INT_MAX}, hi{INT_MIN, INT_MIN};
  for (const auto& c : cells) {
    lo = {std::min(lo.x, c.x), std::min(lo.y, c.y)};
    hi = {std::max(hi.x, c.x), std::max(hi.y, c.y)};
  }
  min_ = lo;
  length_ = hi.x - lo.x + 1;
  width_ = hi.y - lo.y + 1;
  bits_.assign(static_cast<std::size_t>(length_) * width_, 0);
  for (const auto& c : cells) {
    bits_[static_cast<std::size_t>(c.y - lo.y) * length_ + (c.x - lo.x)] = 1;
  }
}

bool CellGrid::test(Cell c) const {
  const int a = c.x - min_.x, b = c.y - min_.y;
  if (a < 0 || b < 0 || a >= length_ || b >= width_) return false;
  return bits_[static_cast<std::size_t>(b) * length_ + a] != 0;
}

bool intersects(const CellGrid& a, std::span<const Cell> b, Cell u) {
  for (const auto& c : b) {
    if (a.test(c + u)) return true;
  }
  return false;
}

namespace {

struct Box {
  Cell lo, hi;
};

Box box_of(std::span<const Cell> cells) {
  Box b{{INT_MAX, INT_MAX}, {INT_MIN, INT_MIN}};
  for (const auto& c : cells) {
    b.lo = {std::min(b.lo.x, c.x), std::min(b.lo.y, c.y)};
    b.hi = {std::max(b.hi.x, c.x), std::max(b.hi.y, c.y)};
  }
  return b;
}

}  // namespace

std::vector<Cell> brute_nfp(std::span<const Cell> a, std::span<const Cell> b) {
  const CellGrid ga(a);
  const Box ba = box_of(a), bb = box_of(b);
  std::vector<Cell> out;
  // one cell of padding on every side of the reachable window
  for (int y = ba.lo.y - bb.hi.y - 1; y <= ba.hi.y - bb.lo.y + 1; ++y) {
    for (int x = ba.lo.x - bb.hi.x - 1; x <= ba.hi.x - bb.lo.x + 1; ++x) {
      if (intersects(ga, b, {x, y})) out.push_back({x, y});
    }
  }
  return out;
}

int brute_depth(std::span<const Cell> a, std::span<const Cell> b, Cell u, Axis axis) {
  const CellGrid ga(a);
  for (int s = 0;; ++s) {
    if (!intersects(ga, b, u + make_cell(s, 0, axis))) return s;
    if (!intersects(ga, b, u + make_cell(-s, 0, axis))) return s;
  }
}

int brute_pair_penalty(std::span<const Cell> a, std::span<const Cell> b, Cell u) {
  return std::min(brute_depth(a, b, u, Axis::horizontal), brute_depth(a, b, u, Axis::vertical));
}

LayoutCheck check_layout(const Problem& problem, const Layout& layout) {
  LayoutCheck out;
  const int L = layout.length, W = problem.width();
  std::vector<std::uint16_t> grid(static_cast<std::size_t>(std::max(L, 0)) * W, 0);
  for (int i = 0; i < problem.piece_count(); ++i) {
    for (const auto& c : problem.raster(i, layout.orient[i]).cells()) {
      const Cell p = c + layout.pos[i];
      if (p.x < 0 || p.y < 0 || p.x >= L || p.y >= W) {
        out.contained = false;
        continue;
      }
      auto& v = grid[static_cast<std::size_t>(p.y) * L + p.x];
      if (v++ == 1) ++out.shared_cells;
    }
  }
  return out;
}

std::vector<Cell> random_cells(Rng& rng, int max_grid) {
  std::uniform_int_distribution<int> size(1, max_grid);
  const int l = size(rng), w = size(rng);
  std::vector<Cell> cells;
  std::uniform_int_distribution<int> mode(0, 2);
  switch (mode(rng)) {
    case 0: {  // noise
      std::uniform_real_distribution<double> p(0.2, 0.9);
      std::bernoulli_distribution keep(p(rng));
      for (int y = 0; y < w; ++y) {
        for (int x = 0; x < l; ++x) {
          if (keep(rng)) cells.push_back({x, y});
        }
      }
      break;
    }
    case 1: {  // union of rectangles
      std::uniform_int_distribution<int> count(1, 4);
      const int k = count(rng);
      for (int r = 0; r < k; ++r) {
        std::uniform_int_distribution<int> xs(0, l - 1), ys(0, w - 1);
        int x0 = xs(rng), x1 = xs(rng), y0 = ys(rng), y1 = ys(rng);
        if (x0 > x1) std::swap(x0, x1);
        if (y0 > y1) std::swap(y0, y1);
        for (int y = y0; y <= y1; ++y) {
          for (int x = x0; x <= x1; ++x) cells.push_back({x, y});
        }
      }
      break;
    }
    default: {  // comb: full base row with random teeth
      std::bernoulli_distribution tooth(0.5);
      for (int x = 0; x < l; ++x) {
        cells.push_back({x, 0});
        if (tooth(rng)) {
          for (int y = 1; y < w; ++y) cells.push_back({x, y});
        }
      }
      break;
    }
  }
  if (cells.empty()) cells.push_back({0, 0});
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return cells;
}

PixelShape random_shape(Rng& rng, int max_grid) {
  return PixelShape::recentered(random_cells(rng, max_grid));
}

namespace {

Nfp drop_one_cell(const Nfp& nfp) {
  auto cells = decode_rows(nfp.scanlines());
  cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(cells.size() / 2));
  if (cells.empty()) cells.push_back({1000, 1000});
  return Nfp::from_cells(cells);
}

}  // namespace

OracleReport run_oracle(std::uint64_t seed, int pairs, int max_grid, bool inject_fault) {
  Rng rng(seed);
  OracleReport rep;
  for (int p = 0; p < pairs; ++p) {
    const PixelShape a = random_shape(rng, max_grid);
    const PixelShape b = random_shape(rng, max_grid);
    Nfp nfp = build_nfp(a, b);
    if (inject_fault && p == 0) nfp = drop_one_cell(nfp);
    ++rep.pairs;

    const auto truth = brute_nfp(a.cells(), b.cells());
    const CellGrid in_truth(truth);
    const Box bx = box_of(truth);
    bool pair_bad = false;
    for (int y = bx.lo.y - 1; y <= bx.hi.y + 1; ++y) {
      for (int x = bx.lo.x - 1; x <= bx.hi.x + 1; ++x) {
        ++rep.offsets_checked;
        if (nfp.contains({x, y}) != in_truth.test({x, y})) pair_bad = true;
      }
    }
    if (pair_bad) ++rep.nfp_mismatches;

    // depth at a few overlapping offsets, both axes
    std::uniform_int_distribution<std::size_t> pick(0, truth.size() - 1);
    for (int d = 0; d < 2; ++d) {
      const Cell u = truth[pick(rng)];
      for (Axis axis : {Axis::horizontal, Axis::vertical}) {
        ++rep.depth_checks;
        if (nfp.penetration_depth(u, axis) != brute_depth(a.cells(), b.cells(), u, axis)) {
          ++rep.depth_mismatches;
        }
      }
    }
  }

  // small random layouts: engine F == 0 iff the pixel painter finds no collision
  for (int t = 0; t < std::max(1, pairs / 10); ++t) {
    std::vector<ShapeClass> shapes;
    std::vector<int> piece_shape;
    std::uniform_int_distribution<int> count(2, 5);
    const int n = count(rng);
    int width = 1;
    for (int i = 0; i < n; ++i) {
      auto s = random_shape(rng, std::min(max_grid, 8));
      width = std::max(width, s.width());
      shapes.push_back({"s" + std::to_string(i), {{0, std::move(s)}}});
      piece_shape.push_back(i);
    }
    width += 4;
    const Problem problem("oracle", width, shapes, piece_shape);
    const NfpTable table(problem);
    Layout layout;
    layout.length = 24;
    layout.orient.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      const Range xr = problem.x_range(i, 0, layout.length);
      const Range yr = problem.y_range(i, 0);
      std::uniform_int_distribution<int> dx(xr.lo, xr.hi), dy(yr.lo, yr.hi);
      const int x = dx(rng);
      layout.pos.push_back({x, dy(rng)});
    }
    ++rep.layout_checks;
    const bool engine_free = total_penalty(problem, table, layout) == 0;
    if (engine_free != check_layout(problem, layout).feasible()) ++rep.layout_mismatches;
  }
  return rep;
}

void print_report(std::ostream& out, const OracleReport& r) {
  out << "nfp pairs: " << r.pairs << " checked, " << r.nfp_mismatches << " mismatched ("
      << r.offsets_checked << " offsets)\n"
      << "penetration depth: " << r.depth_checks << " checked, " << r.depth_mismatches
      << " mismatched\n"
      << "layouts: " << r.layout_checks << " checked, " << r.layout_mismatches
      << " mismatched\n"
      << (r.ok() ? "PASS" : "FAIL") << '\n';
}

}  // namespace rasterpack::oracle
