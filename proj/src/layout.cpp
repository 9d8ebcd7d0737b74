#include "rasterpack/layout.hpp"

namespace rasterpack {

bool contained(const Problem& problem, const Layout& layout, int piece) {
  const int o = layout.orient[piece];
  return problem.x_range(piece, o, layout.length).contains(layout.pos[piece].x) &&
         problem.y_range(piece, o).contains(layout.pos[piece].y);
}

bool contained(const Problem& problem, const Layout& layout) {
  for (int i = 0; i < problem.piece_count(); ++i) {
    if (!contained(problem, layout, i)) return false;
  }
  return true;
}

int pair_penalty(const Problem& problem, const NfpTable& table,
                 const Layout& layout, int i, int j) {
  const Nfp& nfp = table.for_pieces(problem, i, layout.orient[i], j, layout.orient[j]);
  return nfp.pair_penalty(layout.pos[j] - layout.pos[i]);
}

std::int64_t total_penalty(const Problem& problem, const NfpTable& table,
                           const Layout& layout) {
  std::int64_t f = 0;
  for (int i = 0; i < problem.piece_count(); ++i) {
    for (int j = i + 1; j < problem.piece_count(); ++j) {
      f += pair_penalty(problem, table, layout, i, j);
    }
  }
  return f;
}

std::int64_t placed_area(const Problem& problem, const Layout& layout) {
  std::int64_t a = 0;
  for (int i = 0; i < problem.piece_count(); ++i) {
    a += problem.raster(i, layout.orient[i]).area();
  }
  return a;
}

}  // namespace rasterpack
