#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "rasterpack/layout.hpp"
#include "rasterpack/penalty.hpp"

namespace rasterpack {

using Rng = std::mt19937_64;

struct SearchStats {
  std::int64_t cdh_calls = 0;
  std::int64_t accepted_moves = 0;
};

/// Read-only instance data plus per-run counters and scratch space.
struct SearchContext {
  SearchContext(const Problem& p, const NfpTable& t, bool reduce = true)
      : problem(p), table(t), corner_reduction(reduce) {}

  const Problem& problem;
  const NfpTable& table;
  bool corner_reduction = true;
  SearchStats stats;

  // scratch buffers reused across line searches
  struct Relevant {
    const Nfp* nfp;
    Cell delta;  // position of the moving piece minus position of the other
    double alpha;
  };
  std::vector<Relevant> relevant;
  std::vector<Strip> intervals;
  std::vector<int> candidates;
};

struct PiecePenalty {
  double weighted = 0.0;
  std::int64_t total = 0;
};

/// Weighted and unweighted penalty of piece k if it sat at pos with the given
/// orientation, all other pieces as in the layout.
PiecePenalty piece_penalty(const SearchContext& ctx, const Layout& layout,
                           const PenaltyState& state, int k, Cell pos, int orient);

/// Unweighted penalties f_kj for every j (0 at j == k).
std::vector<int> penalty_row(const SearchContext& ctx, const Layout& layout, int k,
                             Cell pos, int orient);

struct LineSearchResult {
  int t = 0;
  double penalty = 0.0;
};

/// Moves piece k (orientation `orient`, currently at pos) along one axis.
/// Returns the leftmost (bottom-most) overlap-free offset when one exists,
/// otherwise the offset minimizing the weighted piece penalty over the
/// candidate set, which always includes t = 0. Ties prefer smaller |t|, then
/// smaller t. Throws NoValidPosition if the piece cannot fit along the axis.
LineSearchResult line_search(SearchContext& ctx, const Layout& layout,
                             const PenaltyState& state, int k, int orient, Cell pos,
                             Axis axis);

/// Smallest offset along the axis at which piece k overlaps nothing, if any.
std::optional<int> leftmost_free_offset(SearchContext& ctx, const Layout& layout,
                                        int k, int orient, Cell pos, Axis axis);

struct NeighborResult {
  Cell pos;
  int orient = 0;
  double penalty = 0.0;  // weighted piece penalty at pos
};

/// Alternating horizontal/vertical line searches for piece k at `orient`,
/// starting from its current position clamped into the container. Stops at
/// the first axis search without strict improvement.
NeighborResult neighbor_search(SearchContext& ctx, const Layout& layout,
                               const PenaltyState& state, int k, int orient);

struct CdhResult {
  Layout best;  // lowest F seen during the call
  std::int64_t best_total = 0;
};

/// Coordinate descent with fast local search over active pieces. `current`
/// and `state` are advanced to the best layout under the weighted penalty.
CdhResult cdh(SearchContext& ctx, Layout& current, PenaltyState& state, Rng& rng);

using StopPredicate = std::function<bool()>;

struct GlsResult {
  Layout best;
  std::int64_t best_total = 0;
};

/// Guided local search: repeated CDH with penalty-weight updates until F
/// reaches zero, k_max consecutive calls fail to improve, or stop() holds.
GlsResult gls(SearchContext& ctx, const Layout& start, int k_max, Rng& rng,
              const StopPredicate& stop);

}  // namespace rasterpack
