#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rasterpack/search.hpp"

namespace rasterpack {

struct SolverConfig {
  int width_px = 128;
  double r_dec = 0.02;
  double r_inc = 0.005;
  int k_max = 200;
  double time_limit = 60.0;  // seconds
  std::uint64_t seed = 1;
  bool corner_reduction = true;
  // Stops the run after this many CDH calls; 0 means no limit. With a budget
  // and a generous time limit the run is fully reproducible.
  std::int64_t max_cdh_calls = 0;

  /// Throws ValidationError on out-of-range parameters.
  void validate() const;
};

/// One finished GLS call of the outer loop.
struct RunEvent {
  double time = 0.0;           // seconds since search start
  std::int64_t cdh_calls = 0;  // CDH calls so far
  int length = 0;
  bool feasible = false;
};

struct RunRecord {
  int width = 0;
  int best_length = 0;
  std::int64_t area = 0;  // placed piece area in px
  double time_to_best = 0.0;
  std::int64_t cdh_calls = 0;
  std::int64_t cdh_calls_to_best = 0;
  std::int64_t accepted_moves = 0;
  double search_time = 0.0;
  std::vector<RunEvent> events;

  double density() const {
    return best_length > 0 ? 100.0 * static_cast<double>(area) /
                                 (static_cast<double>(width) * best_length)
                           : 0.0;
  }
};

/// Piece order used by construction: descending l(0), then descending w(0),
/// then index.
std::vector<int> construction_order(const Problem& problem);

/// Level placement at orientation 0. The returned length is the total extent
/// of all levels. Throws PieceExceedsWidth.
Layout construct_levels(const Problem& problem);

/// Slides piece k left and down alternately while an overlap-free position
/// with t < 0 exists on the sweep line.
void compact(SearchContext& ctx, Layout& layout, int k);

/// Shortest length containing every piece of the layout.
int used_length(const Problem& problem, const Layout& layout);

/// Levels, then compaction of each piece in construction order; the length
/// is trimmed to the pieces.
Layout construct(SearchContext& ctx);

/// Next length after a feasible solution at best. Strictly smaller than best
/// and never below lower_bound; nullopt when best is already the bound.
std::optional<int> shrink_length(int best, double r_dec, int lower_bound);
/// Next length after an infeasible attempt. Strictly larger than length.
int extend_length(int length, double r_inc);

/// Moves every piece that violates containment at layout.length to a uniform
/// random position. Keeps the orientation when it fits, otherwise picks a
/// random fitting one.
void relocate_protruding(const Problem& problem, Layout& layout, Rng& rng);

struct GcdhResult {
  Layout best;
  RunRecord record;
};

/// Construction followed by the shrink/extend loop with GLS until the time
/// limit or CDH budget runs out.
GcdhResult gcdh(const Problem& problem, const NfpTable& table, const SolverConfig& config);

}  // namespace rasterpack
