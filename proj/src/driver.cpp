#include "rasterpack/driver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "rasterpack/errors.hpp"

namespace rasterpack {

void SolverConfig::validate() const {
  if (width_px < 1) throw ValidationError("width_px must be positive");
  if (!(r_dec > 0.0 && r_dec < 1.0)) throw ValidationError("r_dec must lie in (0, 1)");
  if (!(r_inc > 0.0)) throw ValidationError("r_inc must be positive");
  if (k_max < 1) throw ValidationError("k_max must be at least 1");
  if (!(time_limit >= 0.0)) throw ValidationError("time_limit must be non-negative");
  if (max_cdh_calls < 0) throw ValidationError("max_cdh_calls must be non-negative");
}

std::vector<int> construction_order(const Problem& problem) {
  std::vector<int> order(static_cast<std::size_t>(problem.piece_count()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& ra = problem.raster(a, 0);
    const auto& rb = problem.raster(b, 0);
    if (ra.length() != rb.length()) return ra.length() > rb.length();
    return ra.width() > rb.width();
  });
  return order;
}

Layout construct_levels(const Problem& problem) {
  const int n = problem.piece_count();
  Layout layout;
  layout.pos.resize(static_cast<std::size_t>(n));
  layout.orient.assign(static_cast<std::size_t>(n), 0);
  int level = 0, level_len = 0, filled = 0;
  for (int i : construction_order(problem)) {
    const auto& r = problem.raster(i, 0);
    if (r.width() > problem.width()) throw PieceExceedsWidth(i);
    if (filled + r.width() > problem.width()) {
      level += level_len;
      filled = 0;
      level_len = 0;
    }
    layout.pos[i] = {level - r.min_x(), filled - r.min_y()};
    filled += r.width();
    level_len = std::max(level_len, r.length());
  }
  layout.length = level + level_len;
  return layout;
}

void compact(SearchContext& ctx, Layout& layout, int k) {
  Axis axis = Axis::horizontal;
  int idle = 0;
  while (idle < 2) {
    const auto t = leftmost_free_offset(ctx, layout, k, layout.orient[k], layout.pos[k], axis);
    if (t && *t < 0) {
      layout.pos[k] = layout.pos[k] + make_cell(*t, 0, axis);
      idle = 0;
    } else {
      ++idle;
    }
    axis = axis == Axis::horizontal ? Axis::vertical : Axis::horizontal;
  }
}

int used_length(const Problem& problem, const Layout& layout) {
  int len = 0;
  for (int i = 0; i < problem.piece_count(); ++i) {
    len = std::max(len, layout.pos[i].x + problem.raster(i, layout.orient[i]).max_x() + 1);
  }
  return len;
}

Layout construct(SearchContext& ctx) {
  Layout layout = construct_levels(ctx.problem);
  for (int i : construction_order(ctx.problem)) compact(ctx, layout, i);
  layout.length = used_length(ctx.problem, layout);
  return layout;
}

std::optional<int> shrink_length(int best, double r_dec, int lower_bound) {
  const auto scaled = static_cast<int>(std::floor((1.0 - r_dec) * best + 1e-9));
  const int next = std::max(lower_bound, std::min(best - 1, scaled));
  if (next >= best) return std::nullopt;
  return next;
}

int extend_length(int length, double r_inc) {
  const auto scaled = static_cast<int>(std::floor((1.0 + r_inc) * length + 1e-9));
  return std::max(length + 1, scaled);
}

void relocate_protruding(const Problem& problem, Layout& layout, Rng& rng) {
  for (int i = 0; i < problem.piece_count(); ++i) {
    if (contained(problem, layout, i)) continue;
    if (!problem.fits(i, layout.orient[i], layout.length)) {
      std::vector<int> ok;
      for (int o = 0; o < problem.orientation_count(i); ++o) {
        if (problem.fits(i, o, layout.length)) ok.push_back(o);
      }
      if (ok.empty()) throw NoValidPosition("piece fits no orientation at this length");
      std::uniform_int_distribution<std::size_t> pick(0, ok.size() - 1);
      layout.orient[i] = ok[pick(rng)];
    }
    const Range xr = problem.x_range(i, layout.orient[i], layout.length);
    const Range yr = problem.y_range(i, layout.orient[i]);
    std::uniform_int_distribution<int> dx(xr.lo, xr.hi);
    std::uniform_int_distribution<int> dy(yr.lo, yr.hi);
    const int x = dx(rng);
    const int y = dy(rng);
    layout.pos[i] = {x, y};
  }
}

GcdhResult gcdh(const Problem& problem, const NfpTable& table, const SolverConfig& config) {
  config.validate();
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(clock::now() - start).count(); };

  SearchContext ctx(problem, table, config.corner_reduction);
  Rng rng(config.seed);

  GcdhResult out;
  out.best = construct(ctx);
  RunRecord& rec = out.record;
  rec.width = problem.width();
  rec.best_length = out.best.length;
  rec.area = placed_area(problem, out.best);
  rec.events.push_back({elapsed(), 0, out.best.length, true});

  auto stop = [&] {
    if (elapsed() >= config.time_limit) return true;
    return config.max_cdh_calls > 0 && ctx.stats.cdh_calls >= config.max_cdh_calls;
  };

  const int lower = problem.length_lower_bound();
  Layout current = out.best;
  auto restart_below_best = [&]() -> bool {
    const auto next = shrink_length(rec.best_length, config.r_dec, lower);
    if (!next) return false;
    current = out.best;
    current.length = *next;
    relocate_protruding(problem, current, rng);
    return true;
  };

  if (!stop() && restart_below_best()) {
    while (!stop()) {
      const GlsResult g = gls(ctx, current, config.k_max, rng, stop);
      current = g.best;
      const bool feasible = g.best_total == 0;
      rec.events.push_back({elapsed(), ctx.stats.cdh_calls, current.length, feasible});
      if (feasible) {
        out.best = current;
        rec.best_length = current.length;
        rec.area = placed_area(problem, current);
        rec.time_to_best = rec.events.back().time;
        rec.cdh_calls_to_best = ctx.stats.cdh_calls;
        if (!restart_below_best()) break;
      } else {
        if (stop()) break;
        current.length = extend_length(current.length, config.r_inc);
        if (current.length >= rec.best_length && !restart_below_best()) break;
      }
    }
  }
  rec.cdh_calls = ctx.stats.cdh_calls;
  rec.accepted_moves = ctx.stats.accepted_moves;
  rec.search_time = elapsed();
  return out;
}

}  // namespace rasterpack
