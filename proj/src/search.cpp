#include "rasterpack/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "rasterpack/errors.hpp"

namespace rasterpack {
namespace {

Range axis_range(const SearchContext& ctx, int length, int k, int orient, Axis axis) {
  return axis == Axis::horizontal ? ctx.problem.x_range(k, orient, length)
                                  : ctx.problem.y_range(k, orient);
}

int clamp_to(int v, Range r) { return std::clamp(v, r.lo, r.hi); }

// Collects the pieces whose NFP the sweep line through pos can touch within
// the t range. Everything else contributes zero for every t.
void gather_relevant(SearchContext& ctx, const Layout& layout, const PenaltyState& state,
                     int k, int orient, Cell pos, Axis axis, int t_lo, int t_hi) {
  ctx.relevant.clear();
  const int ok = ctx.problem.oriented_id(k, orient);
  for (int j = 0; j < ctx.problem.piece_count(); ++j) {
    if (j == k) continue;
    const Nfp& nfp = ctx.table.get(ctx.problem.oriented_id(j, layout.orient[j]), ok);
    const Cell u = pos - layout.pos[j];
    const int c = across(u, axis);
    if (c < across(nfp.bbox_min(), axis) || c > across(nfp.bbox_max(), axis)) continue;
    const int a = along(u, axis);
    if (a + t_hi < along(nfp.bbox_min(), axis) || a + t_lo > along(nfp.bbox_max(), axis)) {
      continue;
    }
    if (nfp.lines(axis).line(c).empty()) continue;
    ctx.relevant.push_back({&nfp, u, state.alpha(k, j)});
  }
}

// Minimum t in [t_lo, t_hi] outside every relevant NFP line.
std::optional<int> first_gap(SearchContext& ctx, Axis axis, int t_lo, int t_hi) {
  auto& iv = ctx.intervals;
  iv.clear();
  for (const auto& r : ctx.relevant) {
    const int a = along(r.delta, axis);
    for (const auto& s : r.nfp->lines(axis).line(across(r.delta, axis))) {
      const int lo = std::max(s.lo - a, t_lo);
      const int hi = std::min(s.hi - a, t_hi);
      if (lo <= hi) iv.push_back({lo, hi});
    }
  }
  std::sort(iv.begin(), iv.end(), [](const Strip& x, const Strip& y) { return x.lo < y.lo; });
  int cur = t_lo;
  for (const auto& s : iv) {
    if (s.lo > cur) break;
    cur = std::max(cur, s.hi + 1);
    if (cur > t_hi) return std::nullopt;
  }
  return cur;
}

}  // namespace

PiecePenalty piece_penalty(const SearchContext& ctx, const Layout& layout,
                           const PenaltyState& state, int k, Cell pos, int orient) {
  PiecePenalty out;
  const int ok = ctx.problem.oriented_id(k, orient);
  for (int j = 0; j < ctx.problem.piece_count(); ++j) {
    if (j == k) continue;
    const Nfp& nfp = ctx.table.get(ctx.problem.oriented_id(j, layout.orient[j]), ok);
    const int f = nfp.pair_penalty(pos - layout.pos[j]);
    if (f == 0) continue;
    out.total += f;
    out.weighted += state.alpha(k, j) * f;
  }
  return out;
}

std::vector<int> penalty_row(const SearchContext& ctx, const Layout& layout, int k,
                             Cell pos, int orient) {
  std::vector<int> row(static_cast<std::size_t>(ctx.problem.piece_count()), 0);
  const int ok = ctx.problem.oriented_id(k, orient);
  for (int j = 0; j < ctx.problem.piece_count(); ++j) {
    if (j == k) continue;
    const Nfp& nfp = ctx.table.get(ctx.problem.oriented_id(j, layout.orient[j]), ok);
    row[static_cast<std::size_t>(j)] = nfp.pair_penalty(pos - layout.pos[j]);
  }
  return row;
}

std::optional<int> leftmost_free_offset(SearchContext& ctx, const Layout& layout,
                                        int k, int orient, Cell pos, Axis axis) {
  const Range range = axis_range(ctx, layout.length, k, orient, axis);
  if (range.empty()) throw NoValidPosition("piece does not fit along the axis");
  const int p = along(pos, axis);
  const int t_lo = range.lo - p, t_hi = range.hi - p;
  ctx.relevant.clear();
  const int ok = ctx.problem.oriented_id(k, orient);
  for (int j = 0; j < ctx.problem.piece_count(); ++j) {
    if (j == k) continue;
    const Nfp& nfp = ctx.table.get(ctx.problem.oriented_id(j, layout.orient[j]), ok);
    const Cell u = pos - layout.pos[j];
    if (nfp.lines(axis).line(across(u, axis)).empty()) continue;
    ctx.relevant.push_back({&nfp, u, 1.0});
  }
  return first_gap(ctx, axis, t_lo, t_hi);
}

LineSearchResult line_search(SearchContext& ctx, const Layout& layout,
                             const PenaltyState& state, int k, int orient, Cell pos,
                             Axis axis) {
  const Range range = axis_range(ctx, layout.length, k, orient, axis);
  if (range.empty()) throw NoValidPosition("piece does not fit along the axis");
  const int p = along(pos, axis);
  const int t_lo = range.lo - p, t_hi = range.hi - p;

  gather_relevant(ctx, layout, state, k, orient, pos, axis, t_lo, t_hi);
  if (ctx.relevant.empty()) return {t_lo, 0.0};
  if (auto t = first_gap(ctx, axis, t_lo, t_hi)) return {*t, 0.0};

  auto& cand = ctx.candidates;
  cand.clear();
  if (ctx.corner_reduction) {
    for (const auto& r : ctx.relevant) {
      const int a = along(r.delta, axis);
      const std::size_t start = cand.size();
      r.nfp->candidate_offsets(across(r.delta, axis), axis, t_lo + a, t_hi + a, cand);
      for (std::size_t i = start; i < cand.size(); ++i) cand[i] -= a;
    }
    if (t_lo <= 0 && 0 <= t_hi) cand.push_back(0);
  } else {
    cand.resize(static_cast<std::size_t>(t_hi - t_lo + 1));
    std::iota(cand.begin(), cand.end(), t_lo);
  }
  std::sort(cand.begin(), cand.end(), [](int x, int y) {
    const int ax = std::abs(x), ay = std::abs(y);
    return ax != ay ? ax < ay : x < y;
  });
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

  LineSearchResult best{0, -1.0};
  for (const int t : cand) {
    const Cell step = make_cell(t, 0, axis);
    double sum = 0.0;
    bool pruned = false;
    for (const auto& r : ctx.relevant) {
      const int f = r.nfp->pair_penalty(r.delta + step);
      if (f == 0) continue;
      sum += r.alpha * f;
      if (best.penalty >= 0.0 && sum >= best.penalty) {
        pruned = true;
        break;
      }
    }
    if (pruned) continue;
    if (best.penalty < 0.0 || sum < best.penalty) best = {t, sum};
  }
  return best;
}

NeighborResult neighbor_search(SearchContext& ctx, const Layout& layout,
                               const PenaltyState& state, int k, int orient) {
  const Range xr = ctx.problem.x_range(k, orient, layout.length);
  const Range yr = ctx.problem.y_range(k, orient);
  if (xr.empty() || yr.empty()) throw NoValidPosition("piece does not fit the container");
  Cell pos{clamp_to(layout.pos[k].x, xr), clamp_to(layout.pos[k].y, yr)};
  double cur = piece_penalty(ctx, layout, state, k, pos, orient).weighted;

  auto step = [&](Axis axis) {
    const auto r = line_search(ctx, layout, state, k, orient, pos, axis);
    if (!(r.penalty < cur)) return false;
    pos = pos + make_cell(r.t, 0, axis);
    cur = r.penalty;
    return true;
  };

  if (cur > 0.0) step(Axis::horizontal);
  Axis axis = Axis::vertical;
  while (cur > 0.0) {
    const bool moved = step(axis);
    axis = axis == Axis::horizontal ? Axis::vertical : Axis::horizontal;
    if (!moved) break;
  }
  return {pos, orient, cur};
}

namespace {

// Active set with O(1) insert, remove and uniform pick.
class ActiveSet {
 public:
  explicit ActiveSet(int n) : where_(static_cast<std::size_t>(n)) {
    items_.resize(static_cast<std::size_t>(n));
    std::iota(items_.begin(), items_.end(), 0);
    std::iota(where_.begin(), where_.end(), 0);
  }
  bool empty() const { return items_.empty(); }
  int pick(Rng& rng) const {
    std::uniform_int_distribution<std::size_t> d(0, items_.size() - 1);
    return items_[d(rng)];
  }
  void insert(int k) {
    if (where_[k] >= 0) return;
    where_[k] = static_cast<int>(items_.size());
    items_.push_back(k);
  }
  void erase(int k) {
    const int i = where_[k];
    if (i < 0) return;
    const int last = items_.back();
    items_[static_cast<std::size_t>(i)] = last;
    where_[last] = i;
    items_.pop_back();
    where_[k] = -1;
  }

 private:
  std::vector<int> items_;
  std::vector<int> where_;
};

void check_cache(const SearchContext& ctx, const Layout& layout, const PenaltyState& state) {
  if (total_penalty(ctx.problem, ctx.table, layout) != state.total()) {
    throw std::logic_error("penalty cache out of sync with layout");
  }
}

}  // namespace

CdhResult cdh(SearchContext& ctx, Layout& current, PenaltyState& state, Rng& rng) {
  ++ctx.stats.cdh_calls;
  CdhResult out{current, state.total()};
  if (out.best_total == 0) return out;

  const int n = ctx.problem.piece_count();
  ActiveSet active(n);
  std::vector<int> orients;
  while (!active.empty()) {
    const int k = active.pick(rng);
    orients.resize(static_cast<std::size_t>(ctx.problem.orientation_count(k)));
    std::iota(orients.begin(), orients.end(), 0);
    bool improved = false;
    while (!orients.empty()) {
      std::uniform_int_distribution<std::size_t> d(0, orients.size() - 1);
      const std::size_t idx = d(rng);
      const int o = orients[idx];
      orients.erase(orients.begin() + static_cast<std::ptrdiff_t>(idx));
      if (!ctx.problem.fits(k, o, current.length)) continue;

      const NeighborResult nb = neighbor_search(ctx, current, state, k, o);
      const std::vector<int> row = penalty_row(ctx, current, k, nb.pos, o);
      std::int64_t row_sum = 0;
      for (int v : row) row_sum += v;
      const std::int64_t total = state.total() - state.piece_total(k) + row_sum;
      const bool accept = nb.penalty < state.piece_weighted(k);

      if (total < out.best_total) {
        out.best = current;
        out.best.pos[k] = nb.pos;
        out.best.orient[k] = o;
        out.best_total = total;
      }
      if (accept) {
        for (int j : state.overlapping(k)) active.insert(j);
        state.set_piece(k, row);
        current.pos[k] = nb.pos;
        current.orient[k] = o;
        for (int j : state.overlapping(k)) active.insert(j);
        improved = true;
        ++ctx.stats.accepted_moves;
#ifndef NDEBUG
        check_cache(ctx, current, state);
#else
        if (ctx.stats.accepted_moves % 1000 == 0) check_cache(ctx, current, state);
#endif
      }
      if (out.best_total == 0) return out;
    }
    if (!improved) active.erase(k);
  }
  return out;
}

GlsResult gls(SearchContext& ctx, const Layout& start, int k_max, Rng& rng,
              const StopPredicate& stop) {
  Layout current = start;
  PenaltyState state(ctx.problem.piece_count());
  state.recompute(ctx.problem, ctx.table, current);
  GlsResult out{start, state.total()};
  if (out.best_total == 0) return out;

  int k = 0;
  while (k < k_max && !(stop && stop())) {
    const CdhResult r = cdh(ctx, current, state, rng);
    if (r.best_total < out.best_total) {
      out.best = r.best;
      out.best_total = r.best_total;
      k = 0;
      if (out.best_total == 0) return out;
    }
    state.update_weights();
    ++k;
  }
  return out;
}

}  // namespace rasterpack
