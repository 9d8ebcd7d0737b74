#include <doctest.h>

#include <climits>

#include "rasterpack/driver.hpp"
#include "rasterpack/errors.hpp"
#include "rasterpack/instance.hpp"
#include "rasterpack/oracle.hpp"
#include "support.hpp"

using namespace rasterpack;
using testing_support::block;
using testing_support::layout_of;
using testing_support::problem_of;

TEST_CASE("level construction of the three-piece example") {
  const Problem p = problem_of({block(3, 2), block(3, 2), block(2, 3)}, 4);
  const Layout l = construct_levels(p);
  CHECK(l.pos[0] == Cell{1, 1});
  CHECK(l.pos[1] == Cell{1, 3});
  CHECK(l.pos[2] == Cell{4, 1});
  CHECK(l.length == 5);
}

TEST_CASE("construction order breaks ties by width, then index") {
  const Problem p = problem_of({block(2, 1), block(3, 1), block(2, 2), block(2, 2)}, 4);
  CHECK(construction_order(p) == std::vector<int>{1, 2, 3, 0});
}

TEST_CASE("a single piece lands flush bottom-left") {
  const Problem p = problem_of({block(5, 3)}, 8);
  const NfpTable t(p);
  SearchContext ctx(p, t);
  const Layout l = construct(ctx);
  CHECK(l.pos[0] == Cell{2, 1});
  CHECK(l.length == 5);
}

TEST_CASE("a piece wider than the container is rejected") {
  const Problem p = problem_of({block(2, 2), block(2, 9)}, 8);
  try {
    construct_levels(p);
    FAIL("expected PieceExceedsWidth");
  } catch (const PieceExceedsWidth& e) {
    CHECK(e.piece() == 1);
  }
}

TEST_CASE("compaction cases") {
  SUBCASE("alone in the container") {
    const Problem p = problem_of({block(3, 2)}, 6);
    const NfpTable t(p);
    SearchContext ctx(p, t);
    Layout l = layout_of({{5, 3}}, 8);
    compact(ctx, l, 0);
    CHECK(l.pos[0] == Cell{1, 1});
  }
  SUBCASE("blocked left by a full-height wall") {
    const Problem p = problem_of({block(2, 6), block(2, 2)}, 6);
    const NfpTable t(p);
    SearchContext ctx(p, t);
    Layout l = layout_of({{1, 3}, {3, 4}}, 6);
    compact(ctx, l, 1);
    CHECK(l.pos[1] == Cell{3, 1});
  }
  SUBCASE("already flush") {
    const Problem p = problem_of({block(2, 2), block(2, 2)}, 4);
    const NfpTable t(p);
    SearchContext ctx(p, t);
    Layout l = layout_of({{1, 1}, {3, 1}}, 4);
    const Layout before = l;
    compact(ctx, l, 1);
    CHECK(l == before);
  }
}

TEST_CASE("compaction never moves a piece right or up and keeps it overlap-free") {
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<PixelShape> rasters;
    for (int i = 0; i < 6; ++i) rasters.push_back(oracle::random_shape(rng, 5));
    const Problem p = problem_of(rasters, 10);
    const NfpTable t(p);
    SearchContext ctx(p, t);
    Layout l = construct_levels(p);
    for (int i : construction_order(p)) {
      const Cell before = l.pos[i];
      compact(ctx, l, i);
      CHECK(l.pos[i].x <= before.x);
      CHECK(l.pos[i].y <= before.y);
    }
    CHECK(oracle::check_layout(p, l).feasible());
  }
}

TEST_CASE("shrink and extend arithmetic") {
  CHECK(shrink_length(100, 0.02, 1) == 98);
  CHECK(extend_length(98, 0.005) == 99);
  CHECK(shrink_length(10, 0.02, 1) == 9);
  CHECK(shrink_length(10, 0.02, 10) == std::nullopt);
  CHECK(shrink_length(10, 0.5, 8) == 8);
}

TEST_CASE("every shrink and extend strictly changes the length") {
  for (int L = 1; L <= 200; ++L) {
    CHECK(extend_length(L, 0.005) > L);
    const auto s = shrink_length(L, 0.02, 1);
    if (L > 1) {
      REQUIRE(s);
      CHECK(*s < L);
      CHECK(*s >= 1);
    } else {
      CHECK_FALSE(s);
    }
  }
}

TEST_CASE("relocation puts every protruding piece back inside") {
  const PixelShape d = block(3, 1);
  std::vector<ShapeClass> shapes{{"bar", {{0, d}, {90, rotate_quarter_turns(d, 1)}}}};
  const Problem p("bars", 3, shapes, {0, 0, 0});
  Layout l;
  l.pos = {{1, 0}, {4, 1}, {1, 1}};
  l.orient = {0, 0, 1};
  l.length = 5;
  Rng rng(5);
  l.length = 2;  // bar at 0 degrees no longer fits
  relocate_protruding(p, l, rng);
  CHECK(contained(p, l));
  CHECK(l.orient[0] == 1);
  CHECK(l.orient[2] == 1);
}

TEST_CASE("zero time limit returns the constructed layout") {
  const Problem p = problem_of({block(3, 2), block(3, 2), block(2, 3)}, 4);
  const NfpTable t(p);
  SearchContext ctx(p, t);
  const Layout built = construct(ctx);
  SolverConfig cfg;
  cfg.width_px = 4;
  cfg.time_limit = 0;
  const auto r = gcdh(p, t, cfg);
  CHECK(r.best == built);
  CHECK(r.record.best_length == built.length);
  CHECK(r.record.cdh_calls == 0);
}

namespace {

Problem small_instance() {
  // four L shapes in four orientations, two fixed squares
  std::vector<Cell> ell{{0, 0}, {1, 0}, {2, 0}, {0, 1}, {0, 2}};
  const PixelShape e = PixelShape::recentered(ell);
  const PixelShape q = block(2, 2);
  std::vector<ShapeClass> shapes{
      {"ell", {{0, e}, {90, rotate_quarter_turns(e, 1)}, {180, rotate_quarter_turns(e, 2)},
               {270, rotate_quarter_turns(e, 3)}}},
      {"sq", {{0, q}}}};
  return Problem("small", 6, shapes, {0, 0, 0, 0, 1, 1});
}

}  // namespace

TEST_CASE("the run record tracks strictly shorter feasible layouts") {
  const Problem p = small_instance();
  const NfpTable t(p);
  for (bool reduce : {true, false}) {
    SolverConfig cfg;
    cfg.width_px = p.width();
    cfg.time_limit = 30;
    cfg.max_cdh_calls = 3000;
    cfg.corner_reduction = reduce;
    const auto r = gcdh(p, t, cfg);
    const auto check = oracle::check_layout(p, r.best);
    CHECK(check.feasible());
    CHECK(r.best.length == r.record.best_length);
    CHECK(r.record.best_length >= p.length_lower_bound());
    int last = INT_MAX;
    for (const auto& e : r.record.events) {
      if (!e.feasible) continue;
      CHECK(e.length < last);
      last = e.length;
    }
    CHECK(last == r.record.best_length);
    CHECK(r.record.area == placed_area(p, r.best));
    CHECK(r.record.density() * p.width() * r.record.best_length ==
          doctest::Approx(100.0 * r.record.area));
    CHECK(r.record.cdh_calls <= cfg.max_cdh_calls);
  }
}

TEST_CASE("a fixed CDH budget gives identical runs") {
  const Problem p = small_instance();
  const NfpTable t(p);
  SolverConfig cfg;
  cfg.width_px = p.width();
  cfg.time_limit = 30;
  cfg.max_cdh_calls = 500;
  cfg.seed = 9;
  const auto a = gcdh(p, t, cfg);
  const auto b = gcdh(p, t, cfg);
  CHECK(a.best == b.best);
  CHECK(a.record.cdh_calls == b.record.cdh_calls);
  CHECK(a.record.accepted_moves == b.record.accepted_moves);
}

TEST_CASE("config validation") {
  SolverConfig c;
  CHECK_NOTHROW(c.validate());
  c.r_dec = 1.0;
  CHECK_THROWS_AS(c.validate(), ValidationError);
  c = {};
  c.r_inc = 0;
  CHECK_THROWS_AS(c.validate(), ValidationError);
  c = {};
  c.k_max = 0;
  CHECK_THROWS_AS(c.validate(), ValidationError);
}
