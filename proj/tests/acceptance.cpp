// Acceptance suite: prints one PASS/FAIL line per criterion, exits nonzero
// on any failure. The timed solver runs take several minutes.

#include <algorithm>
#include <chrono>
#include <climits>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rasterpack/driver.hpp"
#include "rasterpack/instance.hpp"
#include "rasterpack/oracle.hpp"
#include "rasterpack/scanline.hpp"

using namespace rasterpack;
namespace fs = std::filesystem;

namespace {

using clock_type = std::chrono::steady_clock;

double since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

struct Verdict {
  bool pass = false;
  std::string detail;
};

// Feasibility and progress are checked on every solver run below.
struct RunAudit {
  int runs = 0;
  int infeasible = 0;
  int non_decreasing = 0;

  void add(const Problem& p, const GcdhResult& r) {
    ++runs;
    if (!oracle::check_layout(p, r.best).feasible()) ++infeasible;
    int last = INT_MAX;
    for (const auto& e : r.record.events) {
      if (!e.feasible) continue;
      if (e.length >= last) ++non_decreasing;
      last = e.length;
    }
  }
};

RunAudit audit;

Verdict nfp_oracle() {
  const auto t0 = clock_type::now();
  const auto rep = oracle::run_oracle(1, 200, 16, false);
  const double secs = since(t0);
  std::ostringstream d;
  d << rep.pairs << " pairs, " << rep.offsets_checked << " offsets, " << rep.nfp_mismatches
    << " mismatches, " << secs << " s";
  return {rep.nfp_mismatches == 0 && rep.pairs == 200 && secs < 30.0, d.str()};
}

Verdict depth_oracle() {
  Rng rng(2);
  int checks = 0, mismatches = 0;
  for (Axis axis : {Axis::horizontal, Axis::vertical}) {
    for (int i = 0; i < 100; ++i) {
      const auto a = oracle::random_shape(rng, 16);
      const auto b = oracle::random_shape(rng, 16);
      const Nfp nfp = build_nfp(a, b);
      const auto cells = oracle::brute_nfp(a.cells(), b.cells());
      std::uniform_int_distribution<std::size_t> pick(0, cells.size() - 1);
      const Cell u = cells[pick(rng)];
      ++checks;
      if (nfp.penetration_depth(u, axis) != oracle::brute_depth(a.cells(), b.cells(), u, axis)) {
        ++mismatches;
      }
    }
  }
  return {mismatches == 0, std::to_string(checks) + " configurations, " +
                               std::to_string(mismatches) + " mismatches"};
}

Verdict scanline_round_trip() {
  Rng rng(3);
  int failures = 0;
  for (int i = 0; i < 500; ++i) {
    const auto s = oracle::random_shape(rng, 32);
    const auto ds = encode(s);
    if (decode_rows(ds) != decode_cols(ds) || decode(ds) != s) ++failures;
  }
  return {failures == 0, "500 shapes, " + std::to_string(failures) + " failures"};
}

Verdict candidate_sets() {
  Rng rng(4);
  int violations = 0, lines_checked = 0;
  for (int i = 0; i < 100; ++i) {
    const auto a = oracle::random_shape(rng, 16);
    const auto b = oracle::random_shape(rng, 16);
    const Nfp nfp = build_nfp(a, b);
    const auto& rows = nfp.lines(Axis::horizontal);
    std::uniform_int_distribution<int> pick(rows.first_line(), rows.last_line());
    const int y = pick(rng);
    ++lines_checked;
    for (int x : nfp.candidate_offsets(y, Axis::horizontal)) {
      if (!nfp.contains({x, y})) ++violations;
    }
    for (const auto& s : rows.line(y)) {
      int best = INT_MAX;
      for (int x = s.lo; x <= s.hi; ++x) {
        best = std::min(best, oracle::brute_depth(a.cells(), b.cells(), {x, y}, Axis::horizontal));
      }
      const int ends = std::min(oracle::brute_depth(a.cells(), b.cells(), {s.lo, y}, Axis::horizontal),
                                oracle::brute_depth(a.cells(), b.cells(), {s.hi, y}, Axis::horizontal));
      if (ends != best) ++violations;
    }
  }
  return {violations == 0, std::to_string(lines_checked) + " sweep lines, " +
                               std::to_string(violations) + " violations"};
}

Verdict weight_update() {
  Rng rng(6);
  std::uniform_int_distribution<int> f(0, 1000);
  int checks = 0, failures = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 9;
    PenaltyState s(n);
    for (int k = 0; k < n; ++k) {
      std::vector<int> row(static_cast<std::size_t>(n), 0);
      for (int j = 0; j < n; ++j) row[j] = j == k ? 0 : (j < k ? s.f(k, j) : f(rng));
      s.set_piece(k, row);
    }
    if (s.total() == 0) continue;
    int mi = 0, mj = 1;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (s.f(i, j) > s.f(mi, mj)) mi = i, mj = j;
      }
    }
    const double before = s.alpha(mi, mj);
    s.update_weights();
    ++checks;
    if (s.alpha(mi, mj) - before != 1.0) ++failures;
  }
  return {failures == 0 && checks > 0,
          std::to_string(checks) + " updates, " + std::to_string(failures) + " failures"};
}

Verdict level_trace() {
  auto block = [](int l, int w) {
    std::vector<Cell> c;
    for (int y = 0; y < w; ++y) {
      for (int x = 0; x < l; ++x) c.push_back({x, y});
    }
    return PixelShape::recentered(c);
  };
  const Problem p("trace", 4,
                  {{"a", {{0, block(3, 2)}}}, {"b", {{0, block(3, 2)}}}, {"c", {{0, block(2, 3)}}}},
                  {0, 1, 2});
  const Layout l = construct_levels(p);
  const bool ok = l.pos[0] == Cell{1, 1} && l.pos[1] == Cell{1, 3} && l.pos[2] == Cell{4, 1} &&
                  l.length == 5;
  std::ostringstream d;
  d << "v1=(" << l.pos[0].x << ',' << l.pos[0].y << ") v2=(" << l.pos[1].x << ',' << l.pos[1].y
    << ") v3=(" << l.pos[2].x << ',' << l.pos[2].y << ") L=" << l.length;
  return {ok, d.str()};
}

Verdict density_targets(const std::string& data) {
  const std::vector<std::pair<std::string, double>> targets{
      {"fu.json", 85.0}, {"dighe2.json", 88.0}, {"shapes0.json", 60.0}};
  bool ok = true;
  std::ostringstream d;
  d.precision(4);
  for (const auto& [file, target] : targets) {
    const auto t0 = clock_type::now();
    const Problem p = make_problem(parse_instance(data + "/" + file), 128);
    const NfpTable table(p);
    const double prep = since(t0);
    double best = 0.0, slowest = 0.0;
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      SolverConfig cfg;
      cfg.width_px = 128;
      cfg.time_limit = 60;
      cfg.seed = seed;
      const auto t1 = clock_type::now();
      const auto r = gcdh(p, table, cfg);
      const double wall = since(t1) + prep;
      audit.add(p, r);
      best = std::max(best, r.record.density());
      slowest = std::max(slowest, wall);
    }
    ok = ok && best >= target && slowest <= 70.0;
    d << p.name() << " best " << best << "% (need " << target << "), slowest " << slowest
      << " s; ";
  }
  return {ok, d.str()};
}

Verdict reduction_speedup(const std::string& data) {
  const Problem p = make_problem(parse_instance(data + "/albano.json"), 512);
  const NfpTable table(p);
  std::int64_t calls[2] = {0, 0};
  for (int reduce = 0; reduce < 2; ++reduce) {
    SolverConfig cfg;
    cfg.width_px = 512;
    cfg.time_limit = 120;
    cfg.seed = 1;
    cfg.corner_reduction = reduce == 1;
    const auto r = gcdh(p, table, cfg);
    audit.add(p, r);
    calls[reduce] = r.record.cdh_calls;
  }
  const double ratio = calls[0] > 0 ? static_cast<double>(calls[1]) / calls[0] : 0.0;
  std::ostringstream d;
  d << "with " << calls[1] << " CDH calls, without " << calls[0] << ", ratio " << ratio;
  return {ratio >= 2.0, d.str()};
}

Verdict determinism(const std::string& bin, const std::string& data) {
  const fs::path dir = fs::temp_directory_path() / "rasterpack_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  nlohmann::json docs[2];
  for (int i = 0; i < 2; ++i) {
    const fs::path out = dir / ("run" + std::to_string(i) + ".json");
    const std::string cmd = "\"" + bin + "\" solve --instance \"" + data +
                            "/shapes0.json\" --width-px 64 --time-limit 600 --seed 7"
                            " --max-cdh-calls 2000 --out \"" + out.string() + "\" > /dev/null";
    if (std::system(cmd.c_str()) != 0) return {false, "solve exited nonzero"};
    std::ifstream f(out);
    docs[i] = nlohmann::json::parse(f);
    docs[i].erase("metadata");
  }
  const bool same = docs[0] == docs[1];
  std::ostringstream d;
  d << "L=" << docs[0]["length_px"] << " cdh_calls=" << docs[0]["statistics"]["cdh_calls"]
    << (same ? ", identical" : ", results differ");
  return {same, d.str()};
}

Verdict progress() {
  int stalls = 0;
  for (int L = 1; L <= 200; ++L) {
    if (extend_length(L, 0.005) <= L) ++stalls;
    const auto s = shrink_length(L, 0.02, 1);
    if (L > 1 && (!s || *s >= L)) ++stalls;
  }
  std::ostringstream d;
  d << audit.runs << " runs, " << audit.non_decreasing << " non-decreasing records, " << stalls
    << " stalled lengths";
  return {audit.non_decreasing == 0 && stalls == 0 && audit.runs > 0, d.str()};
}

Verdict feasibility() {
  // extra small instances on top of the timed runs
  Rng rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<ShapeClass> shapes;
    std::vector<int> pieces;
    for (int s = 0; s < 5; ++s) {
      const PixelShape r = oracle::random_shape(rng, 6);
      shapes.push_back({"s" + std::to_string(s),
                        {{0, r}, {90, rotate_quarter_turns(r, 1)}, {180, rotate_quarter_turns(r, 2)}}});
      pieces.push_back(s);
      pieces.push_back(s);
    }
    const Problem p("random", 10, shapes, pieces);
    const NfpTable table(p);
    SolverConfig cfg;
    cfg.width_px = 10;
    cfg.time_limit = 30;
    cfg.max_cdh_calls = 2000;
    cfg.seed = static_cast<std::uint64_t>(trial + 1);
    cfg.corner_reduction = trial % 2 == 0;
    audit.add(p, gcdh(p, table, cfg));
  }
  return {audit.infeasible == 0 && audit.runs > 0,
          std::to_string(audit.runs) + " runs, " + std::to_string(audit.infeasible) +
              " infeasible"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string bin = argc > 1 ? argv[1] : RASTERPACK_BIN;
  const std::string data = argc > 2 ? argv[2] : DATA_DIR;

  std::map<int, Verdict> v;
  v[1] = nfp_oracle();
  v[2] = depth_oracle();
  v[3] = scanline_round_trip();
  v[4] = candidate_sets();
  v[6] = weight_update();
  v[7] = level_trace();
  try {
    v[8] = density_targets(data);
    v[9] = reduction_speedup(data);
  } catch (const std::exception& e) {
    if (!v.count(8)) v[8] = {false, e.what()};
    v[9] = {false, e.what()};
  }
  v[10] = determinism(bin, data);
  v[5] = feasibility();
  v[11] = progress();

  const char* names[] = {"",
                         "NFP oracle equivalence",
                         "penetration depth oracle",
                         "double scanline round trip",
                         "candidate soundness and endpoint optimality",
                         "feasibility soundness",
                         "weight update increment",
                         "level construction trace",
                         "desk-scale density",
                         "corner reduction speedup",
                         "determinism",
                         "length schedule progress"};
  bool all = true;
  for (const auto& [id, verdict] : v) {
    std::printf("%s %2d %s: %s\n", verdict.pass ? "PASS" : "FAIL", id, names[id],
                verdict.detail.c_str());
    all = all && verdict.pass;
  }
  std::fflush(stdout);
  return all ? 0 : 1;
}
