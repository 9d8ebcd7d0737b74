#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <variant>

#include "rasterpack/commands.hpp"
#include "rasterpack/errors.hpp"
#include "rasterpack/instance.hpp"
#include "rasterpack/oracle.hpp"
#include "rasterpack/result.hpp"
#include "rasterpack/svg.hpp"

using namespace rasterpack;
namespace fs = std::filesystem;

namespace {

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }
std::string instance(const std::string& name) { return std::string(DATA_DIR) + "/" + name; }

fs::path scratch_dir(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / ("rasterpack_test_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

int count_of(const std::string& text, const std::string& needle) {
  int n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("parse the one-square instance") {
  const auto inst = parse_instance(fixture("one_square.json"));
  CHECK(inst.name == "one_square");
  CHECK(inst.piece_count() == 1);
  CHECK(inst.container_width == 10.0);
  const Problem p = make_problem(inst, 10);
  CHECK(p.raster(0, 0).area() == 100);
}

TEST_CASE("orientation lists must include zero") {
  CHECK_THROWS_AS(parse_instance(fixture("no_zero_orientation.json")), ValidationError);
}

TEST_CASE("arcs and holes survive parsing and counts expand") {
  const auto inst = parse_instance(fixture("arc_hole.json"));
  REQUIRE(inst.shapes.size() == 2);
  const auto& washer = inst.shapes[0].outline;
  const bool has_arc = std::any_of(washer.outer.segments.begin(), washer.outer.segments.end(),
                                   [](const Segment& s) { return std::holds_alternative<ArcSegment>(s); });
  CHECK(has_arc);
  CHECK(washer.holes.size() == 1);
  CHECK(inst.piece_count() == 5);
  CHECK(inst.shapes[0].orientations == std::vector<int>{0, 90, 180, 270});
  const Problem p = make_problem(inst, 48);
  CHECK(p.piece_count() == 5);
  CHECK(p.orientation_count(0) == 4);
}

TEST_CASE("malformed JSON reports a position") {
  try {
    parse_instance(fixture("malformed.json"));
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2, column 26") != std::string::npos);
  }
}

TEST_CASE("field errors name the field") {
  try {
    parse_instance_text(R"({"name": "x", "container_width": "wide", "shapes": []})");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("container_width") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_instance_text(R"({"name": "x", "container_width": 5, "shapes": [
    {"id": "a", "count": 1, "orientations": [0], "outline": {"outer": {"points": [[0,0],[1,0],[1,1]]}}},
    {"id": "a", "count": 1, "orientations": [0], "outline": {"outer": {"points": [[0,0],[1,0],[1,1]]}}}
  ]})"),
                  ValidationError);
}

TEST_CASE("bundled instances have the expected piece counts") {
  CHECK(parse_instance(instance("fu.json")).piece_count() == 12);
  CHECK(parse_instance(instance("dighe2.json")).piece_count() == 10);
  CHECK(parse_instance(instance("shapes0.json")).piece_count() == 43);
  CHECK(parse_instance(instance("albano.json")).piece_count() == 24);
}

TEST_CASE("result file round trip re-verifies") {
  const auto dir = scratch_dir("roundtrip");
  SolveOptions opt;
  opt.instance = fixture("arc_hole.json");
  opt.config.width_px = 24;
  opt.config.time_limit = 10;
  opt.config.max_cdh_calls = 300;
  opt.out = (dir / "r.json").string();
  std::ostringstream out, err;
  REQUIRE(solve_command(opt, out, err) == kExitOk);

  const ResultFile r = read_result(opt.out);
  const Problem p = make_problem(parse_instance(opt.instance), r.width_px);
  const Layout l = layout_from_result(p, r);
  CHECK(oracle::check_layout(p, l).feasible());
  CHECK(l.length == r.length_px);
  CHECK(placed_area(p, l) == r.area_px);
  CHECK(density_percent(r.area_px, r.width_px, r.length_px) == r.density_percent);
  CHECK(to_json_text(r) == slurp(opt.out));
  CHECK(r.config.max_cdh_calls == 300);
}

TEST_CASE("a layout that does not match the instance is rejected") {
  const Problem p = make_problem(parse_instance(fixture("one_square.json")), 10);
  ResultFile r;
  r.width_px = 10;
  r.length_px = 10;
  r.pieces = {{0, "other", 0, 5, 5}};
  CHECK_THROWS_AS(layout_from_result(p, r), ValidationError);
}

TEST_CASE("one-square drawing has two rectangles") {
  const Problem p = make_problem(parse_instance(fixture("one_square.json")), 10);
  Layout l;
  l.pos = {{5, 5}};
  l.orient = {0};
  l.length = 10;
  const std::string svg = render_svg(p, l);
  CHECK(count_of(svg, "<rect") == 2);
  CHECK(render_svg(p, l) == svg);
}

TEST_CASE("drawn cells match raster areas") {
  const auto dir = scratch_dir("svg");
  SolveOptions opt;
  opt.instance = instance("fu.json");
  opt.config.width_px = 128;
  opt.config.time_limit = 0;
  opt.out = (dir / "fu.json").string();
  opt.svg = (dir / "fu.svg").string();
  std::ostringstream out, err;
  REQUIRE(solve_command(opt, out, err) == kExitOk);
  const std::string svg = slurp(opt.svg);
  CHECK(count_of(svg, "<g class=\"piece\"") == 12);

  const Problem p = make_problem(parse_instance(opt.instance), 128);
  const Layout l = layout_from_result(p, read_result(opt.out));
  const std::regex group(R"re(<g class="piece" data-piece="(\d+)"[^>]*>([\s\S]*?)</g>)re");
  const std::regex rect(R"re(width="(\d+)" height="(\d+)")re");
  int groups = 0;
  for (auto g = std::sregex_iterator(svg.begin(), svg.end(), group); g != std::sregex_iterator(); ++g) {
    const int piece = std::stoi((*g)[1]);
    const std::string body = (*g)[2];
    std::int64_t cells = 0;
    for (auto r = std::sregex_iterator(body.begin(), body.end(), rect); r != std::sregex_iterator(); ++r) {
      cells += std::stoll((*r)[1]) * std::stoll((*r)[2]);
    }
    CHECK(cells == p.raster(piece, l.orient[piece]).area());
    ++groups;
  }
  CHECK(groups == 12);
}

TEST_CASE("an empty result is never drawn") {
  const Problem p = make_problem(parse_instance(fixture("one_square.json")), 10);
  CHECK_THROWS_AS(render_svg(p, Layout{}), ValidationError);

  const auto dir = scratch_dir("empty");
  std::ofstream(dir / "empty.json") << R"({"instance": "one_square", "width_px": 10,
    "length_px": 0, "area_px": 0, "density_percent": 0, "pieces": [],
    "config": {"seed": 1, "r_dec": 0.02, "r_inc": 0.005, "k_max": 200, "time_limit": 0,
               "corner_reduction": true},
    "statistics": {"cdh_calls": 0, "cdh_calls_to_best": 0, "accepted_moves": 0, "events": []}})";
  RenderOptions opt{fixture("one_square.json"), (dir / "empty.json").string(), ""};
  std::ostringstream out, err;
  CHECK(render_command(opt, out, err) != kExitOk);
  CHECK(out.str().empty());
}

TEST_CASE("solve exit codes") {
  std::ostringstream out, err;
  SolveOptions opt;
  opt.config.time_limit = 0;
  opt.instance = fixture("no_zero_orientation.json");
  CHECK(solve_command(opt, out, err) == kExitBadInput);
  opt.instance = fixture("malformed.json");
  CHECK(solve_command(opt, out, err) == kExitBadInput);
  opt.instance = fixture("one_square.json");
  opt.config.width_px = 10;
  CHECK(solve_command(opt, out, err) == kExitOk);
  CHECK(out.str().find("L=10") != std::string::npos);
  opt.config.width_px = 0;
  CHECK(solve_command(opt, out, err) == kExitBadInput);
}

TEST_CASE("a shape below pixel resolution exits with the raster code") {
  const auto dir = scratch_dir("tiny");
  std::ofstream(dir / "tiny.json") << R"({"name": "tiny", "container_width": 100, "shapes": [
    {"id": "speck", "count": 1, "orientations": [0],
     "outline": {"outer": {"points": [[0,0],[0.2,0],[0.2,0.2],[0,0.2]]}}}]})";
  SolveOptions opt;
  opt.instance = (dir / "tiny.json").string();
  opt.config.width_px = 10;
  opt.config.time_limit = 0;
  std::ostringstream out, err;
  CHECK(solve_command(opt, out, err) == kExitRaster);
  CHECK(err.str().find("speck") != std::string::npos);
}

TEST_CASE("oracle subcommand") {
  std::ostringstream out, err;
  OracleOptions opt;
  opt.pairs = 30;
  CHECK(oracle_command(opt, out, err) == kExitOk);
  opt.inject_fault = true;
  CHECK(oracle_command(opt, out, err) == kExitFailure);
}

TEST_CASE("nfp dump of two single cells") {
  const auto dir = scratch_dir("nfp");
  std::ofstream(dir / "cells.json") << R"({"name": "cells", "container_width": 4, "shapes": [
    {"id": "c", "count": 2, "orientations": [0],
     "outline": {"outer": {"points": [[0,0],[1,0],[1,1],[0,1]]}}}]})";
  NfpOptions opt;
  opt.instance = (dir / "cells.json").string();
  opt.width_px = 4;
  opt.shape_a = opt.shape_b = "c";
  std::ostringstream out, err;
  REQUIRE(nfp_command(opt, out, err) == kExitOk);
  CHECK(out.str() == "P1\n# top-left offset 0 0\n1 1\n1\n");
}

TEST_CASE("bench on an empty directory prints only the header") {
  const auto dir = scratch_dir("bench_empty");
  BenchOptions opt;
  opt.directory = dir.string();
  std::ostringstream out, err;
  CHECK(bench_command(opt, out, err) == kExitOk);
  CHECK(count_of(out.str(), "\n") == 1);
  CHECK(out.str().rfind("instance,seed,", 0) == 0);
}

TEST_CASE("bench smoke run: two instances, two seeds, paired columns") {
  const auto dir = scratch_dir("bench");
  fs::copy_file(fixture("one_square.json"), dir / "a.json");
  fs::copy_file(fixture("arc_hole.json"), dir / "b.json");
  BenchOptions opt;
  opt.directory = dir.string();
  opt.runs = 2;
  opt.reduction = Reduction::both;
  opt.config.width_px = 24;
  opt.config.time_limit = 1;
  std::ostringstream out, err;
  REQUIRE(bench_command(opt, out, err) == kExitOk);
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line.find("cdh_call_ratio") != std::string::npos);
  int rows = 0;
  while (std::getline(lines, line)) {
    CHECK(count_of(line, ",") == 12);
    ++rows;
  }
  CHECK(rows == 4);
}
