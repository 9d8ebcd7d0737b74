#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rasterpack/driver.hpp"

namespace rasterpack {

struct PiecePlacement {
  int piece = 0;
  std::string shape;
  int degrees = 0;
  int x = 0;
  int y = 0;

  friend bool operator==(const PiecePlacement&, const PiecePlacement&) = default;
};

struct ResultEvent {
  std::int64_t cdh_calls = 0;
  int length = 0;
  bool feasible = false;

  friend bool operator==(const ResultEvent&, const ResultEvent&) = default;
};

/// Solver output. Everything except `metadata` is a function of the instance,
/// config and seed when the run is bounded by a CDH budget.
struct ResultFile {
  std::string instance;
  int width_px = 0;
  int length_px = 0;
  std::int64_t area_px = 0;
  double density_percent = 0.0;
  std::vector<PiecePlacement> pieces;
  SolverConfig config;

  std::int64_t cdh_calls = 0;
  std::int64_t cdh_calls_to_best = 0;
  std::int64_t accepted_moves = 0;
  std::vector<ResultEvent> events;

  struct Metadata {
    double preprocess_seconds = 0.0;
    double search_seconds = 0.0;
    double time_to_best = 0.0;
    std::vector<double> event_times;
  } metadata;
};

/// 100 * area / (width * length).
double density_percent(std::int64_t area, int width, int length);

ResultFile make_result(const Problem& problem, const Layout& layout, const RunRecord& record,
                       const SolverConfig& config, double preprocess_seconds);

std::string to_json_text(const ResultFile& result);
ResultFile result_from_json_text(const std::string& text);
void write_result(const std::string& path, const ResultFile& result);
ResultFile read_result(const std::string& path);

/// Rebuilds a layout from stored placements. Throws ValidationError when the
/// result does not match the problem.
Layout layout_from_result(const Problem& problem, const ResultFile& result);

}  // namespace rasterpack
