#include "rasterpack/result.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rasterpack/errors.hpp"

namespace rasterpack {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

double density_percent(std::int64_t area, int width, int length) {
  if (width <= 0 || length <= 0) return 0.0;
  return 100.0 * static_cast<double>(area) /
         (static_cast<double>(width) * static_cast<double>(length));
}

ResultFile make_result(const Problem& problem, const Layout& layout, const RunRecord& record,
                       const SolverConfig& config, double preprocess_seconds) {
  ResultFile r;
  r.instance = problem.name();
  r.width_px = problem.width();
  r.length_px = layout.length;
  r.area_px = placed_area(problem, layout);
  r.density_percent = density_percent(r.area_px, r.width_px, r.length_px);
  for (int i = 0; i < problem.piece_count(); ++i) {
    r.pieces.push_back({i, problem.shapes()[problem.shape_of(i)].id,
                        problem.degrees(i, layout.orient[i]), layout.pos[i].x,
                        layout.pos[i].y});
  }
  r.config = config;
  r.cdh_calls = record.cdh_calls;
  r.cdh_calls_to_best = record.cdh_calls_to_best;
  r.accepted_moves = record.accepted_moves;
  for (const auto& e : record.events) {
    r.events.push_back({e.cdh_calls, e.length, e.feasible});
    r.metadata.event_times.push_back(e.time);
  }
  r.metadata.preprocess_seconds = preprocess_seconds;
  r.metadata.search_seconds = record.search_time;
  r.metadata.time_to_best = record.time_to_best;
  return r;
}

std::string to_json_text(const ResultFile& r) {
  ordered doc;
  doc["instance"] = r.instance;
  doc["width_px"] = r.width_px;
  doc["length_px"] = r.length_px;
  doc["area_px"] = r.area_px;
  doc["density_percent"] = r.density_percent;
  ordered pieces = ordered::array();
  for (const auto& p : r.pieces) {
    pieces.push_back({{"piece", p.piece}, {"shape", p.shape}, {"orientation", p.degrees},
                      {"x", p.x}, {"y", p.y}});
  }
  doc["pieces"] = std::move(pieces);
  doc["config"] = {{"seed", r.config.seed},
                   {"r_dec", r.config.r_dec},
                   {"r_inc", r.config.r_inc},
                   {"k_max", r.config.k_max},
                   {"time_limit", r.config.time_limit},
                   {"corner_reduction", r.config.corner_reduction},
                   {"max_cdh_calls", r.config.max_cdh_calls}};
  ordered events = ordered::array();
  for (const auto& e : r.events) {
    events.push_back({{"cdh_calls", e.cdh_calls}, {"length_px", e.length},
                      {"feasible", e.feasible}});
  }
  doc["statistics"] = {{"cdh_calls", r.cdh_calls},
                       {"cdh_calls_to_best", r.cdh_calls_to_best},
                       {"accepted_moves", r.accepted_moves},
                       {"events", std::move(events)}};
  doc["metadata"] = {{"preprocess_seconds", r.metadata.preprocess_seconds},
                     {"search_seconds", r.metadata.search_seconds},
                     {"time_to_best", r.metadata.time_to_best},
                     {"event_times", r.metadata.event_times}};
  return doc.dump(2) + "\n";
}

ResultFile result_from_json_text(const std::string& text) {
  ResultFile r;
  try {
    const json doc = json::parse(text);
    r.instance = doc.at("instance").get<std::string>();
    r.width_px = doc.at("width_px").get<int>();
    r.length_px = doc.at("length_px").get<int>();
    r.area_px = doc.at("area_px").get<std::int64_t>();
    r.density_percent = doc.at("density_percent").get<double>();
    for (const auto& p : doc.at("pieces")) {
      r.pieces.push_back({p.at("piece").get<int>(), p.at("shape").get<std::string>(),
                          p.at("orientation").get<int>(), p.at("x").get<int>(),
                          p.at("y").get<int>()});
    }
    const auto& c = doc.at("config");
    r.config.width_px = r.width_px;
    r.config.seed = c.at("seed").get<std::uint64_t>();
    r.config.r_dec = c.at("r_dec").get<double>();
    r.config.r_inc = c.at("r_inc").get<double>();
    r.config.k_max = c.at("k_max").get<int>();
    r.config.time_limit = c.at("time_limit").get<double>();
    r.config.corner_reduction = c.at("corner_reduction").get<bool>();
    r.config.max_cdh_calls = c.value("max_cdh_calls", std::int64_t{0});
    const auto& s = doc.at("statistics");
    r.cdh_calls = s.at("cdh_calls").get<std::int64_t>();
    r.cdh_calls_to_best = s.at("cdh_calls_to_best").get<std::int64_t>();
    r.accepted_moves = s.at("accepted_moves").get<std::int64_t>();
    for (const auto& e : s.at("events")) {
      r.events.push_back({e.at("cdh_calls").get<std::int64_t>(), e.at("length_px").get<int>(),
                          e.at("feasible").get<bool>()});
    }
    if (doc.contains("metadata")) {
      const auto& m = doc["metadata"];
      r.metadata.preprocess_seconds = m.value("preprocess_seconds", 0.0);
      r.metadata.search_seconds = m.value("search_seconds", 0.0);
      r.metadata.time_to_best = m.value("time_to_best", 0.0);
      r.metadata.event_times = m.value("event_times", std::vector<double>{});
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("result file: ") + e.what());
  }
  return r;
}

void write_result(const std::string& path, const ResultFile& result) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot write");
  out << to_json_text(result);
}

ResultFile read_result(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return result_from_json_text(buf.str());
}

Layout layout_from_result(const Problem& problem, const ResultFile& result) {
  if (result.pieces.empty()) throw ValidationError("result has no pieces");
  if (static_cast<int>(result.pieces.size()) != problem.piece_count()) {
    throw ValidationError("result piece count differs from the instance");
  }
  if (result.width_px != problem.width()) {
    throw ValidationError("result width differs from the rasterized instance");
  }
  Layout layout;
  layout.length = result.length_px;
  layout.pos.resize(result.pieces.size());
  layout.orient.assign(result.pieces.size(), -1);
  for (const auto& p : result.pieces) {
    if (p.piece < 0 || p.piece >= problem.piece_count()) {
      throw ValidationError("piece index out of range");
    }
    if (problem.shapes()[problem.shape_of(p.piece)].id != p.shape) {
      throw ValidationError("piece " + std::to_string(p.piece) + " has the wrong shape id");
    }
    for (int o = 0; o < problem.orientation_count(p.piece); ++o) {
      if (problem.degrees(p.piece, o) == p.degrees) layout.orient[p.piece] = o;
    }
    if (layout.orient[p.piece] < 0) {
      throw ValidationError("piece " + std::to_string(p.piece) + " has a disallowed orientation");
    }
    layout.pos[p.piece] = {p.x, p.y};
  }
  return layout;
}

}  // namespace rasterpack
