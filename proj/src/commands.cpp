#include "rasterpack/commands.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "rasterpack/errors.hpp"
#include "rasterpack/instance.hpp"
#include "rasterpack/oracle.hpp"
#include "rasterpack/result.hpp"
#include "rasterpack/scanline.hpp"
#include "rasterpack/svg.hpp"

namespace rasterpack {
namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool write_text(const std::string& path, const std::string& text, std::ostream& err) {
  std::ofstream f(path);
  if (!f || !(f << text)) {
    err << "error: cannot write " << path << '\n';
    return false;
  }
  return true;
}

int shape_index(const Problem& p, const std::string& id) {
  for (std::size_t s = 0; s < p.shapes().size(); ++s) {
    if (p.shapes()[s].id == id) return static_cast<int>(s);
  }
  throw ValidationError("unknown shape id '" + id + "'");
}

const PixelShape& shape_raster(const Problem& p, const std::string& id, int degrees) {
  const auto& cls = p.shapes()[static_cast<std::size_t>(shape_index(p, id))];
  for (const auto& o : cls.orientations) {
    if (o.degrees == ((degrees % 360) + 360) % 360) return o.raster;
  }
  throw ValidationError("shape '" + id + "' does not allow " + std::to_string(degrees) +
                        " degrees");
}

}  // namespace

int solve_command(const SolveOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    opt.config.validate();
    const InstanceFile inst = parse_instance(opt.instance);
    const auto t0 = std::chrono::steady_clock::now();
    const Problem problem = make_problem(inst, opt.config.width_px);
    const NfpTable table(problem);
    const double preprocess = seconds_since(t0);

    const GcdhResult run = gcdh(problem, table, opt.config);
    const auto check = oracle::check_layout(problem, run.best);
    if (!check.feasible()) {
      err << "error: solver returned an infeasible layout\n";
      return kExitFailure;
    }
    const ResultFile result = make_result(problem, run.best, run.record, opt.config, preprocess);
    if (!opt.out.empty() && !write_text(opt.out, to_json_text(result), err)) return kExitFailure;
    if (!opt.svg.empty() && !write_text(opt.svg, render_svg(problem, run.best), err)) {
      return kExitFailure;
    }
    out << std::fixed << std::setprecision(2) << problem.name() << ": W=" << problem.width()
        << " L=" << result.length_px << " density=" << result.density_percent
        << "% cdh_calls=" << result.cdh_calls << " preprocess=" << preprocess
        << "s search=" << run.record.search_time << "s\n";
    return kExitOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const EmptyRaster& e) {
    err << "rasterization failed: " << e.what() << '\n';
    return kExitRaster;
  } catch (const PieceExceedsWidth& e) {
    err << "error: " << e.what() << '\n';
    return kExitRaster;
  }
}

int nfp_command(const NfpOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    const InstanceFile inst = parse_instance(opt.instance);
    const Problem problem = make_problem(inst, opt.width_px);
    const Nfp nfp = build_nfp(shape_raster(problem, opt.shape_a, opt.degrees_a),
                              shape_raster(problem, opt.shape_b, opt.degrees_b));
    const Cell lo = nfp.bbox_min(), hi = nfp.bbox_max();
    std::ostringstream pbm;
    pbm << "P1\n# top-left offset " << lo.x << ' ' << hi.y << "\n"
        << hi.x - lo.x + 1 << ' ' << hi.y - lo.y + 1 << '\n';
    for (int y = hi.y; y >= lo.y; --y) {
      for (int x = lo.x; x <= hi.x; ++x) {
        pbm << (nfp.contains({x, y}) ? '1' : '0') << (x == hi.x ? '\n' : ' ');
      }
    }
    if (opt.out.empty()) {
      out << pbm.str();
    } else if (!write_text(opt.out, pbm.str(), err)) {
      return kExitFailure;
    }
    return kExitOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const EmptyRaster& e) {
    err << "rasterization failed: " << e.what() << '\n';
    return kExitRaster;
  }
}

int oracle_command(const OracleOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.pairs < 1 || opt.max_grid < 1 || opt.max_grid > 32) {
    err << "invalid input: pairs must be positive and grid within [1, 32]\n";
    return kExitBadInput;
  }
  const auto rep = oracle::run_oracle(opt.seed, opt.pairs, opt.max_grid, opt.inject_fault);
  oracle::print_report(out, rep);
  return rep.ok() ? kExitOk : kExitFailure;
}

int render_command(const RenderOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    const InstanceFile inst = parse_instance(opt.instance);
    const ResultFile result = read_result(opt.result);
    const Problem problem = make_problem(inst, result.width_px);
    const Layout layout = layout_from_result(problem, result);
    const std::string svg = render_svg(problem, layout);
    if (opt.svg.empty()) {
      out << svg;
    } else if (!write_text(opt.svg, svg, err)) {
      return kExitFailure;
    }
    return kExitOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const EmptyRaster& e) {
    err << "rasterization failed: " << e.what() << '\n';
    return kExitRaster;
  }
}

int bench_command(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
  namespace fs = std::filesystem;
  if (opt.runs < 1) {
    err << "invalid input: runs must be at least 1\n";
    return kExitBadInput;
  }
  std::error_code ec;
  if (!fs::is_directory(opt.directory, ec)) {
    err << "invalid input: " << opt.directory << " is not a directory\n";
    return kExitBadInput;
  }
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(opt.directory)) {
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());

  const bool paired = opt.reduction == Reduction::both;
  std::ostringstream csv;
  csv << "instance,seed,width_px,corner_reduction,length_px,density,cdh_calls,best_density,"
         "avg_density";
  if (paired) csv << ",length_px_off,density_off,cdh_calls_off,cdh_call_ratio";
  csv << '\n';
  csv << std::setprecision(10);

  try {
    opt.config.validate();
    for (const auto& path : files) {
      const InstanceFile inst = parse_instance(path.string());
      const Problem problem = make_problem(inst, opt.config.width_px);
      const NfpTable table(problem);
      struct Row {
        std::uint64_t seed;
        ResultFile on, off;
      };
      std::vector<Row> rows;
      double best = 0.0, sum = 0.0;
      for (int r = 0; r < opt.runs; ++r) {
        Row row;
        row.seed = opt.config.seed + static_cast<std::uint64_t>(r);
        SolverConfig cfg = opt.config;
        cfg.seed = row.seed;
        cfg.corner_reduction = opt.reduction != Reduction::off;
        auto run = gcdh(problem, table, cfg);
        row.on = make_result(problem, run.best, run.record, cfg, 0.0);
        if (paired) {
          cfg.corner_reduction = false;
          run = gcdh(problem, table, cfg);
          row.off = make_result(problem, run.best, run.record, cfg, 0.0);
        }
        best = std::max(best, row.on.density_percent);
        sum += row.on.density_percent;
        rows.push_back(std::move(row));
      }
      for (const auto& row : rows) {
        csv << problem.name() << ',' << row.seed << ',' << problem.width() << ','
            << (opt.reduction == Reduction::off ? "off" : "on") << ',' << row.on.length_px << ','
            << row.on.density_percent << ',' << row.on.cdh_calls << ',' << best << ','
            << sum / opt.runs;
        if (paired) {
          const double ratio = row.off.cdh_calls > 0 ? static_cast<double>(row.on.cdh_calls) /
                                                           static_cast<double>(row.off.cdh_calls)
                                                     : 0.0;
          csv << ',' << row.off.length_px << ',' << row.off.density_percent << ','
              << row.off.cdh_calls << ',' << ratio;
        }
        csv << '\n';
      }
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const EmptyRaster& e) {
    err << "rasterization failed: " << e.what() << '\n';
    return kExitRaster;
  } catch (const PieceExceedsWidth& e) {
    err << "error: " << e.what() << '\n';
    return kExitRaster;
  }
  if (opt.out.empty()) {
    out << csv.str();
  } else if (!write_text(opt.out, csv.str(), err)) {
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace rasterpack
