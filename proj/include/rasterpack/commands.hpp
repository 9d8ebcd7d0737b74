#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "rasterpack/driver.hpp"

namespace rasterpack {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitRaster = 3;

struct SolveOptions {
  std::string instance;
  SolverConfig config;
  std::string out;  // result file; empty skips writing
  std::string svg;  // optional drawing
};

int solve_command(const SolveOptions& opt, std::ostream& out, std::ostream& err);

struct NfpOptions {
  std::string instance;
  int width_px = 128;
  std::string shape_a;
  std::string shape_b;
  int degrees_a = 0;
  int degrees_b = 0;
  std::string out;  // PBM path; empty writes to `out`
};

/// Dumps NFP(a, b) as a plain PBM with one pixel per relative offset. Rows
/// run top (largest y) to bottom; a comment records the offset of the
/// top-left pixel.
int nfp_command(const NfpOptions& opt, std::ostream& out, std::ostream& err);

struct OracleOptions {
  std::uint64_t seed = 1;
  int pairs = 200;
  int max_grid = 16;
  bool inject_fault = false;
};

int oracle_command(const OracleOptions& opt, std::ostream& out, std::ostream& err);

struct RenderOptions {
  std::string instance;
  std::string result;
  std::string svg;  // empty writes to `out`
};

int render_command(const RenderOptions& opt, std::ostream& out, std::ostream& err);

enum class Reduction { on, off, both };

struct BenchOptions {
  std::string directory;
  SolverConfig config;  // seed is the first seed; runs use seed, seed+1, ...
  int runs = 3;
  Reduction reduction = Reduction::on;
  std::string out;  // CSV path; empty writes to `out`
};

/// One CSV row per (instance, seed). With Reduction::both each row carries
/// paired columns for runs with and without corner reduction.
int bench_command(const BenchOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace rasterpack
