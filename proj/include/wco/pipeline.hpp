#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "wco/disk_sup.hpp"
#include "wco/expr.hpp"

namespace wco {

/**
 * One run of the analysis. JSON form:
 *
 *   {"alpha": 0.5, "beta": 0.5, "g": E, "phi": E,
 *    "grid": {"K": 12, "angular_base": 64}, "n_max": 256,
 *    "deltas": [...], "witness_points": [z, ...]}
 *
 * Only alpha, beta, g and phi are required. Expressions follow expr_json.
 */
struct RunConfig {
  double alpha = 0.0;
  double beta = 0.0;
  HoloExpr g = HoloExpr::constant(1.0);
  HoloExpr phi = HoloExpr::z();
  int grid_levels = 12;
  int angular_base = 64;
  int n_max = 256;
  std::vector<double> deltas = default_deltas();
  std::optional<std::vector<cplx>> witness_points;

  /// Throws ConfigError on missing or malformed fields.
  static RunConfig from_json(const nlohmann::json& j);
  static RunConfig load(const std::filesystem::path& path);
  nlohmann::json to_json() const;
};

struct RunOptions {
  int threads = 1;
  bool oracle = false;
  /// Directory for CSV curves; nothing is written when empty.
  std::filesystem::path curves_dir;
};

struct OracleCheck {
  std::string name;
  double error = 0.0;
  double tolerance = 0.0;
  bool passed() const { return error <= tolerance; }
};

/// Oracle cross-checks for one configuration: finite differences against
/// jets, the defining identity, and dense sampling against grid suprema.
std::vector<OracleCheck> run_oracles(const RunConfig& cfg, const DiskGrid& grid, int threads = 1);

struct RunResult {
  nlohmann::json report;
  std::vector<std::filesystem::path> curve_files;
  bool oracle_failed = false;
};

/**
 * Boundedness checks, then (unless unbounded) both essential-norm estimates
 * and optional witnesses. Throws ConfigError for invalid operators and
 * EvalError when an expression cannot be evaluated on the grid.
 */
RunResult run(const RunConfig& cfg, const RunOptions& opts = {});

/// Deterministic serialization of a report (sorted keys, two-space indent).
std::string dump_report(const nlohmann::json& report);

}  // namespace wco
