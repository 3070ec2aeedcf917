// Command-line driver: boundedness, essential-norm estimates and witnesses
// for one weighted composition operator described by a JSON config.

#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "wco/errors.hpp"
#include "wco/expr.hpp"
#include "wco/gcoeff.hpp"
#include "wco/pipeline.hpp"

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitEval = 2;

int dump_gtable(int J) {
  if (J < 0 || J > wco::GCoefficientTable::kMaxOrder) {
    std::cerr << "error: --dump-gtable needs 0 <= J <= " << wco::GCoefficientTable::kMaxOrder << "\n";
    return kExitConfig;
  }
  std::cout << wco::GCoefficientTable::build(J).to_text();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted composition operators between Lipschitz-type spaces on the disk"};

  std::string config_path, json_out = "report.json", curves_dir;
  std::optional<double> alpha, beta;
  std::optional<int> n_max, grid_k, gtable;
  bool oracle = false;
  int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  app.add_option("--config", config_path, "JSON run configuration")->check(CLI::ExistingFile);
  app.add_option("--alpha", alpha, "override alpha (target space)");
  app.add_option("--beta", beta, "override beta (source space)");
  app.add_option("--dump-gtable", gtable, "print the G coefficient table of order J and exit");
  app.add_option("--curves-dir", curves_dir, "write CSV curves into this directory");
  app.add_flag("--oracle", oracle, "run the oracle cross-checks first");
  app.add_option("--n-max", n_max, "override n_max");
  app.add_option("--grid-k", grid_k, "override the number of radial levels");
  app.add_option("--json-out", json_out, "report path, '-' for stdout")->capture_default_str();
  app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  if (gtable) return dump_gtable(*gtable);
  if (config_path.empty()) {
    std::cerr << "error: --config is required\n";
    return kExitConfig;
  }

  wco::RunConfig cfg;
  try {
    cfg = wco::RunConfig::load(config_path);
    if (alpha) cfg.alpha = *alpha;
    if (beta) cfg.beta = *beta;
    if (n_max) cfg.n_max = *n_max;
    if (grid_k) cfg.grid_levels = *grid_k;
    cfg = wco::RunConfig::from_json(cfg.to_json());
  } catch (const wco::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }

  wco::RunResult result;
  try {
    result = wco::run(cfg, {threads, oracle, curves_dir});
  } catch (const wco::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "evaluation failed: " << e.what() << "\n";
    return kExitEval;
  }

  const std::string text = wco::dump_report(result.report);
  if (json_out == "-") {
    std::cout << text;
  } else {
    std::ofstream out(json_out, std::ios::binary);
    if (!out || !(out << text)) {
      std::cerr << "cannot write " << json_out << "\n";
      return kExitEval;
    }
  }

  const auto& b = result.report["boundedness"];
  const auto& e = result.report["essential_norm"];
  std::cerr << "verdict: " << b["verdict"].get<std::string>();
  if (e.contains("interval") && !e["interval"].is_null()) {
    std::cerr << ", essential norm in [" << e["interval"][0].dump() << ", " << e["interval"][1].dump()
              << "], discrete " << e["discrete_estimate"].dump() << ", compact " << e["compact"].dump();
  }
  std::cerr << "\n";
  if (result.oracle_failed) {
    std::cerr << "oracle cross-checks failed; see report\n";
    return kExitEval;
  }
  return 0;
}
