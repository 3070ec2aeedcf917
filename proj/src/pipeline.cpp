#include "wco/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "wco/criteria.hpp"
#include "wco/errors.hpp"
#include "wco/essnorm.hpp"
#include "wco/expr_json.hpp"
#include "wco/gcoeff.hpp"
#include "wco/oracle.hpp"
#include "wco/parallel.hpp"

namespace wco {

using nlohmann::json;

namespace {

template <class T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw ConfigError(std::string("config: missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: bad field '") + key + "': " + e.what());
  }
}

template <class T>
T field_or(const json& j, const char* key, T fallback) {
  return j.contains(key) ? field<T>(j, key) : fallback;
}

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json sup_json(int j, const SupEstimate& s) {
  json levels = json::array();
  for (double v : s.per_level) levels.push_back(number(v));
  return {{"j", j},
          {"value", s.divergent ? json(nullptr) : number(s.value)},
          {"grid_value", number(s.grid_value)},
          {"divergent", s.divergent},
          {"growth_exponent", number(s.growth_exponent)},
          {"per_level", levels}};
}

json sequence_json(const DiscreteSequence& seq) {
  json n = json::array(), v = json::array();
  for (std::size_t i = 0; i < seq.n.size() && seq.n[i] <= 16; ++i) {
    n.push_back(seq.n[i]);
    v.push_back(number(seq.values[i]));
  }
  return {{"j", seq.j},
          {"branch", to_string(seq.branch)},
          {"sup", number(seq.sup)},
          {"divergent", seq.divergent},
          {"sequence_head", {{"n", n}, {"values", v}}},
          {"plateau",
           {{"head_sup", number(seq.head_sup)},
            {"tail_sup", number(seq.tail_sup)},
            {"ratio", number(seq.plateau_ratio)},
            {"verdict", to_string(seq.verdict)}}}};
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

class CsvWriter {
 public:
  explicit CsvWriter(std::filesystem::path dir) : dir_(std::move(dir)) {}

  bool enabled() const { return !dir_.empty(); }

  void write(const std::string& name, const std::string& header, const std::vector<std::vector<double>>& rows) {
    if (!enabled()) return;
    std::filesystem::create_directories(dir_);
    const auto path = dir_ / name;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << header << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << fmt(row[i]);
      out << '\n';
    }
    files_.push_back(path);
  }

  const std::vector<std::filesystem::path>& files() const { return files_; }

 private:
  std::filesystem::path dir_;
  std::vector<std::filesystem::path> files_;
};

}  // namespace

RunConfig RunConfig::from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("config: expected a JSON object");
  RunConfig c;
  c.alpha = field<double>(j, "alpha");
  c.beta = field<double>(j, "beta");
  if (!j.contains("g")) throw ConfigError("config: missing field 'g'");
  if (!j.contains("phi")) throw ConfigError("config: missing field 'phi'");
  c.g = expr_from_json(j.at("g"));
  c.phi = expr_from_json(j.at("phi"));
  if (j.contains("grid")) {
    const json& grid = j.at("grid");
    if (!grid.is_object()) throw ConfigError("config: 'grid' must be an object");
    c.grid_levels = field_or<int>(grid, "K", c.grid_levels);
    c.angular_base = field_or<int>(grid, "angular_base", c.angular_base);
  }
  c.n_max = field_or<int>(j, "n_max", c.n_max);
  c.deltas = field_or<std::vector<double>>(j, "deltas", c.deltas);
  if (j.contains("witness_points")) {
    const json& w = j.at("witness_points");
    if (!w.is_array()) throw ConfigError("config: 'witness_points' must be an array");
    std::vector<cplx> pts;
    for (const auto& p : w) pts.push_back(complex_from_json(p));
    c.witness_points = std::move(pts);
  }

  if (!std::isfinite(c.alpha) || !std::isfinite(c.beta)) throw ConfigError("config: alpha and beta must be finite");
  if (c.grid_levels < 4 || c.grid_levels > 20) throw ConfigError("config: grid.K must be in [4, 20]");
  if (c.angular_base < 8) throw ConfigError("config: grid.angular_base must be at least 8");
  if (c.n_max < 64) throw ConfigError("config: n_max must be at least 64");
  if (c.deltas.empty()) throw ConfigError("config: deltas must be nonempty");
  for (std::size_t i = 0; i < c.deltas.size(); ++i) {
    if (!(c.deltas[i] > 0.0 && c.deltas[i] < 1.0) || (i > 0 && !(c.deltas[i] < c.deltas[i - 1]))) {
      throw ConfigError("config: deltas must decrease strictly inside (0, 1)");
    }
  }
  if (derivative_order(c.alpha) > GCoefficientTable::kMaxOrder) throw ConfigError("config: alpha too large");
  return c;
}

RunConfig RunConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config " + path.string() + ": " + e.what());
  }
  return from_json(j);
}

json RunConfig::to_json() const {
  json j = {{"alpha", alpha},
            {"beta", beta},
            {"g", expr_to_json(g)},
            {"phi", expr_to_json(phi)},
            {"grid", {{"K", grid_levels}, {"angular_base", angular_base}}},
            {"n_max", n_max},
            {"deltas", deltas}};
  if (witness_points) {
    json w = json::array();
    for (cplx z : *witness_points) w.push_back(complex_to_json(z));
    j["witness_points"] = w;
  }
  return j;
}

std::vector<OracleCheck> run_oracles(const RunConfig& cfg, const DiskGrid& grid, int threads) {
  const SpaceParam p = SpaceParam::make(cfg.alpha, cfg.beta);
  std::vector<OracleCheck> out;
  std::vector<cplx> probes;
  for (int l = 0; l < 8; ++l) probes.push_back(std::polar(0.5, 2.0 * std::numbers::pi * (l + 0.5) / 8));

  const int k = std::min(p.J, 4);
  for (const auto& [name, e] : {std::pair{"g", cfg.g}, std::pair{"phi", cfg.phi}}) {
    OracleCheck c{std::string("finite differences vs jets: ") + name, 0.0, 1e-6};
    for (cplx z : probes) {
      const auto fd = oracle::fd_derivatives(e, z, k);
      const ComplexJet jet = eval_jet(e, z, k);
      double scale = 0.0;
      for (int i = 0; i <= k; ++i) scale = std::max(scale, std::abs(fd[i]));
      for (int i = 0; i <= k; ++i) c.error = std::max(c.error, std::abs(fd[i] - jet.derivative(i)) / std::max(scale, 1e-300));
    }
    out.push_back(c);
  }

  OracleCheck ident{"defining identity", 0.0, 1e-10};
  const HoloExpr f = pow(HoloExpr::z(), p.J + 2);
  for (cplx z : probes) ident.error = std::max(ident.error, oracle::defining_identity_check(cfg.g, cfg.phi, f, p.J, z));
  out.push_back(ident);

  OperatorSamples samples({cfg.g, cfg.phi, p}, grid, threads);
  SupOptions sup;
  sup.parallelism = threads;
  for (int j = 0; j <= p.J; ++j) {
    const auto dens = samples.weighted_samples(j);
    const SupEstimate s = sup_sampled(dens, grid, [&](cplx z) { return samples.weighted(j, z); }, sup);
    if (s.divergent) continue;
    const double d = oracle::dense_sup([&](cplx z) { return samples.weighted(j, z); });
    const double scale = std::max({s.value, d, 1e-300});
    out.push_back({"dense sup vs grid sup, j = " + std::to_string(j), std::abs(s.value - d) / scale, 5e-3});
  }
  return out;
}

RunResult run(const RunConfig& cfg, const RunOptions& opts) {
  const SpaceParam p = SpaceParam::make(cfg.alpha, cfg.beta);
  const DiskGrid grid(cfg.grid_levels, cfg.angular_base);
  SupOptions sup;
  sup.parallelism = opts.threads;

  RunResult result;
  json& rep = result.report;
  json warnings = json::array();
  rep["params"] = {{"alpha", p.alpha}, {"beta", p.beta}, {"J", p.J}, {"N", p.N}};

  if (opts.oracle) {
    json checks = json::array();
    for (const auto& c : run_oracles(cfg, grid, opts.threads)) {
      checks.push_back({{"name", c.name}, {"error", c.error}, {"tolerance", c.tolerance}, {"passed", c.passed()}});
      if (!c.passed()) {
        result.oracle_failed = true;
        warnings.push_back("oracle disagreement: " + c.name);
      }
    }
    rep["oracle"] = checks;
  }

  const OperatorSpec op{cfg.g, cfg.phi, p};
  OperatorSamples samples(op, grid, opts.threads);
  const BoundednessReport bounded = check_boundedness(samples, cfg.n_max, sup);
  for (const auto& w : bounded.warnings) warnings.push_back(w);

  CsvWriter csv(opts.curves_dir);
  json S = json::array(), disc = json::array(), memb = json::array(), ratios = json::array();
  for (int j = 0; j <= p.J; ++j) {
    const SupEstimate& s = bounded.continuous[j];
    S.push_back(sup_json(j, s));
    std::vector<std::vector<double>> rows;
    for (int k = 0; k <= grid.levels(); ++k) rows.push_back({grid.radius(k), s.per_level[k]});
    csv.write("levels_j" + std::to_string(j) + ".csv", "r,max", rows);
  }
  for (const auto& m : bounded.membership) memb.push_back(sup_json(m.j, m.sup));
  for (const auto& seq : bounded.discrete) disc.push_back(sequence_json(seq));
  for (const auto& e : crosscheck_criteria(bounded).entries) {
    ratios.push_back({{"j", e.j},
                      {"continuous", number(e.continuous)},
                      {"discrete", number(e.discrete)},
                      {"ratio", e.ratio ? number(*e.ratio) : json(nullptr)},
                      {"flagged", e.flagged},
                      {"note", e.note}});
    if (e.flagged) warnings.push_back("criteria comparability flagged at j = " + std::to_string(e.j) + ": " + e.note);
  }
  rep["boundedness"] = {{"verdict", to_string(bounded.verdict)},
                        {"continuous_verdict", to_string(*bounded.continuous_verdict)},
                        {"discrete_verdict", to_string(*bounded.discrete_verdict)},
                        {"S", S},
                        {"membership", memb},
                        {"discrete", disc},
                        {"crosscheck_ratios", ratios}};

  json ess;
  if (bounded.verdict == Verdict::Unbounded) {
    ess = {{"refused", UnboundedOperatorError().what()}, {"compact", nullptr}, {"interval", nullptr},
           {"discrete_estimate", nullptr}, {"curves_ref", nullptr}};
  } else {
    EssNormOptions eo;
    eo.deltas = cfg.deltas;
    eo.n_max = cfg.n_max;
    eo.sup = sup;
    const EssNormReport e = essential_norm(samples, bounded, eo);
    for (const auto& w : e.warnings) warnings.push_back(w);

    json est = json::array();
    std::vector<std::string> refs;
    for (std::size_t i = 0; i < e.js.size(); ++i) {
      const int j = e.js[i];
      const LimsupCurve& c = e.curves[i];
      est.push_back({{"j", j}, {"estimate", number(c.estimate)}, {"delta_index", c.estimate_index},
                     {"nonincreasing", c.nonincreasing()}});
      std::vector<std::vector<double>> rows;
      for (std::size_t m = 0; m < c.deltas.size(); ++m) {
        rows.push_back({c.deltas[m], c.sups[m], static_cast<double>(c.counts[m])});
      }
      const std::string name = "limsup_j" + std::to_string(j) + ".csv";
      csv.write(name, "delta,sup,count", rows);
      if (csv.enabled()) refs.push_back(name);
    }
    json tails = json::array();
    for (const auto& t : e.discrete) {
      tails.push_back({{"j", t.j}, {"tail_start", t.tail_start}, {"estimate", number(t.estimate)}});
      std::vector<std::vector<double>> rows;
      for (std::size_t m = 0; m < t.n.size(); ++m) rows.push_back({static_cast<double>(t.n[m]), t.values[m]});
      const std::string name = "discrete_j" + std::to_string(t.j) + ".csv";
      csv.write(name, "n,value", rows);
      if (csv.enabled()) refs.push_back(name);
    }
    ess = {{"compact", e.compact},
           {"note", e.note ? json(*e.note) : json(nullptr)},
           {"interval", {number(e.estimate_max), number(e.estimate_sum)}},
           {"estimates", est},
           {"discrete_estimate", e.discrete_estimate ? number(*e.discrete_estimate) : json(nullptr)},
           {"discrete_tails", tails},
           {"curves_ref", csv.enabled() ? json(refs) : json(nullptr)}};
  }
  rep["essential_norm"] = ess;

  json wit = json::array();
  if (cfg.witness_points && bounded.verdict != Verdict::Unbounded) {
    const WitnessReport w = witness_lower_bound(op, *cfg.witness_points, grid, sup);
    if (w.note) warnings.push_back("witnesses: " + *w.note);
    for (const auto& s : w.series) {
      json pts = json::array(), vals = json::array(), run = json::array();
      for (cplx z : s.points) pts.push_back(complex_to_json(z));
      for (double v : s.values) vals.push_back(number(v));
      for (double v : s.running_max) run.push_back(number(v));
      wit.push_back({{"j", s.j}, {"points", pts}, {"values", vals}, {"running_max", run}});
    }
  }
  rep["witnesses"] = wit;
  rep["warnings"] = warnings;
  result.curve_files = csv.files();
  return result;
}

std::string dump_report(const json& report) { return report.dump(2) + "\n"; }

}  // namespace wco
