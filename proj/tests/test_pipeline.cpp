#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "wco/errors.hpp"
#include "wco/expr_json.hpp"
#include "wco/pipeline.hpp"

using nlohmann::json;
using wco::RunConfig;

namespace {

std::filesystem::path data(const char* name) { return std::filesystem::path(WCO_TEST_DATA) / name; }

RunConfig small(RunConfig c) {
  c.grid_levels = 9;
  c.n_max = 64;
  return c;
}

}  // namespace

TEST(Config, LoadsDefaults) {
  const auto c = RunConfig::load(data("auto_compact.json"));
  EXPECT_EQ(c.alpha, 0.5);
  EXPECT_EQ(c.beta, 2.3);
  EXPECT_EQ(c.grid_levels, 12);
  EXPECT_EQ(c.angular_base, 64);
  EXPECT_EQ(c.n_max, 256);
  EXPECT_EQ(c.deltas.size(), 10u);
  EXPECT_FALSE(c.witness_points.has_value());
}

TEST(Config, WitnessPoints) {
  const auto c = RunConfig::load(data("identity.json"));
  ASSERT_TRUE(c.witness_points.has_value());
  EXPECT_EQ(c.witness_points->size(), 6u);
}

TEST(Config, Errors) {
  EXPECT_THROW(RunConfig::load(data("bad_missing_phi.json")), wco::ConfigError);
  EXPECT_THROW(RunConfig::load(data("does_not_exist.json")), wco::ConfigError);
  const json base = RunConfig::load(data("identity.json")).to_json();
  for (const auto& [key, value] : std::vector<std::pair<std::string, json>>{
           {"n_max", 10}, {"deltas", json::array({0.5, 0.6})}, {"alpha", "x"}, {"grid", json{{"K", 2}}}}) {
    json bad = base;
    bad[key] = value;
    EXPECT_THROW(RunConfig::from_json(bad), wco::ConfigError) << key;
  }
}

TEST(Config, RoundTrip) {
  const auto c = RunConfig::load(data("identity.json"));
  const auto d = RunConfig::from_json(c.to_json());
  EXPECT_EQ(c.to_json(), d.to_json());
}

TEST(Run, IdentityReport) {
  const auto r = wco::run(small(RunConfig::load(data("identity.json"))));
  const json& rep = r.report;
  EXPECT_EQ(rep["params"]["J"], 1);
  EXPECT_EQ(rep["params"]["N"], 1);
  EXPECT_EQ(rep["boundedness"]["verdict"], "bounded");
  EXPECT_NEAR(rep["boundedness"]["S"][1]["value"].get<double>(), 1.0, 1e-3);
  const auto& ess = rep["essential_norm"];
  EXPECT_FALSE(ess["compact"].get<bool>());
  EXPECT_LE(ess["interval"][0].get<double>(), 1.0 + 1e-9);
  EXPECT_GE(ess["interval"][1].get<double>(), 1.0 - 1e-9);
  EXPECT_TRUE(ess["curves_ref"].is_null());
  ASSERT_EQ(rep["witnesses"].size(), 1u);
  EXPECT_TRUE(rep["warnings"].empty()) << rep["warnings"].dump();
}

TEST(Run, InteriorMap) {
  const auto r = wco::run(small(RunConfig::load(data("interior.json"))));
  const auto& ess = r.report["essential_norm"];
  EXPECT_TRUE(ess["compact"].get<bool>());
  EXPECT_EQ(ess["interval"][0].get<double>(), 0.0);
  EXPECT_LE(ess["discrete_estimate"].get<double>(), 1e-6);
  EXPECT_TRUE(r.report["witnesses"].empty());
}

TEST(Run, AutoCompact) {
  const auto r = wco::run(small(RunConfig::load(data("auto_compact.json"))));
  const auto& ess = r.report["essential_norm"];
  EXPECT_TRUE(ess["compact"].get<bool>());
  EXPECT_NE(ess["note"].get<std::string>().find("no computation needed"), std::string::npos);
}

TEST(Run, UnboundedRefusal) {
  const auto r = wco::run(small(RunConfig::load(data("unbounded.json"))));
  EXPECT_EQ(r.report["boundedness"]["verdict"], "unbounded");
  EXPECT_EQ(r.report["essential_norm"]["refused"], "essential norm undefined for unbounded operator");
  EXPECT_TRUE(r.report["essential_norm"]["interval"].is_null());
}

TEST(Run, ErrorsSurface) {
  EXPECT_THROW(wco::run(small(RunConfig::load(data("not_self_map.json")))), wco::ConfigError);
  EXPECT_THROW(wco::run(small(RunConfig::load(data("pole_inside.json")))), wco::EvalError);
}

TEST(Run, DeterministicAndThreadIndependent) {
  const auto cfg = small(RunConfig::load(data("identity.json")));
  const auto a = wco::dump_report(wco::run(cfg).report);
  const auto b = wco::dump_report(wco::run(cfg).report);
  wco::RunOptions par;
  par.threads = 3;
  const auto c = wco::dump_report(wco::run(cfg, par).report);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
}

TEST(Run, CurvesWritten) {
  const auto dir = std::filesystem::temp_directory_path() / "wco_curves_test";
  std::filesystem::remove_all(dir);
  wco::RunOptions o;
  o.curves_dir = dir;
  const auto r = wco::run(small(RunConfig::load(data("identity.json"))), o);
  EXPECT_EQ(r.curve_files.size(), 4u);  // two level curves, one limsup, one discrete
  std::ifstream in(dir / "limsup_j1.csv");
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "delta,sup,count");
  EXPECT_EQ(r.report["essential_norm"]["curves_ref"].size(), 2u);
}

TEST(Run, OracleChecksPass) {
  wco::RunOptions o;
  o.oracle = true;
  const auto r = wco::run(small(RunConfig::load(data("interior.json"))), o);
  EXPECT_FALSE(r.oracle_failed) << r.report["oracle"].dump(2);
  EXPECT_GE(r.report["oracle"].size(), 3u);
}
