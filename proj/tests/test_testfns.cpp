#include <gtest/gtest.h>

#include <cmath>

#include "wco/testfns.hpp"

using wco::cplx;
using wco::TestFnCase;
using wco::TestFnSpec;

namespace {

const wco::DiskGrid& grid() {
  static const wco::DiskGrid g;
  return g;
}

}  // namespace

TEST(TestFns, CaseSelection) {
  EXPECT_EQ((TestFnSpec{0.5, 1, 0.5}).kind(), TestFnCase::BetaBelowN);
  EXPECT_EQ((TestFnSpec{0.5, 1, 1.0}).kind(), TestFnCase::BetaEqualsN);
  EXPECT_EQ((TestFnSpec{0.5, 2, 1.0}).kind(), TestFnCase::AboveN);
  EXPECT_EQ((TestFnSpec{0.5, 0, 0.0}).kind(), TestFnCase::BetaEqualsN);
  EXPECT_EQ((TestFnSpec{0.5, 0, -0.5}).kind(), TestFnCase::BetaBelowN);
  EXPECT_EQ((TestFnSpec{0.5, 0, -1.5}).kind(), TestFnCase::AboveN);
}

TEST(TestFns, Validation) {
  EXPECT_THROW(wco::make_test_fn({1.0, 1, 0.5}), std::invalid_argument);
  EXPECT_THROW(wco::make_test_fn({0.5, 0, 0.5}), std::invalid_argument);
  EXPECT_NO_THROW(wco::make_test_fn({0.5, 0, -1.5}));
}

TEST(TestFns, CenterAtOrigin) {
  // w = 0 reduces both the power and the log variants to z.
  for (double beta : {0.5, 1.0}) {
    const auto f = wco::make_test_fn({0.0, 1, beta});
    for (cplx p : {cplx(0.3, 0.1), cplx(-0.5, 0.4)}) EXPECT_NEAR(std::abs(f.evaluate(p) - p), 0.0, 1e-15);
  }
}

TEST(TestFns, VanishesAtCenter) {
  const cplx w(0.9, 0.0);
  const auto f = wco::make_test_fn({w, 2, 0.5});
  const auto jet = wco::eval_jet(f, w, 3);
  EXPECT_EQ(jet[0], cplx(0.0));
  EXPECT_EQ(jet[1], cplx(0.0));
  EXPECT_NE(jet[2], cplx(0.0));
}

TEST(TestFns, PeakDerivativeLowerConstant) {
  // beta = 1/2, j = 1, real w: f'(w) / Omega_1(|w|) = (1+|w|)^{-3/2}.
  for (double r : {0.5, 0.9, 0.99, 0.999}) {
    const auto m = wco::measure_at_center({r, 1, 0.5}, 2);
    EXPECT_NEAR(m.lower_ratio, std::pow(1.0 + r, -1.5), 1e-10);
  }
}

TEST(TestFns, MeasurementIsRotationEquivariant) {
  const cplx w = std::polar(0.9, 0.7);
  const auto a = wco::measure_test_fn({w, 1, 0.5}, 2, grid());
  const auto b = wco::measure_test_fn({0.9, 1, 0.5}, 2, grid());
  EXPECT_NEAR(a.lower_ratio, b.lower_ratio, 1e-12);
  EXPECT_NEAR(a.upper_ratios[0], b.upper_ratios[0], 1e-10);
  EXPECT_NEAR(a.norm, b.norm, 2e-3 * b.norm);
}

TEST(TestFns, PropertiesHoldForPowerCase) {
  const auto rep = wco::verify_test_fn(0.5, 1, 3, wco::WGrid{}, grid());
  EXPECT_TRUE(rep.passed()) << rep.to_json().dump(2);
  EXPECT_NEAR(rep.c_lower, std::pow(1.999, -1.5), 1e-6);
  EXPECT_EQ(rep.C_upper.size(), 2u);
  EXPECT_TRUE(std::isfinite(rep.C_norm));
}

TEST(TestFns, PropertiesHoldForLogCase) {
  const auto rep = wco::verify_test_fn(1.0, 1, 3, wco::WGrid{}, grid());
  EXPECT_TRUE(rep.passed()) << rep.to_json().dump(2);
  EXPECT_EQ(rep.kind, TestFnCase::BetaEqualsN);
}

TEST(TestFns, LocalDecayFailureIsReported) {
  // A single ring cannot show decay or stability, but two identical rings
  // break the strict decrease in (e).
  wco::WGrid wg;
  wg.radii = {0.9, 0.9};
  wg.angles = 4;
  const auto rep = wco::verify_test_fn(0.5, 1, 2, wg, wco::DiskGrid(8));
  EXPECT_FALSE(rep.local_decay);
  EXPECT_FALSE(rep.passed());
  EXPECT_FALSE(rep.failures.empty());
}

TEST(TestFns, ReportJson) {
  wco::WGrid wg;
  wg.radii = {0.5, 0.9};
  wg.angles = 4;
  const auto j = wco::verify_test_fn(0.0, 0, 1, wg, wco::DiskGrid(8)).to_json();
  EXPECT_EQ(j["case"], "beta_equals_N");
  EXPECT_TRUE(j.contains("C_upper"));
  EXPECT_TRUE(j["passed"].is_boolean());
}
