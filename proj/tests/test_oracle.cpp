#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "wco/oracle.hpp"

using wco::cplx;
using wco::HoloExpr;
namespace oracle = wco::oracle;

namespace {

const HoloExpr z = HoloExpr::z();
const HoloExpr one = HoloExpr::constant(1.0);

}  // namespace

TEST(FiniteDifferences, Polynomial) {
  const auto d = oracle::fd_derivatives(z * z * z, 0.2, 3);
  EXPECT_NEAR(std::abs(d[2] - 1.2), 0.0, 1e-10);
  EXPECT_NEAR(std::abs(d[3] - 6.0), 0.0, 1e-9);
}

TEST(FiniteDifferences, GeometricSeries) {
  const auto d = oracle::fd_derivatives(one / (one - z), 0.0, 4);
  EXPECT_NEAR(std::abs(d[3] - 6.0), 0.0, 1e-6 * 6.0);
  EXPECT_NEAR(std::abs(d[4] - 24.0), 0.0, 1e-6 * 24.0);
}

TEST(FiniteDifferences, RejectsBoundary) {
  EXPECT_THROW(oracle::fd_derivatives(z, cplx(1.0, 0.0), 2), std::domain_error);
}

TEST(DenseSup, KnownValues) {
  EXPECT_NEAR(oracle::dense_sup([](cplx p) { return std::sqrt(1.0 - std::abs(p)); }), 1.0, 1e-15);
  EXPECT_NEAR(oracle::dense_sup([](cplx p) { return std::abs(p) * (1.0 - std::abs(p)); }), 0.25, 1e-6);
  // Identity-operator density (1-|z|)^{1/2} (1-|z|)^{-1/2}.
  EXPECT_NEAR(oracle::dense_sup([](cplx p) { return std::sqrt(1.0 - std::abs(p)) / std::sqrt(1.0 - std::abs(p)); }),
              1.0, 1e-15);
}

TEST(DefiningIdentity, TrivialCase) {
  EXPECT_LT(oracle::defining_identity_check(one, z, wco::pow(z, 5), 3, 0.3), 1e-15);
}

TEST(DefiningIdentity, HandComputedCase) {
  // left = d/dz (z * (z^2)^2) = 5 z^4 = 0.3125 at z = 1/2.
  const auto jet = wco::eval_jet(z * wco::pow(z * z, 2), 0.5, 1);
  EXPECT_NEAR(jet.derivative(1).real(), 0.3125, 1e-15);
  EXPECT_LT(oracle::defining_identity_check(z, z * z, z * z, 1, 0.5), 1e-15);
}

TEST(DefiningIdentity, RandomPolynomials) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    std::vector<cplx> gc(5), pc(5);
    for (auto& c : gc) c = cplx(u(rng), u(rng));
    for (auto& c : pc) c = 0.2 * cplx(u(rng), u(rng));
    const cplx p(0.5 * u(rng), 0.5 * u(rng));
    worst = std::max(worst, oracle::defining_identity_check(HoloExpr::polynomial(gc), HoloExpr::polynomial(pc),
                                                            wco::pow(z, 8), 6, p));
  }
  EXPECT_LE(worst, 1e-10);
}
