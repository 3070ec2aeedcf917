#include <gtest/gtest.h>

#include <cmath>

#include "wco/jet.hpp"

using wco::ComplexJet;
using wco::cplx;

namespace {

// Generalized binomial coefficient s choose k.
double binom(double s, int k) {
  double c = 1.0;
  for (int i = 0; i < k; ++i) c *= (s - i) / (i + 1);
  return c;
}

void expect_near(cplx a, cplx b, double tol) {
  EXPECT_NEAR(a.real(), b.real(), tol);
  EXPECT_NEAR(a.imag(), b.imag(), tol);
}

}  // namespace

TEST(Jet, VariableAndConstant) {
  const cplx z0(0.3, -0.2);
  const auto x = ComplexJet::variable(z0, 5);
  EXPECT_EQ(x.order(), 5);
  EXPECT_EQ(x[0], z0);
  EXPECT_EQ(x[1], cplx(1.0));
  for (int k = 2; k <= 5; ++k) EXPECT_EQ(x[k], cplx(0.0));
  const auto c = ComplexJet::constant(z0, 3, 2.5);
  EXPECT_EQ(c.derivative(0), cplx(2.5));
  EXPECT_EQ(c.derivative(2), cplx(0.0));
}

TEST(Jet, CubeDerivatives) {
  const auto x = ComplexJet::variable(0.2, 4);
  const auto f = x * x * x;
  expect_near(f.derivative(0), 0.008, 1e-15);
  expect_near(f.derivative(1), 3 * 0.04, 1e-15);
  expect_near(f.derivative(2), 6 * 0.2, 1e-15);
  expect_near(f.derivative(3), 6.0, 1e-14);
  expect_near(f.derivative(4), 0.0, 1e-14);
  const auto g = wco::pow(x, 3);
  for (int k = 0; k <= 4; ++k) expect_near(g[k], f[k], 1e-15);
}

TEST(Jet, GeometricSeriesByDivision) {
  const auto x = ComplexJet::variable(0.0, 10);
  const auto one = ComplexJet::constant(0.0, 10, 1.0);
  const auto f = one / (one - x);
  for (int k = 0; k <= 10; ++k) expect_near(f[k], 1.0, 1e-15);
  expect_near(f.derivative(3), 6.0, 1e-13);
  const auto r = wco::reciprocal(one - x);
  for (int k = 0; k <= 10; ++k) expect_near(r[k], f[k], 1e-15);
}

TEST(Jet, LogOfOnePlusZ) {
  const auto x = ComplexJet::variable(0.0, 12);
  const auto one = ComplexJet::constant(0.0, 12, 1.0);
  const auto f = wco::log(one + x);
  expect_near(f[0], 0.0, 1e-15);
  for (int k = 1; k <= 12; ++k) expect_near(f[k], (k % 2 ? 1.0 : -1.0) / k, 1e-14);
}

TEST(Jet, RealPowerMatchesBinomialSeries) {
  const auto x = ComplexJet::variable(0.0, 10);
  const auto one = ComplexJet::constant(0.0, 10, 1.0);
  for (double s : {0.5, -1.5, 2.3}) {
    const auto f = wco::pow(one + x, s);
    for (int k = 0; k <= 10; ++k) expect_near(f[k], binom(s, k), 1e-13);
  }
}

TEST(Jet, RealPowerOffCenter) {
  // (1 - z)^{-1/2} at z0 = 0.5: d^k = (1/2)_k (1-z0)^{-1/2-k}.
  const cplx z0 = 0.5;
  const auto x = ComplexJet::variable(z0, 6);
  const auto f = wco::pow(ComplexJet::constant(z0, 6, 1.0) - x, -0.5);
  double rising = 1.0;
  for (int k = 0; k <= 6; ++k) {
    const double exact = rising * std::pow(0.5, -0.5 - k);
    EXPECT_NEAR(f.derivative(k).real(), exact, 1e-11 * exact);
    rising *= 0.5 + k;
  }
}

TEST(Jet, CompositionMatchesDirectJet) {
  // 1/(1-w) at w0 = z0^2 composed with z^2 equals 1/(1-z^2) at z0.
  const cplx z0(0.4, 0.3);
  const int order = 8;
  const auto x = ComplexJet::variable(z0, order);
  const auto phi = x * x;
  const auto w = ComplexJet::variable(phi[0], order);
  const auto outer = wco::reciprocal(ComplexJet::constant(phi[0], order, 1.0) - w);
  const auto composed = wco::jet_compose(outer, phi);
  const auto direct = wco::reciprocal(ComplexJet::constant(z0, order, 1.0) - phi);
  for (int k = 0; k <= order; ++k) expect_near(composed[k], direct[k], 1e-12 * std::abs(direct[k]) + 1e-14);
}

TEST(Jet, CompositionRejectsMismatchedCenters) {
  const auto inner = ComplexJet::variable(0.2, 3);
  const auto outer = ComplexJet::variable(0.5, 3);
  EXPECT_THROW(wco::jet_compose(outer, inner), std::invalid_argument);
}

TEST(Jet, DomainErrors) {
  const auto x = ComplexJet::variable(0.0, 3);
  EXPECT_THROW(ComplexJet::constant(0.0, 3, 1.0) / x, wco::JetDomainError);
  EXPECT_THROW(wco::log(x - ComplexJet::constant(0.0, 3, 0.5)), wco::JetDomainError);
  EXPECT_THROW(wco::pow(ComplexJet::constant(0.0, 3, -2.0), 0.5), wco::JetDomainError);
  EXPECT_THROW(ComplexJet(0.0, wco::kMaxJetOrder + 1), std::invalid_argument);
  EXPECT_THROW(ComplexJet(0.0, -1), std::invalid_argument);
}

TEST(Jet, MixedOrdersTruncateToTheSmaller) {
  const auto a = ComplexJet::variable(0.1, 6);
  const auto b = ComplexJet::variable(0.1, 3);
  EXPECT_EQ((a * b).order(), 3);
  EXPECT_EQ((a + b).order(), 3);
  EXPECT_EQ(a.truncated(2).order(), 2);
  EXPECT_EQ(a.coeffs().size(), 7u);
}
