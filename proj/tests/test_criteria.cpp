#include <gtest/gtest.h>

#include <cmath>

#include "wco/criteria.hpp"
#include "wco/errors.hpp"

using wco::cplx;
using wco::DiskGrid;
using wco::HoloExpr;
using wco::OperatorSamples;
using wco::SpaceParam;
using wco::Verdict;

namespace {

const DiskGrid& grid() {
  static const wco::DiskGrid g;
  return g;
}

const HoloExpr z = HoloExpr::z();
const HoloExpr one = HoloExpr::constant(1.0);

wco::OperatorSpec op(HoloExpr g, HoloExpr phi, double alpha, double beta) {
  return {std::move(g), std::move(phi), SpaceParam::make(alpha, beta)};
}

}  // namespace

TEST(SampleIndices, Shape) {
  const auto ns = wco::sample_indices(256);
  for (int n = 0; n <= 64; ++n) EXPECT_EQ(ns[n], n);
  EXPECT_EQ(ns.back(), 256);
  for (std::size_t i = 1; i < ns.size(); ++i) EXPECT_GT(ns[i], ns[i - 1]);
  EXPECT_LT(ns.size(), 80u);
  EXPECT_EQ(wco::sample_indices(16).back(), 16);
}

TEST(OperatorSamples, RejectsNonSelfMaps) {
  OperatorSamples s(op(one, HoloExpr::constant(1.5) * z, 0.5, 0.5), grid());
  EXPECT_FALSE(s.sampled());
  EXPECT_THROW(s.phi_abs(), wco::ConfigError);
}

TEST(Continuous, IdentityOperator) {
  OperatorSamples s(op(one, z, 0.5, 0.5), grid());
  const auto rep = wco::continuous_check(s);
  ASSERT_EQ(rep.continuous.size(), 2u);
  EXPECT_EQ(rep.continuous[0].value, 0.0);
  EXPECT_NEAR(rep.continuous[1].value, 1.0, 1e-3);
  EXPECT_EQ(rep.verdict, Verdict::Bounded);
}

TEST(Continuous, HalfMap) {
  OperatorSamples s(op(one, HoloExpr::constant(0.5) * z, 0.5, 0.5), grid());
  const auto rep = wco::continuous_check(s);
  // 0.5 (1-|z|)^{1/2} (1-|z|/2)^{-1/2} <= 1/2.
  EXPECT_LE(rep.continuous[1].value, 0.5 + 1e-12);
  EXPECT_NEAR(rep.continuous[1].value, 0.5, 1e-12);
  EXPECT_EQ(rep.verdict, Verdict::Bounded);
}

TEST(Continuous, UnboundedSymbol) {
  OperatorSamples s(op(one / (one - z), z, 0.5, 0.5), grid());
  const auto rep = wco::continuous_check(s);
  EXPECT_TRUE(rep.continuous[1].divergent);
  EXPECT_LE(rep.continuous[1].growth_exponent, -0.5);
  EXPECT_EQ(rep.verdict, Verdict::Unbounded);
}

TEST(Discrete, IdentitySequenceIsOne) {
  OperatorSamples s(op(one, z, 0.5, 0.5), grid());
  const auto rep = wco::discrete_check(s, 256);
  ASSERT_EQ(rep.discrete.size(), 1u);
  const auto& seq = rep.discrete[0];
  EXPECT_EQ(seq.j, 1);
  for (double v : seq.values) EXPECT_NEAR(v, 1.0, 1e-9);
  EXPECT_EQ(seq.verdict, Verdict::Bounded);
  // j < N: membership of G_0 = 0.
  ASSERT_EQ(rep.membership.size(), 1u);
  EXPECT_EQ(rep.membership[0].sup.value, 0.0);
}

TEST(Discrete, HalfMapDecaysGeometrically) {
  OperatorSamples s(op(one, HoloExpr::constant(0.5) * z, 0.5, 0.5), grid());
  const auto rep = wco::discrete_check(s, 256);
  const auto& seq = rep.discrete[0];
  for (std::size_t i = 0; i < seq.n.size(); ++i) {
    const int n = seq.n[i];
    // sup |z/2|^n (1-|z|)^{1/2} / 2 is exactly 2^{-n-1} times the denominator.
    const double exact = std::pow(0.5, n + 1);
    EXPECT_LE(seq.values[i], exact * (1.0 + 1e-9)) << "n=" << n;
    EXPECT_GE(seq.values[i], exact * (1.0 - 1e-3)) << "n=" << n;
  }
  EXPECT_LT(seq.values.back(), 1e-60);
  EXPECT_EQ(seq.verdict, Verdict::Bounded);
}

TEST(Discrete, ZeroTermIsGrowthNorm) {
  OperatorSamples s(op(one + z, z, 0.5, 0.5), grid());
  const auto rep = wco::discrete_check(s, 64);
  const auto& seq = rep.discrete[0];
  EXPECT_EQ(seq.n[0], 0);
  // G_1 = g phi' = 1 + z, so a_{1,0} = sup |1+z| (1-|z|)^{1/2} = sup (1+r)(1-r)^{1/2}.
  const double exact = (1.0 + 1.0 / 3.0) * std::sqrt(2.0 / 3.0);
  EXPECT_NEAR(seq.values[0], exact, 1e-6);
  EXPECT_THROW(wco::discrete_check(s, 8), std::invalid_argument);
}

TEST(Discrete, NoWeightedIndicesWhenNAboveJ) {
  OperatorSamples s(op(one, z, 0.5, 2.3), grid());
  const auto rep = wco::discrete_check(s, 64);
  EXPECT_TRUE(rep.discrete.empty());
  EXPECT_EQ(rep.membership.size(), 2u);
  EXPECT_EQ(rep.verdict, Verdict::Bounded);
}

TEST(Combined, VerdictsAgreeAndCrosscheck) {
  OperatorSamples s(op(one, z, 0.5, 0.5), grid());
  const auto rep = wco::check_boundedness(s, 256);
  EXPECT_EQ(*rep.continuous_verdict, Verdict::Bounded);
  EXPECT_EQ(*rep.discrete_verdict, Verdict::Bounded);
  EXPECT_EQ(rep.verdict, Verdict::Bounded);
  const auto cc = wco::crosscheck_criteria(rep);
  ASSERT_EQ(cc.entries.size(), 1u);
  ASSERT_TRUE(cc.entries[0].ratio.has_value());
  EXPECT_NEAR(*cc.entries[0].ratio, 1.0, 1e-9);
  EXPECT_TRUE(cc.all_within());
}

TEST(Combined, HalfMapRatiosInCorridor) {
  for (double beta : {-0.5, 0.0, 0.5, 1.0}) {
    OperatorSamples s(op(one, HoloExpr::constant(0.5) * z, beta, beta), grid());
    const auto rep = wco::check_boundedness(s, 256);
    EXPECT_EQ(rep.verdict, Verdict::Bounded) << beta;
    EXPECT_TRUE(wco::crosscheck_criteria(rep).all_within()) << beta;
  }
}

TEST(Combined, ZeroOverZeroSkipped) {
  // g = 0: every G_j vanishes.
  OperatorSamples s(op(HoloExpr::constant(0.0), z, 0.5, 0.5), grid());
  const auto rep = wco::check_boundedness(s, 64);
  const auto cc = wco::crosscheck_criteria(rep);
  ASSERT_EQ(cc.entries.size(), 1u);
  EXPECT_FALSE(cc.entries[0].ratio.has_value());
  EXPECT_EQ(cc.entries[0].note, "skipped: 0/0");
  EXPECT_FALSE(cc.entries[0].flagged);
}

TEST(Combined, ScalingInvariance) {
  for (cplx c : {cplx(3.0), cplx(0.0, -0.25)}) {
    OperatorSamples a(op(one, HoloExpr::constant(0.5) * (one + z), 0.0, 0.0), grid());
    OperatorSamples b(op(HoloExpr::constant(c), HoloExpr::constant(0.5) * (one + z), 0.0, 0.0), grid());
    const auto ra = wco::check_boundedness(a, 64);
    const auto rb = wco::check_boundedness(b, 64);
    EXPECT_EQ(ra.verdict, rb.verdict);
    for (std::size_t j = 0; j < ra.continuous.size(); ++j) {
      EXPECT_NEAR(rb.continuous[j].value, std::abs(c) * ra.continuous[j].value, 1e-9 * (1.0 + ra.continuous[j].value));
    }
  }
}
