#include <gtest/gtest.h>

#include <cmath>
#include <functional>

#include "wco/gcoeff.hpp"

using wco::GCoefficientTable;
using wco::GMonomial;
using wco::GPolynomial;

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Leibniz + Faa di Bruno written out directly:
//   G_j[J] = sum_k C(J,k) g_{J-k} B_{k,j}(p_1, p_2, ...),
// with partial Bell coefficients k! / prod_i (m_i! (i!)^{m_i}) over
// sum_i m_i = j, sum_i i m_i = k.
GPolynomial bell_table_entry(int J, int j) {
  GPolynomial out;
  for (int k = j; k <= J; ++k) {
    std::vector<int> m(J, 0);
    std::function<void(int, int, int)> rec = [&](int i, int left_count, int left_weight) {
      if (i > J) {
        if (left_count == 0 && left_weight == 0) {
          double c = factorial(J) / (factorial(k) * factorial(J - k)) * factorial(k);
          for (int q = 1; q <= J; ++q) c /= factorial(m[q - 1]) * std::pow(factorial(q), m[q - 1]);
          GMonomial mono{J - k, m};
          out[mono] += static_cast<std::int64_t>(std::llround(c));
        }
        return;
      }
      for (int e = 0; e * i <= left_weight && e <= left_count; ++e) {
        m[i - 1] = e;
        rec(i + 1, left_count - e, left_weight - e * i);
      }
      m[i - 1] = 0;
    };
    if (j == 0) {
      if (k == 0) out[GMonomial{J, std::vector<int>(J, 0)}] += 1;
      continue;
    }
    rec(1, j, k);
  }
  return out;
}

}  // namespace

TEST(GTable, SecondOrderTable) {
  const auto t = GCoefficientTable::build(2);
  EXPECT_EQ(t.to_text(0), "G_0[J=2] = g2");
  EXPECT_EQ(t.to_text(1), "G_1[J=2] = 2 g1 p1 + g0 p2");
  EXPECT_EQ(t.to_text(2), "G_2[J=2] = g0 p1^2");
}

TEST(GTable, LowOrders) {
  EXPECT_EQ(GCoefficientTable::build(0).to_text(0), "G_0[J=0] = g0");
  const auto t1 = GCoefficientTable::build(1);
  EXPECT_EQ(t1.to_text(0), "G_0[J=1] = g1");
  EXPECT_EQ(t1.to_text(1), "G_1[J=1] = g0 p1");
}

TEST(GTable, MatchesBellPolynomialFormula) {
  for (int J = 0; J <= 9; ++J) {
    const auto t = GCoefficientTable::build(J);
    for (int j = 0; j <= J; ++j) {
      GPolynomial got;
      for (const auto& [mono, c] : t.entry(j)) {
        GMonomial m = mono;
        m.p_powers.resize(J, 0);
        got[m] += c;
      }
      EXPECT_EQ(got, bell_table_entry(J, j)) << "J=" << J << " j=" << j;
    }
  }
}

TEST(GTable, Homogeneity) {
  const auto t = GCoefficientTable::build(7);
  for (int j = 0; j <= 7; ++j) {
    for (const auto& [mono, c] : t.entry(j)) {
      EXPECT_EQ(mono.weight(), 7);
      EXPECT_EQ(mono.phi_factors(), j);
      EXPECT_GT(c, 0);
    }
  }
}

TEST(GTable, LargestOrderBuilds) {
  const auto t = GCoefficientTable::build(GCoefficientTable::kMaxOrder);
  EXPECT_EQ(t.order(), GCoefficientTable::kMaxOrder);
  EXPECT_THROW(GCoefficientTable::build(GCoefficientTable::kMaxOrder + 1), std::invalid_argument);
  EXPECT_THROW(GCoefficientTable::build(-1), std::invalid_argument);
}

TEST(GTable, EvaluateIdentityMap) {
  // g = 1, phi = z: only G_J = 1 survives.
  const auto t = GCoefficientTable::build(4);
  std::vector<wco::cplx> g = {1, 0, 0, 0, 0}, p = {0.3, 1, 0, 0, 0};
  const auto G = t.evaluate(g, p);
  for (int j = 0; j < 4; ++j) EXPECT_EQ(G[j], wco::cplx(0.0));
  EXPECT_EQ(G[4], wco::cplx(1.0));
}

TEST(GTable, EvalAtPoint) {
  // g = z, phi = z^2, J = 1 at z = 0.5: G_0 = g' = 1, G_1 = g phi' = 0.5.
  const auto& t = wco::cached_table(1);
  const auto z = wco::HoloExpr::z();
  const auto G = wco::eval_G(t, z, z * z, 0.5);
  EXPECT_NEAR(std::abs(G[0] - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(G[1] - 0.5), 0.0, 1e-15);
}

TEST(GTable, JsonShape) {
  const auto j = GCoefficientTable::build(2).to_json();
  EXPECT_EQ(j["J"], 2);
  ASSERT_EQ(j["entries"].size(), 3u);
  EXPECT_EQ(j["entries"][1]["text"], "G_1[J=2] = 2 g1 p1 + g0 p2");
  EXPECT_EQ(j["entries"][1]["terms"].size(), 2u);
}

TEST(GTable, CacheReturnsSameTable) {
  EXPECT_EQ(&wco::cached_table(3), &wco::cached_table(3));
  EXPECT_EQ(wco::cached_table(3).order(), 3);
}
