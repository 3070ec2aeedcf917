#pragma once

#include <string>

#include "wco/disk_sup.hpp"

namespace wco {

/// Space parameters of C : Lambda^beta -> Lambda^alpha and the two derived
/// integers: J = smallest integer > alpha, N = smallest integer >= beta.
struct SpaceParam {
  double alpha = 0.0;
  double beta = 0.0;
  int J = 0;
  int N = 0;

  static SpaceParam make(double alpha, double beta);

  /// First index carrying a genuine weight, max(N, 0).
  int weighted_lo() const { return N > 0 ? N : 0; }
  /// N > J: no weighted conditions, the operator is compact once bounded.
  bool auto_compact() const { return N > J; }
  bool integer_beta() const { return beta == static_cast<double>(N); }
};

/// Smallest integer >= beta.
int critical_index(double beta);

enum class WeightBranch { Unit, PowerGap, LogBranch };

std::string to_string(WeightBranch b);

/**
 * Omega_{j,beta}: the size of f^{(j)} for f in the unit ball of Lambda^beta.
 *
 *   Unit       j <= N-1 (only when N > 0)      1
 *   LogBranch  beta = N and j = N              log(e/(1-t))
 *   PowerGap   otherwise (j >= N)              (1-t)^{beta-j}, exponent < 0
 */
struct WeightSpec {
  WeightBranch branch = WeightBranch::Unit;
  double exponent = 0.0;  // beta - j for PowerGap

  static WeightSpec select(int j, double beta);

  /// Throws std::domain_error unless 0 <= t < 1.
  double operator()(double t) const;
};

double omega(int j, double beta, double t);

/// ||z^n|| in H^infty_omega, i.e. sup_{0<=t<1} t^n / omega(t).
double monomial_norm(int n, const WeightSpec& w);

/// Closed form for PowerGap with gap gamma = j - beta > 0:
/// n^n gamma^gamma / (n+gamma)^{n+gamma}, and 1 for n = 0.
double power_gap_monomial_norm(int n, double gamma);

/// Golden-section maximization of t^n / log(e/(1-t)).
double log_branch_monomial_norm(int n);

/// sup_z |h(z)| (1-|z|)^gamma, the Lambda^{-gamma} growth norm of h.
SupEstimate growth_sup(const HoloExpr& h, double gamma, const DiskGrid& grid, const SupOptions& opts = {});

}  // namespace wco
