#include "wco/weights.hpp"

#include <cmath>
#include <stdexcept>

#include "wco/optimize.hpp"

namespace wco {

int critical_index(double beta) { return static_cast<int>(std::ceil(beta)); }

SpaceParam SpaceParam::make(double alpha, double beta) {
  if (!std::isfinite(alpha) || !std::isfinite(beta)) throw std::invalid_argument("alpha and beta must be finite");
  return {alpha, beta, derivative_order(alpha), critical_index(beta)};
}

std::string to_string(WeightBranch b) {
  switch (b) {
    case WeightBranch::Unit: return "unit";
    case WeightBranch::PowerGap: return "power";
    case WeightBranch::LogBranch: return "log";
  }
  return "?";
}

WeightSpec WeightSpec::select(int j, double beta) {
  if (j < 0) throw std::invalid_argument("weight index must be non-negative");
  const int N = critical_index(beta);
  if (N > 0 && j <= N - 1) return {WeightBranch::Unit, 0.0};
  if (beta == static_cast<double>(N) && j == N) return {WeightBranch::LogBranch, 0.0};
  return {WeightBranch::PowerGap, beta - j};
}

double WeightSpec::operator()(double t) const {
  if (!(t >= 0.0 && t < 1.0)) throw std::domain_error("weight argument outside [0, 1)");
  switch (branch) {
    case WeightBranch::Unit: return 1.0;
    case WeightBranch::PowerGap: return std::pow(1.0 - t, exponent);
    case WeightBranch::LogBranch: return 1.0 - std::log1p(-t);
  }
  return 1.0;
}

double omega(int j, double beta, double t) { return WeightSpec::select(j, beta)(t); }

double power_gap_monomial_norm(int n, double gamma) {
  if (n == 0) return 1.0;
  const double nn = n;
  return std::exp(nn * std::log(nn) + gamma * std::log(gamma) - (nn + gamma) * std::log(nn + gamma));
}

double log_branch_monomial_norm(int n) {
  if (n == 0) return 1.0;
  // log of t^n / log(e/(1-t)); unimodal on (0, 1).
  auto objective = [n](double t) {
    if (t <= 0.0) return -HUGE_VAL;
    return n * std::log(t) - std::log(1.0 - std::log1p(-t));
  };
  const ScalarMax best = golden_section_maximize(objective, 0.0, 1.0 - 1e-16, 1e-12, 400);
  return std::exp(best.value);
}

double monomial_norm(int n, const WeightSpec& w) {
  if (n < 0) throw std::invalid_argument("monomial degree must be non-negative");
  switch (w.branch) {
    case WeightBranch::Unit: return 1.0;
    case WeightBranch::PowerGap: return power_gap_monomial_norm(n, -w.exponent);
    case WeightBranch::LogBranch: return log_branch_monomial_norm(n);
  }
  return 1.0;
}

SupEstimate growth_sup(const HoloExpr& h, double gamma, const DiskGrid& grid, const SupOptions& opts) {
  if (!(gamma > 0.0)) throw std::invalid_argument("growth exponent must be positive");
  return sup_weighted([&](cplx z) { return std::abs(h.evaluate(z)) * std::pow(1.0 - std::abs(z), gamma); }, grid, opts);
}

}  // namespace wco
