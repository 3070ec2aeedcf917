#include "wco/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wco/gcoeff.hpp"

namespace wco::oracle {

std::vector<cplx> fd_derivatives(const HoloExpr& f, cplx z, int k_max, double rho, int nodes) {
  if (k_max < 0) throw std::invalid_argument("k_max must be non-negative");
  if (rho <= 0.0) rho = std::min(0.5, 0.5 * (1.0 - std::abs(z)));
  if (!(rho > 1e-8)) throw std::domain_error("fd_derivatives: point too close to the boundary");
  if (nodes <= k_max) throw std::invalid_argument("need more nodes than derivatives");

  std::vector<cplx> values(nodes);
  for (int m = 0; m < nodes; ++m) values[m] = f.evaluate(z + std::polar(rho, 2.0 * std::numbers::pi * m / nodes));

  std::vector<cplx> out(k_max + 1);
  double fact = 1.0;
  for (int k = 0; k <= k_max; ++k) {
    if (k > 0) fact *= k;
    cplx s = 0.0;
    for (int m = 0; m < nodes; ++m) s += values[m] * std::polar(1.0, -2.0 * std::numbers::pi * k * m / nodes);
    out[k] = s * fact / (nodes * std::pow(rho, k));
  }
  return out;
}

double dense_sup(const PointFunction& F, std::size_t samples) {
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  double best = F(cplx(0.0, 0.0));
  for (std::size_t i = 0; i < samples; ++i) {
    const double r = std::sqrt((i + 0.5) / samples);
    best = std::max(best, F(std::polar(r, golden * static_cast<double>(i))));
  }
  return best;
}

double dense_max_1d(const std::function<double(double)>& h, double lo, double hi, std::size_t samples) {
  if (samples < 2) throw std::invalid_argument("dense_max_1d needs at least two samples");
  double best = h(lo);
  for (std::size_t i = 1; i < samples; ++i) best = std::max(best, h(lo + (hi - lo) * i / (samples - 1)));
  return best;
}

double defining_identity_check(const HoloExpr& g, const HoloExpr& phi, const HoloExpr& f, int J, cplx z) {
  const ComplexJet pj = eval_jet(phi, z, J);
  const ComplexJet fj = eval_jet(f, pj[0], J);
  const cplx lhs = (eval_jet(g, z, J) * jet_compose(fj, pj)).derivative(J);

  const auto G = eval_G(cached_table(J), g, phi, z);
  cplx rhs = 0.0;
  double scale = 0.0;
  for (int j = 0; j <= J; ++j) {
    const cplx term = G[j] * fj.derivative(j);
    rhs += term;
    scale += std::abs(term);
  }
  scale = std::max({scale, std::abs(lhs), 1e-300});
  return std::abs(lhs - rhs) / scale;
}

}  // namespace wco::oracle
