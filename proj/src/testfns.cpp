#include "wco/testfns.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace wco {

std::string to_string(TestFnCase c) {
  switch (c) {
    case TestFnCase::BetaBelowN: return "beta_below_N";
    case TestFnCase::BetaEqualsN: return "beta_equals_N";
    case TestFnCase::AboveN: return "above_N";
  }
  return "?";
}

TestFnCase TestFnSpec::kind() const {
  const int N = critical_index(beta);
  if (j > N) return TestFnCase::AboveN;
  return beta == static_cast<double>(N) ? TestFnCase::BetaEqualsN : TestFnCase::BetaBelowN;
}

void TestFnSpec::validate() const {
  if (!(std::abs(w) < 1.0)) throw std::invalid_argument("test function center must lie in the open disk");
  const int N = critical_index(beta);
  if (j < std::max(N, 0)) {
    throw std::invalid_argument("test function index j=" + std::to_string(j) + " below max(N, 0) = " +
                                std::to_string(std::max(N, 0)));
  }
}

HoloExpr make_test_fn(const TestFnSpec& spec) {
  spec.validate();
  const HoloExpr z = HoloExpr::z();
  const HoloExpr one = HoloExpr::constant(1.0);
  const HoloExpr kernel = one - HoloExpr::constant(std::conj(spec.w)) * z;  // 1 - z conj(w)
  const HoloExpr vanishing = pow(z - HoloExpr::constant(spec.w), spec.j);
  const double rw = std::abs(spec.w);

  if (spec.kind() == TestFnCase::BetaEqualsN) {
    const HoloExpr log_kernel = one - log(kernel);  // log(e / (1 - z conj(w)))
    const double scale = 1.0 / (1.0 - std::log1p(-rw));
    return HoloExpr::constant(scale) * pow(log_kernel, 2) * vanishing;
  }
  const double s = spec.j - spec.beta + 1.0;
  return HoloExpr::constant(1.0 - rw) * vanishing / pow(kernel, s);
}

std::vector<cplx> WGrid::points() const {
  std::vector<cplx> out;
  for (double r : radii) {
    for (int l = 0; l < angles; ++l) out.push_back(std::polar(r, 2.0 * std::numbers::pi * l / angles));
  }
  return out;
}

DiskGrid test_fn_grid(const DiskGrid& grid, double r, int j) { return deepened_grid(grid, r, 4 + (j + 1) / 2); }

TestFnMeasurement measure_test_fn(const TestFnSpec& spec, int J, const DiskGrid& grid, const SupOptions& opts) {
  TestFnMeasurement m = measure_at_center(spec, J);
  m.norm = lip_norm(make_test_fn(spec), spec.beta, test_fn_grid(grid, std::abs(spec.w), spec.j), opts);
  return m;
}

TestFnMeasurement measure_at_center(const TestFnSpec& spec, int J) {
  const HoloExpr f = make_test_fn(spec);
  const int top = std::max(J, spec.j);
  const ComplexJet jet = eval_jet(f, spec.w, top);
  const double rw = std::abs(spec.w);

  TestFnMeasurement m;
  m.w = spec.w;
  m.peak = jet.derivative(spec.j);
  const double scale = std::abs(m.peak);
  for (int k = 0; k < spec.j; ++k) m.zero_defect = std::max(m.zero_defect, std::abs(jet.derivative(k)) / scale);
  m.lower_ratio = m.peak.real() / omega(spec.j, spec.beta, rw);
  if (std::abs(m.peak.imag()) > 1e-8 * scale) m.lower_ratio = -std::abs(m.lower_ratio);
  for (int k = spec.j + 1; k <= J; ++k) {
    m.upper_ratios.push_back(std::abs(jet.derivative(k)) / omega(k, spec.beta, rw));
  }

  for (double r : {0.0, 0.125, 0.25, 0.375, 0.5}) {
    for (int l = 0; l < 32; ++l) {
      const cplx z = std::polar(r, 2.0 * std::numbers::pi * l / 32);
      m.local_max = std::max(m.local_max, std::abs(f.evaluate(z)));
      if (std::abs(z - spec.w) > std::abs(1.0 - z * std::conj(spec.w)) * (1.0 + 1e-12)) m.pseudo_hyperbolic_ok = false;
    }
  }
  return m;
}

namespace {

bool rotation_invariant(const DiskGrid& grid, int angles) {
  for (int k = 0; k <= grid.levels(); ++k) {
    if (grid.angular_count(k) % angles != 0) return false;
  }
  return true;
}

bool close_within(double a, double b, double rel) { return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b)); }

std::string w_text(cplx w) {
  std::ostringstream os;
  os.precision(6);
  os << "w = " << w.real() << (w.imag() < 0 ? " - " : " + ") << std::abs(w.imag()) << "i";
  return os.str();
}

}  // namespace

PropertyReport verify_test_fn(double beta, int j, int J, const WGrid& wgrid, const DiskGrid& grid,
                              const SupOptions& opts) {
  if (J < j) throw std::invalid_argument("verify_test_fn needs J >= j");
  PropertyReport rep;
  rep.beta = beta;
  rep.j = j;
  rep.J = J;
  rep.kind = TestFnSpec{0.0, j, beta}.kind();

  const std::size_t nrings = wgrid.radii.size();
  const int nup = J - j;
  std::vector<double> ring_lower(nrings, std::numeric_limits<double>::infinity());
  std::vector<std::vector<double>> ring_upper(nrings, std::vector<double>(nup, 0.0));
  std::vector<double> ring_norm(nrings, 0.0);
  rep.ring_local_max.assign(nrings, 0.0);
  rep.c_lower = std::numeric_limits<double>::infinity();
  rep.C_upper.assign(nup, 0.0);

  // f_{w e^{it}}(z) = e^{ijt} f_w(z e^{-it}), so when the sampling grid is
  // invariant under the w-grid rotations all norms on a ring coincide.
  for (std::size_t ri = 0; ri < nrings; ++ri) {
    const DiskGrid ring_grid = test_fn_grid(grid, wgrid.radii[ri], j);
    const bool symmetric = rotation_invariant(ring_grid, wgrid.angles);
    double ring_norm_value = 0.0;
    if (symmetric) ring_norm_value = lip_norm(make_test_fn({wgrid.radii[ri], j, beta}), beta, ring_grid, opts);
    for (int l = 0; l < wgrid.angles; ++l) {
      const cplx w = std::polar(wgrid.radii[ri], 2.0 * std::numbers::pi * l / wgrid.angles);
      TestFnMeasurement m = measure_at_center({w, j, beta}, J);
      m.norm = symmetric ? ring_norm_value : lip_norm(make_test_fn({w, j, beta}), beta, ring_grid, opts);

      if (!(m.zero_defect <= 1e-10)) {
        rep.vanishing = false;
        rep.failures.push_back("(a) nonzero lower derivative at " + w_text(w));
      }
      if (!(m.lower_ratio > 0.0)) {
        rep.lower_bound = false;
        rep.failures.push_back("(b) peak derivative not positive at " + w_text(w));
      }
      for (int u = 0; u < nup; ++u) {
        if (!std::isfinite(m.upper_ratios[u])) {
          rep.upper_bounds = false;
          rep.failures.push_back("(c) unbounded derivative ratio at " + w_text(w));
        }
        ring_upper[ri][u] = std::max(ring_upper[ri][u], m.upper_ratios[u]);
        rep.C_upper[u] = std::max(rep.C_upper[u], m.upper_ratios[u]);
      }
      if (!std::isfinite(m.norm)) {
        rep.uniform_norm = false;
        rep.failures.push_back("(d) divergent norm at " + w_text(w));
      }
      if (!m.pseudo_hyperbolic_ok) rep.failures.push_back("|z-w| <= |1 - z conj(w)| violated near " + w_text(w));

      ring_lower[ri] = std::min(ring_lower[ri], m.lower_ratio);
      ring_norm[ri] = std::max(ring_norm[ri], m.norm);
      rep.ring_local_max[ri] = std::max(rep.ring_local_max[ri], m.local_max);
      rep.c_lower = std::min(rep.c_lower, m.lower_ratio);
      rep.C_norm = std::max(rep.C_norm, m.norm);
    }
  }

  for (std::size_t ri = 1; ri < nrings; ++ri) {
    if (!(rep.ring_local_max[ri] < rep.ring_local_max[ri - 1])) {
      rep.local_decay = false;
      rep.failures.push_back("(e) local maximum did not decrease at ring r = " + std::to_string(wgrid.radii[ri]));
    }
  }

  if (nrings >= 2) {
    const std::size_t a = nrings - 2, b = nrings - 1;
    auto check = [&](double x, double y, const std::string& what) {
      if (!close_within(x, y, kRingStability)) {
        rep.stable = false;
        rep.failures.push_back("unstable " + what + " between outer rings: " + std::to_string(x) + " vs " +
                               std::to_string(y));
      }
    };
    check(ring_lower[a], ring_lower[b], "lower constant");
    for (int u = 0; u < nup; ++u) check(ring_upper[a][u], ring_upper[b][u], "upper constant m=" + std::to_string(j + 1 + u));
    check(ring_norm[a], ring_norm[b], "norm bound");
  }
  return rep;
}

nlohmann::json PropertyReport::to_json() const {
  return {{"beta", beta},
          {"j", j},
          {"J", J},
          {"case", to_string(kind)},
          {"vanishing", vanishing},
          {"lower_bound", lower_bound},
          {"upper_bounds", upper_bounds},
          {"uniform_norm", uniform_norm},
          {"local_decay", local_decay},
          {"stable", stable},
          {"c_lower", c_lower},
          {"C_upper", C_upper},
          {"C_norm", C_norm},
          {"ring_local_max", ring_local_max},
          {"failures", failures},
          {"passed", passed()}};
}

}  // namespace wco
