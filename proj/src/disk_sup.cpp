#include "wco/disk_sup.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "wco/optimize.hpp"
#include "wco/parallel.hpp"

namespace wco {

namespace {

std::string point_text(cplx z) {
  std::ostringstream os;
  os.precision(17);
  os << "z = " << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

EvalError at_point(const EvalError& e, cplx z) {
  return EvalError(e.kind(), e.subexpression(), std::string(e.what()) + " at " + point_text(z));
}

double checked(double v) {
  if (std::isnan(v)) throw EvalError(EvalError::Kind::Other, "", "NaN value");
  return v;
}

}  // namespace

DiskGrid::DiskGrid(int levels, int angular_base) : levels_(levels), angular_base_(angular_base) {
  if (levels < 1 || levels > 24) throw std::invalid_argument("DiskGrid levels must be in [1, 24]");
  if (angular_base < 1) throw std::invalid_argument("DiskGrid angular base must be positive");
  offsets_.push_back(0);
  for (int k = 0; k <= levels_; ++k) {
    const double r = radius(k);
    const int m = angular_count(k);
    for (int l = 0; l < m; ++l) {
      const double theta = 2.0 * std::numbers::pi * l / m;
      points_.push_back({std::polar(r, theta), r, theta, k});
    }
    offsets_.push_back(points_.size());
  }
}

DiskGrid deepened_grid(const DiskGrid& grid, double r, int margin) {
  if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("deepened_grid needs 0 <= r < 1");
  if (margin < 0) throw std::invalid_argument("deepened_grid needs a non-negative margin");
  const int reach = static_cast<int>(std::ceil(-std::log2(1.0 - r))) + margin;
  const int levels = std::min(24, std::max(grid.levels(), reach));
  if (levels == grid.levels()) return grid;
  return DiskGrid(levels, grid.angular_base());
}

double DiskGrid::radius(int k) const { return 1.0 - std::ldexp(1.0, -k); }

int DiskGrid::angular_count(int k) const { return std::max(angular_base_, 1 << (k + 4)); }

double growth_exponent(std::span<const double> per_level, const DiskGrid& grid) {
  const int K = grid.levels();
  const int first = std::max(0, K - 3);
  std::vector<double> xs, ys;
  for (int k = first; k <= K; ++k) {
    const double m = per_level[k];
    if (!(m > 0.0)) return 0.0;
    if (std::isinf(m)) return -std::numeric_limits<double>::infinity();
    xs.push_back(std::log1p(-grid.radius(k)));
    ys.push_back(std::log(m));
  }
  if (xs.size() < 2) return 0.0;
  const double n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return sxy / sxx;
}

std::vector<double> sample_grid(const PointFunction& F, const DiskGrid& grid, int parallelism) {
  std::vector<double> samples(grid.size());
  const auto pts = grid.points();
  parallel_for(grid.size(), parallelism, [&](std::size_t i) {
    try {
      samples[i] = checked(F(pts[i].z));
    } catch (const EvalError& e) {
      throw at_point(e, pts[i].z);
    }
  });
  return samples;
}

SupEstimate sup_sampled(std::span<const double> samples, const DiskGrid& grid, const PointFunction& refine_with,
                        const SupOptions& opts) {
  if (samples.size() != grid.size()) throw std::invalid_argument("sample count does not match grid size");
  const auto pts = grid.points();
  SupEstimate est;
  est.per_level.assign(grid.levels() + 1, 0.0);
  std::size_t best = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    double& lvl = est.per_level[pts[i].level];
    lvl = std::max(lvl, samples[i]);
    if (samples[i] > samples[best]) best = i;
  }
  est.grid_value = samples.empty() ? 0.0 : samples[best];
  est.value = est.grid_value;
  est.argmax = pts[best].z;
  est.growth_exponent = growth_exponent(est.per_level, grid);
  est.divergent = !(est.growth_exponent >= kDivergenceSlope) || std::isinf(est.grid_value);

  if (!opts.refine || !refine_with || est.divergent || est.grid_value <= 0.0) return est;

  // Best grid points, ties broken by index so the result is order independent.
  std::vector<std::size_t> order(samples.size());
  std::iota(order.begin(), order.end(), 0);
  const std::size_t ncand = std::min<std::size_t>(std::max(opts.refine_candidates, 1), order.size());
  std::partial_sort(order.begin(), order.begin() + ncand, order.end(), [&](std::size_t a, std::size_t b) {
    return samples[a] != samples[b] ? samples[a] > samples[b] : a < b;
  });

  const int K = grid.levels();
  for (std::size_t c = 0; c < ncand; ++c) {
    const GridPoint& p = pts[order[c]];
    const double r_lo = p.level > 0 ? grid.radius(p.level - 1) : 0.0;
    const double r_hi = grid.radius(std::min(p.level + 1, K));
    const double dth = 2.0 * std::numbers::pi / grid.angular_count(p.level);
    double r = p.r, th = p.theta, val = samples[order[c]];
    auto eval = [&](double rr, double tt) {
      const cplx z = std::polar(rr, tt);
      try {
        return checked(refine_with(z));
      } catch (const EvalError& e) {
        throw at_point(e, z);
      }
    };
    for (int pass = 0; pass < 3; ++pass) {
      const ScalarMax radial =
          golden_section_maximize([&](double rr) { return eval(rr, th); }, r_lo, r_hi, 1e-10 * (r_hi - r_lo), 80);
      if (radial.value > val) {
        val = radial.value;
        r = radial.arg;
      }
      if (r == 0.0) break;
      const ScalarMax angular =
          golden_section_maximize([&](double tt) { return eval(r, tt); }, th - dth, th + dth, 1e-10 * dth, 80);
      if (angular.value > val) {
        val = angular.value;
        th = angular.arg;
      }
    }
    if (val > est.value) {
      est.value = val;
      est.argmax = std::polar(r, th);
    }
  }
  return est;
}

SupEstimate sup_weighted(const PointFunction& F, const DiskGrid& grid, const SupOptions& opts) {
  const auto samples = sample_grid(F, grid, opts.parallelism);
  return sup_sampled(samples, grid, F, opts);
}

bool LimsupCurve::nonincreasing() const {
  for (std::size_t i = 1; i < sups.size(); ++i) {
    if (sups[i] > sups[i - 1] * (1.0 + 1e-12) + 1e-300) return false;
  }
  return true;
}

std::vector<double> default_deltas() {
  std::vector<double> d;
  for (int m = 1; m <= 10; ++m) d.push_back(std::ldexp(1.0, -m));
  return d;
}

LimsupCurve limsup_sampled(std::span<const double> F_samples, std::span<const double> gate_samples,
                           std::span<const double> deltas, const DiskGrid& grid) {
  if (F_samples.size() != grid.size() || gate_samples.size() != grid.size()) {
    throw std::invalid_argument("sample count does not match grid size");
  }
  for (std::size_t m = 0; m < deltas.size(); ++m) {
    if (!(deltas[m] > 0.0 && deltas[m] < 1.0) || (m > 0 && !(deltas[m] < deltas[m - 1]))) {
      throw std::invalid_argument("deltas must be strictly decreasing in (0, 1)");
    }
  }
  LimsupCurve curve;
  curve.deltas.assign(deltas.begin(), deltas.end());
  curve.sups.assign(deltas.size(), 0.0);
  curve.counts.assign(deltas.size(), 0);
  for (std::size_t i = 0; i < F_samples.size(); ++i) {
    for (std::size_t m = 0; m < deltas.size(); ++m) {
      if (!(gate_samples[i] > 1.0 - deltas[m])) break;  // sets shrink as m grows
      ++curve.counts[m];
      curve.sups[m] = std::max(curve.sups[m], F_samples[i]);
    }
  }
  for (std::size_t m = deltas.size(); m-- > 0;) {
    if (curve.counts[m] >= kMinRestrictedPoints) {
      curve.estimate_index = static_cast<int>(m);
      curve.estimate = curve.sups[m];
      break;
    }
  }
  if (curve.estimate_index < 0) {
    const bool any = std::any_of(curve.counts.begin(), curve.counts.end(), [](std::size_t c) { return c > 0; });
    curve.note = any ? "restricted sets too small for an estimate" : "map stays interior";
  }
  return curve;
}

LimsupCurve limsup_restricted(const PointFunction& F, const PointFunction& gate, std::span<const double> deltas,
                              const DiskGrid& grid, int parallelism) {
  const auto fs = sample_grid(F, grid, parallelism);
  const auto gs = sample_grid(gate, grid, parallelism);
  return limsup_sampled(fs, gs, deltas, grid);
}

int derivative_order(double alpha) { return std::max(0, static_cast<int>(std::floor(alpha)) + 1); }

double LipNorm::value() const {
  return tail.divergent ? std::numeric_limits<double>::infinity() : head + tail.value;
}

LipNorm lip_norm_detail(const HoloExpr& f, double alpha, const DiskGrid& grid, const SupOptions& opts) {
  const int J = derivative_order(alpha);
  LipNorm out;
  if (J > 0) {
    const ComplexJet at0 = eval_jet(f, 0.0, J - 1);
    for (int j = 0; j < J; ++j) out.head += std::abs(at0.derivative(j));
  }
  const double gamma = J - alpha;
  out.tail = sup_weighted(
      [&](cplx z) {
        const double r = std::abs(z);
        return std::abs(eval_jet(f, z, J).derivative(J)) * std::pow(1.0 - r, gamma);
      },
      grid, opts);
  return out;
}

double lip_norm(const HoloExpr& f, double alpha, const DiskGrid& grid, const SupOptions& opts) {
  return lip_norm_detail(f, alpha, grid, opts).value();
}

}  // namespace wco
