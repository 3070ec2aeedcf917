#include "wco/essnorm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wco/errors.hpp"
#include "wco/testfns.hpp"

namespace wco {

namespace {

void refuse_unbounded(Verdict v) {
  if (v == Verdict::Unbounded) throw UnboundedOperatorError();
}

bool curves_nonincreasing(const EssNormReport& rep) {
  return std::all_of(rep.curves.begin(), rep.curves.end(), [](const LimsupCurve& c) { return c.nonincreasing(); });
}

}  // namespace

EssNormReport auto_compact_report(const SpaceParam& p) {
  EssNormReport rep;
  rep.params = p;
  rep.compact = true;
  rep.note = "N > J: compact, no computation needed";
  rep.discrete_estimate = 0.0;
  return rep;
}

EssNormReport continuous_essnorm(const OperatorSamples& samples, Verdict boundedness, const EssNormOptions& opts) {
  refuse_unbounded(boundedness);
  const SpaceParam& p = samples.params();
  if (p.auto_compact()) return auto_compact_report(p);

  EssNormReport rep;
  rep.params = p;
  if (boundedness == Verdict::Inconclusive) rep.warnings.push_back("boundedness inconclusive; estimates assume a bounded operator");

  const auto gate = samples.phi_abs();
  for (int j = p.weighted_lo(); j <= p.J; ++j) {
    const auto F = samples.weighted_samples(j);
    LimsupCurve curve = limsup_sampled(F, gate, opts.deltas, samples.grid());
    if (!curve.nonincreasing()) {
      rep.warnings.push_back("E_" + std::to_string(j) + "(delta) increases as delta shrinks (sampling noise)");
    }
    rep.js.push_back(j);
    rep.estimates.push_back(curve.estimate);
    rep.estimate_max = std::max(rep.estimate_max, curve.estimate);
    rep.estimate_sum += curve.estimate;
    if (curve.note && !rep.note) rep.note = curve.note;
    rep.curves.push_back(std::move(curve));
  }
  rep.compact = rep.estimate_max < opts.compact_tol && curves_nonincreasing(rep);
  return rep;
}

DiscreteTail discrete_tail(const DiscreteSequence& seq, double tail_fraction) {
  if (!(tail_fraction > 0.0 && tail_fraction <= 1.0)) throw std::invalid_argument("tail_fraction must lie in (0, 1]");
  DiscreteTail t;
  t.j = seq.j;
  t.branch = seq.branch;
  t.n = seq.n;
  t.values = seq.values;
  const int last = seq.n.empty() ? 0 : seq.n.back();
  t.tail_start = std::max(1, static_cast<int>(std::ceil((1.0 - tail_fraction) * last)));
  for (std::size_t i = 0; i < seq.n.size(); ++i) {
    if (seq.n[i] >= t.tail_start) t.estimate = std::max(t.estimate, seq.values[i]);
  }
  return t;
}

std::vector<DiscreteTail> discrete_essnorm(const OperatorSamples& samples, Verdict boundedness,
                                           const EssNormOptions& opts) {
  refuse_unbounded(boundedness);
  if (opts.n_max < 64) throw std::invalid_argument("discrete essential norm needs n_max >= 64");
  const SpaceParam& p = samples.params();
  std::vector<DiscreteTail> out;
  if (p.auto_compact()) return out;
  const auto ns = sample_indices(opts.n_max);
  for (int j = p.weighted_lo(); j <= p.J; ++j) {
    out.push_back(discrete_tail(weighted_sequence(samples, j, ns, opts.sup), opts.tail_fraction));
  }
  return out;
}

EssNormReport essential_norm(const OperatorSamples& samples, const BoundednessReport& bounded,
                             const EssNormOptions& opts) {
  EssNormReport rep = continuous_essnorm(samples, bounded.verdict, opts);
  if (samples.params().auto_compact()) return rep;
  if (opts.n_max < 64) throw std::invalid_argument("discrete essential norm needs n_max >= 64");

  const bool reusable = !bounded.discrete.empty() && std::all_of(bounded.discrete.begin(), bounded.discrete.end(),
                                                                  [&](const DiscreteSequence& s) {
                                                                    return !s.divergent && !s.n.empty() &&
                                                                           s.n.back() == opts.n_max;
                                                                  });
  if (reusable) {
    for (const auto& s : bounded.discrete) rep.discrete.push_back(discrete_tail(s, opts.tail_fraction));
  } else {
    rep.discrete = discrete_essnorm(samples, bounded.verdict, opts);
  }
  double d = 0.0;
  for (const auto& t : rep.discrete) d = std::max(d, t.estimate);
  rep.discrete_estimate = d;
  return rep;
}

double WitnessReport::best() const {
  double b = 0.0;
  for (const auto& s : series) {
    if (!s.running_max.empty()) b = std::max(b, s.running_max.back());
  }
  return b;
}

std::vector<cplx> radial_points(int count) {
  std::vector<cplx> pts;
  for (int n = 1; n <= count; ++n) pts.emplace_back(1.0 - std::exp2(-n), 0.0);
  return pts;
}

WitnessReport witness_lower_bound(const OperatorSpec& op, const std::vector<cplx>& boundary_points,
                                  const DiskGrid& grid, const SupOptions& opts) {
  if (boundary_points.empty()) throw std::invalid_argument("witness_lower_bound needs boundary points");
  std::vector<cplx> ws;
  std::vector<cplx> used;
  double prev = -1.0;
  for (cplx z : boundary_points) {
    const cplx w = op.phi.evaluate(z);
    const double r = std::abs(w);
    if (!(r > prev)) throw std::invalid_argument("|phi(z_n)| must increase along the witness points");
    prev = r;
    if (r <= kWitnessFloor) continue;
    if (!(r < 1.0)) throw std::invalid_argument("witness point mapped to the boundary");
    ws.push_back(w);
    used.push_back(z);
  }

  WitnessReport rep;
  const SpaceParam& p = op.params;
  if (p.auto_compact()) {
    rep.note = "N > J: no weighted indices";
    return rep;
  }
  if (ws.empty()) {
    rep.note = "|phi(z_n)| <= 1/2 for every point; boundary unreachable";
    return rep;
  }
  for (int j = p.weighted_lo(); j <= p.J; ++j) {
    WitnessSeries s;
    s.j = j;
    s.points = used;
    double run = 0.0;
    for (std::size_t i = 0; i < ws.size(); ++i) {
      const cplx w = ws[i];
      const HoloExpr f = make_test_fn({w, j, p.beta});
      const double fnorm = lip_norm(f, p.beta, test_fn_grid(grid, std::abs(w), j), opts);
      const double image = lip_norm(op.g * f.substitute(op.phi), p.alpha, test_fn_grid(grid, std::abs(used[i]), j), opts);
      const double v = image / fnorm;
      s.values.push_back(v);
      run = std::max(run, v);
      s.running_max.push_back(run);
    }
    rep.series.push_back(std::move(s));
  }
  return rep;
}

}  // namespace wco
