#include "wco/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wco/errors.hpp"
#include "wco/gcoeff.hpp"
#include "wco/parallel.hpp"

namespace wco {

namespace {

constexpr double kNegligible = 1e-300;

double weight_arg(double t) { return t < 1.0 ? t : std::nextafter(1.0, 0.0); }

}  // namespace

OperatorSamples::OperatorSamples(OperatorSpec op, const DiskGrid& grid, int parallelism)
    : op_(std::move(op)), grid_(&grid), parallelism_(parallelism) {}

void OperatorSamples::ensure_sampled() const {
  std::call_once(once_, [this] {
    const int J = op_.params.J;
    const auto& table = cached_table(J);
    const auto pts = grid_->points();
    phi_abs_.resize(pts.size());
    G_abs_.assign(J + 1, std::vector<double>(pts.size()));

    parallel_for(pts.size(), parallelism_, [&](std::size_t i) {
      const ComplexJet gj = eval_jet(op_.g, pts[i].z, J);
      const ComplexJet pj = eval_jet(op_.phi, pts[i].z, J);
      std::vector<cplx> gd(J + 1), pd(J + 1);
      for (int k = 0; k <= J; ++k) {
        gd[k] = gj.derivative(k);
        pd[k] = pj.derivative(k);
      }
      const auto G = table.evaluate(gd, pd);
      for (int j = 0; j <= J; ++j) G_abs_[j][i] = std::abs(G[j]);
      phi_abs_[i] = std::abs(pd[0]);
    });

    const auto worst = std::max_element(phi_abs_.begin(), phi_abs_.end());
    if (worst != phi_abs_.end() && *worst > 1.0 + kSelfMapSlack) {
      throw ConfigError("phi is not a self-map of the disk: |phi(z)| = " + std::to_string(*worst) + " on the grid");
    }
    sampled_ = true;
  });
}

std::span<const double> OperatorSamples::phi_abs() const {
  ensure_sampled();
  return phi_abs_;
}

std::span<const double> OperatorSamples::G_abs(int j) const {
  ensure_sampled();
  return G_abs_.at(j);
}

std::vector<cplx> OperatorSamples::G_at(cplx z) const {
  return eval_G(cached_table(op_.params.J), op_.g, op_.phi, z);
}

double OperatorSamples::phi_abs_at(cplx z) const { return std::abs(op_.phi.evaluate(z)); }

double OperatorSamples::weighted(int j, cplx z) const {
  const auto& p = op_.params;
  const double G = std::abs(G_at(z)[j]);
  if (G == 0.0) return 0.0;
  return G * omega(j, p.beta, weight_arg(phi_abs_at(z))) * std::pow(1.0 - std::abs(z), p.J - p.alpha);
}

std::vector<double> OperatorSamples::weighted_samples(int j) const {
  const auto& p = op_.params;
  const WeightSpec w = WeightSpec::select(j, p.beta);
  const double gamma = p.J - p.alpha;
  const auto pts = grid_->points();
  ensure_sampled();
  std::vector<double> out(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double G = G_abs_[j][i];
    out[i] = G == 0.0 ? 0.0 : G * w(weight_arg(phi_abs_[i])) * std::pow(1.0 - pts[i].r, gamma);
  }
  return out;
}

double OperatorSamples::power_density(int j, int n, cplx z) const {
  const auto& p = op_.params;
  const double G = std::abs(G_at(z)[j]);
  const double phin = n == 0 ? 1.0 : std::pow(phi_abs_at(z), n);
  return G * phin * std::pow(1.0 - std::abs(z), p.J - p.alpha);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Bounded: return "bounded";
    case Verdict::Unbounded: return "unbounded";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::vector<int> sample_indices(int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
  std::vector<int> ns;
  for (int n = 0; n <= std::min(n_max, 64); ++n) ns.push_back(n);
  for (int i = 1;; ++i) {
    const int n = static_cast<int>(std::lround(64.0 * std::exp2(i / 4.0)));
    if (n >= n_max) break;
    if (n > ns.back()) ns.push_back(n);
  }
  if (ns.back() != n_max) ns.push_back(n_max);
  return ns;
}

DiscreteSequence weighted_sequence(const OperatorSamples& samples, int j, std::span<const int> ns,
                                   const SupOptions& opts) {
  const auto& p = samples.params();
  const auto& grid = samples.grid();
  const auto pts = grid.points();
  const WeightSpec weight = WeightSpec::select(j, p.beta);
  const double gamma = p.J - p.alpha;

  DiscreteSequence seq;
  seq.j = j;
  seq.branch = weight.branch;

  const auto Gj = samples.G_abs(j);
  const auto phi = samples.phi_abs();
  std::vector<double> base(pts.size()), log_phi(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    base[i] = Gj[i] * std::pow(1.0 - pts[i].r, gamma);
    log_phi[i] = std::log(phi[i]);
  }

  std::vector<double> dens(pts.size());
  for (int n : ns) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
      dens[i] = (n == 0 || base[i] == 0.0) ? base[i] : base[i] * std::exp(n * log_phi[i]);
    }
    const SupEstimate num =
        sup_sampled(dens, grid, [&samples, j, n](cplx z) { return samples.power_density(j, n, z); }, opts);
    seq.n.push_back(n);
    if (num.divergent) {
      seq.divergent = true;
      seq.values.push_back(std::numeric_limits<double>::infinity());
      break;
    }
    seq.values.push_back(num.value / monomial_norm(n, weight));
  }

  if (seq.divergent) {
    seq.sup = seq.head_sup = seq.tail_sup = seq.plateau_ratio = std::numeric_limits<double>::infinity();
    seq.verdict = Verdict::Unbounded;
    return seq;
  }

  const double split = std::pow(static_cast<double>(ns.empty() ? 0 : ns.back()), 0.75);
  for (std::size_t i = 0; i < seq.n.size(); ++i) {
    double& slot = seq.n[i] <= split ? seq.head_sup : seq.tail_sup;
    slot = std::max(slot, seq.values[i]);
  }
  seq.sup = std::max(seq.head_sup, seq.tail_sup);
  if (seq.tail_sup <= kPlateauRatio * seq.head_sup + kNegligible) {
    seq.plateau_ratio = seq.head_sup > 0.0 ? seq.tail_sup / seq.head_sup : 1.0;
    seq.verdict = Verdict::Bounded;
  } else {
    seq.plateau_ratio = seq.head_sup > 0.0 ? seq.tail_sup / seq.head_sup : std::numeric_limits<double>::infinity();
    seq.verdict = seq.plateau_ratio <= kMarginalRatio ? Verdict::Inconclusive : Verdict::Unbounded;
  }
  return seq;
}

BoundednessReport continuous_check(const OperatorSamples& samples, const SupOptions& opts) {
  const auto& p = samples.params();
  BoundednessReport rep;
  rep.params = p;
  bool divergent = false;
  for (int j = 0; j <= p.J; ++j) {
    const auto dens = samples.weighted_samples(j);
    rep.continuous.push_back(
        sup_sampled(dens, samples.grid(), [&samples, j](cplx z) { return samples.weighted(j, z); }, opts));
    divergent = divergent || rep.continuous.back().divergent;
  }
  rep.continuous_verdict = divergent ? Verdict::Unbounded : Verdict::Bounded;
  rep.verdict = *rep.continuous_verdict;
  return rep;
}

BoundednessReport discrete_check(const OperatorSamples& samples, int n_max, const SupOptions& opts) {
  if (n_max < 16) throw std::invalid_argument("discrete check needs n_max >= 16");
  const auto& p = samples.params();
  BoundednessReport rep;
  rep.params = p;

  bool unbounded = false, inconclusive = false;
  for (int j = 0; j < std::min(p.N, p.J + 1); ++j) {
    // G_j in Lambda^{alpha-J}: sup |G_j| (1-|z|)^{J-alpha} finite.
    MembershipCheck m{j, {}};
    std::vector<double> dens(samples.grid().size());
    const auto pts = samples.grid().points();
    const auto Gj = samples.G_abs(j);
    for (std::size_t i = 0; i < pts.size(); ++i) dens[i] = Gj[i] * std::pow(1.0 - pts[i].r, p.J - p.alpha);
    m.sup = sup_sampled(dens, samples.grid(), [&samples, j](cplx z) { return samples.power_density(j, 0, z); }, opts);
    unbounded = unbounded || m.sup.divergent;
    rep.membership.push_back(std::move(m));
  }

  const auto ns = sample_indices(n_max);
  for (int j = p.weighted_lo(); j <= p.J; ++j) {
    rep.discrete.push_back(weighted_sequence(samples, j, ns, opts));
    unbounded = unbounded || rep.discrete.back().verdict == Verdict::Unbounded;
    inconclusive = inconclusive || rep.discrete.back().verdict == Verdict::Inconclusive;
  }
  rep.discrete_verdict = unbounded ? Verdict::Unbounded : inconclusive ? Verdict::Inconclusive : Verdict::Bounded;
  rep.verdict = *rep.discrete_verdict;
  return rep;
}

BoundednessReport check_boundedness(const OperatorSamples& samples, int n_max, const SupOptions& opts) {
  BoundednessReport rep = continuous_check(samples, opts);
  BoundednessReport disc = discrete_check(samples, n_max, opts);
  rep.membership = std::move(disc.membership);
  rep.discrete = std::move(disc.discrete);
  rep.discrete_verdict = disc.discrete_verdict;

  const Verdict c = *rep.continuous_verdict, d = *rep.discrete_verdict;
  if (c == d && c != Verdict::Inconclusive) {
    rep.verdict = c;
  } else {
    rep.verdict = Verdict::Inconclusive;
    rep.warnings.push_back("continuous criterion says " + to_string(c) + ", discrete criterion says " + to_string(d));
  }
  return rep;
}

bool ComparabilityReport::all_within() const {
  return std::none_of(entries.begin(), entries.end(), [](const Entry& e) { return e.flagged; });
}

ComparabilityReport crosscheck_criteria(const BoundednessReport& report) {
  ComparabilityReport out;
  for (const auto& seq : report.discrete) {
    ComparabilityReport::Entry e;
    e.j = seq.j;
    const SupEstimate& s = report.continuous.at(seq.j);
    e.continuous = s.divergent ? std::numeric_limits<double>::infinity() : s.value;
    e.discrete = seq.sup;
    if (s.divergent || seq.divergent || seq.verdict == Verdict::Unbounded) {
      e.note = "skipped: unbounded side";
    } else if (e.continuous <= kNegligible && e.discrete <= kNegligible) {
      e.note = "skipped: 0/0";
    } else if (e.continuous <= kNegligible || e.discrete <= kNegligible) {
      e.flagged = true;
      e.note = "one side vanishes";
    } else {
      e.ratio = e.continuous / e.discrete;
      e.flagged = *e.ratio < 1.0 / kComparabilityCorridor || *e.ratio > kComparabilityCorridor;
      if (e.flagged) e.note = "ratio outside comparability corridor";
    }
    out.entries.push_back(std::move(e));
  }
  return out;
}

}  // namespace wco
