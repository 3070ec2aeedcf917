#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wco/criteria.hpp"
#include "wco/disk_sup.hpp"

namespace wco {

struct EssNormOptions {
  std::vector<double> deltas = default_deltas();
  int n_max = 256;
  /// Fraction of the sampled range [0, n_max] treated as the tail.
  double tail_fraction = 0.5;
  /// Estimates below this (with nonincreasing curves) count as compact.
  double compact_tol = 1e-3;
  SupOptions sup;
};

/// d_{j,n} over the sampled n and its tail maximum.
struct DiscreteTail {
  int j = 0;
  WeightBranch branch = WeightBranch::PowerGap;
  std::vector<int> n;
  std::vector<double> values;
  int tail_start = 0;  // first n counted in the tail
  double estimate = 0.0;
};

/**
 * Two-sided essential-norm estimate for j = max(N,0)..J.
 *
 * The continuous part holds the limsup curves E_j(delta) of
 * |G_j| Omega_{j,beta}(|phi|) (1-|z|)^{J-alpha} over {|phi| > 1-delta}; the
 * reported interval is [max_j E_j, sum_j E_j]. The discrete part holds the
 * tails of d_{j,n} = ||G_j phi^n|| / ||z^n|| and their max over j.
 */
struct EssNormReport {
  SpaceParam params;
  bool compact = false;
  std::optional<std::string> note;

  std::vector<int> js;
  std::vector<LimsupCurve> curves;
  std::vector<double> estimates;
  double estimate_max = 0.0;
  double estimate_sum = 0.0;

  std::vector<DiscreteTail> discrete;
  std::optional<double> discrete_estimate;

  std::vector<std::string> warnings;
};

/// The N > J report: compact, nothing sampled.
EssNormReport auto_compact_report(const SpaceParam& p);

/**
 * Continuous part. `boundedness` is the verdict the caller obtained (or
 * asserts); Verdict::Unbounded raises UnboundedOperatorError. Returns the
 * auto-compact report without touching the samples when N > J.
 */
EssNormReport continuous_essnorm(const OperatorSamples& samples, Verdict boundedness, const EssNormOptions& opts = {});

/// Discrete part, d_{j,n} for the n of sample_indices(n_max); needs n_max >= 64.
/// n = 0 never belongs to the tail.
std::vector<DiscreteTail> discrete_essnorm(const OperatorSamples& samples, Verdict boundedness,
                                           const EssNormOptions& opts = {});

/// Tail of an already computed sequence (n_max is its last sampled index).
DiscreteTail discrete_tail(const DiscreteSequence& seq, double tail_fraction);

/**
 * Both parts. Discrete sequences already present in `bounded` are reused
 * when they were sampled up to opts.n_max.
 */
EssNormReport essential_norm(const OperatorSamples& samples, const BoundednessReport& bounded,
                             const EssNormOptions& opts = {});

struct WitnessSeries {
  int j = 0;
  std::vector<cplx> points;   // z_n actually used
  std::vector<double> values;  // ||C f_{w,j}||_alpha / ||f_{w,j}||_beta with w = phi(z_n)
  std::vector<double> running_max;
};

struct WitnessReport {
  std::vector<WitnessSeries> series;
  std::optional<std::string> note;
  double best() const;
};

/// Points with |phi(z_n)| at or below this are skipped.
inline constexpr double kWitnessFloor = 0.5;

/**
 * Lower-bound certificate from peaking test functions: for each j and z_n,
 * f = f_{phi(z_n), j} is pushed through the operator and its Lambda^alpha
 * norm divided by its own Lambda^beta norm. |phi(z_n)| must be strictly
 * increasing (std::invalid_argument otherwise).
 */
WitnessReport witness_lower_bound(const OperatorSpec& op, const std::vector<cplx>& boundary_points,
                                  const DiskGrid& grid, const SupOptions& opts = {});

/// z_n = 1 - 2^{-n}, n = 1..count.
std::vector<cplx> radial_points(int count);

}  // namespace wco
