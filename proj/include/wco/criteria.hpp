#pragma once

#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wco/disk_sup.hpp"
#include "wco/expr.hpp"
#include "wco/weights.hpp"

namespace wco {

/// The weighted composition operator f -> g * (f o phi) from Lambda^beta
/// into Lambda^alpha.
struct OperatorSpec {
  HoloExpr g;
  HoloExpr phi;
  SpaceParam params;
};

/// Tolerance of the self-map check sup |phi| <= 1.
inline constexpr double kSelfMapSlack = 1e-9;

/**
 * Per-grid-point data shared by all checks: |phi(z)| and |G_j[g,phi,J](z)|.
 * The grid must outlive the samples. Sampling happens on first use and
 * rejects (ConfigError) maps with |phi| > 1 + kSelfMapSlack on the grid.
 */
class OperatorSamples {
 public:
  OperatorSamples(OperatorSpec op, const DiskGrid& grid, int parallelism = 1);

  const OperatorSpec& op() const { return op_; }
  const SpaceParam& params() const { return op_.params; }
  const DiskGrid& grid() const { return *grid_; }
  int parallelism() const { return parallelism_; }

  std::span<const double> phi_abs() const;
  std::span<const double> G_abs(int j) const;
  bool sampled() const { return sampled_; }

  /// Off-grid evaluation (used when polishing suprema).
  std::vector<cplx> G_at(cplx z) const;
  double phi_abs_at(cplx z) const;

  /// |G_j(z)| Omega_{j,beta}(|phi(z)|) (1-|z|)^{J-alpha}.
  double weighted(int j, cplx z) const;
  std::vector<double> weighted_samples(int j) const;

  /// |G_j(z)| |phi(z)|^n (1-|z|)^{J-alpha}, the Lambda^{alpha-J} density of G_j phi^n.
  double power_density(int j, int n, cplx z) const;

 private:
  OperatorSpec op_;
  const DiskGrid* grid_;
  int parallelism_;
  mutable std::once_flag once_;
  mutable bool sampled_ = false;
  mutable std::vector<double> phi_abs_;
  mutable std::vector<std::vector<double>> G_abs_;

  void ensure_sampled() const;
};

enum class Verdict { Bounded, Unbounded, Inconclusive };

std::string to_string(Verdict v);

/// n = 0..64, then quarter-octave geometric steps up to n_max (included).
std::vector<int> sample_indices(int n_max);

/// Plateau thresholds on tail_sup / head_sup.
inline constexpr double kPlateauRatio = 1.05;
inline constexpr double kMarginalRatio = 1.5;

/**
 * a_{j,n} = ||G_j phi^n||_{Lambda^{alpha-J}} / ||z^n||_{H^infty_{Omega_{j,beta}}}
 * over the sampled n. The head is n <= n_max^{3/4}, the tail the rest.
 */
struct DiscreteSequence {
  int j = 0;
  WeightBranch branch = WeightBranch::PowerGap;
  std::vector<int> n;
  std::vector<double> values;
  bool divergent = false;  // some numerator failed to converge
  double sup = 0.0;
  double head_sup = 0.0;
  double tail_sup = 0.0;
  double plateau_ratio = 1.0;
  Verdict verdict = Verdict::Bounded;
};

DiscreteSequence weighted_sequence(const OperatorSamples& samples, int j, std::span<const int> ns,
                                   const SupOptions& opts = {});

struct MembershipCheck {
  int j = 0;
  SupEstimate sup;  // sup |G_j| (1-|z|)^{J-alpha}
};

struct BoundednessReport {
  SpaceParam params;
  std::vector<SupEstimate> continuous;  // S_j, j = 0..J
  std::optional<Verdict> continuous_verdict;
  std::vector<MembershipCheck> membership;    // j < min(N, J+1)
  std::vector<DiscreteSequence> discrete;     // j = max(N,0)..J
  std::optional<Verdict> discrete_verdict;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<std::string> warnings;
};

/// S_j = sup_z |G_j(z)| Omega_{j,beta}(|phi(z)|) (1-|z|)^{J-alpha}, j = 0..J.
BoundednessReport continuous_check(const OperatorSamples& samples, const SupOptions& opts = {});

/// Membership conditions for j < N and the monomial sequences for j >= N.
BoundednessReport discrete_check(const OperatorSamples& samples, int n_max, const SupOptions& opts = {});

/// Both checks with the combined verdict: bounded (resp. unbounded) only when
/// both agree, inconclusive otherwise.
BoundednessReport check_boundedness(const OperatorSamples& samples, int n_max, const SupOptions& opts = {});

inline constexpr double kComparabilityCorridor = 50.0;

struct ComparabilityReport {
  struct Entry {
    int j = 0;
    double continuous = 0.0;
    double discrete = 0.0;
    std::optional<double> ratio;
    bool flagged = false;
    std::string note;
  };
  std::vector<Entry> entries;
  bool all_within() const;
};

/// S_j against sup_n a_{j,n} for j = max(N,0)..J; needs both parts of `report`.
ComparabilityReport crosscheck_criteria(const BoundednessReport& report);

}  // namespace wco
