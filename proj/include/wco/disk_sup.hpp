#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wco/expr.hpp"

namespace wco {

/// Real-valued function on the disk.
using PointFunction = std::function<double(cplx)>;

struct GridPoint {
  cplx z;
  double r = 0.0;
  double theta = 0.0;
  int level = 0;
};

/**
 * Polar sampling of the unit disk: radial levels r_k = 1 - 2^{-k},
 * k = 0..levels, with m_k = max(angular_base, 2^{k+4}) equispaced angles on
 * level k. Points are stored level by level.
 */
class DiskGrid {
 public:
  explicit DiskGrid(int levels = 12, int angular_base = 64);

  int levels() const { return levels_; }
  int angular_base() const { return angular_base_; }
  double radius(int k) const;
  int angular_count(int k) const;

  std::size_t size() const { return points_.size(); }
  std::span<const GridPoint> points() const { return points_; }
  std::size_t level_begin(int k) const { return offsets_[k]; }
  std::size_t level_end(int k) const { return offsets_[k + 1]; }

 private:
  int levels_;
  int angular_base_;
  std::vector<GridPoint> points_;
  std::vector<std::size_t> offsets_;
};

/// `grid` with extra levels so that its last `margin` levels lie beyond
/// radius r. Functions peaked near r otherwise read as growing toward the
/// boundary.
DiskGrid deepened_grid(const DiskGrid& grid, double r, int margin = 4);

/// Grid estimate of a supremum, with the per-level curve used to detect
/// growth toward the boundary.
struct SupEstimate {
  double value = 0.0;       // refined maximum (meaningless when divergent)
  double grid_value = 0.0;  // plain maximum over grid points
  std::vector<double> per_level;
  bool divergent = false;
  double growth_exponent = 0.0;  // slope of log max vs log(1 - r), last 4 levels
  cplx argmax{};
};

/// Slope below which the per-level maxima count as growing without bound.
inline constexpr double kDivergenceSlope = -0.1;

struct SupOptions {
  int parallelism = 1;
  /// Polish the best grid points with coordinate-wise golden-section steps.
  bool refine = true;
  int refine_candidates = 4;
};

/// Least-squares slope of log(per_level) against log(1 - r_k) over the last
/// four levels; 0 when any of those maxima vanishes.
double growth_exponent(std::span<const double> per_level, const DiskGrid& grid);

/**
 * Sup of F over the grid. Evaluation errors are rethrown as EvalError with the
 * offending point appended to the message.
 */
SupEstimate sup_weighted(const PointFunction& F, const DiskGrid& grid, const SupOptions& opts = {});

/// Same, from precomputed grid samples. `refine_with` (may be empty) is used
/// only for the off-grid polishing step.
SupEstimate sup_sampled(std::span<const double> samples, const DiskGrid& grid, const PointFunction& refine_with,
                        const SupOptions& opts = {});

/// Samples of F on every grid point, with point-tagged errors.
std::vector<double> sample_grid(const PointFunction& F, const DiskGrid& grid, int parallelism = 1);

/// Restricted sets below this size are treated as sampling noise.
inline constexpr std::size_t kMinRestrictedPoints = 32;

struct LimsupCurve {
  std::vector<double> deltas;
  std::vector<double> sups;          // sup of F over {gate > 1 - delta}; 0 if empty
  std::vector<std::size_t> counts;   // size of each restricted set
  double estimate = 0.0;
  int estimate_index = -1;           // delta used for the estimate, -1 if none
  std::optional<std::string> note;

  bool nonincreasing() const;
};

/// delta_m = 2^{-m}, m = 1..10.
std::vector<double> default_deltas();

/**
 * Surrogate for limsup of F as gate(z) -> 1: the sup of F over grid points
 * with gate(z) > 1 - delta for each delta (strictly decreasing in (0,1)). The
 * estimate is taken at the smallest delta whose set has at least
 * kMinRestrictedPoints points.
 */
LimsupCurve limsup_restricted(const PointFunction& F, const PointFunction& gate, std::span<const double> deltas,
                              const DiskGrid& grid, int parallelism = 1);
LimsupCurve limsup_sampled(std::span<const double> F_samples, std::span<const double> gate_samples,
                           std::span<const double> deltas, const DiskGrid& grid);

/// Smallest non-negative integer strictly greater than alpha.
int derivative_order(double alpha);

struct LipNorm {
  double head = 0.0;  // sum_{j<J} |f^{(j)}(0)|
  SupEstimate tail;   // sup |f^{(J)}(z)| (1-|z|)^{J-alpha}
  double value() const;  // +inf when the tail diverges
};

/**
 * ||f||_{Lambda^alpha} with the smallest J > alpha:
 *   sum_{j<J} |f^{(j)}(0)| + sup_z |f^{(J)}(z)| (1-|z|)^{J-alpha}.
 */
LipNorm lip_norm_detail(const HoloExpr& f, double alpha, const DiskGrid& grid, const SupOptions& opts = {});
double lip_norm(const HoloExpr& f, double alpha, const DiskGrid& grid, const SupOptions& opts = {});

}  // namespace wco
