#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "wco/disk_sup.hpp"
#include "wco/weights.hpp"

namespace wco {

enum class TestFnCase { BetaBelowN, BetaEqualsN, AboveN };

std::string to_string(TestFnCase c);

/// Peaking function at w for derivative index j (N <= j, j >= 0) in
/// Lambda^beta.
struct TestFnSpec {
  cplx w;
  int j = 0;
  double beta = 0.0;

  TestFnCase kind() const;
  /// Throws std::invalid_argument unless |w| < 1 and max(N, 0) <= j.
  void validate() const;
};

/**
 * Unnormalized test function, holomorphic in z with w baked in:
 *
 *   (1-|w|) (z-w)^j / (1 - z conj(w))^{j-beta+1}           j > N or beta < N
 *   log(e/(1 - z conj(w)))^2 (z-w)^N / log(e/(1-|w|))       j = N = beta
 */
HoloExpr make_test_fn(const TestFnSpec& spec);

/// Point measurements of one test function.
struct TestFnMeasurement {
  cplx w;
  double zero_defect = 0.0;           // max_{k<j} |f^{(k)}(w)| / |f^{(j)}(w)|
  cplx peak{};                        // f^{(j)}(w)
  double lower_ratio = 0.0;           // Re f^{(j)}(w) / Omega_{j,beta}(|w|)
  std::vector<double> upper_ratios;   // |f^{(m)}(w)| / Omega_{m,beta}(|w|), m = j+1..J
  double norm = 0.0;                  // measured ||f||_{Lambda^beta}
  double local_max = 0.0;             // max of |f| over |z| <= 1/2
  bool pseudo_hyperbolic_ok = true;   // |z-w| <= |1 - z conj(w)| on sampled z
};

/// Grid deep enough to resolve a function peaked at radius r whose factor
/// ((z - w) / (1 - z conj(w)))^j recovers only well past w.
DiskGrid test_fn_grid(const DiskGrid& grid, double r, int j);

TestFnMeasurement measure_test_fn(const TestFnSpec& spec, int J, const DiskGrid& grid, const SupOptions& opts = {});
/// Everything except the norm (left at 0).
TestFnMeasurement measure_at_center(const TestFnSpec& spec, int J);

struct WGrid {
  std::vector<double> radii{0.5, 0.9, 0.99, 0.999};
  int angles = 16;
  std::vector<cplx> points() const;
};

/// Relative spread allowed between the two outermost rings.
inline constexpr double kRingStability = 0.2;

/**
 * Numerical check of the five test-function properties over a w-grid:
 * (a) f^{(k)}(w) = 0 for k < j, (b) f^{(j)}(w) >= c Omega_j(|w|),
 * (c) |f^{(m)}(w)| <= C_m Omega_m(|w|) for j < m <= J, (d) a uniform bound on
 * ||f||_{Lambda^beta}, (e) decay on |z| <= 1/2 as |w| -> 1. Measured
 * constants are also compared between the two outermost rings.
 */
struct PropertyReport {
  double beta = 0.0;
  int j = 0;
  int J = 0;
  TestFnCase kind = TestFnCase::AboveN;

  bool vanishing = true;       // (a)
  bool lower_bound = true;     // (b)
  bool upper_bounds = true;    // (c)
  bool uniform_norm = true;    // (d)
  bool local_decay = true;     // (e)
  bool stable = true;          // ring-to-ring stability of measured constants

  double c_lower = 0.0;
  std::vector<double> C_upper;  // m = j+1..J
  double C_norm = 0.0;
  std::vector<double> ring_local_max;
  std::vector<std::string> failures;

  bool passed() const { return vanishing && lower_bound && upper_bounds && uniform_norm && local_decay && stable; }
  nlohmann::json to_json() const;
};

PropertyReport verify_test_fn(double beta, int j, int J, const WGrid& wgrid, const DiskGrid& grid,
                              const SupOptions& opts = {});

}  // namespace wco
