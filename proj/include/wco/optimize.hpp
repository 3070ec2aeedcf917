#pragma once

#include <cmath>
#include <utility>

namespace wco {

struct ScalarMax {
  double arg = 0.0;
  double value = 0.0;
};

/**
 * Golden-section search for the maximum of a unimodal f on [lo, hi], stopping
 * when the bracket is narrower than `tol` or after `max_iter` steps. Returns the
 * best point evaluated, endpoints included.
 */
template <class F>
ScalarMax golden_section_maximize(F&& f, double lo, double hi, double tol = 1e-12, int max_iter = 200) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  ScalarMax best{lo, f(lo)};
  auto consider = [&](double x, double v) {
    if (v > best.value) best = {x, v};
  };
  consider(hi, f(hi));

  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  consider(c, fc);
  consider(d, fd);
  for (int it = 0; it < max_iter && (b - a) > tol; ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
      consider(c, fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
      consider(d, fd);
    }
  }
  return best;
}

}  // namespace wco
