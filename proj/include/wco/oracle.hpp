#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "wco/disk_sup.hpp"
#include "wco/expr.hpp"

namespace wco::oracle {

/**
 * f^{(k)}(z), k = 0..k_max, by the trapezoidal Cauchy integral over the circle
 * |zeta - z| = rho with `nodes` equispaced nodes. rho defaults to
 * min(1/2, (1-|z|)/2). Uses only scalar evaluation.
 */
std::vector<cplx> fd_derivatives(const HoloExpr& f, cplx z, int k_max, double rho = 0.0, int nodes = 32);

/// Max of F over a sunflower (area-uniform) sampling of the disk plus the origin.
double dense_sup(const PointFunction& F, std::size_t samples = 200000);

/// Max of h over `samples` equispaced points of [lo, hi].
double dense_max_1d(const std::function<double(double)>& h, double lo, double hi, std::size_t samples = 1000000);

/**
 * |(g (f o phi))^{(J)}(z) - sum_j G_j(z) f^{(j)}(phi(z))| divided by
 * sum_j |G_j(z) f^{(j)}(phi(z))| (or by the left side if that is larger).
 * The left side comes from jet composition, the right from the G table.
 */
double defining_identity_check(const HoloExpr& g, const HoloExpr& phi, const HoloExpr& f, int J, cplx z);

}  // namespace wco::oracle
