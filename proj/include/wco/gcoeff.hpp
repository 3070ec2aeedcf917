#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "wco/expr.hpp"

namespace wco {

/// One monomial g_k * p_1^{e_1} * ... * p_J^{e_J}; p_powers[i] is the
/// exponent of p_{i+1}. Trailing zeros are kept so all monomials of a table
/// have the same length.
struct GMonomial {
  int g_order = 0;
  std::vector<int> p_powers;

  /// g_order + sum_k k * e_k.
  int weight() const;
  /// sum_k e_k: number of phi-derivative factors.
  int phi_factors() const;

  auto operator<=>(const GMonomial&) const = default;
};

using GPolynomial = std::map<GMonomial, std::int64_t>;

/**
 * Coefficient functions of the J-th derivative of g * (f o phi):
 *
 *   (g * f(phi))^{(J)} = sum_{j=0}^{J} G_j * f^{(j)}(phi),
 *
 * stored as integer polynomials in the formal variables g_k = g^{(k)} and
 * p_k = phi^{(k)}. Built by the recursion
 *
 *   G_j[J+1] = D(G_j[J]) + p_1 * G_{j-1}[J],   G_{-1} = 0,
 *
 * where D is the derivation g_k -> g_{k+1}, p_k -> p_{k+1}.
 */
class GCoefficientTable {
 public:
  /// Max J for which the 64-bit coefficients are known not to overflow.
  static constexpr int kMaxOrder = 20;

  static GCoefficientTable build(int J);

  int order() const { return J_; }
  const GPolynomial& entry(int j) const { return entries_.at(j); }

  /// Human-readable form, e.g. "G_1[J=2] = 2 g1 p1 + g0 p2".
  std::string to_text(int j) const;
  std::string to_text() const;
  nlohmann::json to_json() const;

  /**
   * Values G_0..G_J at a point from raw derivatives g^{(0..J)} and
   * phi^{(0..J)} there (phi_derivs[0] is unused).
   */
  std::vector<cplx> evaluate(std::span<const cplx> g_derivs, std::span<const cplx> phi_derivs) const;

 private:
  int J_ = 0;
  std::vector<GPolynomial> entries_;
};

/// Shared immutable table for order J, built on first use. Thread-safe.
const GCoefficientTable& cached_table(int J);

/// G_j[g, phi, J](z) for j = 0..J, substituting jets of g and phi at z.
std::vector<cplx> eval_G(const GCoefficientTable& table, const HoloExpr& g, const HoloExpr& phi, cplx z);

}  // namespace wco
