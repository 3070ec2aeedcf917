#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "wco/jet.hpp"

namespace wco {

/// Evaluation failure of a HoloExpr at a point, tagged with the offending
/// sub-expression.
class EvalError : public std::runtime_error {
 public:
  enum class Kind { PoleAtPoint, BranchCut, Other };

  EvalError(Kind kind, std::string subexpr, const std::string& what)
      : std::runtime_error(what), kind_(kind), subexpr_(std::move(subexpr)) {}

  Kind kind() const { return kind_; }
  const std::string& subexpression() const { return subexpr_; }

 private:
  Kind kind_;
  std::string subexpr_;
};

/**
 * Immutable expression tree for a holomorphic function of z.
 *
 * Nodes: constants, the variable z, + - * /, integer powers, principal real
 * powers and the principal logarithm. A negative integer power is stored as the
 * reciprocal of the positive power. Copies share structure.
 */
class HoloExpr {
 public:
  enum class Kind { Const, Z, Add, Sub, Mul, Div, IntPow, RealPow, Log };

  /// The constant 0.
  HoloExpr();

  static HoloExpr constant(cplx value);
  static HoloExpr z();

  /// Horner form of c0 + c1 z + ... + cn z^n.
  static HoloExpr polynomial(std::span<const cplx> coeffs);

  Kind kind() const;
  cplx value() const;           // Const
  int int_exponent() const;     // IntPow
  double real_exponent() const; // RealPow
  HoloExpr lhs() const;  // unary argument or left operand
  HoloExpr rhs() const;

  friend HoloExpr operator+(const HoloExpr& a, const HoloExpr& b);
  friend HoloExpr operator-(const HoloExpr& a, const HoloExpr& b);
  friend HoloExpr operator*(const HoloExpr& a, const HoloExpr& b);
  friend HoloExpr operator/(const HoloExpr& a, const HoloExpr& b);
  friend HoloExpr pow(const HoloExpr& base, int n);
  /// Integral exponents become IntPow; anything else a principal RealPow.
  friend HoloExpr pow(const HoloExpr& base, double s);
  friend HoloExpr log(const HoloExpr& arg);

  /// f(inner(z)): every occurrence of z replaced by `inner`.
  HoloExpr substitute(const HoloExpr& inner) const;

  /// Scalar evaluation with std::complex arithmetic (no jets involved).
  cplx evaluate(cplx z) const;

  std::string to_string() const;

  struct Node;  // implementation detail

 private:
  explicit HoloExpr(std::shared_ptr<const Node> node);
  static HoloExpr make(Kind kind, HoloExpr lhs, HoloExpr rhs = {});

  friend ComplexJet eval_jet(const HoloExpr& f, cplx z0, int order);

  std::shared_ptr<const Node> node_;
};

HoloExpr pow(const HoloExpr& base, int n);
HoloExpr pow(const HoloExpr& base, double s);
HoloExpr log(const HoloExpr& arg);

/**
 * Taylor jet of f at z0 up to `order`.
 *
 * Throws EvalError on a pole at z0 (division by a vanishing constant term) or
 * when a Log / RealPow argument falls on the non-positive real axis.
 */
ComplexJet eval_jet(const HoloExpr& f, cplx z0, int order);

}  // namespace wco
