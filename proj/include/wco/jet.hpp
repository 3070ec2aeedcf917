#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <string>

namespace wco {

using cplx = std::complex<double>;

/// Highest Taylor order a jet can carry.
inline constexpr int kMaxJetOrder = 24;

/// Raised by jet arithmetic when the result is not holomorphic at the center
/// (reciprocal of a vanishing constant term, log/power on the branch cut).
class JetDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/**
 * Truncated Taylor expansion of a holomorphic function at a point.
 *
 * Stores the scaled coefficients c_k = f^{(k)}(z0)/k!, k = 0..order.
 * Raw derivatives are available through derivative(k).
 *
 * Binary operations truncate to the smaller order of their operands. Both
 * operands are expected to share the same center; only the left one is kept.
 */
class ComplexJet {
 public:
  ComplexJet() { c_.c[0] = 0.0; }
  ComplexJet(cplx center, int order);
  ComplexJet(const ComplexJet& other) : center_(other.center_), order_(other.order_) { copy_from(other); }
  ComplexJet& operator=(const ComplexJet& other) {
    center_ = other.center_;
    order_ = other.order_;
    copy_from(other);
    return *this;
  }

  static ComplexJet constant(cplx center, int order, cplx value);
  /// Jet of the identity map z at the given center.
  static ComplexJet variable(cplx center, int order);

  cplx center() const { return center_; }
  int order() const { return order_; }

  cplx operator[](int k) const { return c_.c[k]; }
  cplx& operator[](int k) { return c_.c[k]; }
  std::span<const cplx> coeffs() const { return {c_.c, static_cast<std::size_t>(order_) + 1}; }

  /// f^{(k)}(z0) = k! c_k.
  cplx derivative(int k) const;

  ComplexJet truncated(int order) const;

  ComplexJet operator-() const;
  ComplexJet& operator+=(const ComplexJet& rhs);
  ComplexJet& operator-=(const ComplexJet& rhs);
  ComplexJet& operator*=(cplx s);

  friend ComplexJet operator+(ComplexJet a, const ComplexJet& b) { return a += b; }
  friend ComplexJet operator-(ComplexJet a, const ComplexJet& b) { return a -= b; }
  friend ComplexJet operator*(ComplexJet a, cplx s) { return a *= s; }
  friend ComplexJet operator*(cplx s, ComplexJet a) { return a *= s; }
  friend ComplexJet operator*(const ComplexJet& a, const ComplexJet& b);
  friend ComplexJet operator/(const ComplexJet& a, const ComplexJet& b);

 private:
  // Only c[0..order_] is ever initialized or copied.
  union Storage {
    Storage() {}
    cplx c[kMaxJetOrder + 1];
  };

  cplx center_{};
  int order_ = 0;
  Storage c_;

  void copy_from(const ComplexJet& other) {
    for (int k = 0; k <= order_; ++k) c_.c[k] = other.c_.c[k];
  }
};

/// Truncated power-series reciprocal. Throws JetDomainError if |c_0| < 1e-300.
ComplexJet reciprocal(const ComplexJet& a);

/// Non-negative integer power by repeated squaring (valid when c_0 = 0).
ComplexJet pow(const ComplexJet& a, int n);

/// Principal-branch real power a^s. Requires c_0 off the non-positive real axis.
ComplexJet pow(const ComplexJet& a, double s);

/// Principal-branch logarithm. Requires c_0 off the non-positive real axis.
ComplexJet log(const ComplexJet& a);

/**
 * Jet of f(phi(z)) at inner.center(), given the jet of f at w0 = phi(z0)
 * (outer) and the jet of phi at z0 (inner).
 *
 * Throws std::invalid_argument when |outer.center() - inner[0]| > 1e-12.
 */
ComplexJet jet_compose(const ComplexJet& outer, const ComplexJet& inner);

/// True when w lies on the principal-branch cut (-inf, 0].
inline bool on_branch_cut(cplx w) { return w.imag() == 0.0 && w.real() <= 0.0; }

}  // namespace wco
