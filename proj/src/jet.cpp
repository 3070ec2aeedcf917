#include "wco/jet.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wco {

namespace {

[[noreturn]] void bad_order(int order) {
  throw std::invalid_argument("jet order " + std::to_string(order) + " outside [0, " +
                              std::to_string(kMaxJetOrder) + "]");
}

inline void check_order(int order) {
  if (order < 0 || order > kMaxJetOrder) bad_order(order);
}

}  // namespace

ComplexJet::ComplexJet(cplx center, int order) : center_(center), order_(order) {
  check_order(order);
  for (int k = 0; k <= order; ++k) c_.c[k] = 0.0;
}

ComplexJet ComplexJet::constant(cplx center, int order, cplx value) {
  ComplexJet j(center, order);
  j.c_.c[0] = value;
  return j;
}

ComplexJet ComplexJet::variable(cplx center, int order) {
  ComplexJet j(center, order);
  j.c_.c[0] = center;
  if (order >= 1) j.c_.c[1] = 1.0;
  return j;
}

cplx ComplexJet::derivative(int k) const {
  double factorial = 1.0;
  for (int i = 2; i <= k; ++i) factorial *= i;
  return c_.c[k] * factorial;
}

ComplexJet ComplexJet::truncated(int order) const {
  ComplexJet j(center_, std::min(order, order_));
  for (int k = 0; k <= j.order_; ++k) j.c_.c[k] = c_.c[k];
  return j;
}

ComplexJet ComplexJet::operator-() const {
  ComplexJet j(center_, order_);
  for (int k = 0; k <= order_; ++k) j.c_.c[k] = -c_.c[k];
  return j;
}

ComplexJet& ComplexJet::operator+=(const ComplexJet& rhs) {
  order_ = std::min(order_, rhs.order_);
  for (int k = 0; k <= order_; ++k) c_.c[k] += rhs.c_.c[k];
  return *this;
}

ComplexJet& ComplexJet::operator-=(const ComplexJet& rhs) {
  order_ = std::min(order_, rhs.order_);
  for (int k = 0; k <= order_; ++k) c_.c[k] -= rhs.c_.c[k];
  return *this;
}

ComplexJet& ComplexJet::operator*=(cplx s) {
  for (int k = 0; k <= order_; ++k) c_.c[k] *= s;
  return *this;
}

ComplexJet operator*(const ComplexJet& a, const ComplexJet& b) {
  ComplexJet r(a.center_, std::min(a.order_, b.order_));
  for (int k = 0; k <= r.order_; ++k) {
    cplx s = 0.0;
    for (int i = 0; i <= k; ++i) s += a.c_.c[i] * b.c_.c[k - i];
    r.c_.c[k] = s;
  }
  return r;
}

ComplexJet operator/(const ComplexJet& a, const ComplexJet& b) {
  if (std::abs(b.c_.c[0]) < 1e-300) throw JetDomainError("division by a jet with vanishing constant term");
  ComplexJet r(a.center_, std::min(a.order_, b.order_));
  const cplx inv0 = 1.0 / b.c_.c[0];
  for (int k = 0; k <= r.order_; ++k) {
    cplx s = a.c_.c[k];
    for (int i = 1; i <= k; ++i) s -= b.c_.c[i] * r.c_.c[k - i];
    r.c_.c[k] = s * inv0;
  }
  return r;
}

ComplexJet reciprocal(const ComplexJet& a) {
  return ComplexJet::constant(a.center(), a.order(), 1.0) / a;
}

ComplexJet pow(const ComplexJet& a, int n) {
  if (n < 0) throw std::invalid_argument("pow(jet, int) needs a non-negative exponent");
  ComplexJet result = ComplexJet::constant(a.center(), a.order(), 1.0);
  ComplexJet base = a;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

ComplexJet pow(const ComplexJet& a, double s) {
  const cplx a0 = a[0];
  if (on_branch_cut(a0)) throw JetDomainError("real power of a jet whose value lies on the branch cut");
  ComplexJet b(a.center(), a.order());
  b[0] = std::exp(s * std::log(a0));
  const cplx inv0 = 1.0 / a0;
  // a b' = s a' b, read off coefficient by coefficient.
  for (int k = 1; k <= a.order(); ++k) {
    cplx acc = 0.0;
    for (int i = 1; i <= k; ++i) acc += ((s + 1.0) * i - k) * a[i] * b[k - i];
    b[k] = acc * inv0 / static_cast<double>(k);
  }
  return b;
}

ComplexJet log(const ComplexJet& a) {
  const cplx a0 = a[0];
  if (on_branch_cut(a0)) throw JetDomainError("logarithm of a jet whose value lies on the branch cut");
  ComplexJet b(a.center(), a.order());
  b[0] = std::log(a0);
  const cplx inv0 = 1.0 / a0;
  for (int k = 1; k <= a.order(); ++k) {
    cplx acc = a[k];
    for (int i = 1; i < k; ++i) acc -= (static_cast<double>(i) / k) * b[i] * a[k - i];
    b[k] = acc * inv0;
  }
  return b;
}

ComplexJet jet_compose(const ComplexJet& outer, const ComplexJet& inner) {
  if (std::abs(outer.center() - inner[0]) > 1e-12) {
    throw std::invalid_argument("jet_compose: outer center does not match inner value");
  }
  const int order = std::min(outer.order(), inner.order());
  ComplexJet shift = inner.truncated(order);
  shift[0] = 0.0;
  // Horner in (phi - w0), whose constant term vanishes, so truncation is exact.
  ComplexJet acc = ComplexJet::constant(inner.center(), order, outer[order]);
  for (int k = order - 1; k >= 0; --k) {
    acc = acc * shift;
    acc[0] += outer[k];
  }
  return acc;
}

}  // namespace wco
