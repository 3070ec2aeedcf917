#include "wco/expr.hpp"

#include <cmath>
#include <sstream>

namespace wco {

struct HoloExpr::Node {
  Kind kind = Kind::Const;
  cplx value{};
  int int_exp = 0;
  double real_exp = 0.0;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using Node = HoloExpr::Node;
using Kind = HoloExpr::Kind;

std::string format_complex(cplx c) {
  std::ostringstream os;
  os.precision(12);
  if (c.imag() == 0.0) {
    os << c.real();
  } else if (c.real() == 0.0) {
    os << c.imag() << "i";
  } else {
    os << "(" << c.real() << (c.imag() < 0 ? " - " : " + ") << std::abs(c.imag()) << "i)";
  }
  return os.str();
}

std::string node_string(const Node& n) {
  switch (n.kind) {
    case Kind::Const: return format_complex(n.value);
    case Kind::Z: return "z";
    case Kind::Add: return "(" + node_string(*n.lhs) + " + " + node_string(*n.rhs) + ")";
    case Kind::Sub: return "(" + node_string(*n.lhs) + " - " + node_string(*n.rhs) + ")";
    case Kind::Mul: return node_string(*n.lhs) + "*" + node_string(*n.rhs);
    case Kind::Div: return node_string(*n.lhs) + "/" + node_string(*n.rhs);
    case Kind::IntPow: return node_string(*n.lhs) + "^" + std::to_string(n.int_exp);
    case Kind::RealPow: {
      std::ostringstream os;
      os.precision(12);
      os << node_string(*n.lhs) << "^" << n.real_exp;
      return os.str();
    }
    case Kind::Log: return "log(" + node_string(*n.lhs) + ")";
  }
  return "?";
}

[[noreturn]] void throw_pole(const Node& denom) {
  const std::string s = node_string(denom);
  throw EvalError(EvalError::Kind::PoleAtPoint, s, "pole: denominator " + s + " vanishes");
}

[[noreturn]] void throw_cut(const Node& arg) {
  const std::string s = node_string(arg);
  throw EvalError(EvalError::Kind::BranchCut, s, "branch cut: argument " + s + " is non-positive real");
}

cplx node_value(const Node& n, cplx z) {
  switch (n.kind) {
    case Kind::Const: return n.value;
    case Kind::Z: return z;
    case Kind::Add: return node_value(*n.lhs, z) + node_value(*n.rhs, z);
    case Kind::Sub: return node_value(*n.lhs, z) - node_value(*n.rhs, z);
    case Kind::Mul: return node_value(*n.lhs, z) * node_value(*n.rhs, z);
    case Kind::Div: {
      const cplx d = node_value(*n.rhs, z);
      if (std::abs(d) < 1e-300) throw_pole(*n.rhs);
      return node_value(*n.lhs, z) / d;
    }
    case Kind::IntPow: {
      const cplx b = node_value(*n.lhs, z);
      cplx r = 1.0;
      for (int i = 0; i < n.int_exp; ++i) r *= b;
      return r;
    }
    case Kind::RealPow: {
      const cplx b = node_value(*n.lhs, z);
      if (on_branch_cut(b)) throw_cut(*n.lhs);
      return std::exp(n.real_exp * std::log(b));
    }
    case Kind::Log: {
      const cplx a = node_value(*n.lhs, z);
      if (on_branch_cut(a)) throw_cut(*n.lhs);
      return std::log(a);
    }
  }
  return 0.0;
}

void node_jet(const Node& n, cplx z0, int order, ComplexJet& out) {
  switch (n.kind) {
    case Kind::Const:
      out = ComplexJet::constant(z0, order, n.value);
      return;
    case Kind::Z:
      out = ComplexJet::variable(z0, order);
      return;
    case Kind::Add:
    case Kind::Sub:
    case Kind::Mul:
    case Kind::Div: {
      ComplexJet b;
      node_jet(*n.lhs, z0, order, out);
      node_jet(*n.rhs, z0, order, b);
      switch (n.kind) {
        case Kind::Add: out += b; break;
        case Kind::Sub: out -= b; break;
        case Kind::Mul: out = out * b; break;
        default:
          if (std::abs(b[0]) < 1e-300) throw_pole(*n.rhs);
          out = out / b;
      }
      return;
    }
    case Kind::IntPow:
      node_jet(*n.lhs, z0, order, out);
      out = pow(out, n.int_exp);
      return;
    case Kind::RealPow:
    case Kind::Log:
      node_jet(*n.lhs, z0, order, out);
      if (on_branch_cut(out[0])) throw_cut(*n.lhs);
      out = n.kind == Kind::Log ? log(out) : pow(out, n.real_exp);
      return;
  }
}

}  // namespace

HoloExpr::HoloExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

HoloExpr::HoloExpr() {
  static const auto zero = std::make_shared<const Node>();
  node_ = zero;
}

HoloExpr HoloExpr::constant(cplx value) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Const;
  n->value = value;
  return HoloExpr(std::move(n));
}

HoloExpr HoloExpr::z() {
  static const auto var = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Z;
    return std::shared_ptr<const Node>(std::move(n));
  }();
  return HoloExpr(var);
}

HoloExpr HoloExpr::make(Kind kind, HoloExpr lhs, HoloExpr rhs) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->lhs = std::move(lhs.node_);
  n->rhs = std::move(rhs.node_);
  return HoloExpr(std::move(n));
}

HoloExpr HoloExpr::polynomial(std::span<const cplx> coeffs) {
  if (coeffs.empty()) return constant(0.0);
  HoloExpr acc = constant(coeffs.back());
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) acc = acc * z() + constant(coeffs[i]);
  return acc;
}

HoloExpr::Kind HoloExpr::kind() const { return node_->kind; }
cplx HoloExpr::value() const { return node_->value; }
int HoloExpr::int_exponent() const { return node_->int_exp; }
double HoloExpr::real_exponent() const { return node_->real_exp; }
HoloExpr HoloExpr::lhs() const { return node_->lhs ? HoloExpr(node_->lhs) : HoloExpr(); }
HoloExpr HoloExpr::rhs() const { return node_->rhs ? HoloExpr(node_->rhs) : HoloExpr(); }

HoloExpr operator+(const HoloExpr& a, const HoloExpr& b) { return HoloExpr::make(Kind::Add, a, b); }
HoloExpr operator-(const HoloExpr& a, const HoloExpr& b) { return HoloExpr::make(Kind::Sub, a, b); }
HoloExpr operator*(const HoloExpr& a, const HoloExpr& b) { return HoloExpr::make(Kind::Mul, a, b); }
HoloExpr operator/(const HoloExpr& a, const HoloExpr& b) { return HoloExpr::make(Kind::Div, a, b); }

HoloExpr pow(const HoloExpr& base, int n) {
  if (n == 0) return HoloExpr::constant(1.0);
  if (n < 0) return HoloExpr::constant(1.0) / pow(base, -n);
  auto node = std::make_shared<Node>();
  node->kind = Kind::IntPow;
  node->int_exp = n;
  node->lhs = base.node_;
  return HoloExpr(std::move(node));
}

HoloExpr pow(const HoloExpr& base, double s) {
  if (std::nearbyint(s) == s && std::abs(s) < 1e9) return pow(base, static_cast<int>(s));
  auto node = std::make_shared<Node>();
  node->kind = Kind::RealPow;
  node->real_exp = s;
  node->lhs = base.node_;
  return HoloExpr(std::move(node));
}

HoloExpr log(const HoloExpr& arg) { return HoloExpr::make(Kind::Log, arg); }

HoloExpr HoloExpr::substitute(const HoloExpr& inner) const {
  switch (kind()) {
    case Kind::Const: return *this;
    case Kind::Z: return inner;
    case Kind::Add: return lhs().substitute(inner) + rhs().substitute(inner);
    case Kind::Sub: return lhs().substitute(inner) - rhs().substitute(inner);
    case Kind::Mul: return lhs().substitute(inner) * rhs().substitute(inner);
    case Kind::Div: return lhs().substitute(inner) / rhs().substitute(inner);
    case Kind::IntPow: return pow(lhs().substitute(inner), int_exponent());
    case Kind::RealPow: return pow(lhs().substitute(inner), real_exponent());
    case Kind::Log: return log(lhs().substitute(inner));
  }
  return *this;
}

cplx HoloExpr::evaluate(cplx z) const { return node_value(*node_, z); }

std::string HoloExpr::to_string() const { return node_string(*node_); }

ComplexJet eval_jet(const HoloExpr& f, cplx z0, int order) {
  ComplexJet out;
  node_jet(*f.node_, z0, order, out);
  return out;
}

}  // namespace wco
