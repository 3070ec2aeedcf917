#include "wco/expr_json.hpp"

#include <vector>

namespace wco {

using nlohmann::json;

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw ConfigError("expected a number or [re, im] pair, got " + j.dump());
}

json complex_to_json(cplx c) { return json::array({c.real(), c.imag()}); }

namespace {

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ConfigError(std::string("expression node missing \"") + key + "\": " + j.dump());
  return *it;
}

}  // namespace

HoloExpr expr_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("expression node must be an object: " + j.dump());
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "z") return HoloExpr::z();
  if (kind == "const") return HoloExpr::constant(complex_from_json(field(j, "value")));
  if (kind == "add") return expr_from_json(field(j, "lhs")) + expr_from_json(field(j, "rhs"));
  if (kind == "sub") return expr_from_json(field(j, "lhs")) - expr_from_json(field(j, "rhs"));
  if (kind == "mul") return expr_from_json(field(j, "lhs")) * expr_from_json(field(j, "rhs"));
  if (kind == "div") return expr_from_json(field(j, "lhs")) / expr_from_json(field(j, "rhs"));
  if (kind == "log") return log(expr_from_json(field(j, "arg")));
  if (kind == "pow") {
    const json& e = field(j, "exp");
    if (!e.is_number()) throw ConfigError("pow exponent must be a number: " + j.dump());
    return pow(expr_from_json(field(j, "base")), e.get<double>());
  }
  if (kind == "poly") {
    const json& cs = field(j, "coeffs");
    if (!cs.is_array() || cs.empty()) throw ConfigError("poly needs a non-empty coeffs array: " + j.dump());
    std::vector<cplx> coeffs;
    for (const auto& c : cs) coeffs.push_back(complex_from_json(c));
    return HoloExpr::polynomial(coeffs);
  }
  throw ConfigError("unknown expression kind \"" + kind + "\"");
}

json expr_to_json(const HoloExpr& e) {
  using K = HoloExpr::Kind;
  switch (e.kind()) {
    case K::Const: return {{"kind", "const"}, {"value", complex_to_json(e.value())}};
    case K::Z: return {{"kind", "z"}};
    case K::Add: return {{"kind", "add"}, {"lhs", expr_to_json(e.lhs())}, {"rhs", expr_to_json(e.rhs())}};
    case K::Sub: return {{"kind", "sub"}, {"lhs", expr_to_json(e.lhs())}, {"rhs", expr_to_json(e.rhs())}};
    case K::Mul: return {{"kind", "mul"}, {"lhs", expr_to_json(e.lhs())}, {"rhs", expr_to_json(e.rhs())}};
    case K::Div: return {{"kind", "div"}, {"lhs", expr_to_json(e.lhs())}, {"rhs", expr_to_json(e.rhs())}};
    case K::IntPow: return {{"kind", "pow"}, {"base", expr_to_json(e.lhs())}, {"exp", e.int_exponent()}};
    case K::RealPow: return {{"kind", "pow"}, {"base", expr_to_json(e.lhs())}, {"exp", e.real_exponent()}};
    case K::Log: return {{"kind", "log"}, {"arg", expr_to_json(e.lhs())}};
  }
  return {};
}

}  // namespace wco
