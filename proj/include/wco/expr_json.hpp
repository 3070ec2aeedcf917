#pragma once

#include "json.hpp"
#include "wco/errors.hpp"
#include "wco/expr.hpp"

namespace wco {

/// Complex literal: a bare number or a [re, im] pair.
cplx complex_from_json(const nlohmann::json& j);
nlohmann::json complex_to_json(cplx c);

/**
 * Expression trees in config files.
 *
 *   {"kind":"z"}
 *   {"kind":"const","value":0.5}            value may be [re, im]
 *   {"kind":"add"|"sub"|"mul"|"div","lhs":E,"rhs":E}
 *   {"kind":"pow","base":E,"exp":3}         non-integral exp is a principal power
 *   {"kind":"log","arg":E}
 *   {"kind":"poly","coeffs":[c0,c1,...]}    complex coefficients
 *
 * Throws ConfigError on malformed input.
 */
HoloExpr expr_from_json(const nlohmann::json& j);
nlohmann::json expr_to_json(const HoloExpr& e);

}  // namespace wco
