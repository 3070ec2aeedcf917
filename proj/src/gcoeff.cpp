#include "wco/gcoeff.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace wco {

int GMonomial::weight() const {
  int w = g_order;
  for (std::size_t i = 0; i < p_powers.size(); ++i) w += static_cast<int>(i + 1) * p_powers[i];
  return w;
}

int GMonomial::phi_factors() const {
  int n = 0;
  for (int e : p_powers) n += e;
  return n;
}

namespace {

void accumulate(GPolynomial& poly, const GMonomial& m, std::int64_t c) {
  std::int64_t& slot = poly[m];
  if (__builtin_add_overflow(slot, c, &slot)) throw std::overflow_error("G coefficient overflow");
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("G coefficient overflow");
  return r;
}

// Formal derivation, writing monomials padded to `width` p-slots.
void derive_into(const GPolynomial& src, std::size_t width, GPolynomial& dst) {
  for (const auto& [m, c] : src) {
    GMonomial base = m;
    base.p_powers.resize(width, 0);

    GMonomial dg = base;
    ++dg.g_order;
    accumulate(dst, dg, c);

    for (std::size_t i = 0; i < m.p_powers.size(); ++i) {
      const int e = m.p_powers[i];
      if (e == 0) continue;
      GMonomial dp = base;
      --dp.p_powers[i];
      ++dp.p_powers[i + 1];
      accumulate(dst, dp, checked_mul(c, e));
    }
  }
}

std::string monomial_text(const GMonomial& m) {
  std::ostringstream os;
  os << "g" << m.g_order;
  for (std::size_t i = 0; i < m.p_powers.size(); ++i) {
    if (m.p_powers[i] == 0) continue;
    os << " p" << i + 1;
    if (m.p_powers[i] > 1) os << "^" << m.p_powers[i];
  }
  return os.str();
}

// Display order: higher g-derivative first, then lower-index p factors first.
std::vector<std::pair<GMonomial, std::int64_t>> display_terms(const GPolynomial& poly) {
  std::vector<std::pair<GMonomial, std::int64_t>> terms(poly.begin(), poly.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.g_order != b.first.g_order) return a.first.g_order > b.first.g_order;
    return a.first.p_powers > b.first.p_powers;
  });
  return terms;
}

}  // namespace

GCoefficientTable GCoefficientTable::build(int J) {
  if (J < 0) throw std::invalid_argument("G table order must be non-negative");
  if (J > kMaxOrder) throw std::invalid_argument("G table order above " + std::to_string(kMaxOrder));

  GCoefficientTable t;
  t.entries_.resize(1);
  t.entries_[0][GMonomial{0, {}}] = 1;

  for (int order = 0; order < J; ++order) {
    const std::size_t width = static_cast<std::size_t>(order) + 1;
    std::vector<GPolynomial> next(order + 2);
    for (int j = 0; j <= order; ++j) derive_into(t.entries_[j], width, next[j]);
    for (int j = 0; j <= order; ++j) {
      for (const auto& [m, c] : t.entries_[j]) {
        GMonomial shifted = m;
        shifted.p_powers.resize(width, 0);
        ++shifted.p_powers[0];
        accumulate(next[j + 1], shifted, c);
      }
    }
    t.entries_ = std::move(next);
  }
  t.J_ = J;
  return t;
}

std::string GCoefficientTable::to_text(int j) const {
  std::ostringstream os;
  os << "G_" << j << "[J=" << J_ << "] = ";
  const auto terms = display_terms(entry(j));
  if (terms.empty()) os << "0";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i > 0) os << " + ";
    if (terms[i].second != 1) os << terms[i].second << " ";
    os << monomial_text(terms[i].first);
  }
  return os.str();
}

std::string GCoefficientTable::to_text() const {
  std::string out;
  for (int j = 0; j <= J_; ++j) out += to_text(j) + "\n";
  return out;
}

nlohmann::json GCoefficientTable::to_json() const {
  nlohmann::json entries = nlohmann::json::array();
  for (int j = 0; j <= J_; ++j) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : display_terms(entry(j))) {
      terms.push_back({{"coeff", c}, {"g", m.g_order}, {"p", m.p_powers}});
    }
    entries.push_back({{"j", j}, {"text", to_text(j)}, {"terms", terms}});
  }
  return {{"J", J_}, {"entries", entries}};
}

std::vector<cplx> GCoefficientTable::evaluate(std::span<const cplx> g_derivs, std::span<const cplx> phi_derivs) const {
  if (g_derivs.size() < static_cast<std::size_t>(J_) + 1 || phi_derivs.size() < static_cast<std::size_t>(J_) + 1) {
    throw std::invalid_argument("G table evaluation needs derivatives up to order J");
  }
  std::vector<cplx> out(J_ + 1);
  for (int j = 0; j <= J_; ++j) {
    cplx sum = 0.0;
    for (const auto& [m, c] : entries_[j]) {
      cplx term = g_derivs[m.g_order] * static_cast<double>(c);
      for (std::size_t i = 0; i < m.p_powers.size(); ++i) {
        for (int e = 0; e < m.p_powers[i]; ++e) term *= phi_derivs[i + 1];
      }
      sum += term;
    }
    out[j] = sum;
  }
  return out;
}

const GCoefficientTable& cached_table(int J) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const GCoefficientTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[J];
  if (!slot) slot = std::make_unique<const GCoefficientTable>(GCoefficientTable::build(J));
  return *slot;
}

std::vector<cplx> eval_G(const GCoefficientTable& table, const HoloExpr& g, const HoloExpr& phi, cplx z) {
  const int J = table.order();
  const ComplexJet gj = eval_jet(g, z, J);
  const ComplexJet pj = eval_jet(phi, z, J);
  std::vector<cplx> gd(J + 1), pd(J + 1);
  for (int k = 0; k <= J; ++k) {
    gd[k] = gj.derivative(k);
    pd[k] = pj.derivative(k);
  }
  return table.evaluate(gd, pd);
}

}  // namespace wco
