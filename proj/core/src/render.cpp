#include "gammapos/render.hpp"

#include <vector>

#include "gammapos/errors.hpp"

namespace gammapos {
namespace {

std::string power(const std::string& var, int e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

struct Term {
  bool negative;
  std::string body;
};

std::string join(const std::vector<Term>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i == 0)
      out += terms[i].negative ? "-" + terms[i].body : terms[i].body;
    else
      out += (terms[i].negative ? " - " : " + ") + terms[i].body;
  }
  return out;
}

// `coeff` is the text of the coefficient's absolute value, `simple` says it
// needs no parentheses, `unit` says it is exactly 1.
Term make_term(bool negative, const std::string& coeff, bool simple, bool unit, const std::string& mono) {
  if (mono.empty()) return {negative, coeff};
  if (unit) return {negative, mono};
  return {negative, (simple ? coeff : "(" + coeff + ")") + "*" + mono};
}

std::vector<Term> int_terms(const IntPoly& p, const std::string& var) {
  std::vector<Term> terms;
  for (int i = 0; i <= p.degree(); ++i) {
    const BigInt& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    BigInt a = abs(c);
    terms.push_back(make_term(c < 0, a.str(), true, a == 1, power(var, i)));
  }
  return terms;
}

}  // namespace

std::string to_text(const IntPoly& p, const std::string& var) { return join(int_terms(p, var)); }

std::string to_text(const QTPoly& p) {
  std::vector<Term> terms;
  for (int j = 0; j <= p.degree(); ++j) {
    const IntPoly& c = p.coeffs()[static_cast<std::size_t>(j)];
    if (c.is_zero()) continue;
    auto inner = int_terms(c, "q");
    if (inner.size() == 1) {
      const Term& only = inner.front();
      bool unit = only.body == "1";
      terms.push_back(make_term(only.negative, only.body, true, unit, power("t", j)));
    } else {
      terms.push_back(make_term(false, join(inner), false, false, power("t", j)));
    }
  }
  return join(terms);
}

std::string to_text(const QTRPoly& p) {
  std::vector<Term> terms;
  for (const auto& [e, c] : p.terms()) {
    std::string mono;
    for (auto [var, k] : {std::pair<const char*, int>{"q", e[0]}, {"t", e[1]}, {"r", e[2]}}) {
      if (k == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += power(var, k);
    }
    BigInt a = abs(c);
    terms.push_back(make_term(c < 0, a.str(), true, a == 1, mono));
  }
  return join(terms);
}

nlohmann::json to_json(const IntPoly& p) {
  auto out = nlohmann::json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.str());
  return out;
}

nlohmann::json to_json(const QTPoly& p) {
  auto out = nlohmann::json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

nlohmann::json to_json(const QTRPoly& p) {
  auto out = nlohmann::json::array();
  for (const auto& [e, c] : p.terms())
    out.push_back({{"q", e[0]}, {"t", e[1]}, {"r", e[2]}, {"coeff", c.str()}});
  return out;
}

IntPoly int_poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ValidationError("polynomial JSON must be an array");
  std::vector<BigInt> coeffs;
  for (const auto& c : j) {
    if (!c.is_string()) throw ValidationError("coefficients must be decimal strings");
    coeffs.push_back(parse_decimal(c.get<std::string>()));
  }
  return IntPoly(std::move(coeffs));
}

QTPoly qt_poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ValidationError("polynomial JSON must be an array");
  std::vector<IntPoly> coeffs;
  for (const auto& c : j) coeffs.push_back(int_poly_from_json(c));
  return QTPoly(std::move(coeffs));
}

}  // namespace gammapos
