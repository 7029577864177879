#include "gammapos/eulerian.hpp"

#include <array>

#include "gammapos/render.hpp"
#include "gammapos/series.hpp"

namespace gammapos {
namespace {

constexpr std::array<std::pair<FamilyTag, std::string_view>, 6> kFamilies{{
    {FamilyTag::kEulerianT, "eulerian-t"},
    {FamilyTag::kEulerianQT, "eulerian-qt"},
    {FamilyTag::kEulerianQTR, "eulerian-qtr"},
    {FamilyTag::kBinomialEulerianT, "binomial-eulerian-t"},
    {FamilyTag::kBinomialEulerianQT, "binomial-eulerian-qt"},
    {FamilyTag::kDerangementQT, "derangement-qt"},
}};

constexpr std::array<std::pair<ExpQIdentity, std::string_view>, 4> kExpQ{{
    {ExpQIdentity::kQEuler, "qEuler"},
    {ExpQIdentity::kQFixEuler, "qFixEuler"},
    {ExpQIdentity::kQDerEuler, "qDerEuler"},
    {ExpQIdentity::kQBinomGF, "qBinomGF"},
}};

// Adds q^qe t^te into a dense table indexed [t][q].
void bump(std::vector<std::vector<BigInt>>& table, int te, int qe) {
  if (table.size() <= static_cast<std::size_t>(te)) table.resize(static_cast<std::size_t>(te) + 1);
  auto& row = table[static_cast<std::size_t>(te)];
  if (row.size() <= static_cast<std::size_t>(qe)) row.resize(static_cast<std::size_t>(qe) + 1);
  row[static_cast<std::size_t>(qe)] += 1;
}

QTPoly from_table(std::vector<std::vector<BigInt>>& table) {
  std::vector<IntPoly> coeffs;
  for (auto& row : table) coeffs.emplace_back(std::move(row));
  return QTPoly(std::move(coeffs));
}

QTPoly maj_exc_sum(int n, int bound, bool derangements_only) {
  if (n == 0) return QTPoly(1);
  std::vector<std::vector<BigInt>> table;
  for_each_permutation(n, bound, [&](const Permutation& sigma) {
    StatRecord s = stats(sigma);
    if (derangements_only && s.fix != 0) return;
    if (s.maj < s.exc) throw ConsistencyError("maj < exc for " + sigma.to_string());
    bump(table, s.exc, s.maj - s.exc);
  });
  return from_table(table);
}

nlohmann::json gamma_json(const std::vector<IntPoly>& g) {
  auto out = nlohmann::json::array();
  for (const auto& c : g) out.push_back(to_json(c));
  return out;
}

std::vector<IntPoly> class_gammas(const ClassSpec& base, int count, int bound) {
  auto by_des = class_inv_polys_by_des(base, bound);
  for (std::size_t k = static_cast<std::size_t>(count); k < by_des.size(); ++k)
    if (!by_des[k].is_zero())
      throw ConsistencyError("permutation class has members with des above the gamma range");
  by_des.resize(static_cast<std::size_t>(count));
  return by_des;
}

IntPoly a_coeff(const std::vector<QTPoly>& a, int m, int j) { return a[static_cast<std::size_t>(m)].coeff(j); }

}  // namespace

std::string_view family_name(FamilyTag f) {
  for (const auto& [tag, name] : kFamilies)
    if (tag == f) return name;
  return "unknown";
}

FamilyTag parse_family(std::string_view name) {
  for (const auto& [tag, n] : kFamilies)
    if (n == name) return tag;
  throw ValidationError("unknown family '" + std::string(name) + "'");
}

std::string_view expq_name(ExpQIdentity which) {
  for (const auto& [tag, name] : kExpQ)
    if (tag == which) return name;
  return "unknown";
}

ExpQIdentity parse_expq(std::string_view name) {
  for (const auto& [tag, n] : kExpQ)
    if (n == name) return tag;
  throw ValidationError("unknown generating-function identity '" + std::string(name) + "'");
}

IntPoly eulerian_poly(int n, int bound) {
  std::vector<BigInt> by_des(static_cast<std::size_t>(std::max(n, 1)));
  std::vector<BigInt> by_exc(by_des.size());
  for_each_permutation(n, bound, [&](const Permutation& sigma) {
    StatRecord s = stats(sigma);
    by_des[static_cast<std::size_t>(s.des)] += 1;
    by_exc[static_cast<std::size_t>(s.exc)] += 1;
  });
  if (by_des != by_exc) throw ConsistencyError("des and exc are not equidistributed");
  return IntPoly(std::move(by_des));
}

QTPoly q_eulerian(int n, int bound) { return maj_exc_sum(n, bound, false); }

QTPoly derangement_poly(int n, int bound) { return maj_exc_sum(n, bound, true); }

QTRPoly q_eulerian_fix(int n, int bound) {
  if (n == 0) return QTRPoly(1);
  QTRPoly out;
  for_each_permutation(n, bound, [&](const Permutation& sigma) {
    StatRecord s = stats(sigma);
    out += QTRPoly::monomial(1, s.maj - s.exc, s.exc, s.fix);
  });
  return out;
}

QTPoly q_binomial_eulerian(int n, int bound) {
  if (n > bound) throw ResourceError("n = " + std::to_string(n) + " exceeds the enumeration bound");
  QTPoly sum;
  for (int m = 1; m <= n; ++m) sum += times_q(q_eulerian(m, bound), q_binomial(n, m));
  return QTPoly(1) + sum.shifted(1);
}

IntPoly binomial_eulerian_poly(int n, int bound) {
  if (n > bound) throw ResourceError("n = " + std::to_string(n) + " exceeds the enumeration bound");
  IntPoly sum;
  for (int m = 1; m <= n; ++m) sum += eulerian_poly(m, bound).scaled(binomial(n, m));
  return IntPoly(1) + sum.shifted(1);
}

QTPoly family_poly(FamilyTag family, int n, int bound) {
  switch (family) {
    case FamilyTag::kEulerianT: return lift_t(eulerian_poly(n, bound));
    case FamilyTag::kEulerianQT: return q_eulerian(n, bound);
    case FamilyTag::kBinomialEulerianT: return lift_t(binomial_eulerian_poly(n, bound));
    case FamilyTag::kBinomialEulerianQT: return q_binomial_eulerian(n, bound);
    case FamilyTag::kDerangementQT: return derangement_poly(n, bound);
    case FamilyTag::kEulerianQTR: break;
  }
  throw ValidationError("family has no (q,t) polynomial: " + std::string(family_name(family)));
}

std::pair<Report, Report> derangement_literal_forms(int n, int bound) {
  const QTPoly d = derangement_poly(n, bound);
  auto make = [&](std::string identity, int degree_bound, int count) {
    GammaVector<IntPoly> g{degree_bound, class_inv_polys_by_des(gamma0_class(n, 0), bound)};
    g.gammas.resize(static_cast<std::size_t>(std::max(count, 0)));
    QTPoly contracted = degree_bound < 0 ? QTPoly{} : gamma_contract(g);
    return Report{std::move(identity), {{"n", n}}, contracted == d, to_json(d), to_json(contracted),
                  gamma_json(g.gammas), {}};
  };
  return {make("derangement-gamma-literal-(1+t)^{n-2k}", n, n / 2 + 1),
          make("derangement-gamma-literal-(1+t)^{n-2-2k}", n - 2, n >= 2 ? (n - 2) / 2 + 1 : 0)};
}

Report verify_gamma_theorem(FamilyTag family, int n, int bound) {
  ClassSpec base;
  int d = 0;
  int shift = 0;
  bool q_level = true;
  switch (family) {
    case FamilyTag::kEulerianT:
    case FamilyTag::kEulerianQT:
      if (n < 1) throw ValidationError("Eulerian gamma expansion needs n >= 1");
      base = gamma_class(n, 0);
      d = n - 1;
      q_level = family == FamilyTag::kEulerianQT;
      break;
    case FamilyTag::kBinomialEulerianT:
    case FamilyTag::kBinomialEulerianQT:
      if (n < 0) throw ValidationError("negative n");
      base = tilde_gamma_class(n, 0);
      d = n;
      q_level = family == FamilyTag::kBinomialEulerianQT;
      break;
    case FamilyTag::kDerangementQT:
      if (n < 2) throw ValidationError("derangement gamma expansion needs n >= 2");
      base = gamma0_class(n, 0);
      d = n - 2;
      shift = 1;
      break;
    case FamilyTag::kEulerianQTR:
      throw ValidationError("no gamma expansion for the (q,t,r) family");
  }

  const QTPoly target = family_poly(family, n, bound);
  GammaVector<IntPoly> from_class{d, class_gammas(base, d / 2 + 1, bound)};
  if (!q_level)
    for (auto& g : from_class.gammas) g = IntPoly(evaluate(g, 1));

  const QTPoly contracted = gamma_contract(from_class).shifted(shift);
  Report out{"gamma-theorem", {{"n", n}}, false, to_json(target), to_json(contracted),
             gamma_json(from_class.gammas), {}};
  out.identity += ":" + std::string(family_name(family));

  // The peeled expansion of the family polynomial must reproduce the class
  // coefficients exactly.
  bool peeled_ok = false;
  if (target.degree() < shift || !target.truncated(shift).is_zero()) {
    out.detail = "polynomial is not divisible by t^" + std::to_string(shift);
  } else {
    QTPoly reduced(std::vector<IntPoly>(target.coeffs().begin() + shift, target.coeffs().end()));
    try {
      peeled_ok = gamma_expand(reduced, d) == from_class;
      if (!peeled_ok) out.detail = "peeled gamma vector differs from the class polynomials";
    } catch (const PalindromicityError&) {
      out.detail = "family polynomial is not palindromic";
    }
  }
  out.passed = peeled_ok && contracted == target;
  if (!out.passed && out.detail.empty()) out.detail = "contraction differs from the family polynomial";

  if (family == FamilyTag::kDerangementQT) {
    auto [lit_a, lit_b] = derangement_literal_forms(n, bound);
    std::string note = "literal forms: " + lit_a.identity + " " + (lit_a.passed ? "pass" : "fail") + ", " +
                       lit_b.identity + " " + (lit_b.passed ? "pass" : "fail");
    out.detail = out.detail.empty() ? note : out.detail + "; " + note;
  }
  return out;
}

Report verify_cgk(int r, int s, bool q_level, int bound) {
  if (r < 1 || s < 1) throw ValidationError("r and s must be positive");
  const int total = r + s;
  if (total > bound) throw ResourceError("r + s exceeds the enumeration bound");
  std::vector<QTPoly> a;
  for (int m = 0; m <= total; ++m) a.push_back(q_eulerian(m, bound));
  auto side = [&](int j) {
    IntPoly acc;
    for (int m = 1; m <= total; ++m) {
      IntPoly coeff = a_coeff(a, m, j);
      if (q_level)
        acc += coeff * q_binomial(total, m);
      else
        acc += IntPoly(binomial(total, m) * evaluate(coeff, 1));
    }
    return acc;
  };
  IntPoly lhs = side(r - 1);
  IntPoly rhs = side(s - 1);
  return Report{q_level ? "cgk-q" : "cgk", {{"r", r}, {"s", s}}, lhs == rhs, to_json(lhs), to_json(rhs),
                std::nullopt, {}};
}

namespace {

template <class R>
Report compare_series(std::string identity, int order, const TruncSeries<R>& lhs, const TruncSeries<R>& rhs) {
  auto encode = [](const TruncSeries<R>& s) {
    auto out = nlohmann::json::array();
    for (const auto& c : s.coeffs()) out.push_back(to_json(c));
    return out;
  };
  int diff = lhs.first_difference(rhs);
  Report out{std::move(identity), {{"N", order}}, diff < 0, encode(lhs), encode(rhs), std::nullopt, {}};
  if (diff >= 0) out.detail = "coefficients differ at z^" + std::to_string(diff);
  return out;
}

}  // namespace

Report verify_expq_identity(ExpQIdentity which, int order, int bound) {
  if (order < 0) throw ValidationError("negative truncation order");
  if (order > bound) throw ResourceError("truncation order exceeds the enumeration bound");
  const std::string identity = "expq:" + std::string(expq_name(which));
  const QTPoly t = QTPoly::x();
  const QTPoly one_minus_t = QTPoly(1) - t;

  if (which == ExpQIdentity::kQFixEuler) {
    const QTRPoly tt = QTRPoly::monomial(1, 0, 1, 0);
    const QTRPoly rr = QTRPoly::monomial(1, 0, 0, 1);
    TruncSeries<QTRPoly> family(order, SeriesScaling::kQFactorial);
    for (int n = 0; n <= order; ++n) family[n] = q_eulerian_fix(n, bound);
    auto denom = exp_q(order, tt) - exp_q(order, QTRPoly(1)).scaled(tt);
    auto rhs = exp_q(order, rr).scaled(QTRPoly(1) - tt);
    return compare_series(identity, order, denom * family, rhs);
  }

  TruncSeries<QTPoly> family(order, SeriesScaling::kQFactorial);
  for (int n = 0; n <= order; ++n) {
    switch (which) {
      case ExpQIdentity::kQEuler: family[n] = q_eulerian(n, bound); break;
      case ExpQIdentity::kQDerEuler: family[n] = derangement_poly(n, bound); break;
      case ExpQIdentity::kQBinomGF: family[n] = q_binomial_eulerian(n, bound); break;
      case ExpQIdentity::kQFixEuler: break;
    }
  }
  auto denom = exp_q(order, t) - exp_q(order, QTPoly(1)).scaled(t);
  TruncSeries<QTPoly> rhs(order, SeriesScaling::kQFactorial);
  switch (which) {
    case ExpQIdentity::kQEuler: rhs = exp_q(order, QTPoly(1)).scaled(one_minus_t); break;
    case ExpQIdentity::kQDerEuler: rhs[0] = one_minus_t; break;
    case ExpQIdentity::kQBinomGF: rhs = (exp_q(order, QTPoly(1)) * exp_q(order, t)).scaled(one_minus_t); break;
    case ExpQIdentity::kQFixEuler: break;
  }
  return compare_series(identity, order, denom * family, rhs);
}

Report verify_binomial_identities(int n, int bound) {
  if (n < 0) throw ValidationError("negative n");
  const QTPoly lhs = q_binomial_eulerian(n, bound);
  QTPoly shifted_sum;
  QTPoly fix_sum;
  for (int m = 0; m <= n; ++m) {
    const IntPoly qb = q_binomial(n, m);
    shifted_sum += times_q(q_eulerian(m, bound), qb).shifted(n - m);
    fix_sum += times_q(q_eulerian_fix(m, bound).r_as_t(), qb);
  }
  Report a{"binomial-eulerian:t^{n-m}-form", {{"n", n}}, lhs == shifted_sum, to_json(lhs), to_json(shifted_sum),
           std::nullopt, {}};
  Report b{"binomial-eulerian:A_m(q,t,t)-form", {{"n", n}}, lhs == fix_sum, to_json(lhs), to_json(fix_sum),
           std::nullopt, {}};
  return combine("binomial-identities", {{"n", n}}, {a, b});
}

Report verify_worpitzky(int n, int K, int bound) {
  if (n < 1) throw ValidationError("power-sum identity needs n >= 1");
  if (K < n) throw ValidationError("truncation K must be at least n");
  IntPoly powers;
  for (int k = 0; k <= K; ++k)
    powers += IntPoly::monomial(boost::multiprecision::pow(BigInt(k + 1), static_cast<unsigned>(n)), k);
  IntPoly factor(1);
  for (int i = 0; i <= n; ++i) factor *= int_poly({1, -1});
  const IntPoly product = (factor * powers).truncated(K + 1);
  const IntPoly a = eulerian_poly(n, bound);
  Report out{"power-sum", {{"n", n}, {"K", K}}, product == a, to_json(a), to_json(product), std::nullopt, {}};
  if (!out.passed) out.detail = "(1-t)^{n+1} times the power sum is not A_n(t) modulo t^{K+1}";
  return out;
}

Report verify_q_properties(FamilyTag family, int n, int bound) {
  int d = n - 1;
  int shift = 0;
  switch (family) {
    case FamilyTag::kEulerianQT: break;
    case FamilyTag::kBinomialEulerianQT: d = n; break;
    case FamilyTag::kDerangementQT:
      if (n < 2) throw ValidationError("derangement properties need n >= 2");
      d = n - 2;
      shift = 1;
      break;
    default: throw ValidationError("q-level properties apply to eulerian-qt, binomial-eulerian-qt and derangement-qt");
  }
  if (n < 1) throw ValidationError("q-level properties need n >= 1");
  const QTPoly p = family_poly(family, n, bound);
  if (shift == 1 && !p.coeff(0).is_zero()) throw ConsistencyError("derangement polynomial has a constant term");
  const QTPoly reduced(std::vector<IntPoly>(p.coeffs().begin() + std::min<std::ptrdiff_t>(shift, std::ssize(p.coeffs())),
                                            p.coeffs().end()));
  const std::vector<std::pair<std::string, long long>> params{{"n", n}};
  const std::string name = "q-properties:" + std::string(family_name(family));
  std::vector<Report> parts;
  const bool palindromic = is_palindromic(reduced, d);
  parts.push_back({name + ":palindromic", params, palindromic, to_json(reduced), d, std::nullopt, {}});
  parts.push_back({name + ":q-unimodal", params, is_b_unimodal(reduced, is_q_positive), to_json(reduced),
                   nlohmann::json(), std::nullopt, {}});
  Report gamma{name + ":q-gamma-positive", params, false, to_json(reduced), nlohmann::json(), std::nullopt, {}};
  if (palindromic) {
    const auto g = gamma_expand(reduced, d);
    auto gj = nlohmann::json::array();
    gamma.passed = true;
    for (const auto& c : g.gammas) {
      gj.push_back(to_json(c));
      gamma.passed = gamma.passed && is_q_positive(c);
    }
    gamma.gamma_vector = gamma.rhs = gj;
  }
  parts.push_back(gamma);
  Report out = combine(name, params, parts);
  out.gamma_vector = gamma.gamma_vector;
  return out;
}

}  // namespace gammapos
