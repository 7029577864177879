#pragma once

#include <string>
#include <vector>

#include "gammapos/errors.hpp"
#include "gammapos/poly.hpp"

namespace gammapos {

/// Coefficients of a palindromic polynomial in the basis t^k (1+t)^{d-2k},
/// k = 0..floor(d/2).
template <class R>
struct GammaVector {
  int degree_bound = 0;
  std::vector<R> gammas;

  friend bool operator==(const GammaVector&, const GammaVector&) = default;
};

/// True iff the coefficient of t^j equals that of t^{d-j} for 0 <= j <= d.
template <class R>
bool is_palindromic(const Poly<R>& p, int d) {
  if (d < p.degree())
    throw DegreeBoundError("degree bound " + std::to_string(d) + " is below the degree " +
                           std::to_string(p.degree()));
  for (int j = 0; 2 * j < d; ++j)
    if (!(p.coeff(j) == p.coeff(d - j))) return false;
  return true;
}

/// Expands a palindromic polynomial with center d/2 in the gamma basis by
/// peeling off gamma_k t^k (1+t)^{d-2k} from the lowest degree upward.
template <class R>
GammaVector<R> gamma_expand(const Poly<R>& p, int d) {
  if (!is_palindromic(p, d)) throw PalindromicityError("polynomial is not palindromic with center d/2");
  GammaVector<R> out{d, {}};
  Poly<R> residual = p;
  for (int k = 0; 2 * k <= d; ++k) {
    R g = residual.coeff(k);
    residual -= one_plus_x_pow<R>(d - 2 * k).shifted(k).scaled(g);
    out.gammas.push_back(std::move(g));
  }
  if (!residual.is_zero()) throw ConsistencyError("nonzero residual after gamma peeling");
  return out;
}

/// Sum of gamma_k t^k (1+t)^{d-2k}.
template <class R>
Poly<R> gamma_contract(const GammaVector<R>& g) {
  Poly<R> out;
  for (int k = 0; k < static_cast<int>(g.gammas.size()); ++k) {
    if (is_zero(g.gammas[static_cast<std::size_t>(k)])) continue;
    out += one_plus_x_pow<R>(g.degree_bound - 2 * k).shifted(k).scaled(g.gammas[static_cast<std::size_t>(k)]);
  }
  return out;
}

/// Every coefficient satisfies `positive`.
template <class R, class Positive>
bool is_b_positive(const Poly<R>& p, Positive&& positive) {
  for (const auto& c : p.coeffs())
    if (!positive(c)) return false;
  return true;
}

/// a_0 <=_b a_1 <=_b ... <=_b a_c >=_b ... >=_b a_n for some c, where x <=_b y
/// means `positive(y - x)`. The longest b-increasing prefix is the only
/// candidate peak that needs checking.
template <class R, class Positive>
bool is_b_unimodal(const Poly<R>& p, Positive&& positive) {
  const int n = p.degree();
  int c = 0;
  while (c < n && positive(p.coeff(c + 1) - p.coeff(c))) ++c;
  for (int i = c; i < n; ++i)
    if (!positive(p.coeff(i) - p.coeff(i + 1))) return false;
  return true;
}

inline bool is_nonnegative(const BigInt& x) { return x >= 0; }

/// All coefficients of the q-polynomial are nonnegative.
inline bool is_q_positive(const IntPoly& p) {
  for (const auto& c : p.coeffs())
    if (c < 0) return false;
  return true;
}

}  // namespace gammapos
