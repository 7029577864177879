#include "gammapos/poly.hpp"

#include "gammapos/errors.hpp"

namespace gammapos {

IntPoly int_poly(std::initializer_list<long long> coeffs) {
  std::vector<BigInt> v;
  v.reserve(coeffs.size());
  for (long long c : coeffs) v.emplace_back(c);
  return IntPoly(std::move(v));
}

IntPoly q_integer(int n) { return t_integer<BigInt>(n); }

IntPoly q_factorial(int n) {
  IntPoly out(1);
  for (int j = 1; j <= n; ++j) out *= q_integer(j);
  return out;
}

IntPoly q_binomial(int n, int k) {
  if (k < 0 || k > n) return {};
  return divide_exact(q_factorial(n), q_factorial(k) * q_factorial(n - k));
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

IntPoly divide_exact(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw ConsistencyError("division by the zero polynomial");
  if (num.is_zero()) return {};
  std::vector<BigInt> rem(num.coeffs().begin(), num.coeffs().end());
  const int dd = den.degree();
  const BigInt& lead = den.coeffs().back();
  if (num.degree() < dd) throw ConsistencyError("inexact polynomial division");
  std::vector<BigInt> quot(static_cast<std::size_t>(num.degree() - dd + 1));
  for (int i = num.degree() - dd; i >= 0; --i) {
    BigInt& top = rem[static_cast<std::size_t>(i + dd)];
    if (top.is_zero()) continue;
    if (top % lead != 0) throw ConsistencyError("inexact polynomial division");
    BigInt c = top / lead;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i + j)] -= c * den.coeffs()[static_cast<std::size_t>(j)];
    quot[static_cast<std::size_t>(i)] = std::move(c);
  }
  for (const auto& r : rem)
    if (!r.is_zero()) throw ConsistencyError("inexact polynomial division");
  return IntPoly(std::move(quot));
}

BigInt evaluate(const IntPoly& p, const BigInt& v) {
  BigInt out = 0;
  for (int i = p.degree(); i >= 0; --i) out = out * v + p.coeffs()[static_cast<std::size_t>(i)];
  return out;
}

IntPoly at_q_one(const QTPoly& p) {
  return p.map([](const IntPoly& c) { return evaluate(c, 1); });
}

QTPoly lift_t(const IntPoly& p) {
  return p.map([](const BigInt& c) { return IntPoly(c); });
}

}  // namespace gammapos
