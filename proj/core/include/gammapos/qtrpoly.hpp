#pragma once

#include <array>
#include <map>

#include "gammapos/poly.hpp"

namespace gammapos {

/// Sparse polynomial in q, t, r with integer coefficients. Stored
/// coefficients are always nonzero.
class QTRPoly {
 public:
  /// (q-exponent, t-exponent, r-exponent)
  using Exponent = std::array<int, 3>;

  QTRPoly() = default;
  QTRPoly(long long c); // NOLINT(google-explicit-constructor)
  QTRPoly(const BigInt& c); // NOLINT(google-explicit-constructor)

  /// A (q,t)-polynomial with r-degree zero.
  static QTRPoly from_qt(const QTPoly& p);
  static QTRPoly monomial(BigInt c, int q_exp, int t_exp, int r_exp);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponent, BigInt>& terms() const { return terms_; }
  BigInt coeff(int q_exp, int t_exp, int r_exp) const;

  QTRPoly& operator+=(const QTRPoly& o);
  QTRPoly& operator-=(const QTRPoly& o);
  friend QTRPoly operator+(QTRPoly a, const QTRPoly& b) { return a += b; }
  friend QTRPoly operator-(QTRPoly a, const QTRPoly& b) { return a -= b; }
  friend QTRPoly operator-(const QTRPoly& a) { return QTRPoly{} - a; }
  friend QTRPoly operator*(const QTRPoly& a, const QTRPoly& b);
  QTRPoly& operator*=(const QTRPoly& o) { return *this = *this * o; }
  friend bool operator==(const QTRPoly&, const QTRPoly&) = default;

  /// Sets r to 0 or 1 (or any integer).
  QTPoly at_r(long long value) const;
  /// Substitutes r := t, folding the r-exponent into the t-exponent.
  QTPoly r_as_t() const;

 private:
  void add_term(const Exponent& e, const BigInt& c);

  std::map<Exponent, BigInt> terms_;
};

inline bool is_zero(const QTRPoly& p) { return p.is_zero(); }

inline QTRPoly times_q(const QTRPoly& p, const IntPoly& c) {
  return p * QTRPoly::from_qt(QTPoly(c));
}

}  // namespace gammapos
