#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "gammapos/bigint.hpp"

namespace gammapos {

namespace detail {
template <class R>
bool coeff_is_zero(const R& c) {
  return is_zero(c);
}
}  // namespace detail

/// Dense univariate polynomial with coefficients in a commutative ring R.
///
/// Coefficients are indexed by exponent and trailing zeros are always
/// trimmed, so the zero polynomial has no stored coefficients and degree -1.
/// R must provide +, -, *, ==, a default-constructed zero, construction from
/// an integer, and a free function `is_zero(const R&)` found by ADL.
///
/// Nesting gives the multivariate rings used throughout the library:
/// `IntPoly` is Z[x], `QTPoly` is (Z[q])[t], and `Poly<SymPoly>` is the ring
/// of polynomials in t with symmetric-polynomial coefficients.
template <class R>
class Poly {
 public:
  using coeff_type = R;

  Poly() = default;

  Poly(R c) { // NOLINT(google-explicit-constructor)
    coeffs_.push_back(std::move(c));
    trim();
  }

  template <std::integral I>
  Poly(I c) : Poly(R(c)) {} // NOLINT(google-explicit-constructor)

  explicit Poly(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Poly monomial(R c, int exponent) {
    std::vector<R> v(static_cast<std::size_t>(exponent) + 1);
    v.back() = std::move(c);
    return Poly(std::move(v));
  }

  /// The variable itself.
  static Poly x() { return monomial(R(1), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of x^i; zero for i outside [0, degree].
  R coeff(int i) const {
    if (i < 0 || i > degree()) return R{};
    return coeffs_[static_cast<std::size_t>(i)];
  }

  std::span<const R> coeffs() const { return coeffs_; }

  R leading() const { return is_zero() ? R{} : coeffs_.back(); }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator-(Poly a) {
    for (auto& c : a.coeffs_) c = R{} - c;
    return a;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (detail::coeff_is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (detail::coeff_is_zero(b.coeffs_[j])) continue;
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return Poly(std::move(out));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// Every coefficient multiplied by `c`.
  Poly scaled(const R& c) const {
    std::vector<R> out;
    out.reserve(coeffs_.size());
    for (const auto& a : coeffs_) out.push_back(a * c);
    return Poly(std::move(out));
  }

  /// Multiplication by x^k, k >= 0.
  Poly shifted(int k) const {
    if (is_zero()) return {};
    std::vector<R> out(static_cast<std::size_t>(k));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return Poly(std::move(out));
  }

  /// Remainder modulo x^n.
  Poly truncated(int n) const {
    if (n <= 0) return {};
    auto end = coeffs_.begin() + std::min<std::ptrdiff_t>(n, std::ssize(coeffs_));
    return Poly(std::vector<R>(coeffs_.begin(), end));
  }

  /// Applies `f` to every coefficient (zero coefficients included).
  template <class F>
  auto map(F&& f) const -> Poly<std::invoke_result_t<F, const R&>> {
    using S = std::invoke_result_t<F, const R&>;
    std::vector<S> out;
    out.reserve(coeffs_.size());
    for (const auto& a : coeffs_) out.push_back(f(a));
    return Poly<S>(std::move(out));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && detail::coeff_is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<R> coeffs_;
};

template <class R>
bool is_zero(const Poly<R>& p) {
  return p.is_zero();
}

/// Z[x]. Houses A_n(t), [n]_q, q-binomials and integer gamma vectors.
using IntPoly = Poly<BigInt>;
/// (Z[q])[t]: outer index is the t-exponent, inner index the q-exponent.
using QTPoly = Poly<IntPoly>;

/// Builds an IntPoly from small integer coefficients, lowest degree first.
IntPoly int_poly(std::initializer_list<long long> coeffs);

/// [n]_x = 1 + x + ... + x^{n-1}; zero for n <= 0.
IntPoly q_integer(int n);

/// [n]_x! = [1]_x [2]_x ... [n]_x.
IntPoly q_factorial(int n);

/// Gaussian binomial coefficient; zero unless 0 <= k <= n.
IntPoly q_binomial(int n, int k);

/// Ordinary binomial coefficient; zero unless 0 <= k <= n.
BigInt binomial(int n, int k);

/// Exact quotient `num / den`. Throws ConsistencyError when the division
/// leaves a remainder or is not exact over Z.
IntPoly divide_exact(const IntPoly& num, const IntPoly& den);

/// Value at x = v.
BigInt evaluate(const IntPoly& p, const BigInt& v);

/// (1 + x)^e with coefficients lifted into R.
template <class R>
Poly<R> one_plus_x_pow(int e) {
  std::vector<R> out;
  out.reserve(static_cast<std::size_t>(e) + 1);
  for (int i = 0; i <= e; ++i) out.push_back(R(binomial(e, i)));
  return Poly<R>(std::move(out));
}

/// [n]_t = 1 + t + ... + t^{n-1} with coefficients lifted into R.
template <class R>
Poly<R> t_integer(int n) {
  std::vector<R> out;
  for (int i = 0; i < n; ++i) out.push_back(R(1));
  return Poly<R>(std::move(out));
}

/// Q(q,t) evaluated at q = 1.
IntPoly at_q_one(const QTPoly& p);

/// The q-polynomial `c` viewed as a t-constant in (Z[q])[t].
inline QTPoly q_constant(const IntPoly& c) { return QTPoly(c); }

/// An integer t-polynomial viewed in (Z[q])[t] with q-constant coefficients.
QTPoly lift_t(const IntPoly& p);

/// Every t-coefficient multiplied by the q-polynomial `c`.
inline QTPoly times_q(const QTPoly& p, const IntPoly& c) { return p.scaled(c); }

}  // namespace gammapos
