#pragma once

#include <string>
#include <vector>

#include "gammapos/errors.hpp"
#include "gammapos/poly.hpp"
#include "gammapos/qtrpoly.hpp"

namespace gammapos {

enum class SeriesScaling {
  kPlain,        ///< sum c_n z^n
  kQFactorial,   ///< sum c_n z^n / [n]_q!
};

/// Power series in z truncated at z^N. With q-factorial scaling the stored
/// c_n are the numerators over [n]_q!, and products use the q-binomial
/// convolution so every coefficient stays a polynomial.
///
/// R is QTPoly or QTRPoly.
template <class R = QTPoly>
class TruncSeries {
 public:
  TruncSeries(int order, SeriesScaling scaling)
      : order_(order), scaling_(scaling), coeffs_(static_cast<std::size_t>(order) + 1) {
    if (order < 0) throw ValidationError("negative truncation order");
  }

  /// Builds from explicit coefficients c_0..c_k; missing ones are zero,
  /// extra ones are dropped.
  TruncSeries(int order, SeriesScaling scaling, std::vector<R> coeffs) : TruncSeries(order, scaling) {
    for (std::size_t i = 0; i < coeffs.size() && i < coeffs_.size(); ++i) coeffs_[i] = std::move(coeffs[i]);
  }

  int order() const { return order_; }
  SeriesScaling scaling() const { return scaling_; }
  const R& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  R& operator[](int n) { return coeffs_.at(static_cast<std::size_t>(n)); }
  const std::vector<R>& coeffs() const { return coeffs_; }

  TruncSeries& operator+=(const TruncSeries& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  TruncSeries& operator-=(const TruncSeries& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.check_compatible(b);
    TruncSeries out(a.order_, a.scaling_);
    for (int n = 0; n <= a.order_; ++n) {
      R acc{};
      for (int k = 0; k <= n; ++k) {
        R term = a[k] * b[n - k];
        if (a.scaling_ == SeriesScaling::kQFactorial) term = times_q(term, q_binomial(n, k));
        acc += term;
      }
      out[n] = std::move(acc);
    }
    return out;
  }

  /// Every coefficient multiplied by the z-free element `c`.
  TruncSeries scaled(const R& c) const {
    TruncSeries out(*this);
    for (auto& x : out.coeffs_) x = x * c;
    return out;
  }

  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

  /// Lowest z-degree at which the series differ, or -1.
  int first_difference(const TruncSeries& o) const {
    check_compatible(o);
    for (int n = 0; n <= order_; ++n)
      if (!(coeffs_[static_cast<std::size_t>(n)] == o.coeffs_[static_cast<std::size_t>(n)])) return n;
    return -1;
  }

 private:
  void check_compatible(const TruncSeries& o) const {
    if (order_ != o.order_ || scaling_ != o.scaling_)
      throw ValidationError("series with different order or scaling");
  }

  int order_;
  SeriesScaling scaling_;
  std::vector<R> coeffs_;
};

/// exp_q(c z) in q-factorial scaling: the n-th numerator is c^n.
template <class R>
TruncSeries<R> exp_q(int order, const R& c) {
  TruncSeries<R> out(order, SeriesScaling::kQFactorial);
  R power(1);
  for (int n = 0; n <= order; ++n) {
    out[n] = power;
    power = power * c;
  }
  return out;
}

}  // namespace gammapos
