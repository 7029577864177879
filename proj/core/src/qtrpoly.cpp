#include "gammapos/qtrpoly.hpp"

namespace gammapos {

QTRPoly::QTRPoly(long long c) : QTRPoly(BigInt(c)) {}

QTRPoly::QTRPoly(const BigInt& c) {
  if (!c.is_zero()) terms_[{0, 0, 0}] = c;
}

QTRPoly QTRPoly::from_qt(const QTPoly& p) {
  QTRPoly out;
  for (int j = 0; j <= p.degree(); ++j) {
    const IntPoly& c = p.coeffs()[static_cast<std::size_t>(j)];
    for (int i = 0; i <= c.degree(); ++i) out.add_term({i, j, 0}, c.coeffs()[static_cast<std::size_t>(i)]);
  }
  return out;
}

QTRPoly QTRPoly::monomial(BigInt c, int q_exp, int t_exp, int r_exp) {
  QTRPoly out;
  out.add_term({q_exp, t_exp, r_exp}, c);
  return out;
}

BigInt QTRPoly::coeff(int q_exp, int t_exp, int r_exp) const {
  auto it = terms_.find({q_exp, t_exp, r_exp});
  return it == terms_.end() ? BigInt(0) : it->second;
}

void QTRPoly::add_term(const Exponent& e, const BigInt& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

QTRPoly& QTRPoly::operator+=(const QTRPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

QTRPoly& QTRPoly::operator-=(const QTRPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

QTRPoly operator*(const QTRPoly& a, const QTRPoly& b) {
  QTRPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return out;
}

QTPoly QTRPoly::at_r(long long value) const {
  QTPoly out;
  for (const auto& [e, c] : terms_) {
    BigInt w = c * boost::multiprecision::pow(BigInt(value), static_cast<unsigned>(e[2]));
    out += QTPoly::monomial(IntPoly::monomial(w, e[0]), e[1]);
  }
  return out;
}

QTPoly QTRPoly::r_as_t() const {
  QTPoly out;
  for (const auto& [e, c] : terms_) out += QTPoly::monomial(IntPoly::monomial(c, e[0]), e[1] + e[2]);
  return out;
}

}  // namespace gammapos
