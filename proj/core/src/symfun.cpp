#include "gammapos/symfun.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>

#include "gammapos/eulerian.hpp"
#include "gammapos/render.hpp"

namespace gammapos {
namespace {

constexpr int kShiftBits = 8;

int byte_shift(int i) { return kShiftBits * (SymPoly::kMaxVariables - 1 - i); }

int exponent_at(SymPoly::Key key, int i) { return static_cast<int>((key >> byte_shift(i)) & 0xFFu); }

int key_degree(SymPoly::Key key) {
  int d = 0;
  for (int i = 0; i < SymPoly::kMaxVariables; ++i) d += exponent_at(key, i);
  return d;
}

void check_variables(int m) {
  if (m < 1) throw ValidationError("variable count must be positive");
  if (m > SymPoly::kMaxVariables)
    throw ResourceError("variable count " + std::to_string(m) + " exceeds " + std::to_string(SymPoly::kMaxVariables));
}

}  // namespace

SymPoly::SymPoly(long long c) : SymPoly(BigInt(c)) {}

SymPoly::SymPoly(const BigInt& c) {
  if (!c.is_zero()) terms_[0] = c;
}

SymPoly::Key SymPoly::pack(std::span<const int> exponents) {
  if (std::ssize(exponents) > kMaxVariables) throw ValidationError("too many variables");
  Key key = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > 255) throw ValidationError("exponent outside [0, 255]");
    key |= static_cast<Key>(exponents[i]) << byte_shift(static_cast<int>(i));
  }
  return key;
}

std::vector<int> SymPoly::unpack(Key key, int m) {
  std::vector<int> out(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) out[static_cast<std::size_t>(i)] = exponent_at(key, i);
  return out;
}

SymPoly SymPoly::monomial(int m, std::span<const int> exponents, BigInt c) {
  check_variables(m);
  if (std::ssize(exponents) > m) throw ValidationError("exponent vector longer than the variable count");
  SymPoly out;
  out.m_ = m;
  out.add_term(pack(exponents), c);
  return out;
}

SymPoly SymPoly::variable(int m, int i) {
  check_variables(m);
  if (i < 1 || i > m) throw ValidationError("variable index out of range");
  std::vector<int> e(static_cast<std::size_t>(m));
  e[static_cast<std::size_t>(i - 1)] = 1;
  return monomial(m, e);
}

int SymPoly::degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, key_degree(k));
  return d;
}

bool SymPoly::is_homogeneous(int n) const {
  return std::all_of(terms_.begin(), terms_.end(), [n](const auto& kv) { return key_degree(kv.first) == n; });
}

BigInt SymPoly::coeff(std::span<const int> exponents) const {
  auto it = terms_.find(pack(exponents));
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::vector<std::pair<std::vector<int>, BigInt>> SymPoly::terms() const {
  std::vector<std::pair<std::vector<int>, BigInt>> out;
  out.reserve(terms_.size());
  for (const auto& [k, c] : terms_) out.emplace_back(unpack(k, m_), c);
  return out;
}

SymPoly SymPoly::swapped(int i, int j) const {
  SymPoly out;
  out.m_ = m_;
  const int si = byte_shift(i - 1);
  const int sj = byte_shift(j - 1);
  for (const auto& [k, c] : terms_) {
    Key ei = (k >> si) & 0xFFu;
    Key ej = (k >> sj) & 0xFFu;
    Key cleared = k & ~(Key{0xFF} << si) & ~(Key{0xFF} << sj);
    out.terms_.emplace(cleared | (ei << sj) | (ej << si), c);
  }
  return out;
}

bool SymPoly::is_symmetric() const {
  for (int i = 1; i < m_; ++i)
    if (!(swapped(i, i + 1) == *this)) return false;
  return true;
}

SymPoly SymPoly::times_variable(int i, int e) const {
  if (i < 1 || i > kMaxVariables) throw ValidationError("variable index out of range");
  SymPoly out;
  out.m_ = std::max(m_, i);
  const Key step = static_cast<Key>(e) << byte_shift(i - 1);
  for (const auto& [k, c] : terms_) {
    if (exponent_at(k, i - 1) + e > 255) throw ValidationError("exponent overflow");
    out.terms_.emplace_hint(out.terms_.end(), k + step, c);
  }
  return out;
}

IntPoly SymPoly::principal_specialization() const {
  IntPoly out;
  for (const auto& [k, c] : terms_) {
    int e = 0;
    for (int i = 0; i < kMaxVariables; ++i) e += i * exponent_at(k, i);
    out += IntPoly::monomial(c, e);
  }
  return out;
}

void SymPoly::add_term(Key key, const BigInt& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  m_ = std::max(m_, o.m_);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
  m_ = std::max(m_, o.m_);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
  SymPoly out;
  out.m_ = std::max(a.m_, b.m_);
  if (a.is_zero() || b.is_zero()) return out;
  if (a.degree() + b.degree() > 255) throw ValidationError("degree overflow");
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) out.add_term(ka + kb, ca * cb);
  return out;
}

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  if (n >= 0) rec(n, n);
  return out;
}

SymPoly h_poly(int n, int m) {
  check_variables(m);
  if (n < 0) return {};
  // h_n(x_1..x_j) = h_n(x_1..x_{j-1}) + x_j h_{n-1}(x_1..x_j)
  std::vector<SymPoly> prev(static_cast<std::size_t>(n) + 1);
  for (int d = 0; d <= n; ++d) prev[static_cast<std::size_t>(d)] = SymPoly::monomial(m, std::vector<int>{}, d == 0 ? 1 : 0);
  for (int j = 1; j <= m; ++j) {
    std::vector<SymPoly> cur(prev.size());
    cur[0] = prev[0];
    for (int d = 1; d <= n; ++d)
      cur[static_cast<std::size_t>(d)] = prev[static_cast<std::size_t>(d)] + cur[static_cast<std::size_t>(d - 1)].times_variable(j);
    prev = std::move(cur);
  }
  return prev[static_cast<std::size_t>(n)];
}

std::string_view ribbon_class_name(RibbonClass c) {
  switch (c) {
    case RibbonClass::kH: return "H";
    case RibbonClass::kTildeH: return "tildeH";
    case RibbonClass::kH0: return "H0";
  }
  return "unknown";
}

RibbonClass parse_ribbon_class(std::string_view name) {
  for (auto c : {RibbonClass::kH, RibbonClass::kTildeH, RibbonClass::kH0})
    if (ribbon_class_name(c) == name) return c;
  throw ValidationError("unknown ribbon class '" + std::string(name) + "'");
}

void Ribbon::validate() const {
  if (n < 0) throw ValidationError("negative ribbon size");
  for (std::size_t i = 0; i < descents.size(); ++i) {
    if (descents[i] < 1 || descents[i] > n - 1) throw ValidationError("ribbon descent outside [n-1]");
    if (i > 0 && descents[i] <= descents[i - 1]) throw ValidationError("ribbon descents must be strictly increasing");
  }
}

bool Ribbon::in_class(RibbonClass c, int k) const {
  if (static_cast<int>(descents.size()) != k) return false;
  for (std::size_t i = 1; i < descents.size(); ++i)
    if (descents[i] == descents[i - 1] + 1) return false;
  const bool has_last = !descents.empty() && descents.back() == n - 1;
  const bool has_first = !descents.empty() && descents.front() == 1;
  switch (c) {
    case RibbonClass::kH: return !has_last;
    case RibbonClass::kTildeH: return true;
    case RibbonClass::kH0: return !has_last && !has_first;
  }
  return false;
}

std::vector<Ribbon> ribbons(int n, int k, RibbonClass c) {
  if (n < 1) throw ValidationError("ribbons need n >= 1");
  std::vector<Ribbon> out;
  Ribbon r{n, {}};
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(r.descents.size()) == k) {
      if (r.in_class(c, k)) out.push_back(r);
      return;
    }
    for (int i = next; i <= n - 1; ++i) {
      r.descents.push_back(i);
      rec(i + 2);
      r.descents.pop_back();
    }
  };
  if (k >= 0) rec(1);
  return out;
}

SymPoly ribbon_schur(const Ribbon& r, int m, WordMethod method) {
  r.validate();
  check_variables(m);
  const int n = r.n;
  if (n == 0) return SymPoly::monomial(m, std::vector<int>{});
  std::vector<bool> is_descent(static_cast<std::size_t>(n) + 1);
  for (int i : r.descents) is_descent[static_cast<std::size_t>(i)] = true;

  if (method == WordMethod::kExplicit) {
    SymPoly out = SymPoly::monomial(m, std::vector<int>{}, 0);
    std::vector<int> word(static_cast<std::size_t>(n), 1);
    while (true) {
      bool ok = true;
      for (int i = 1; i < n && ok; ++i)
        ok = (word[static_cast<std::size_t>(i - 1)] > word[static_cast<std::size_t>(i)]) == is_descent[static_cast<std::size_t>(i)];
      if (ok) {
        std::vector<int> e(static_cast<std::size_t>(m));
        for (int letter : word) ++e[static_cast<std::size_t>(letter - 1)];
        out += SymPoly::monomial(m, e);
      }
      int pos = n - 1;
      while (pos >= 0 && word[static_cast<std::size_t>(pos)] == m) word[static_cast<std::size_t>(pos--)] = 1;
      if (pos < 0) break;
      ++word[static_cast<std::size_t>(pos)];
    }
    return out;
  }

  // state[l] = sum of x_w over valid prefixes ending in letter l+1
  std::vector<SymPoly> state(static_cast<std::size_t>(m));
  for (int l = 1; l <= m; ++l) state[static_cast<std::size_t>(l - 1)] = SymPoly::variable(m, l);
  for (int i = 1; i < n; ++i) {
    std::vector<SymPoly> next(static_cast<std::size_t>(m));
    SymPoly running = SymPoly::monomial(m, std::vector<int>{}, 0);
    if (is_descent[static_cast<std::size_t>(i)]) {
      for (int l = m; l >= 1; --l) {
        next[static_cast<std::size_t>(l - 1)] = running.times_variable(l);
        running += state[static_cast<std::size_t>(l - 1)];
      }
    } else {
      for (int l = 1; l <= m; ++l) {
        running += state[static_cast<std::size_t>(l - 1)];
        next[static_cast<std::size_t>(l - 1)] = running.times_variable(l);
      }
    }
    state = std::move(next);
  }
  SymPoly out = SymPoly::monomial(m, std::vector<int>{}, 0);
  for (const auto& s : state) out += s;
  return out;
}

IntPoly ribbon_maj_poly(const Ribbon& r, int bound) {
  r.validate();
  DescentClassCheck check = descent_class_check(r.n, r.descents, bound);
  if (!check.equal) throw ConsistencyError("inv and inverse maj differ on a descent class");
  return check.inverse_maj_poly;
}

namespace {

std::vector<SymPoly> h_table(int n, int m) {
  std::vector<SymPoly> h;
  for (int k = 0; k <= n; ++k) h.push_back(h_poly(k, m));
  return h;
}

SymPolyT t_bracket(int n) { return t_integer<SymPoly>(n); }

const SymPolyT& at(const std::vector<SymPolyT>& v, int i) { return v[static_cast<std::size_t>(i)]; }
const SymPoly& at(const std::vector<SymPoly>& v, int i) { return v[static_cast<std::size_t>(i)]; }

}  // namespace

std::vector<SymPolyT> Q_upto(int n, int m) {
  check_variables(m);
  const auto h = h_table(n, m);
  std::vector<SymPolyT> Q{SymPolyT(at(h, 0))};
  for (int j = 1; j <= n; ++j) {
    SymPolyT q(at(h, j));
    for (int k = 0; k <= j - 2; ++k) q += (at(Q, k).scaled(at(h, j - k)) * t_bracket(j - k - 1)).shifted(1);
    Q.push_back(std::move(q));
  }
  return Q;
}

SymPolyT Q_n(int n, int m) { return Q_upto(n, m).back(); }

SymPolyT tildeQ_n(int n, int m) {
  const auto Q = Q_upto(n, m);
  SymPolyT sum;
  for (int j = 1; j <= n; ++j) sum += at(Q, j).scaled(h_poly(n - j, m));
  return SymPolyT(h_poly(n, m)) + sum.shifted(1);
}

std::vector<SymPolyT> Q0_upto(int n, int m) {
  check_variables(m);
  const auto h = h_table(n, m);
  std::vector<SymPolyT> Q0{SymPolyT(at(h, 0))};
  for (int j = 1; j <= n; ++j) {
    SymPolyT q;
    for (int k = 2; k <= j; ++k) q += at(Q0, j - k).scaled(at(h, k)) * t_bracket(k - 1);
    Q0.push_back(q.shifted(1));
  }
  return Q0;
}

SymPolyT Q0_n(int n, int m) { return Q0_upto(n, m).back(); }

namespace {

Report compare_sym(std::string identity, std::vector<std::pair<std::string, long long>> params, const SymPolyT& lhs,
                   const SymPolyT& rhs) {
  Report out{std::move(identity), std::move(params), lhs == rhs, to_json(lhs), to_json(rhs), std::nullopt, {}};
  if (!out.passed) {
    for (int j = 0; j <= std::max(lhs.degree(), rhs.degree()); ++j)
      if (!(lhs.coeff(j) == rhs.coeff(j))) {
        out.detail = "first differing coefficient at t^" + std::to_string(j);
        break;
      }
  }
  return out;
}

}  // namespace

Report verify_family_forms(int n, int m) {
  if (n < 0) throw ValidationError("negative n");
  const auto h = h_table(n, m);
  const auto Q = Q_upto(n, m);
  const auto Q0 = Q0_upto(n, m);
  std::vector<SymPolyT> tQ;
  for (int j = 0; j <= n; ++j) tQ.push_back(tildeQ_n(j, m));
  const SymPolyT t = SymPolyT::x();
  const SymPolyT one_minus_t = SymPolyT(1) - t;
  // H(tz) - t H(z) has z^i coefficient (t^i - t) h_i.
  auto denom = [&](int i) { return (SymPolyT(1).shifted(i) - t).scaled(at(h, i)); };

  std::vector<Report> parts;
  const std::vector<std::pair<std::string, long long>> params{{"n", n}, {"m", m}};
  for (int j = 0; j <= n; ++j) {
    const std::vector<std::pair<std::string, long long>> pj{{"j", j}, {"m", m}};
    // (Q(z) - 1)(1 - t sum_{k>=2} [k-1]_t h_k z^k) = sum_{k>=1} [k]_t h_k z^k
    SymPolyT lhs = j == 0 ? SymPolyT{} : at(Q, j);
    for (int k = 2; k <= j; ++k) {
      if (j - k == 0) continue;
      lhs -= (at(Q, j - k).scaled(at(h, k)) * t_bracket(k - 1)).shifted(1);
    }
    SymPolyT rhs = j == 0 ? SymPolyT{} : t_bracket(j).scaled(at(h, j));
    parts.push_back(compare_sym("Q-rational-form", pj, lhs, rhs));

    SymPolyT q_gf_lhs, tq_gf_lhs, q0_gf_lhs, tq_gf_rhs, tq_sum;
    for (int i = 0; i <= j; ++i) {
      q_gf_lhs += denom(i) * at(Q, j - i);
      tq_gf_lhs += denom(i) * at(tQ, j - i);
      q0_gf_lhs += denom(i) * at(Q0, j - i);
      tq_gf_rhs += SymPolyT(at(h, j - i) * at(h, i)).shifted(i);
      tq_sum += at(Q, i).scaled(at(h, j - i)).shifted(j - i);
    }
    parts.push_back(compare_sym("Q-generating-function", pj, q_gf_lhs, one_minus_t.scaled(at(h, j))));
    parts.push_back(compare_sym("tildeQ-generating-function", pj, tq_gf_lhs, one_minus_t * tq_gf_rhs));
    parts.push_back(compare_sym("tildeQ-shifted-sum", pj, at(tQ, j), tq_sum));
    parts.push_back(compare_sym("Q0-generating-function", pj, q0_gf_lhs, j == 0 ? one_minus_t : SymPolyT{}));
  }
  return combine("symmetric-family-forms", params, parts);
}

SymPoly gamma_sym(int n, int k, RibbonClass variant, int m) {
  SymPoly out = SymPoly::monomial(m, std::vector<int>{}, 0);
  for (const auto& r : ribbons(n, k, variant)) out += ribbon_schur(r, m);
  return out;
}

std::string_view sym_family_name(SymFamily f) {
  switch (f) {
    case SymFamily::kQ: return "Q";
    case SymFamily::kTildeQ: return "tildeQ";
    case SymFamily::kQ0: return "Q0";
  }
  return "unknown";
}

SymFamily parse_sym_family(std::string_view name) {
  for (auto f : {SymFamily::kQ, SymFamily::kTildeQ, SymFamily::kQ0})
    if (sym_family_name(f) == name) return f;
  throw ValidationError("unknown symmetric family '" + std::string(name) + "'");
}

SymPolyT sym_family_poly(SymFamily f, int n, int m) {
  switch (f) {
    case SymFamily::kQ: return Q_n(n, m);
    case SymFamily::kTildeQ: return tildeQ_n(n, m);
    case SymFamily::kQ0: return Q0_n(n, m);
  }
  throw ValidationError("unknown symmetric family");
}

Report verify_sym_gamma(SymFamily which, int n, int m) {
  if (n < 1) throw ValidationError("symmetric gamma expansion needs n >= 1");
  int d = 0;
  int shift = 0;
  RibbonClass variant = RibbonClass::kH;
  switch (which) {
    case SymFamily::kQ: d = n - 1; variant = RibbonClass::kH; break;
    case SymFamily::kTildeQ: d = n; variant = RibbonClass::kTildeH; break;
    case SymFamily::kQ0: d = n - 2; shift = 1; variant = RibbonClass::kH0; break;
  }
  const SymPolyT target = sym_family_poly(which, n, m);
  GammaVector<SymPoly> g{d, {}};
  for (int k = 0; 2 * k <= d; ++k) g.gammas.push_back(gamma_sym(n, k, variant, m));
  const SymPolyT contracted = d < 0 ? SymPolyT{} : gamma_contract(g).shifted(shift);

  Report out = compare_sym("sym-gamma:" + std::string(sym_family_name(which)), {{"n", n}, {"m", m}}, target, contracted);
  auto gj = nlohmann::json::array();
  for (const auto& c : g.gammas) gj.push_back(to_json(c));
  out.gamma_vector = gj;
  if (out.passed && d >= 0) {
    // Peeling the family polynomial must give the ribbon sums back.
    SymPolyT reduced(std::vector<SymPoly>(target.coeffs().begin() + std::min<std::ptrdiff_t>(shift, std::ssize(target.coeffs())),
                                          target.coeffs().end()));
    if (!(gamma_expand(reduced, d) == g)) {
      out.passed = false;
      out.detail = "peeled gamma vector differs from the ribbon sums";
    }
  }
  return out;
}

Report verify_gessel_words(int n, int m, WordMethod method) {
  check_variables(m);
  if (n < 1) throw ValidationError("word sums need n >= 1");
  if (method == WordMethod::kExplicit && (n > 5 || m > 5))
    throw ResourceError("explicit word enumeration is limited to n, m <= 5");

  // parts[d]: words with d descents; final_ok restricts to w_{n-1} <= w_n.
  std::vector<SymPoly> all_parts(static_cast<std::size_t>(n) + 1, SymPoly::monomial(m, std::vector<int>{}, 0));
  std::vector<SymPoly> final_parts = all_parts;

  if (method == WordMethod::kExplicit) {
    std::vector<int> word(static_cast<std::size_t>(n), 1);
    while (true) {
      int des = 0;
      bool double_descent = false;
      bool prev_desc = false;
      for (int i = 1; i < n; ++i) {
        bool d = word[static_cast<std::size_t>(i - 1)] > word[static_cast<std::size_t>(i)];
        if (d && prev_desc) double_descent = true;
        des += d;
        prev_desc = d;
      }
      if (!double_descent) {
        std::vector<int> e(static_cast<std::size_t>(m));
        for (int letter : word) ++e[static_cast<std::size_t>(letter - 1)];
        SymPoly x = SymPoly::monomial(m, e);
        all_parts[static_cast<std::size_t>(des)] += x;
        if (!prev_desc) final_parts[static_cast<std::size_t>(des)] += x;
      }
      int pos = n - 1;
      while (pos >= 0 && word[static_cast<std::size_t>(pos)] == m) word[static_cast<std::size_t>(pos--)] = 1;
      if (pos < 0) break;
      ++word[static_cast<std::size_t>(pos)];
    }
  } else {
    // state[(letter, last step was a descent, des)]
    struct Key {
      int letter;
      bool desc;
      int des;
      auto operator<=>(const Key&) const = default;
    };
    std::map<Key, SymPoly> state;
    for (int l = 1; l <= m; ++l) state[{l, false, 0}] = SymPoly::variable(m, l);
    for (int i = 1; i < n; ++i) {
      std::map<Key, SymPoly> next;
      for (const auto& [k, v] : state) {
        for (int l = 1; l <= m; ++l) {
          const bool d = k.letter > l;
          if (d && k.desc) continue;
          auto& slot = next[{l, d, k.des + (d ? 1 : 0)}];
          slot += v.times_variable(l);
        }
      }
      state = std::move(next);
    }
    for (const auto& [k, v] : state) {
      all_parts[static_cast<std::size_t>(k.des)] += v;
      if (!k.desc) final_parts[static_cast<std::size_t>(k.des)] += v;
    }
  }

  SymPolyT W, tildeW;
  for (int d = 0; d <= n; ++d) {
    const auto& fp = final_parts[static_cast<std::size_t>(d)];
    const auto& ap = all_parts[static_cast<std::size_t>(d)];
    if (!fp.is_zero()) {
      if (n - 1 - 2 * d < 0) throw ConsistencyError("word with too many descents");
      W += one_plus_x_pow<SymPoly>(n - 1 - 2 * d).shifted(d).scaled(fp);
    }
    if (!ap.is_zero()) {
      if (n - 2 * d < 0) throw ConsistencyError("word with too many descents");
      tildeW += one_plus_x_pow<SymPoly>(n - 2 * d).shifted(d).scaled(ap);
    }
  }
  const std::vector<std::pair<std::string, long long>> params{{"n", n}, {"m", m}};
  return combine(method == WordMethod::kExplicit ? "gessel-words-explicit" : "gessel-words-dp", params,
                 {compare_sym("W=Q", params, W, Q_n(n, m)), compare_sym("tildeW=tildeQ", params, tildeW, tildeQ_n(n, m))});
}

SymPoly schur_poly(const Partition& lambda, int m) {
  check_variables(m);
  if (std::ssize(lambda) > m) return SymPoly::monomial(m, std::vector<int>{}, 0);
  const int size = std::accumulate(lambda.begin(), lambda.end(), 0);
  std::vector<int> target(static_cast<std::size_t>(m));
  std::copy(lambda.begin(), lambda.end(), target.begin());
  std::map<std::vector<int>, SymPoly> state;
  state[std::vector<int>(static_cast<std::size_t>(m))] = SymPoly::monomial(m, std::vector<int>{});
  for (int i = 1; i <= m; ++i) {
    std::map<std::vector<int>, SymPoly> next;
    for (const auto& [mu, v] : state) {
      std::vector<int> nu = mu;
      // nu/mu is a horizontal strip inside lambda: mu_j <= nu_j <= min(lambda_j, mu_{j-1}).
      std::function<void(int, int)> rec = [&](int j, int added) {
        if (j == m) {
          next[nu] += v.times_variable(i, added);
          return;
        }
        const int hi = std::min(target[static_cast<std::size_t>(j)], j == 0 ? size : mu[static_cast<std::size_t>(j - 1)]);
        for (int val = mu[static_cast<std::size_t>(j)]; val <= hi; ++val) {
          nu[static_cast<std::size_t>(j)] = val;
          rec(j + 1, added + val - mu[static_cast<std::size_t>(j)]);
        }
        nu[static_cast<std::size_t>(j)] = mu[static_cast<std::size_t>(j)];
      };
      rec(0, 0);
    }
    state = std::move(next);
  }
  auto it = state.find(target);
  return it == state.end() ? SymPoly::monomial(m, std::vector<int>{}, 0) : it->second;
}

std::map<Partition, BigInt> schur_expand(const SymPoly& p, int n) {
  std::map<Partition, BigInt> out;
  if (p.is_zero()) return out;
  if (!p.is_homogeneous(n)) throw ValidationError("Schur expansion needs a homogeneous polynomial of degree " + std::to_string(n));
  if (n == 0) {
    out[{}] = p.coeff(std::vector<int>{});
    return out;
  }
  const int m = p.variables();
  if (m < n) throw ValidationError("Schur expansion needs at least n variables");
  SymPoly residual = p;
  for (const auto& lambda : partitions(n)) {
    BigInt c = residual.coeff(lambda);
    if (c.is_zero()) continue;
    residual -= schur_poly(lambda, m) * SymPoly(c);
    out[lambda] = c;
  }
  if (!residual.is_zero()) throw NotSymmetricError("nonzero residual after Schur elimination");
  return out;
}

SchurExpansionT schur_expand(const SymPolyT& p, int n, int m) {
  check_variables(m);
  if (m < n) throw ValidationError("Schur expansion needs m >= n");
  SchurExpansionT out;
  for (int j = 0; j <= p.degree(); ++j) {
    SymPoly c = p.coeff(j);
    if (c.variables() > m) throw ValidationError("polynomial has more than m variables");
    if (c.is_zero()) continue;
    c += SymPoly::monomial(m, std::vector<int>{}, 0);  // widen to m variables
    for (const auto& [lambda, a] : schur_expand(c, n)) out[lambda] += IntPoly::monomial(a, j);
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

bool is_schur_positive(const SymPoly& p) {
  if (p.is_zero()) return true;
  for (const auto& [lambda, c] : schur_expand(p, p.degree()))
    if (c < 0) return false;
  return true;
}

std::vector<std::vector<std::vector<int>>> standard_tableaux(const Partition& lambda) {
  const int n = std::accumulate(lambda.begin(), lambda.end(), 0);
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> t(lambda.size());
  std::function<void(int)> rec = [&](int next) {
    if (next > n) {
      out.push_back(t);
      return;
    }
    for (std::size_t r = 0; r < lambda.size(); ++r) {
      const auto len = t[r].size();
      if (std::cmp_greater_equal(len, lambda[r])) continue;
      if (r > 0 && t[r - 1].size() <= len) continue;
      t[r].push_back(next);
      rec(next + 1);
      t[r].pop_back();
    }
  };
  rec(1);
  return out;
}

IntPoly syt_maj_poly(const Partition& lambda) {
  const int n = std::accumulate(lambda.begin(), lambda.end(), 0);
  if (n > 8) throw ResourceError("standard tableau enumeration is limited to n <= 8");
  IntPoly out;
  for (const auto& t : standard_tableaux(lambda)) {
    std::vector<std::size_t> row(static_cast<std::size_t>(n) + 2);
    for (std::size_t r = 0; r < t.size(); ++r)
      for (int v : t[r]) row[static_cast<std::size_t>(v)] = r;
    int maj = 0;
    for (int i = 1; i < n; ++i)
      if (row[static_cast<std::size_t>(i + 1)] > row[static_cast<std::size_t>(i)]) maj += i;
    out += IntPoly::monomial(1, maj);
  }
  return out;
}

PrincipalSpecialization ps_exact(const SchurExpansionT& e, int n) {
  PrincipalSpecialization out{{}, n};
  for (const auto& [lambda, c] : e) {
    if (std::accumulate(lambda.begin(), lambda.end(), 0) != n) throw ValidationError("partition of the wrong size");
    out.numerator += lift_t(c).scaled(syt_maj_poly(lambda));
  }
  return out;
}

namespace {

QTPoly specialize(const SymPolyT& p) {
  return p.map([](const SymPoly& c) { return c.principal_specialization(); });
}

QTPoly mod_q(const QTPoly& p, int m) {
  return p.map([m](const IntPoly& c) { return c.truncated(m); });
}

Report ps_check(std::string identity, int n, int m, const SymPolyT& family, const QTPoly& target) {
  const std::vector<std::pair<std::string, long long>> params{{"n", n}, {"m", m}};
  const auto spec = ps_exact(schur_expand(family, n, m), n);
  Report exact{identity + ":exact", params, spec.numerator == target, to_json(target), to_json(spec.numerator),
               std::nullopt, {}};
  IntPoly denom(1);
  for (int i = 1; i <= n; ++i) denom *= IntPoly(1) - IntPoly::monomial(1, i);
  const QTPoly truncated = mod_q(times_q(specialize(family), denom), m);
  const QTPoly expected = mod_q(target, m);
  Report modular{identity + ":mod-q^m", params, truncated == expected, to_json(expected), to_json(truncated),
                 std::nullopt, {}};
  return combine(std::move(identity), params, {exact, modular});
}

}  // namespace

Report verify_ps_theorems(int n, int m, int bound) {
  if (n < 0) throw ValidationError("negative n");
  check_variables(m);
  if (m < n) throw ValidationError("principal specialization check needs m >= n");
  const std::vector<std::pair<std::string, long long>> params{{"n", n}, {"m", m}};
  return combine("principal-specialization", params,
                 {ps_check("ps(Q_n)=A_n", n, m, Q_n(n, m), q_eulerian(n, bound)),
                  ps_check("ps(tildeQ_n)=tildeA_n", n, m, tildeQ_n(n, m), q_binomial_eulerian(n, bound))});
}

Report verify_sym_cgk(int r, int s, int m) {
  if (r < 1 || s < 1) throw ValidationError("r and s must be positive");
  const int total = r + s;
  const auto Q = Q_upto(total, m);
  auto side = [&](int j) {
    SymPoly acc = SymPoly::monomial(m, std::vector<int>{}, 0);
    for (int k = 1; k <= total; ++k) acc += h_poly(total - k, m) * at(Q, k).coeff(j);
    return acc;
  };
  SymPoly lhs = side(r - 1);
  SymPoly rhs = side(s - 1);
  return Report{"sym-cgk", {{"r", r}, {"s", s}, {"m", m}}, lhs == rhs, to_json(lhs), to_json(rhs), std::nullopt, {}};
}

Report verify_procesi_identity(int n, int m) {
  if (n < 1) throw ValidationError("blow-up identity needs n >= 1");
  const auto Q = Q_upto(n, m);
  SymPolyT lhs = t_bracket(n + 1).scaled(h_poly(n, m));
  for (int j = 1; j <= n - 1; ++j) lhs += (t_bracket(n - j).scaled(h_poly(n - j, m)) * at(Q, j)).shifted(1);
  return compare_sym("blow-up-identity", {{"n", n}, {"m", m}}, lhs, tildeQ_n(n, m));
}

Report verify_schur_properties(SymFamily which, int n, int m) {
  if (n < 1) throw ValidationError("Schur properties need n >= 1");
  int d = n - 1;
  int shift = 0;
  RibbonClass variant = RibbonClass::kH;
  switch (which) {
    case SymFamily::kQ: break;
    case SymFamily::kTildeQ: d = n; variant = RibbonClass::kTildeH; break;
    case SymFamily::kQ0:
      if (n < 2) throw ValidationError("Q0 properties need n >= 2");
      d = n - 2;
      shift = 1;
      variant = RibbonClass::kH0;
      break;
  }
  const SymPolyT p = sym_family_poly(which, n, m);
  if (shift == 1 && !p.coeff(0).is_zero()) throw ConsistencyError("Q0 has a constant term");
  const SymPolyT reduced(std::vector<SymPoly>(p.coeffs().begin() + std::min<std::ptrdiff_t>(shift, std::ssize(p.coeffs())),
                                              p.coeffs().end()));
  const std::vector<std::pair<std::string, long long>> params{{"n", n}, {"m", m}};
  const std::string name = "schur-properties:" + std::string(sym_family_name(which));
  auto positive = [](const SymPoly& c) { return is_schur_positive(c); };

  std::vector<Report> parts;
  parts.push_back({name + ":palindromic", params, is_palindromic(reduced, d), nlohmann::json(), d, std::nullopt, {}});
  const auto expansion = schur_expand(reduced, n, m);
  bool nonneg = true;
  for (const auto& [lambda, c] : expansion) nonneg = nonneg && is_q_positive(c);
  parts.push_back({name + ":schur-positive", params, nonneg, to_json(expansion), nlohmann::json(), std::nullopt, {}});
  parts.push_back({name + ":schur-unimodal", params, is_b_unimodal(reduced, positive), nlohmann::json(),
                   nlohmann::json(), std::nullopt, {}});
  bool gamma_nonneg = true;
  auto gj = nlohmann::json::array();
  for (int k = 0; 2 * k <= d; ++k) {
    const SymPoly g = gamma_sym(n, k, variant, m);
    const auto ge = schur_expand(g, n);
    nlohmann::json entry = nlohmann::json::array();
    for (const auto& [lambda, c] : ge) {
      entry.push_back({{"partition", lambda}, {"coeff", c.str()}});
      gamma_nonneg = gamma_nonneg && c >= 0;
    }
    gj.push_back(entry);
  }
  parts.push_back({name + ":schur-gamma-positive", params, gamma_nonneg, gj, nlohmann::json(), std::nullopt, {}});
  Report out = combine(name, params, parts);
  out.gamma_vector = gj;
  return out;
}

Report verify_pieri(int k, int m) {
  check_variables(m);
  if (k < 0) throw ValidationError("negative degree");
  if (m < k) throw ValidationError("Pieri check needs m >= k");
  std::vector<Report> parts;
  for (int j = 0; 2 * j <= k; ++j) {
    const auto lhs = schur_expand(h_poly(j, m) * h_poly(k - j, m), k);
    std::map<Partition, BigInt> rhs;
    for (int i = 0; i <= j; ++i) {
      Partition lambda{k - i};
      if (i > 0) lambda.push_back(i);
      if (k - i > 0) rhs[lambda] += 1;
      else rhs[{}] += 1;
    }
    auto encode = [](const std::map<Partition, BigInt>& e) {
      nlohmann::json out = nlohmann::json::array();
      for (const auto& [lambda, c] : e) out.push_back({{"partition", lambda}, {"coeff", c.str()}});
      return out;
    };
    parts.push_back({"pieri", {{"j", j}, {"k", k}}, lhs == rhs, encode(lhs), encode(rhs), std::nullopt, {}});
  }
  return combine("pieri", {{"k", k}, {"m", m}}, parts);
}

nlohmann::json to_json(const SymPoly& p) {
  auto out = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({{"exponents", e}, {"coeff", c.str()}});
  return out;
}

nlohmann::json to_json(const SymPolyT& p) {
  auto out = nlohmann::json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

nlohmann::json to_json(const SchurExpansionT& e) {
  auto out = nlohmann::json::array();
  for (const auto& [lambda, c] : e) out.push_back({{"partition", lambda}, {"t_poly", to_json(c)}});
  return out;
}

std::string to_text(const SymPoly& p) {
  if (p.is_zero()) return "0";
  auto terms = p.terms();
  std::string out;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    BigInt a = abs(c);
    std::string body = mono.empty() ? a.str() : (a == 1 ? mono : a.str() + "*" + mono);
    if (out.empty())
      out = (c < 0 ? "-" : "") + body;
    else
      out += (c < 0 ? " - " : " + ") + body;
  }
  return out;
}

}  // namespace gammapos
