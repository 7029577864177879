#include "gammapos/permstat.hpp"

#include <charconv>

namespace gammapos {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw ValidationError("not a permutation of {1.." + std::to_string(n) + "}");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> v;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '0' || c > '9') throw ValidationError("bad permutation character '" + std::string(1, c) + "'");
      v.push_back(c - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = std::min(text.find(',', pos), text.size());
      int value = 0;
      auto field = text.substr(pos, end - pos);
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (ec != std::errc() || ptr != field.data() + field.size() || field.empty())
        throw ValidationError("bad permutation entry '" + std::string(field) + "'");
      v.push_back(value);
      pos = end + 1;
    }
  }
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

std::string Permutation::to_string() const {
  std::string out;
  const bool digits = size() <= 9;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (!digits && i > 0) out += ',';
    out += std::to_string(images_[i]);
  }
  return out;
}

bool StatRecord::has_double_descent() const {
  for (std::size_t i = 1; i < des_set.size(); ++i)
    if (des_set[i] == des_set[i - 1] + 1) return true;
  return false;
}

bool StatRecord::has_initial_descent() const { return !des_set.empty() && des_set.front() == 1; }

bool StatRecord::has_final_descent(int n) const { return !des_set.empty() && des_set.back() == n - 1; }

StatRecord stats(const Permutation& sigma) {
  StatRecord s;
  const int n = sigma.size();
  for (int i = 1; i <= n; ++i) {
    if (i < n && sigma(i) > sigma(i + 1)) {
      s.des_set.push_back(i);
      s.maj += i;
    }
    if (sigma(i) > i) ++s.exc;
    if (sigma(i) == i) ++s.fix;
    for (int j = i + 1; j <= n; ++j)
      if (sigma(i) > sigma(j)) ++s.inv;
  }
  s.des = static_cast<int>(s.des_set.size());
  return s;
}

bool ClassSpec::matches(const Permutation& sigma, const StatRecord& s) const {
  if (no_double_descent && s.has_double_descent()) return false;
  if (no_initial_descent && s.has_initial_descent()) return false;
  if (no_final_descent && s.has_final_descent(n)) return false;
  if (des_equals && s.des != *des_equals) return false;
  if (derangements_only && s.fix != 0) return false;
  if (increasing_prefix_to_max) {
    if (n == 0) return false;
    for (int i = 1; sigma(i) != n; ++i)
      if (sigma(i) > sigma(i + 1)) return false;
  }
  return true;
}

ClassSpec gamma_class(int n, int k) {
  ClassSpec c;
  c.n = n;
  c.no_double_descent = true;
  c.no_final_descent = true;
  c.des_equals = k;
  return c;
}

ClassSpec tilde_gamma_class(int n, int k) {
  ClassSpec c;
  c.n = n;
  c.no_double_descent = true;
  c.des_equals = k;
  return c;
}

ClassSpec gamma0_class(int n, int k) {
  ClassSpec c = gamma_class(n, k);
  c.no_initial_descent = true;
  return c;
}

ClassSpec prw_class(int n, int k) {
  ClassSpec c = gamma_class(n, k);
  c.increasing_prefix_to_max = true;
  return c;
}

std::vector<Permutation> enumerate_class(const ClassSpec& spec, int bound) {
  std::vector<Permutation> out;
  for_each_permutation(spec.n, bound, [&](const Permutation& sigma) {
    if (spec.matches(sigma, stats(sigma))) out.push_back(sigma);
  });
  return out;
}

IntPoly class_inv_poly(const ClassSpec& spec, int bound) {
  std::vector<BigInt> counts;
  for_each_permutation(spec.n, bound, [&](const Permutation& sigma) {
    StatRecord s = stats(sigma);
    if (!spec.matches(sigma, s)) return;
    if (counts.size() <= static_cast<std::size_t>(s.inv)) counts.resize(static_cast<std::size_t>(s.inv) + 1);
    counts[static_cast<std::size_t>(s.inv)] += 1;
  });
  return IntPoly(std::move(counts));
}

std::vector<IntPoly> class_inv_polys_by_des(const ClassSpec& spec, int bound) {
  ClassSpec any_des = spec;
  any_des.des_equals.reset();
  std::vector<std::vector<BigInt>> counts;
  for_each_permutation(spec.n, bound, [&](const Permutation& sigma) {
    StatRecord s = stats(sigma);
    if (!any_des.matches(sigma, s)) return;
    if (counts.size() <= static_cast<std::size_t>(s.des)) counts.resize(static_cast<std::size_t>(s.des) + 1);
    auto& row = counts[static_cast<std::size_t>(s.des)];
    if (row.size() <= static_cast<std::size_t>(s.inv)) row.resize(static_cast<std::size_t>(s.inv) + 1);
    row[static_cast<std::size_t>(s.inv)] += 1;
  });
  std::vector<IntPoly> out;
  for (auto& row : counts) out.emplace_back(std::move(row));
  return out;
}

DescentClassCheck descent_class_check(int n, std::span<const int> descent_set, int bound) {
  std::vector<int> target(descent_set.begin(), descent_set.end());
  std::sort(target.begin(), target.end());
  if (std::adjacent_find(target.begin(), target.end()) != target.end())
    throw ValidationError("descent set has repeated entries");
  for (int i : target)
    if (i < 1 || i > n - 1) throw ValidationError("descent position " + std::to_string(i) + " outside [n-1]");
  DescentClassCheck out;
  for_each_permutation(n, bound, [&](const Permutation& sigma) {
    StatRecord s = stats(sigma);
    if (s.des_set != target) return;
    out.inv_poly += IntPoly::monomial(1, s.inv);
    out.inverse_maj_poly += IntPoly::monomial(1, stats(sigma.inverse()).maj);
  });
  out.equal = out.inv_poly == out.inverse_maj_poly;
  return out;
}

std::vector<Permutation> derangements(int n, int bound) {
  ClassSpec c;
  c.n = n;
  c.derangements_only = true;
  return enumerate_class(c, bound);
}

}  // namespace gammapos
