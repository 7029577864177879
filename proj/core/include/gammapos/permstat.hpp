#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gammapos/errors.hpp"
#include "gammapos/poly.hpp"

namespace gammapos {

/// Default largest n for which S_n is enumerated (9! = 362880).
inline constexpr int kDefaultEnumerationBound = 9;

/// A permutation of {1..n} in one-line notation.
class Permutation {
 public:
  /// Throws ValidationError unless `images` is a bijection of {1..n}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  /// Digits ("3412") for n <= 9, or comma-separated values ("10,2,...").
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(images_.size()); }
  /// sigma(i) for 1-based i.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> images() const { return images_; }

  Permutation inverse() const;
  std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

struct StatRecord {
  std::vector<int> des_set;  ///< positions i in [n-1] with sigma(i) > sigma(i+1)
  int des = 0;
  int maj = 0;
  int exc = 0;
  int inv = 0;
  int fix = 0;

  bool has_double_descent() const;
  bool has_initial_descent() const;
  bool has_final_descent(int n) const;
};

StatRecord stats(const Permutation& sigma);

/// Filters over S_n selecting the permutation classes behind the gamma
/// coefficients. Flags combine conjunctively.
struct ClassSpec {
  int n = 0;
  bool no_double_descent = false;
  bool no_initial_descent = false;
  bool no_final_descent = false;
  std::optional<int> des_equals;
  /// sigma(1) < ... < sigma(m) = n for some m >= 1.
  bool increasing_prefix_to_max = false;
  bool derangements_only = false;

  bool matches(const Permutation& sigma, const StatRecord& s) const;
};

/// No double descents, no final descent, des = k.
ClassSpec gamma_class(int n, int k);
/// No double descents, des = k.
ClassSpec tilde_gamma_class(int n, int k);
/// No double, initial or final descents, des = k.
ClassSpec gamma0_class(int n, int k);
/// Class on S_n (callers pass n+1) with no double or final descent, an
/// increasing prefix ending at n, and des = k.
ClassSpec prw_class(int n, int k);

/// Calls f(sigma) for every sigma in S_n in lexicographic order.
template <class F>
void for_each_permutation(int n, int bound, F&& f) {
  if (n < 0) throw ValidationError("negative permutation size");
  if (n > bound)
    throw ResourceError("n = " + std::to_string(n) + " exceeds the enumeration bound " + std::to_string(bound));
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  do {
    f(Permutation(images));
  } while (std::next_permutation(images.begin(), images.end()));
}

/// Members of the class in lexicographic order.
std::vector<Permutation> enumerate_class(const ClassSpec& spec, int bound = kDefaultEnumerationBound);

/// Sum of q^inv over the class.
IntPoly class_inv_poly(const ClassSpec& spec, int bound = kDefaultEnumerationBound);

/// Sum of q^inv over the class (ignoring `des_equals`) split by des: entry k
/// is the polynomial for des = k. One pass over S_n.
std::vector<IntPoly> class_inv_polys_by_des(const ClassSpec& spec, int bound = kDefaultEnumerationBound);

struct DescentClassCheck {
  IntPoly inv_poly;           ///< sum of q^inv(sigma)
  IntPoly inverse_maj_poly;   ///< sum of q^maj(sigma^{-1})
  bool equal = false;
};

/// Both generating functions over {sigma in S_n : Des(sigma) = J}.
DescentClassCheck descent_class_check(int n, std::span<const int> descent_set,
                                      int bound = kDefaultEnumerationBound);

std::vector<Permutation> derangements(int n, int bound = kDefaultEnumerationBound);

}  // namespace gammapos
