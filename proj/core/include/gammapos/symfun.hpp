#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gammapos/bigint.hpp"
#include "gammapos/gamma.hpp"
#include "gammapos/permstat.hpp"
#include "gammapos/poly.hpp"
#include "gammapos/report.hpp"

namespace gammapos {

/// Polynomial in x_1..x_m with integer coefficients, stored as a map from
/// exponent vectors to nonzero coefficients.
///
/// Exponent vectors are packed one byte per variable into a 64-bit key with
/// x_1 in the most significant byte, so key order is lexicographic order on
/// exponent vectors and monomial multiplication is key addition. This caps
/// the variable count at 8 and every exponent at 255.
///
/// Constants carry m = 0 and combine with polynomials in any number of
/// variables; the variable count of a sum or product is the larger one.
class SymPoly {
 public:
  static constexpr int kMaxVariables = 8;
  using Key = std::uint64_t;

  SymPoly() = default;
  SymPoly(long long c); // NOLINT(google-explicit-constructor)
  SymPoly(const BigInt& c); // NOLINT(google-explicit-constructor)

  /// c * x^exponents in m variables; exponents.size() must be <= m.
  static SymPoly monomial(int m, std::span<const int> exponents, BigInt c = 1);
  /// x_i, 1-based.
  static SymPoly variable(int m, int i);

  int variables() const { return m_; }
  bool is_zero() const { return terms_.empty(); }
  /// Largest total degree, -1 for zero.
  int degree() const;
  /// Zero counts as homogeneous of every degree.
  bool is_homogeneous(int n) const;
  BigInt coeff(std::span<const int> exponents) const;
  std::size_t term_count() const { return terms_.size(); }

  /// Exponent vectors (length m) and coefficients in lexicographic order.
  std::vector<std::pair<std::vector<int>, BigInt>> terms() const;

  /// Invariant under every adjacent transposition of variables.
  bool is_symmetric() const;

  /// Multiplication by x_i^e (1-based i).
  SymPoly times_variable(int i, int e = 1) const;

  /// Exchange of x_i and x_j (1-based).
  SymPoly swapped(int i, int j) const;

  /// Substitutes x_i := q^{i-1}.
  IntPoly principal_specialization() const;

  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  SymPoly& operator*=(const SymPoly& o) { return *this = *this * o; }
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator-(const SymPoly& a) { return SymPoly{} - a; }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
  /// Equal terms; the variable count is not compared.
  friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.terms_ == b.terms_; }

  static Key pack(std::span<const int> exponents);
  static std::vector<int> unpack(Key key, int m);

 private:
  void add_term(Key key, const BigInt& c);

  int m_ = 0;
  std::map<Key, BigInt> terms_;
};

inline bool is_zero(const SymPoly& p) { return p.is_zero(); }

/// Polynomial in t with symmetric-polynomial coefficients.
using SymPolyT = Poly<SymPoly>;

/// Weakly decreasing positive parts.
using Partition = std::vector<int>;

/// Partitions of n in decreasing lexicographic order.
std::vector<Partition> partitions(int n);

/// Complete homogeneous symmetric polynomial h_n(x_1..x_m); h_0 = 1.
SymPoly h_poly(int n, int m);

enum class RibbonClass {
  kH,       ///< no two consecutive descents, n-1 not a descent
  kTildeH,  ///< no two consecutive descents
  kH0,      ///< no two consecutive descents, neither 1 nor n-1 a descent
};

std::string_view ribbon_class_name(RibbonClass c);
RibbonClass parse_ribbon_class(std::string_view name);

/// A skew hook recorded by the descent set of its reading words.
struct Ribbon {
  int n = 0;
  std::vector<int> descents;  ///< sorted subset of [n-1]

  /// Throws ValidationError unless descents is a sorted subset of [n-1].
  void validate() const;
  bool in_class(RibbonClass c, int k) const;
};

/// Every ribbon of size n in the given class with k size-2 columns.
std::vector<Ribbon> ribbons(int n, int k, RibbonClass c);

enum class WordMethod {
  kDynamic,   ///< position-by-position dynamic programming
  kExplicit,  ///< loop over all m^n words (the oracle)
};

/// Sum of x_w over words of length n on {1..m} with descent set exactly
/// r.descents.
SymPoly ribbon_schur(const Ribbon& r, int m, WordMethod method = WordMethod::kDynamic);

/// Sum of q^maj(T) over standard tableaux of the ribbon, computed as the
/// inverse-major-index generating function of the descent class and checked
/// against the inversion generating function.
IntPoly ribbon_maj_poly(const Ribbon& r, int bound = kDefaultEnumerationBound);

/// Q_0..Q_n from Q_n = h_n + sum_{k=0}^{n-2} Q_k h_{n-k} t [n-k-1]_t.
std::vector<SymPolyT> Q_upto(int n, int m);
SymPolyT Q_n(int n, int m);

/// h_n + t sum_{j=1}^n h_{n-j} Q_j.
SymPolyT tildeQ_n(int n, int m);

/// Q0_0..Q0_n from Q0_n = t sum_{k=2}^n [k-1]_t h_k Q0_{n-k}, Q0_0 = 1.
std::vector<SymPolyT> Q0_upto(int n, int m);
SymPolyT Q0_n(int n, int m);

/// Independent cross-checks of the three families: the rational form of the
/// Q generating function, the alternative sum and generating function of
/// tildeQ, and the generating function of Q0, all cross-multiplied.
Report verify_family_forms(int n, int m);

/// Sum of ribbon Schur functions over the ribbon class.
SymPoly gamma_sym(int n, int k, RibbonClass variant, int m);

enum class SymFamily { kQ, kTildeQ, kQ0 };

std::string_view sym_family_name(SymFamily f);
SymFamily parse_sym_family(std::string_view name);

SymPolyT sym_family_poly(SymFamily f, int n, int m);

/// Family polynomial against its ribbon gamma contraction. Q0 uses
/// t^{k+1} (1+t)^{n-2-2k}, n >= 2.
Report verify_sym_gamma(SymFamily which, int n, int m);

/// Gessel's word sums over no-double-descent words against Q_n and tildeQ_n.
Report verify_gessel_words(int n, int m, WordMethod method = WordMethod::kDynamic);

/// Schur polynomial s_lambda(x_1..x_m) via horizontal-strip branching.
SymPoly schur_poly(const Partition& lambda, int m);

/// Schur expansion of a homogeneous degree-n symmetric polynomial; m >= n.
std::map<Partition, BigInt> schur_expand(const SymPoly& p, int n);

using SchurExpansionT = std::map<Partition, IntPoly>;

/// Schur expansion of each t-coefficient, collected per partition.
SchurExpansionT schur_expand(const SymPolyT& p, int n, int m);

/// Nonnegative Schur coefficients. Zero is Schur-positive.
bool is_schur_positive(const SymPoly& p);

/// Standard Young tableaux of shape lambda.
std::vector<std::vector<std::vector<int>>> standard_tableaux(const Partition& lambda);

/// Sum of q^maj(T) over SYT of shape lambda, descents being entries i with
/// i+1 in a strictly lower row.
IntPoly syt_maj_poly(const Partition& lambda);

/// Stable principal specialization of sum_lambda c_lambda(t) s_lambda as a
/// numerator over prod_{i=1}^n (1 - q^i).
struct PrincipalSpecialization {
  QTPoly numerator;
  int denominator_degree = 0;  ///< n in prod_{i=1}^n (1 - q^i)
};

PrincipalSpecialization ps_exact(const SchurExpansionT& e, int n);

/// Specialized Q_n and tildeQ_n against A_n(q,t) and the q-binomial-Eulerian
/// polynomial, plus truncated substitution x_i := q^{i-1} modulo q^m.
Report verify_ps_theorems(int n, int m, int bound = kDefaultEnumerationBound);

/// sum_j h_{r+s-j} Q_{j,r-1} = sum_j h_{r+s-j} Q_{j,s-1}.
Report verify_sym_cgk(int r, int s, int m);

/// h_n [n+1]_t + sum_{j=1}^{n-1} t [n-j]_t h_{n-j} Q_j = tildeQ_n.
Report verify_procesi_identity(int n, int m);

/// Palindromicity, Schur-positivity and Schur-unimodality of the family
/// (Q0 after dividing by t), and Schur-positivity of its ribbon gamma vector.
Report verify_schur_properties(SymFamily which, int n, int m);

/// Schur expansion of h_j h_{k-j} against sum_{i=0}^{j} s_{(k-i,i)} for every
/// j <= k - j; needs m >= k.
Report verify_pieri(int k, int m);

/// JSON: [{exponents: [...], coeff: "..."}] in lexicographic order.
nlohmann::json to_json(const SymPoly& p);
/// JSON: array over t-exponents of SymPoly encodings.
nlohmann::json to_json(const SymPolyT& p);
/// JSON: [{partition: [...], t_poly: [...]}].
nlohmann::json to_json(const SchurExpansionT& e);

std::string to_text(const SymPoly& p);

}  // namespace gammapos
