#pragma once

#include <string>
#include <string_view>

#include "gammapos/gamma.hpp"
#include "gammapos/permstat.hpp"
#include "gammapos/poly.hpp"
#include "gammapos/qtrpoly.hpp"
#include "gammapos/report.hpp"

namespace gammapos {

enum class FamilyTag {
  kEulerianT,
  kEulerianQT,
  kEulerianQTR,
  kBinomialEulerianT,
  kBinomialEulerianQT,
  kDerangementQT,
};

std::string_view family_name(FamilyTag f);
/// Inverse of family_name; throws ValidationError on unknown names.
FamilyTag parse_family(std::string_view name);

/// A_n(t) = sum over S_n of t^des. Cross-checked against the excedance
/// generating function during the same pass.
IntPoly eulerian_poly(int n, int bound = kDefaultEnumerationBound);

/// A_n(q,t) = sum over S_n of q^{maj - exc} t^exc, A_0 = 1.
QTPoly q_eulerian(int n, int bound = kDefaultEnumerationBound);

/// A_n(q,t,r) = sum over S_n of q^{maj - exc} t^exc r^fix, A_0 = 1.
QTRPoly q_eulerian_fix(int n, int bound = kDefaultEnumerationBound);

/// 1 + t * sum_{m=1}^n [n choose m]_q A_m(q,t).
QTPoly q_binomial_eulerian(int n, int bound = kDefaultEnumerationBound);

/// 1 + t * sum_{m=1}^n (n choose m) A_m(t).
IntPoly binomial_eulerian_poly(int n, int bound = kDefaultEnumerationBound);

/// D_n(q,t): the q_eulerian sum restricted to derangements, D_0 = 1.
QTPoly derangement_poly(int n, int bound = kDefaultEnumerationBound);

/// Family polynomial at q-level (t-level families are lifted to q-constant
/// coefficients). Not defined for kEulerianQTR.
QTPoly family_poly(FamilyTag family, int n, int bound = kDefaultEnumerationBound);

/// Gamma expansion of a family, with coefficients taken from the matching
/// permutation class (inv generating functions, or cardinalities for the
/// t-level families), contracted and compared with the family polynomial.
///
/// Derangements use D_n = sum_k gamma0_{n,k}(q) t^{k+1} (1+t)^{n-2-2k}
/// (n >= 2). The two literal alternatives, t^k (1+t)^{n-2k} with
/// k <= floor(n/2) and t^k (1+t)^{n-2-2k}, are evaluated too and recorded in
/// the report detail; they do not take part in the verdict.
Report verify_gamma_theorem(FamilyTag family, int n, int bound = kDefaultEnumerationBound);

/// Evaluates the two literal derangement forms described above; element 0
/// is t^k (1+t)^{n-2k}, element 1 is t^k (1+t)^{n-2-2k}.
std::pair<Report, Report> derangement_literal_forms(int n, int bound = kDefaultEnumerationBound);

/// sum_m C(r+s,m) a_{m,r-1} = sum_m C(r+s,m) a_{m,s-1}, integer or q-level.
Report verify_cgk(int r, int s, bool q_level, int bound = kDefaultEnumerationBound);

enum class ExpQIdentity { kQEuler, kQFixEuler, kQDerEuler, kQBinomGF };

std::string_view expq_name(ExpQIdentity which);
ExpQIdentity parse_expq(std::string_view name);

/// Cross-multiplied generating-function identity up to z^N, with the
/// left-hand family coefficients computed by brute force.
Report verify_expq_identity(ExpQIdentity which, int order, int bound = kDefaultEnumerationBound);

/// The two alternative forms of the q-binomial-Eulerian polynomial:
/// sum_m [n m]_q A_m(q,t) t^{n-m} and sum_m [n m]_q A_m(q,t,t).
Report verify_binomial_identities(int n, int bound = kDefaultEnumerationBound);

/// A_n(t) == (1-t)^{n+1} sum_{k=0}^{K} (k+1)^n t^k  (mod t^{K+1}).
Report verify_worpitzky(int n, int K, int bound = kDefaultEnumerationBound);

/// Palindromicity, q-unimodality and q-positivity of the gamma vector for a
/// q-level family (derangements after dividing by t, n >= 2).
Report verify_q_properties(FamilyTag family, int n, int bound = kDefaultEnumerationBound);

}  // namespace gammapos
