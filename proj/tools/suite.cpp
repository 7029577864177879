#include <algorithm>
#include <chrono>
#include <ostream>

#include "cli.hpp"
#include "gammapos/gammapos.hpp"

namespace gammapos::cli {
namespace {

// Upper ends of the documented ranges.
constexpr int kGammaMax = 8;
constexpr int kExpQOrder = 8;
constexpr int kCgkIntegerMax = 8;
constexpr int kCgkQMax = 7;
constexpr int kSymMax = 6;
constexpr int kSymVariables = 6;
constexpr int kExplicitWordsMax = 4;
constexpr int kDescentClassMax = 7;
constexpr int kPrwMax = 7;
constexpr int kCrossMax = 5;

Report prw_cardinalities(int n) {
  std::vector<Report> parts;
  for (int k = 0; 2 * k <= n; ++k) {
    const auto tilde = static_cast<long long>(enumerate_class(tilde_gamma_class(n, k)).size());
    const auto prw = static_cast<long long>(enumerate_class(prw_class(n + 1, k)).size());
    parts.push_back({"prw-cardinality", {{"n", n}, {"k", k}}, tilde == prw, tilde, prw, std::nullopt, {}});
  }
  return combine("prw-cardinality", {{"n", n}}, parts);
}

Report descent_classes(int n) {
  std::vector<Report> parts;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> j;
    for (int i = 1; i < n; ++i)
      if (mask >> (i - 1) & 1u) j.push_back(i);
    auto c = descent_class_check(n, j);
    parts.push_back({"descent-class", {{"n", n}, {"mask", mask}}, c.equal, to_json(c.inv_poly),
                     to_json(c.inverse_maj_poly), std::nullopt, {}});
  }
  return combine("descent-classes", {{"n", n}}, parts);
}

Report literal_forms_rejected() {
  auto [a, b] = derangement_literal_forms(2);
  Report out{"derangement-literal-forms-rejected", {{"n", 2}}, !a.passed && !b.passed,
             nlohmann::json::array({a.to_json(), b.to_json()}), nlohmann::json(), std::nullopt, {}};
  if (!out.passed) out.detail = "a literal derangement expansion unexpectedly holds at n=2";
  return out;
}

Report cross_polytope(int n) {
  const auto k = cross_polytope_boundary(n);
  Report gal = gal_check(k, n);
  const IntPoly h = h_polynomial(k, n);
  const IntPoly expected = one_plus_x_pow<BigInt>(n);
  Report h_ok{"cross-polytope-h", {{"n", n}}, h == expected, to_json(h), to_json(expected), std::nullopt, {}};
  Report out = combine("cross-polytope", {{"n", n}}, {gal, h_ok});
  out.gamma_vector = gal.gamma_vector;
  return out;
}

}  // namespace

std::vector<SuiteEntry> suite_registry(int max_n) {
  std::vector<SuiteEntry> out;
  auto add = [&](std::string group, std::function<Report()> f) { out.push_back({std::move(group), std::move(f)}); };
  const auto upto = [max_n](int cap) { return std::min(max_n, cap); };

  for (int n = 1; n <= upto(kGammaMax); ++n)
    for (auto f : {FamilyTag::kEulerianT, FamilyTag::kEulerianQT, FamilyTag::kBinomialEulerianT,
                   FamilyTag::kBinomialEulerianQT})
      add("gamma", [=] { return verify_gamma_theorem(f, n); });
  for (int n = 2; n <= upto(kGammaMax); ++n)
    add("gamma", [=] { return verify_gamma_theorem(FamilyTag::kDerangementQT, n); });
  if (max_n >= 2) add("gamma", literal_forms_rejected);

  for (int n = 1; n <= upto(kGammaMax); ++n) {
    add("q-properties", [=] { return verify_q_properties(FamilyTag::kEulerianQT, n); });
    add("q-properties", [=] { return verify_q_properties(FamilyTag::kBinomialEulerianQT, n); });
    if (n >= 2) add("q-properties", [=] { return verify_q_properties(FamilyTag::kDerangementQT, n); });
  }

  if (max_n >= 1)
    for (auto w : {ExpQIdentity::kQEuler, ExpQIdentity::kQFixEuler, ExpQIdentity::kQDerEuler, ExpQIdentity::kQBinomGF})
      add("expq", [=] { return verify_expq_identity(w, upto(kExpQOrder)); });

  for (int total = 2; total <= upto(kCgkIntegerMax); ++total)
    for (int r = 1; r < total; ++r) add("cgk", [=] { return verify_cgk(r, total - r, false); });
  for (int total = 2; total <= upto(kCgkQMax); ++total)
    for (int r = 1; r < total; ++r) add("cgk", [=] { return verify_cgk(r, total - r, true); });

  for (int n = 1; n <= upto(kGammaMax); ++n) {
    add("binomial", [=] { return verify_binomial_identities(n); });
    add("power-sum", [=] { return verify_worpitzky(n, n + 3); });
  }
  for (int n = 1; n <= upto(kDescentClassMax); ++n) add("descent-classes", [=] { return descent_classes(n); });
  for (int n = 1; n <= upto(kPrwMax); ++n) add("prw", [=] { return prw_cardinalities(n); });

  if (max_n >= 1) add("symfun", [=] { return verify_family_forms(upto(kSymMax), kSymVariables); });
  for (int n = 1; n <= upto(kSymMax); ++n)
    for (auto f : {SymFamily::kQ, SymFamily::kTildeQ, SymFamily::kQ0})
      add("symfun", [=] { return verify_sym_gamma(f, n, kSymVariables); });
  for (int n = 1; n <= upto(kSymMax); ++n) {
    add("schur-properties", [=] { return verify_schur_properties(SymFamily::kQ, n, kSymVariables); });
    add("schur-properties", [=] { return verify_schur_properties(SymFamily::kTildeQ, n, kSymVariables); });
    if (n >= 2) add("schur-properties", [=] { return verify_schur_properties(SymFamily::kQ0, n, kSymVariables); });
  }
  for (int k = 1; k <= std::min(max_n, 8); ++k) add("schur-properties", [=] { return verify_pieri(k, 8); });
  for (int n = 1; n <= upto(kExplicitWordsMax); ++n)
    for (int m = 1; m <= kExplicitWordsMax; ++m)
      add("gessel", [=] { return verify_gessel_words(n, m, WordMethod::kExplicit); });
  for (int n = 1; n <= upto(kSymMax); ++n)
    add("gessel", [=] { return verify_gessel_words(n, kSymVariables, WordMethod::kDynamic); });
  for (int n = 1; n <= upto(kSymMax); ++n) add("specialization", [=] { return verify_ps_theorems(n, n); });
  for (int total = 2; total <= upto(kSymMax); ++total)
    for (int r = 1; r < total; ++r) add("sym-cgk", [=] { return verify_sym_cgk(r, total - r, kSymVariables); });
  for (int n = 1; n <= upto(kSymMax); ++n) add("blow-up", [=] { return verify_procesi_identity(n, kSymVariables); });

  for (int n = 2; n <= upto(kPermutohedronBound); ++n) {
    add("polytopes", [=] { return verify_h_identity(PolytopeFamily::kPermutohedron, n); });
    add("polytopes", [=] { return gal_check(dual_permutohedron(n), n - 1); });
  }
  for (int n = 1; n <= upto(kStellohedronBound); ++n) {
    add("polytopes", [=] { return verify_h_identity(PolytopeFamily::kStellohedron, n); });
    add("polytopes", [=] { return gal_check(dual_stellohedron(n), n); });
  }
  for (int n = 1; n <= upto(kCrossMax); ++n) add("polytopes", [=] { return cross_polytope(n); });
  return out;
}

int run_suite(int max_n, Format format, std::ostream& out, std::ostream& err) {
  if (max_n < 0) throw ValidationError("max-n must be nonnegative");
  if (max_n > kDefaultEnumerationBound)
    throw ResourceError("max-n exceeds the enumeration bound " + std::to_string(kDefaultEnumerationBound));
  const auto entries = suite_registry(max_n);
  nlohmann::json rows = nlohmann::json::array();
  int failures = 0;
  if (format == Format::kCsv) out << "group,identity,parameters,status,seconds\n";
  for (const auto& e : entries) {
    const auto start = std::chrono::steady_clock::now();
    Report r;
    try {
      r = e.check();
    } catch (const std::exception& ex) {
      r.identity = e.group;
      r.passed = false;
      r.detail = std::string("exception: ") + ex.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string params;
    for (const auto& [k, v] : r.parameters) params += (params.empty() ? "" : " ") + k + "=" + std::to_string(v);
    if (!r.passed) {
      ++failures;
      err << "FAIL " << r.identity << " " << params << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
    }
    switch (format) {
      case Format::kText:
        out << (r.passed ? "PASS  " : "FAIL  ") << e.group << "  " << r.identity << "  " << params << "\n";
        break;
      case Format::kCsv:
        out << e.group << "," << r.identity << ",\"" << params << "\"," << (r.passed ? "pass" : "fail") << "," << secs
            << "\n";
        break;
      case Format::kJson: {
        nlohmann::json params_json = nlohmann::json::object();
        for (const auto& [k, v] : r.parameters) params_json[k] = v;
        nlohmann::json row{{"group", e.group}, {"identity", r.identity}, {"parameters", params_json},
                           {"status", r.passed ? "pass" : "fail"}, {"seconds", secs}};
        if (!r.detail.empty()) row["detail"] = r.detail;
        rows.push_back(row);
        break;
      }
    }
  }
  const auto total = entries.size();
  if (format == Format::kJson)
    out << nlohmann::json{{"max_n", max_n}, {"checks", rows}, {"passed", total - static_cast<std::size_t>(failures)},
                          {"failed", failures}}
               .dump(2)
        << "\n";
  else if (format == Format::kText)
    out << (total - static_cast<std::size_t>(failures)) << "/" << total << " checks passed\n";
  return failures == 0 ? kExitPass : kExitFail;
}

}  // namespace gammapos::cli
