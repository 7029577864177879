#include "cli.hpp"

#include <CLI11.hpp>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "gammapos/gammapos.hpp"

namespace gammapos::cli {
namespace {

struct Params {
  std::string target;
  std::optional<int> n;
  std::optional<int> m;
  std::optional<int> k;
  int r = 1;
  int s = 1;
  int order = 8;
  std::optional<int> power_terms;
  int bound = kDefaultEnumerationBound;
  std::string family;
  std::string identity = "qEuler";
  std::string method = "dp";
  std::string polytope = "permutohedron";
  std::string class_name = "gamma";
  std::string descents;
  int from = 0;
  std::optional<int> to;
  bool q_level = false;
  std::string format = "text";
  int max_n = 6;
};

const std::vector<std::string> kComputeTargets{
    "eulerian", "q-eulerian", "q-eulerian-fix", "binomial-eulerian", "q-binomial-eulerian", "derangement",
    "gamma",    "Q",          "tildeQ",         "Q0",                "schur",               "class",
    "complex",  "h-polynomial"};

const std::vector<std::string> kVerifyTargets{
    "gamma",       "q-properties", "cgk",     "expq",        "binomial",        "power-sum", "descent-class",
    "prw",         "derangement-literal", "family-forms", "sym-gamma", "schur-properties", "pieri",     "gessel",
    "ps",          "sym-cgk",      "blow-up", "h-identities", "gal"};

const std::vector<std::string> kTableTargets{"eulerian", "q-eulerian", "binomial-eulerian", "q-binomial-eulerian",
                                             "derangement", "gamma"};

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : ", ") + s;
  return out;
}

int need_n(const Params& p) {
  if (!p.n) throw ValidationError("--n is required for this target");
  return *p.n;
}

int sym_m(const Params& p) { return p.m.value_or(std::max(need_n(p), 1)); }

Format parse_format(const std::string& f) {
  if (f == "json") return Format::kJson;
  if (f == "csv") return Format::kCsv;
  return Format::kText;
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

// --- compute -------------------------------------------------------------

void emit(std::ostream& out, Format f, const IntPoly& p) {
  switch (f) {
    case Format::kText: out << to_text(p) << "\n"; break;
    case Format::kJson: out << to_json(p).dump() << "\n"; break;
    case Format::kCsv: {
      std::string row;
      for (const auto& c : p.coeffs()) row += (row.empty() ? "" : ",") + c.str();
      out << row << "\n";
      break;
    }
  }
}

void emit(std::ostream& out, Format f, const QTPoly& p) {
  switch (f) {
    case Format::kText: out << to_text(p) << "\n"; break;
    case Format::kJson: out << to_json(p).dump() << "\n"; break;
    case Format::kCsv: {
      std::string row;
      for (const auto& c : p.coeffs()) row += (row.empty() ? "" : ",") + csv_quote(to_text(c, "q"));
      out << row << "\n";
      break;
    }
  }
}

void emit(std::ostream& out, Format f, const SymPolyT& p) {
  if (f == Format::kJson) {
    out << to_json(p).dump() << "\n";
    return;
  }
  for (int j = 0; j <= p.degree(); ++j) {
    if (f == Format::kText)
      out << "t^" << j << ": " << to_text(p.coeff(j)) << "\n";
    else
      out << j << "," << csv_quote(to_text(p.coeff(j))) << "\n";
  }
}

std::string partition_text(const Partition& lambda) {
  std::string out = "s(";
  for (std::size_t i = 0; i < lambda.size(); ++i) out += (i ? "," : "") + std::to_string(lambda[i]);
  return out + ")";
}

void emit(std::ostream& out, Format f, const SchurExpansionT& e) {
  if (f == Format::kJson) {
    out << to_json(e).dump() << "\n";
    return;
  }
  for (const auto& [lambda, c] : e) {
    if (f == Format::kText)
      out << partition_text(lambda) << ": " << to_text(c) << "\n";
    else
      out << csv_quote(partition_text(lambda)) << "," << csv_quote(to_text(c)) << "\n";
  }
}

ClassSpec class_spec(const Params& p) {
  const int n = need_n(p);
  if (p.class_name == "derangement") {
    ClassSpec c;
    c.n = n;
    c.derangements_only = true;
    return c;
  }
  if (!p.k) throw ValidationError("--k is required for class " + p.class_name);
  if (p.class_name == "gamma") return gamma_class(n, *p.k);
  if (p.class_name == "tilde-gamma") return tilde_gamma_class(n, *p.k);
  if (p.class_name == "gamma0") return gamma0_class(n, *p.k);
  if (p.class_name == "prw") return prw_class(n, *p.k);
  throw ValidationError("unknown class '" + p.class_name + "'");
}

SimplicialComplex build_complex(const Params& p, int& d) {
  const int n = need_n(p);
  if (p.polytope == "permutohedron") {
    d = n - 1;
    return dual_permutohedron(n);
  }
  if (p.polytope == "stellohedron") {
    d = n;
    return dual_stellohedron(n);
  }
  if (p.polytope == "cross") {
    d = n;
    return cross_polytope_boundary(n);
  }
  throw ValidationError("unknown polytope '" + p.polytope + "'");
}

FamilyTag gamma_family(const Params& p) {
  return parse_family(p.family.empty() ? "eulerian-qt" : p.family);
}

void emit_gamma(std::ostream& out, Format f, const Report& r) {
  const auto& g = r.gamma_vector.value_or(nlohmann::json::array());
  if (f == Format::kJson) {
    out << g.dump() << "\n";
    return;
  }
  std::string row;
  for (const auto& c : g) {
    const std::string text = to_text(int_poly_from_json(c), "q");
    row += (row.empty() ? "" : (f == Format::kCsv ? "," : "; ")) + (f == Format::kCsv ? csv_quote(text) : text);
  }
  out << row << "\n";
}

int compute(const Params& p, std::ostream& out) {
  const Format f = parse_format(p.format);
  const std::string& t = p.target;
  if (t == "eulerian") emit(out, f, eulerian_poly(need_n(p), p.bound));
  else if (t == "q-eulerian") emit(out, f, q_eulerian(need_n(p), p.bound));
  else if (t == "q-eulerian-fix") {
    const QTRPoly poly = q_eulerian_fix(need_n(p), p.bound);
    out << (f == Format::kJson ? to_json(poly).dump() : to_text(poly)) << "\n";
  } else if (t == "binomial-eulerian") emit(out, f, binomial_eulerian_poly(need_n(p), p.bound));
  else if (t == "q-binomial-eulerian") emit(out, f, q_binomial_eulerian(need_n(p), p.bound));
  else if (t == "derangement") emit(out, f, derangement_poly(need_n(p), p.bound));
  else if (t == "gamma") emit_gamma(out, f, verify_gamma_theorem(gamma_family(p), need_n(p), p.bound));
  else if (t == "Q" || t == "tildeQ" || t == "Q0") emit(out, f, sym_family_poly(parse_sym_family(t), need_n(p), sym_m(p)));
  else if (t == "schur") {
    const SymFamily fam = parse_sym_family(p.family.empty() ? "Q" : p.family);
    const int n = need_n(p);
    emit(out, f, schur_expand(sym_family_poly(fam, n, sym_m(p)), n, sym_m(p)));
  } else if (t == "class") {
    const ClassSpec spec = class_spec(p);
    const auto members = enumerate_class(spec, p.bound);
    const IntPoly poly = class_inv_poly(spec, p.bound);
    if (f == Format::kJson) {
      nlohmann::json list = nlohmann::json::array();
      for (const auto& sigma : members) list.push_back(sigma.to_string());
      out << nlohmann::json{{"permutations", list}, {"inv_poly", to_json(poly)}}.dump() << "\n";
    } else {
      for (const auto& sigma : members) out << sigma.to_string() << "\n";
      if (f == Format::kText) out << "inv: " << to_text(poly, "q") << "\n";
    }
  } else if (t == "complex") {
    int d = 0;
    const auto k = build_complex(p, d);
    if (f == Format::kJson) {
      out << to_json(k).dump() << "\n";
    } else {
      std::string fv;
      for (auto v : f_vector(k)) fv += (fv.empty() ? "" : ",") + std::to_string(v);
      out << (f == Format::kText ? "f = (" + fv + ")" : fv) << "\n";
      if (f == Format::kText) out << "flag = " << (is_flag(k) ? "true" : "false") << "\n";
    }
  } else if (t == "h-polynomial") {
    int d = 0;
    const auto k = build_complex(p, d);
    emit(out, f, h_polynomial(k, d));
  }
  return kExitPass;
}

// --- verify --------------------------------------------------------------

std::vector<int> parse_descents(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ValidationError("bad descent position '" + item + "'");
    }
  }
  return out;
}

Report verify_target(const Params& p) {
  const std::string& t = p.target;
  if (t == "gamma") return verify_gamma_theorem(gamma_family(p), need_n(p), p.bound);
  if (t == "q-properties") return verify_q_properties(gamma_family(p), need_n(p), p.bound);
  if (t == "cgk") return verify_cgk(p.r, p.s, p.q_level, p.bound);
  if (t == "expq") return verify_expq_identity(parse_expq(p.identity), p.order, p.bound);
  if (t == "binomial") return verify_binomial_identities(need_n(p), p.bound);
  if (t == "power-sum") return verify_worpitzky(need_n(p), p.power_terms.value_or(need_n(p) + 3), p.bound);
  if (t == "descent-class") {
    const int n = need_n(p);
    auto c = descent_class_check(n, parse_descents(p.descents), p.bound);
    return {"descent-class", {{"n", n}}, c.equal, to_json(c.inv_poly), to_json(c.inverse_maj_poly), std::nullopt, {}};
  }
  if (t == "prw") {
    const int n = need_n(p);
    std::vector<Report> parts;
    for (int k = 0; 2 * k <= n; ++k) {
      auto a = static_cast<long long>(enumerate_class(tilde_gamma_class(n, k), p.bound).size());
      auto b = static_cast<long long>(enumerate_class(prw_class(n + 1, k), p.bound).size());
      parts.push_back({"prw-cardinality", {{"n", n}, {"k", k}}, a == b, a, b, std::nullopt, {}});
    }
    return combine("prw-cardinality", {{"n", n}}, parts);
  }
  if (t == "derangement-literal") {
    auto [a, b] = derangement_literal_forms(need_n(p), p.bound);
    return combine("derangement-literal-forms", {{"n", need_n(p)}}, {a, b});
  }
  if (t == "family-forms") return verify_family_forms(need_n(p), sym_m(p));
  if (t == "sym-gamma") return verify_sym_gamma(parse_sym_family(p.family.empty() ? "Q" : p.family), need_n(p), sym_m(p));
  if (t == "schur-properties")
    return verify_schur_properties(parse_sym_family(p.family.empty() ? "Q" : p.family), need_n(p), sym_m(p));
  if (t == "pieri") {
    if (!p.k) throw ValidationError("--k is required for pieri");
    return verify_pieri(*p.k, p.m.value_or(std::max(*p.k, 1)));
  }
  if (t == "gessel") {
    if (p.method != "dp" && p.method != "explicit") throw ValidationError("--method must be dp or explicit");
    return verify_gessel_words(need_n(p), sym_m(p), p.method == "dp" ? WordMethod::kDynamic : WordMethod::kExplicit);
  }
  if (t == "ps") return verify_ps_theorems(need_n(p), sym_m(p), p.bound);
  if (t == "sym-cgk") return verify_sym_cgk(p.r, p.s, p.m.value_or(p.r + p.s));
  if (t == "blow-up") return verify_procesi_identity(need_n(p), sym_m(p));
  if (t == "h-identities") {
    if (p.polytope == "permutohedron" || p.polytope == "stellohedron")
      return verify_h_identity(parse_polytope_family(p.polytope), need_n(p));
    return verify_h_identities(need_n(p));
  }
  if (t == "gal") {
    int d = 0;
    const auto k = build_complex(p, d);
    return gal_check(k, d);
  }
  throw ValidationError("unknown verify target '" + t + "'");
}

void emit_report(std::ostream& out, Format f, const Report& r) {
  std::string params;
  for (const auto& [k, v] : r.parameters) params += (params.empty() ? "" : " ") + k + "=" + std::to_string(v);
  switch (f) {
    case Format::kJson: out << r.to_json().dump(2) << "\n"; break;
    case Format::kCsv:
      out << "identity,parameters,status\n"
          << r.identity << "," << csv_quote(params) << "," << (r.passed ? "pass" : "fail") << "\n";
      break;
    case Format::kText:
      out << (r.passed ? "PASS " : "FAIL ") << r.identity << " " << params << "\n";
      if (r.gamma_vector) out << "gamma: " << r.gamma_vector->dump() << "\n";
      if (!r.detail.empty()) out << "detail: " << r.detail << "\n";
      break;
  }
}

// --- table ---------------------------------------------------------------

int table(const Params& p, std::ostream& out) {
  const Format f = parse_format(p.format);
  const int to = p.to.value_or(p.n.value_or(6));
  int from = p.from;
  if (p.target == "gamma") {
    const FamilyTag fam = gamma_family(p);
    from = std::max(from, fam == FamilyTag::kDerangementQT ? 2 : 1);
  }
  nlohmann::json rows = nlohmann::json::array();
  for (int n = from; n <= to; ++n) {
    std::vector<std::string> cells;
    nlohmann::json json_row;
    auto add_qt = [&](const QTPoly& poly) {
      for (const auto& c : poly.coeffs()) cells.push_back(to_text(c, "q"));
      json_row = to_json(poly);
    };
    auto add_int = [&](const IntPoly& poly) {
      for (const auto& c : poly.coeffs()) cells.push_back(c.str());
      json_row = to_json(poly);
    };
    const std::string& t = p.target;
    if (t == "eulerian") add_int(eulerian_poly(n, p.bound));
    else if (t == "q-eulerian") add_qt(q_eulerian(n, p.bound));
    else if (t == "binomial-eulerian") add_int(binomial_eulerian_poly(n, p.bound));
    else if (t == "q-binomial-eulerian") add_qt(q_binomial_eulerian(n, p.bound));
    else if (t == "derangement") add_qt(derangement_poly(n, p.bound));
    else if (t == "gamma") {
      Report r = verify_gamma_theorem(gamma_family(p), n, p.bound);
      if (!r.passed) throw ConsistencyError("gamma expansion failed at n=" + std::to_string(n));
      for (const auto& c : *r.gamma_vector) cells.push_back(to_text(int_poly_from_json(c), "q"));
      json_row = *r.gamma_vector;
    }
    switch (f) {
      case Format::kText: {
        std::string line;
        for (const auto& c : cells) line += (line.empty() ? "" : " | ") + c;
        out << "n=" << n << ": " << line << "\n";
        break;
      }
      case Format::kCsv: {
        out << n;
        const bool quote = t != "eulerian" && t != "binomial-eulerian";
        for (const auto& c : cells) out << "," << (quote ? csv_quote(c) : c);
        out << "\n";
        break;
      }
      case Format::kJson: rows.push_back({{"n", n}, {"coeffs", json_row}}); break;
    }
  }
  if (f == Format::kJson) out << rows.dump() << "\n";
  return kExitPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Eulerian-type polynomials, gamma expansions and their verification"};
  app.require_subcommand(1);
  Params p;
  const std::vector<std::string> formats{"text", "json", "csv"};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", p.n, "size parameter");
    sub->add_option("--m", p.m, "number of symmetric-function variables (default n)");
    sub->add_option("--k", p.k, "descent count / degree");
    sub->add_option("--bound", p.bound, "largest n enumerated over S_n")->capture_default_str();
    sub->add_option("--family", p.family,
                    "eulerian-t|eulerian-qt|binomial-eulerian-t|binomial-eulerian-qt|derangement-qt, or Q|tildeQ|Q0");
    sub->add_option("--polytope", p.polytope, "permutohedron|stellohedron|cross")->capture_default_str();
    sub->add_option("--format", p.format, "output format")->check(CLI::IsMember(formats))->capture_default_str();
  };

  auto* compute_cmd = app.add_subcommand("compute", "print a polynomial or object");
  compute_cmd->add_option("target", p.target, "one of: " + join(kComputeTargets))
      ->required()
      ->check(CLI::IsMember(kComputeTargets));
  add_common(compute_cmd);
  compute_cmd->add_option("--class", p.class_name, "gamma|tilde-gamma|gamma0|prw|derangement")->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify", "run one verification; exit 0 on pass, 1 on fail");
  verify_cmd->add_option("target", p.target, "one of: " + join(kVerifyTargets))
      ->required()
      ->check(CLI::IsMember(kVerifyTargets));
  add_common(verify_cmd);
  verify_cmd->add_option("--r", p.r, "first CGK index")->capture_default_str();
  verify_cmd->add_option("--s", p.s, "second CGK index")->capture_default_str();
  verify_cmd->add_flag("--q-level", p.q_level, "CGK with q-binomials");
  verify_cmd->add_option("--order,--N", p.order, "series truncation order")->capture_default_str();
  verify_cmd->add_option("--identity", p.identity, "qEuler|qFixEuler|qDerEuler|qBinomGF")->capture_default_str();
  verify_cmd->add_option("--K", p.power_terms, "power-sum truncation (default n+3)");
  verify_cmd->add_option("--method", p.method, "dp|explicit")->capture_default_str();
  verify_cmd->add_option("--set", p.descents, "descent set, comma separated");

  auto* table_cmd = app.add_subcommand("table", "coefficient tables over a range of n");
  table_cmd->add_option("target", p.target, "one of: " + join(kTableTargets))
      ->required()
      ->check(CLI::IsMember(kTableTargets));
  add_common(table_cmd);
  table_cmd->add_option("--from", p.from, "first n")->capture_default_str();
  table_cmd->add_option("--to", p.to, "last n (default --n, else 6)");

  auto* suite_cmd = app.add_subcommand("suite", "run every verification up to --max-n");
  suite_cmd->add_option("--max-n", p.max_n, "largest n")->capture_default_str();
  suite_cmd->add_option("--format", p.format, "output format")->check(CLI::IsMember(formats))->capture_default_str();

  app.footer("Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 parameter beyond a resource bound.");

  std::vector<std::string> argv_store{"gammapos"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*compute_cmd) return compute(p, out);
    if (*verify_cmd) {
      Report r = verify_target(p);
      emit_report(out, parse_format(p.format), r);
      return r.passed ? kExitPass : kExitFail;
    }
    if (*table_cmd) return table(p, out);
    if (*suite_cmd) return run_suite(p.max_n, parse_format(p.format), out, err);
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}

}  // namespace gammapos::cli
