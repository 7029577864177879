#include "gammapos/polytopes.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "gammapos/eulerian.hpp"
#include "gammapos/render.hpp"

namespace gammapos {
namespace {

using Face = SimplicialComplex::Face;

bool contains(const Face& big, const Face& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i];
  return out;
}

void check_bound(int n, int bound, const char* what) {
  if (n > bound)
    throw ResourceError(std::string(what) + " n=" + std::to_string(n) + " exceeds the bound " + std::to_string(bound));
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> labels, std::set<Face> facets)
    : labels_(std::move(labels)), facets_(std::move(facets)) {
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) throw ValidationError("repeated vertex label");
  for (const auto& f : facets_) {
    if (!std::is_sorted(f.begin(), f.end()) || std::adjacent_find(f.begin(), f.end()) != f.end())
      throw ValidationError("facet must be a sorted set of vertex ids");
    for (int v : f)
      if (v < 0 || v >= vertex_count()) throw ValidationError("facet uses an unknown vertex id");
  }
  for (auto a = facets_.begin(); a != facets_.end(); ++a)
    for (auto b = facets_.begin(); b != facets_.end(); ++b)
      if (a != b && a->size() <= b->size() && contains(*b, *a)) throw ValidationError("a facet is contained in another facet");
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

std::optional<int> SimplicialComplex::vertex_id(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

Face SimplicialComplex::face_from_labels(const std::vector<std::string>& labels) const {
  Face f;
  for (const auto& l : labels) {
    auto id = vertex_id(l);
    if (!id) throw ValidationError("unknown vertex label '" + l + "'");
    f.push_back(*id);
  }
  std::sort(f.begin(), f.end());
  return f;
}

std::vector<std::string> SimplicialComplex::face_labels(const Face& f) const {
  std::vector<std::string> out;
  for (int v : f) out.push_back(labels_.at(static_cast<std::size_t>(v)));
  std::sort(out.begin(), out.end());
  return out;
}

bool SimplicialComplex::is_face(const Face& f) const { return faces().contains(f); }

const std::set<Face>& SimplicialComplex::faces() const {
  std::call_once(cache_->once, [this] {
    for (const auto& facet : facets_) {
      const std::size_t k = facet.size();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        Face sub;
        for (std::size_t i = 0; i < k; ++i)
          if (mask >> i & 1u) sub.push_back(facet[i]);
        cache_->faces.insert(std::move(sub));
      }
    }
  });
  return cache_->faces;
}

std::set<std::vector<std::string>> SimplicialComplex::canonical_facets() const {
  std::set<std::vector<std::string>> out;
  for (const auto& f : facets_) out.insert(face_labels(f));
  return out;
}

SimplicialComplex simplex_boundary(const std::vector<std::string>& labels) {
  const int n = static_cast<int>(labels.size());
  if (n < 2) throw ValidationError("simplex boundary needs at least 2 vertices");
  std::set<Face> facets;
  for (int skip = 0; skip < n; ++skip) {
    Face f;
    for (int v = 0; v < n; ++v)
      if (v != skip) f.push_back(v);
    facets.insert(std::move(f));
  }
  return {labels, std::move(facets)};
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& k) {
  std::map<Face, int> id;
  std::vector<std::string> labels;
  auto vertex = [&](const Face& f) {
    auto [it, inserted] = id.try_emplace(f, static_cast<int>(labels.size()));
    if (inserted) labels.push_back("{" + join(k.face_labels(f)) + "}");
    return it->second;
  };
  std::set<Face> facets;
  for (const auto& facet : k.facets()) {
    Face order = facet;
    do {
      Face chain;
      Face prefix;
      for (int v : order) {
        prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
        chain.push_back(vertex(prefix));
      }
      std::sort(chain.begin(), chain.end());
      facets.insert(std::move(chain));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return {std::move(labels), std::move(facets)};
}

SimplicialComplex stellar_subdivide(const SimplicialComplex& k, const Face& f) {
  if (f.empty()) throw ValidationError("cannot subdivide the empty face");
  if (!k.is_face(f)) throw ValidationError("stellar subdivision of a set that is not a face");
  if (f.size() == 1) return k;
  std::vector<std::string> labels = k.labels();
  const std::string fresh = "<" + join(k.face_labels(f)) + ">";
  if (k.vertex_id(fresh)) throw ValidationError("subdivision vertex '" + fresh + "' already present");
  const int phi = static_cast<int>(labels.size());
  labels.push_back(fresh);
  std::set<Face> facets;
  for (const auto& g : k.facets()) {
    if (!contains(g, f)) {
      facets.insert(g);
      continue;
    }
    for (int v : f) {
      Face h;
      for (int u : g)
        if (u != v) h.push_back(u);
      h.push_back(phi);  // phi is the largest id
      facets.insert(std::move(h));
    }
  }
  return {std::move(labels), std::move(facets)};
}

SimplicialComplex stellar_subdivide_all(SimplicialComplex k, const std::vector<std::vector<std::string>>& faces) {
  const long long chi = euler_characteristic(k);
  for (const auto& f : faces) {
    k = stellar_subdivide(k, k.face_from_labels(f));
    if (euler_characteristic(k) != chi) throw ConsistencyError("stellar subdivision changed the Euler characteristic");
  }
  return k;
}

SimplicialComplex dual_permutohedron(int n, int bound) {
  if (n < 2) throw ValidationError("dual permutohedron needs n >= 2");
  check_bound(n, bound, "dual permutohedron");
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  SimplicialComplex base = simplex_boundary(labels);
  SimplicialComplex out = barycentric_subdivision(base);
  if (euler_characteristic(out) != euler_characteristic(base))
    throw ConsistencyError("barycentric subdivision changed the Euler characteristic");
  return out;
}

SimplicialComplex dual_stellohedron(int n, int bound, std::optional<unsigned> shuffle_seed) {
  if (n < 1) throw ValidationError("dual stellohedron needs n >= 1");
  check_bound(n, bound, "dual stellohedron");
  std::vector<std::string> labels;
  for (int i = 0; i <= n; ++i) labels.push_back(std::to_string(i));
  SimplicialComplex k = simplex_boundary(labels);
  std::mt19937 rng(shuffle_seed.value_or(0));
  for (int size = n - 1; size >= 1; --size) {
    std::vector<std::vector<std::string>> batch;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) != size) continue;
      std::vector<std::string> face{"0"};
      for (int i = 1; i <= n; ++i)
        if (mask >> (i - 1) & 1u) face.push_back(std::to_string(i));
      batch.push_back(std::move(face));
    }
    std::sort(batch.begin(), batch.end());
    if (shuffle_seed) std::shuffle(batch.begin(), batch.end(), rng);
    k = stellar_subdivide_all(std::move(k), batch);
  }
  return k;
}

SimplicialComplex cross_polytope_boundary(int n, int bound) {
  if (n < 1) throw ValidationError("cross polytope needs n >= 1");
  check_bound(n, bound, "cross polytope");
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) {
    labels.push_back("+" + std::to_string(i));
    labels.push_back("-" + std::to_string(i));
  }
  std::set<Face> facets;
  for (std::uint32_t signs = 0; signs < (1u << n); ++signs) {
    Face f;
    for (int i = 0; i < n; ++i) f.push_back(2 * i + static_cast<int>(signs >> i & 1u));
    facets.insert(std::move(f));
  }
  return {std::move(labels), std::move(facets)};
}

FVector f_vector(const SimplicialComplex& k) {
  FVector f(static_cast<std::size_t>(k.dimension()) + 2);
  for (const auto& face : k.faces()) ++f[face.size()];
  return f;
}

long long euler_characteristic(const SimplicialComplex& k) {
  const FVector f = f_vector(k);
  long long chi = 0;
  for (std::size_t i = 1; i < f.size(); ++i) chi += (i % 2 == 1 ? 1 : -1) * f[i];
  return chi;
}

IntPoly h_polynomial(const SimplicialComplex& k, int d) {
  if (k.dimension() != d - 1)
    throw ValidationError("complex of dimension " + std::to_string(k.dimension()) + " is not the boundary of a " +
                          std::to_string(d) + "-polytope");
  const FVector f = f_vector(k);
  const IntPoly t_minus_one = int_poly({-1, 1});
  IntPoly h;
  for (int j = 0; j <= d; ++j) {
    IntPoly term(BigInt(f[static_cast<std::size_t>(j)]));
    for (int e = 0; e < d - j; ++e) term *= t_minus_one;
    h += term;
  }
  return h;
}

bool is_flag(const SimplicialComplex& k) {
  const int n = k.vertex_count();
  std::vector<std::vector<bool>> adjacent(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  for (const auto& f : k.faces())
    if (f.size() == 2) adjacent[static_cast<std::size_t>(f[0])][static_cast<std::size_t>(f[1])] =
                           adjacent[static_cast<std::size_t>(f[1])][static_cast<std::size_t>(f[0])] = true;
  // Cliques are faces iff every face extends by each vertex adjacent to all of it.
  for (const auto& f : k.faces()) {
    for (int v = 0; v < n; ++v) {
      if (std::binary_search(f.begin(), f.end(), v)) continue;
      if (f.empty()) continue;
      bool all = std::all_of(f.begin(), f.end(), [&](int u) { return adjacent[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]; });
      if (!all) continue;
      Face g = f;
      g.insert(std::upper_bound(g.begin(), g.end(), v), v);
      if (!k.is_face(g)) return false;
    }
  }
  return true;
}

Report gal_check(const SimplicialComplex& k, int d) {
  const IntPoly h = h_polynomial(k, d);
  Report out{"gal", {{"d", d}}, false, to_json(h), nlohmann::json(), std::nullopt, {}};
  try {
    const auto g = gamma_expand(h, d);
    nlohmann::json gj = nlohmann::json::array();
    bool nonneg = true;
    for (const auto& c : g.gammas) {
      gj.push_back(c.str());
      nonneg = nonneg && c >= 0;
    }
    out.gamma_vector = gj;
    out.rhs = gj;
    out.passed = nonneg;
    if (!nonneg) out.detail = "negative gamma coefficient";
  } catch (const PalindromicityError&) {
    out.detail = "h-polynomial is not palindromic (Dehn-Sommerville failure)";
  }
  return out;
}

std::string_view polytope_family_name(PolytopeFamily f) {
  switch (f) {
    case PolytopeFamily::kPermutohedron: return "permutohedron";
    case PolytopeFamily::kStellohedron: return "stellohedron";
  }
  return "unknown";
}

PolytopeFamily parse_polytope_family(std::string_view name) {
  for (auto f : {PolytopeFamily::kPermutohedron, PolytopeFamily::kStellohedron})
    if (polytope_family_name(f) == name) return f;
  throw ValidationError("unknown polytope family '" + std::string(name) + "'");
}

Report verify_h_identity(PolytopeFamily family, int n) {
  const bool perm = family == PolytopeFamily::kPermutohedron;
  const SimplicialComplex k = perm ? dual_permutohedron(n) : dual_stellohedron(n);
  const int d = perm ? n - 1 : n;
  const IntPoly h = h_polynomial(k, d);
  const IntPoly expected = perm ? eulerian_poly(n) : binomial_eulerian_poly(n);
  const std::vector<std::pair<std::string, long long>> params{{"n", n}};
  const std::string name = "h:" + std::string(polytope_family_name(family));

  std::vector<Report> parts;
  parts.push_back({name + ":h=eulerian", params, h == expected, to_json(h), to_json(expected), std::nullopt, {}});
  parts.push_back({name + ":palindromic", params, is_palindromic(h, d), to_json(h), nlohmann::json(), std::nullopt, {}});
  parts.push_back({name + ":flag", params, is_flag(k), nlohmann::json(true), nlohmann::json(), std::nullopt, {}});
  const long long chi = euler_characteristic(k);
  const long long sphere = 1 + (d % 2 == 1 ? 1 : -1);
  parts.push_back({name + ":euler", params, chi == sphere, chi, sphere, std::nullopt, {}});
  const BigInt facets(static_cast<long long>(k.facets().size()));
  parts.push_back({name + ":facets=h(1)", params, facets == evaluate(h, 1), facets.str(), evaluate(h, 1).str(),
                   std::nullopt, {}});
  Report out = combine(name, params, parts);
  out.lhs = {{"f_vector", f_vector(k)}, {"h", to_json(h)}};
  out.rhs = to_json(expected);
  return out;
}

Report verify_h_identities(int n) {
  std::vector<Report> parts{verify_h_identity(PolytopeFamily::kPermutohedron, n)};
  std::string detail;
  if (n <= kStellohedronBound)
    parts.push_back(verify_h_identity(PolytopeFamily::kStellohedron, n));
  else
    detail = "stellohedron skipped above n=" + std::to_string(kStellohedronBound);
  Report out = combine("h-identities", {{"n", n}}, parts);
  if (!detail.empty()) out.detail = out.detail.empty() ? detail : out.detail + "; " + detail;
  return out;
}

nlohmann::json to_json(const SimplicialComplex& k) {
  nlohmann::json facets = nlohmann::json::array();
  for (const auto& f : k.canonical_facets()) facets.push_back(f);
  auto labels = k.labels();
  std::sort(labels.begin(), labels.end());
  return {{"vertices", labels}, {"facets", facets}};
}

}  // namespace gammapos
