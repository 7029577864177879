#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gammapos/gamma.hpp"
#include "gammapos/poly.hpp"
#include "gammapos/report.hpp"

namespace gammapos {

inline constexpr int kPermutohedronBound = 6;
inline constexpr int kStellohedronBound = 5;
inline constexpr int kCrossPolytopeBound = 10;

/// Finite abstract simplicial complex given by its facets. Vertices are
/// integer ids into a label table; faces are sorted id vectors.
///
/// Immutable once built. The face set is computed on first use and shared
/// between copies.
class SimplicialComplex {
 public:
  using Face = std::vector<int>;

  /// Throws ValidationError on repeated labels, unknown ids, or a facet
  /// contained in another.
  SimplicialComplex(std::vector<std::string> labels, std::set<Face> facets);

  const std::vector<std::string>& labels() const { return labels_; }
  const std::set<Face>& facets() const { return facets_; }
  int vertex_count() const { return static_cast<int>(labels_.size()); }
  /// Largest facet size minus one; -1 for the void complex.
  int dimension() const;

  std::optional<int> vertex_id(const std::string& label) const;
  Face face_from_labels(const std::vector<std::string>& labels) const;
  std::vector<std::string> face_labels(const Face& f) const;

  bool is_face(const Face& f) const;
  /// All faces including the empty face.
  const std::set<Face>& faces() const;

  /// Facets as sorted label lists; equal for complexes that differ only in
  /// vertex numbering.
  std::set<std::vector<std::string>> canonical_facets() const;

 private:
  struct FaceCache {
    std::once_flag once;
    std::set<Face> faces;
  };

  std::vector<std::string> labels_;
  std::set<Face> facets_;
  std::shared_ptr<FaceCache> cache_ = std::make_shared<FaceCache>();
};

/// (f_{-1}, f_0, ..., f_{dim}).
using FVector = std::vector<long long>;

SimplicialComplex simplex_boundary(const std::vector<std::string>& labels);
SimplicialComplex barycentric_subdivision(const SimplicialComplex& k);
/// Cone over the boundary of F joined with the link of F; the new vertex is
/// labelled "<a,b,...>" from the sorted labels of F. |F| = 1 is a no-op.
SimplicialComplex stellar_subdivide(const SimplicialComplex& k, const SimplicialComplex::Face& f);
/// Sequential subdivision of the given faces, each given by labels.
SimplicialComplex stellar_subdivide_all(SimplicialComplex k, const std::vector<std::vector<std::string>>& faces);

/// Barycentric subdivision of the boundary of the simplex on 1..n.
SimplicialComplex dual_permutohedron(int n, int bound = kPermutohedronBound);
/// Boundary of the simplex on 0..n with the faces {0} u S subdivided in order
/// of decreasing |S|, n-1 down to 1. Faces within one size are subdivided in
/// lexicographic order unless `shuffle_seed` is set.
SimplicialComplex dual_stellohedron(int n, int bound = kStellohedronBound,
                                    std::optional<unsigned> shuffle_seed = std::nullopt);
/// Vertices +i and -i; facets pick one sign per i.
SimplicialComplex cross_polytope_boundary(int n, int bound = kCrossPolytopeBound);

FVector f_vector(const SimplicialComplex& k);
/// sum_{i>=0} (-1)^i f_i.
long long euler_characteristic(const SimplicialComplex& k);
/// sum_{j=0}^d f_{j-1} (t-1)^{d-j}; requires dim K = d - 1.
IntPoly h_polynomial(const SimplicialComplex& k, int d);
/// Every set of pairwise adjacent vertices is a face.
bool is_flag(const SimplicialComplex& k);

/// Gamma vector of the h-polynomial with a nonnegativity verdict.
Report gal_check(const SimplicialComplex& k, int d);

enum class PolytopeFamily { kPermutohedron, kStellohedron };

std::string_view polytope_family_name(PolytopeFamily f);
PolytopeFamily parse_polytope_family(std::string_view name);

/// h-polynomial against the Eulerian or binomial-Eulerian polynomial, plus
/// palindromicity, flagness, the Euler relation and facet count = h(1).
Report verify_h_identity(PolytopeFamily family, int n);
/// Both families; the stellohedron is left out above its bound and the
/// report detail says so.
Report verify_h_identities(int n);

nlohmann::json to_json(const SimplicialComplex& k);

}  // namespace gammapos
