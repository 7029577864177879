#include <gtest/gtest.h>

#include "gammapos/eulerian.hpp"
#include "gammapos/polytopes.hpp"
#include "gammapos/render.hpp"

using namespace gammapos;

namespace {

using Labels = std::vector<std::string>;

SimplicialComplex triangle() { return simplex_boundary({"a", "b", "c"}); }

}  // namespace

TEST(SimplexBoundary, Examples) {
  EXPECT_EQ(triangle().canonical_facets(), (std::set<Labels>{{"a", "b"}, {"a", "c"}, {"b", "c"}}));
  EXPECT_EQ(simplex_boundary({"0", "1"}).canonical_facets(), (std::set<Labels>{{"0"}, {"1"}}));
  EXPECT_EQ(simplex_boundary({"0", "1", "2", "3"}).facets().size(), 4u);
  EXPECT_THROW(simplex_boundary({"a"}), ValidationError);
}

TEST(Complex, RejectsNestedFacets) {
  EXPECT_THROW(SimplicialComplex({"a", "b"}, {{0}, {0, 1}}), ValidationError);
  EXPECT_THROW(SimplicialComplex({"a", "a"}, {{0}, {1}}), ValidationError);
  EXPECT_THROW(SimplicialComplex({"a"}, {{0, 1}}), ValidationError);
}

TEST(Complex, FacesCloseDownward) {
  auto k = triangle();
  EXPECT_TRUE(k.is_face({}));
  EXPECT_TRUE(k.is_face({0}));
  EXPECT_TRUE(k.is_face({0, 2}));
  EXPECT_FALSE(k.is_face({0, 1, 2}));
  auto copy = k;
  EXPECT_EQ(&copy.faces(), &k.faces());
}

TEST(Barycentric, Examples) {
  auto hex = barycentric_subdivision(triangle());
  EXPECT_EQ(f_vector(hex), (FVector{1, 6, 6}));

  SimplicialComplex edge({"a", "b"}, {{0, 1}});
  auto path = barycentric_subdivision(edge);
  EXPECT_EQ(path.canonical_facets(), (std::set<Labels>{{"{a,b}", "{a}"}, {"{a,b}", "{b}"}}));

  auto tet = barycentric_subdivision(simplex_boundary({"1", "2", "3", "4"}));
  EXPECT_EQ(f_vector(tet), (FVector{1, 14, 36, 24}));
}

TEST(Stellar, Examples) {
  auto k = triangle();
  auto square = stellar_subdivide(k, k.face_from_labels({"a", "b"}));
  EXPECT_EQ(square.canonical_facets(),
            (std::set<Labels>{{"<a,b>", "a"}, {"<a,b>", "b"}, {"a", "c"}, {"b", "c"}}));

  EXPECT_EQ(stellar_subdivide(k, k.face_from_labels({"a"})).canonical_facets(), k.canonical_facets());

  auto tet = simplex_boundary({"1", "2", "3", "4"});
  auto coned = stellar_subdivide(tet, tet.face_from_labels({"1", "2", "3"}));
  EXPECT_EQ(f_vector(coned)[1], f_vector(tet)[1] + 1);
  EXPECT_EQ(coned.facets().size(), tet.facets().size() + 2);
}

TEST(Stellar, RejectsNonFaces) {
  auto k = triangle();
  EXPECT_THROW(stellar_subdivide(k, {0, 1, 2}), ValidationError);
  EXPECT_THROW(stellar_subdivide(k, {}), ValidationError);
}

TEST(Stellar, PreservesEulerCharacteristic) {
  auto tet = simplex_boundary({"1", "2", "3", "4"});
  auto k = stellar_subdivide_all(tet, {{"1", "2"}, {"3", "4"}, {"1", "3"}});
  EXPECT_EQ(euler_characteristic(k), euler_characteristic(tet));
}

TEST(DualPermutohedron, Examples) {
  EXPECT_EQ(f_vector(dual_permutohedron(3)), (FVector{1, 6, 6}));
  EXPECT_EQ(f_vector(dual_permutohedron(2)), (FVector{1, 2}));
  EXPECT_EQ(f_vector(dual_permutohedron(4)), (FVector{1, 14, 36, 24}));
  EXPECT_THROW(dual_permutohedron(7), ResourceError);
  EXPECT_THROW(dual_permutohedron(1), ValidationError);
}

TEST(DualStellohedron, Examples) {
  EXPECT_EQ(f_vector(dual_stellohedron(2)), (FVector{1, 5, 5}));
  EXPECT_EQ(f_vector(dual_stellohedron(1)), (FVector{1, 2}));
  EXPECT_EQ(h_polynomial(dual_stellohedron(3), 3), int_poly({1, 7, 7, 1}));
  EXPECT_THROW(dual_stellohedron(6), ResourceError);
}

TEST(DualStellohedron, OrderWithinSizeClassDoesNotMatter) {
  for (int n = 2; n <= 4; ++n) {
    const auto reference = dual_stellohedron(n).canonical_facets();
    for (unsigned seed = 1; seed <= 5; ++seed)
      EXPECT_EQ(dual_stellohedron(n, kStellohedronBound, seed).canonical_facets(), reference) << n << " " << seed;
  }
}

TEST(CrossPolytope, Examples) {
  EXPECT_EQ(f_vector(cross_polytope_boundary(2)), (FVector{1, 4, 4}));
  EXPECT_EQ(f_vector(cross_polytope_boundary(1)), (FVector{1, 2}));
  EXPECT_EQ(f_vector(cross_polytope_boundary(3)), (FVector{1, 6, 12, 8}));
  auto k = cross_polytope_boundary(2);
  EXPECT_FALSE(k.is_face(k.face_from_labels({"+1", "-1"})));
}

TEST(HPolynomial, Examples) {
  EXPECT_EQ(h_polynomial(dual_permutohedron(3), 2), int_poly({1, 4, 1}));
  EXPECT_EQ(h_polynomial(dual_stellohedron(2), 2), int_poly({1, 3, 1}));
  EXPECT_EQ(h_polynomial(cross_polytope_boundary(2), 2), int_poly({1, 2, 1}));
  EXPECT_THROW(h_polynomial(triangle(), 3), ValidationError);
}

TEST(Flag, Examples) {
  EXPECT_TRUE(is_flag(barycentric_subdivision(triangle())));
  EXPECT_FALSE(is_flag(triangle()));
  EXPECT_TRUE(is_flag(dual_stellohedron(3)));
  EXPECT_TRUE(is_flag(cross_polytope_boundary(3)));
}

TEST(Gal, Examples) {
  Report r = gal_check(dual_permutohedron(5), 4);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(*r.gamma_vector, nlohmann::json({"1", "22", "16"}));
  r = gal_check(cross_polytope_boundary(3), 3);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(*r.gamma_vector, nlohmann::json({"1", "0"}));
  r = gal_check(dual_stellohedron(3), 3);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(*r.gamma_vector, nlohmann::json({"1", "4"}));
}

TEST(Gal, ReportsDehnSommervilleFailure) {
  // a path of two edges is not a sphere; its h-polynomial t + t^2 is not palindromic
  SimplicialComplex path({"a", "b", "c"}, {{0, 1}, {1, 2}});
  Report r = gal_check(path, 2);
  EXPECT_FALSE(r.passed);
  EXPECT_NE(r.detail.find("Dehn-Sommerville"), std::string::npos);
}

TEST(HIdentities, Examples) {
  EXPECT_TRUE(verify_h_identities(2).passed);
  Report r = verify_h_identities(3);
  EXPECT_TRUE(r.passed) << r.detail;
  r = verify_h_identity(PolytopeFamily::kPermutohedron, 5);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.rhs, to_json(int_poly({1, 26, 66, 26, 1})));
}

TEST(Spheres, EulerRelationAndFacetCount) {
  for (int n = 1; n <= 5; ++n) {
    auto st = dual_stellohedron(n);
    EXPECT_EQ(euler_characteristic(st), 1 + (n % 2 == 1 ? 1 : -1)) << n;
    EXPECT_EQ(BigInt(static_cast<long long>(st.facets().size())), evaluate(binomial_eulerian_poly(n), 1));
    auto cp = cross_polytope_boundary(n);
    EXPECT_EQ(euler_characteristic(cp), 1 + (n % 2 == 1 ? 1 : -1)) << n;
    if (n >= 2) {
      auto pe = dual_permutohedron(n);
      EXPECT_EQ(euler_characteristic(pe), 1 + ((n - 1) % 2 == 1 ? 1 : -1)) << n;
    }
  }
}

TEST(Json, ComplexExport) {
  nlohmann::json j = to_json(triangle());
  EXPECT_EQ(j["vertices"], nlohmann::json({"a", "b", "c"}));
  EXPECT_EQ(j["facets"].size(), 3u);
}
