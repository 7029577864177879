#include <gtest/gtest.h>

#include "gammapos/eulerian.hpp"
#include "gammapos/render.hpp"
#include "oracle.hpp"

using namespace gammapos;

namespace {

QTPoly qt(std::vector<IntPoly> c) { return QTPoly(std::move(c)); }

IntPoly q_gamma(const Report& r, std::size_t k) { return int_poly_from_json(r.gamma_vector->at(k)); }

}  // namespace

TEST(Families, NamesRoundTrip) {
  for (auto f : {FamilyTag::kEulerianT, FamilyTag::kEulerianQT, FamilyTag::kEulerianQTR, FamilyTag::kBinomialEulerianT,
                 FamilyTag::kBinomialEulerianQT, FamilyTag::kDerangementQT})
    EXPECT_EQ(parse_family(family_name(f)), f);
  EXPECT_THROW(parse_family("eulerian"), ValidationError);
}

TEST(EulerianPoly, Examples) {
  EXPECT_EQ(eulerian_poly(5), int_poly({1, 26, 66, 26, 1}));
  EXPECT_EQ(eulerian_poly(0), IntPoly(1));
  EXPECT_EQ(eulerian_poly(3), int_poly({1, 4, 1}));
  EXPECT_THROW(eulerian_poly(10), ResourceError);
}

TEST(QEulerian, Examples) {
  EXPECT_EQ(to_text(q_eulerian(3)), "1 + (2 + q + q^2)*t + t^2");
  EXPECT_EQ(q_eulerian(2), qt({int_poly({1}), int_poly({1})}));
  const IntPoly mid = int_poly({3, 2, 3, 2, 1});
  EXPECT_EQ(q_eulerian(4), qt({int_poly({1}), mid, mid, int_poly({1})}));
  EXPECT_EQ(q_eulerian(0), QTPoly(1));
}

TEST(QEulerian, MatchesOracle) {
  for (int n = 0; n <= 7; ++n) {
    auto expected = oracle::q_eulerian_table(n);
    if (n == 0) expected = {{{0, 0}, 1}};
    EXPECT_EQ(oracle::to_table(q_eulerian(n)), expected) << n;
    EXPECT_EQ(at_q_one(q_eulerian(n)), eulerian_poly(n)) << n;
  }
}

TEST(QEulerianFix, Examples) {
  EXPECT_EQ(q_eulerian_fix(1), QTRPoly::monomial(1, 0, 0, 1));
  EXPECT_EQ(q_eulerian_fix(2), QTRPoly::monomial(1, 0, 0, 2) + QTRPoly::monomial(1, 0, 1, 0));
  EXPECT_EQ(q_eulerian_fix(3).at_r(0), qt({IntPoly{}, int_poly({1}), int_poly({1})}));
}

TEST(QEulerianFix, SpecializesToBothFamilies) {
  for (int n = 0; n <= 7; ++n) {
    EXPECT_EQ(q_eulerian_fix(n).at_r(1), q_eulerian(n)) << n;
    EXPECT_EQ(q_eulerian_fix(n).at_r(0), derangement_poly(n)) << n;
  }
}

TEST(BinomialEulerian, Examples) {
  EXPECT_EQ(to_text(q_binomial_eulerian(2)), "1 + (2 + q)*t + t^2");
  const IntPoly mid = int_poly({3, 2, 2});
  EXPECT_EQ(q_binomial_eulerian(3), qt({int_poly({1}), mid, mid, int_poly({1})}));
  EXPECT_EQ(q_binomial_eulerian(0), QTPoly(1));
}

TEST(BinomialEulerian, IntegerLevel) {
  const std::vector<std::vector<long long>> expected{
      {1}, {1, 1}, {1, 3, 1}, {1, 7, 7, 1}, {1, 15, 33, 15, 1}, {1, 31, 131, 131, 31, 1}};
  for (int n = 0; n <= 5; ++n) {
    EXPECT_EQ(oracle::to_vector(binomial_eulerian_poly(n)), expected[static_cast<std::size_t>(n)]);
    EXPECT_EQ(at_q_one(q_binomial_eulerian(n)), binomial_eulerian_poly(n));
  }
}

TEST(Derangement, Examples) {
  EXPECT_EQ(derangement_poly(3), qt({IntPoly{}, int_poly({1}), int_poly({1})}));
  EXPECT_TRUE(derangement_poly(1).is_zero());
  EXPECT_EQ(derangement_poly(4), qt({IntPoly{}, int_poly({1}), int_poly({2, 1, 2, 1, 1}), int_poly({1})}));
  EXPECT_EQ(derangement_poly(0), QTPoly(1));
}

TEST(Derangement, MatchesOracle) {
  for (int n = 1; n <= 7; ++n)
    EXPECT_EQ(oracle::to_table(derangement_poly(n)), oracle::q_eulerian_table(n, true)) << n;
}

TEST(GammaTheorem, EulerianThree) {
  Report r = verify_gamma_theorem(FamilyTag::kEulerianQT, 3);
  EXPECT_TRUE(r.passed) << r.detail;
  EXPECT_EQ(q_gamma(r, 0), IntPoly(1));
  EXPECT_EQ(q_gamma(r, 1), int_poly({0, 1, 1}));
}

TEST(GammaTheorem, BinomialEulerianTwo) {
  Report r = verify_gamma_theorem(FamilyTag::kBinomialEulerianQT, 2);
  EXPECT_TRUE(r.passed) << r.detail;
  EXPECT_EQ(q_gamma(r, 0), IntPoly(1));
  EXPECT_EQ(q_gamma(r, 1), int_poly({0, 1}));
}

TEST(GammaTheorem, DerangementFour) {
  Report r = verify_gamma_theorem(FamilyTag::kDerangementQT, 4);
  EXPECT_TRUE(r.passed) << r.detail;
  EXPECT_EQ(q_gamma(r, 0), IntPoly(1));
  EXPECT_EQ(q_gamma(r, 1), int_poly({0, 1, 2, 1, 1}));
}

TEST(GammaTheorem, AllFamiliesSmallN) {
  for (int n = 1; n <= 7; ++n) {
    for (auto f : {FamilyTag::kEulerianT, FamilyTag::kEulerianQT, FamilyTag::kBinomialEulerianT,
                   FamilyTag::kBinomialEulerianQT}) {
      Report r = verify_gamma_theorem(f, n);
      EXPECT_TRUE(r.passed) << r.identity << " n=" << n << " " << r.detail;
    }
    if (n >= 2) EXPECT_TRUE(verify_gamma_theorem(FamilyTag::kDerangementQT, n).passed) << n;
  }
}

TEST(GammaTheorem, IntegerGammaOfA5) {
  Report r = verify_gamma_theorem(FamilyTag::kEulerianT, 5);
  ASSERT_TRUE(r.passed);
  EXPECT_EQ(*r.gamma_vector, nlohmann::json::parse(R"([["1"],["22"],["16"]])"));
}

TEST(GammaTheorem, LiteralDerangementFormsFailAtTwo) {
  auto [a, b] = derangement_literal_forms(2);
  EXPECT_FALSE(a.passed);
  EXPECT_FALSE(b.passed);
  Report r = verify_gamma_theorem(FamilyTag::kDerangementQT, 2);
  EXPECT_TRUE(r.passed);
  EXPECT_NE(r.detail.find("fail"), std::string::npos);
}

TEST(GammaTheorem, ReportShape) {
  nlohmann::json j = verify_gamma_theorem(FamilyTag::kEulerianQT, 4).to_json();
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["parameters"]["n"], 4);
  EXPECT_TRUE(j.contains("lhs"));
  EXPECT_TRUE(j.contains("rhs"));
  EXPECT_TRUE(j.contains("gamma_vector"));
}

TEST(GammaTheorem, Preconditions) {
  EXPECT_THROW(verify_gamma_theorem(FamilyTag::kDerangementQT, 1), ValidationError);
  EXPECT_THROW(verify_gamma_theorem(FamilyTag::kEulerianQTR, 3), ValidationError);
  EXPECT_THROW(verify_gamma_theorem(FamilyTag::kEulerianQT, 10), ResourceError);
}

TEST(Cgk, Examples) {
  Report r = verify_cgk(1, 2, false);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.lhs, nlohmann::json({"7"}));
  EXPECT_TRUE(verify_cgk(3, 3, true).passed);
  EXPECT_TRUE(verify_cgk(2, 2, true).passed);
  EXPECT_THROW(verify_cgk(0, 2, false), ValidationError);
}

TEST(Cgk, SmallRange) {
  for (int r = 1; r <= 5; ++r)
    for (int s = 1; r + s <= 6; ++s) {
      EXPECT_TRUE(verify_cgk(r, s, false).passed) << r << "," << s;
      EXPECT_TRUE(verify_cgk(r, s, true).passed) << r << "," << s;
    }
}

TEST(ExpQ, NamesRoundTrip) {
  for (auto w : {ExpQIdentity::kQEuler, ExpQIdentity::kQFixEuler, ExpQIdentity::kQDerEuler, ExpQIdentity::kQBinomGF})
    EXPECT_EQ(parse_expq(expq_name(w)), w);
  EXPECT_THROW(parse_expq("nope"), ValidationError);
}

TEST(ExpQ, Examples) {
  EXPECT_TRUE(verify_expq_identity(ExpQIdentity::kQEuler, 4).passed);
  EXPECT_TRUE(verify_expq_identity(ExpQIdentity::kQDerEuler, 4).passed);
  EXPECT_TRUE(verify_expq_identity(ExpQIdentity::kQEuler, 0).passed);
  EXPECT_TRUE(verify_expq_identity(ExpQIdentity::kQFixEuler, 5).passed);
  EXPECT_TRUE(verify_expq_identity(ExpQIdentity::kQBinomGF, 5).passed);
}

TEST(BinomialIdentities, Examples) {
  for (int n : {0, 2, 5}) EXPECT_TRUE(verify_binomial_identities(n).passed) << n;
}

TEST(Worpitzky, Examples) {
  EXPECT_TRUE(verify_worpitzky(2, 3).passed);
  EXPECT_TRUE(verify_worpitzky(1, 2).passed);
  EXPECT_TRUE(verify_worpitzky(5, 8).passed);
  EXPECT_THROW(verify_worpitzky(3, 2), ValidationError);
}

TEST(QProperties, PalindromicUnimodalGammaPositive) {
  for (int n = 1; n <= 7; ++n) {
    EXPECT_TRUE(verify_q_properties(FamilyTag::kEulerianQT, n).passed) << n;
    EXPECT_TRUE(verify_q_properties(FamilyTag::kBinomialEulerianQT, n).passed) << n;
    if (n >= 2) EXPECT_TRUE(verify_q_properties(FamilyTag::kDerangementQT, n).passed) << n;
  }
}
