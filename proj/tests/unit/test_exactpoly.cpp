#include <gtest/gtest.h>

#include <random>

#include "gammapos/eulerian.hpp"
#include "gammapos/gamma.hpp"
#include "gammapos/poly.hpp"
#include "gammapos/qtrpoly.hpp"
#include "gammapos/render.hpp"
#include "gammapos/series.hpp"
#include "oracle.hpp"

using namespace gammapos;

namespace {

IntPoly a5() { return int_poly({1, 26, 66, 26, 1}); }

QTPoly qt(std::vector<IntPoly> c) { return QTPoly(std::move(c)); }

}  // namespace

TEST(Poly, TrimsTrailingZeros) {
  IntPoly p = int_poly({1, 2, 0, 0});
  EXPECT_EQ(p.degree(), 1);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((p - p).degree(), -1);
}

TEST(Poly, ExactBigCoefficients) {
  IntPoly p = int_poly({1, 1});
  IntPoly acc(1);
  for (int i = 0; i < 200; ++i) acc *= p;
  EXPECT_EQ(acc.coeff(100), binomial(200, 100));
  EXPECT_EQ(to_decimal(binomial(200, 100)), "90548514656103281165404177077484163874504589675413336841320");
}

TEST(Poly, DivideExactRejectsRemainder) {
  EXPECT_EQ(divide_exact(q_factorial(4), q_factorial(2)), q_integer(3) * q_integer(4));
  EXPECT_THROW(divide_exact(int_poly({1, 0, 1}), int_poly({1, 1})), ConsistencyError);
}

TEST(Palindromic, Examples) {
  EXPECT_TRUE(is_palindromic(a5(), 4));
  EXPECT_TRUE(is_palindromic(IntPoly(1), 0));
  EXPECT_FALSE(is_palindromic(int_poly({1, 2}), 1));
}

TEST(Palindromic, DegreeBelowBoundIsAnError) {
  EXPECT_THROW(is_palindromic(a5(), 3), DegreeBoundError);
}

TEST(Palindromic, AbsentCoefficientsCountAsZero) {
  // t + t^2 has center 3/2 only when d = 3
  EXPECT_TRUE(is_palindromic(int_poly({0, 1, 1}), 3));
  EXPECT_FALSE(is_palindromic(int_poly({0, 1, 1}), 2));
}

TEST(GammaExpand, EulerianFive) {
  auto g = gamma_expand(a5(), 4);
  EXPECT_EQ(g.degree_bound, 4);
  EXPECT_EQ(g.gammas, (std::vector<BigInt>{1, 22, 16}));
}

TEST(GammaExpand, BinomialPower) {
  auto g = gamma_expand(one_plus_x_pow<BigInt>(3), 3);
  EXPECT_EQ(g.gammas, (std::vector<BigInt>{1, 0}));
}

TEST(GammaExpand, QCoefficients) {
  QTPoly p = qt({int_poly({1}), int_poly({2, 1}), int_poly({1})});
  auto g = gamma_expand(p, 2);
  EXPECT_EQ(g.gammas, (std::vector<IntPoly>{int_poly({1}), int_poly({0, 1})}));
}

TEST(GammaExpand, RejectsNonPalindromic) {
  EXPECT_THROW(gamma_expand(int_poly({1, 2}), 1), PalindromicityError);
}

TEST(GammaContract, Examples) {
  EXPECT_EQ(gamma_contract(GammaVector<BigInt>{4, {1, 22, 16}}), a5());
  EXPECT_EQ(gamma_contract(GammaVector<BigInt>{3, {1, 0}}), one_plus_x_pow<BigInt>(3));
  EXPECT_EQ(gamma_contract(GammaVector<BigInt>{3, {0, 1}}), int_poly({0, 1, 1}));
}

TEST(GammaProperty, ContractExpandRoundTrip) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-20, 20);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = trial % 9;
    GammaVector<BigInt> g{d, {}};
    for (int k = 0; 2 * k <= d; ++k) g.gammas.push_back(coef(rng));
    IntPoly p = gamma_contract(g);
    ASSERT_TRUE(is_palindromic(p, d));
    EXPECT_EQ(gamma_expand(p, d), g);
    EXPECT_EQ(gamma_contract(gamma_expand(p, d)), p);
  }
}

TEST(QBinomial, Examples) {
  EXPECT_EQ(q_binomial(2, 1), int_poly({1, 1}));
  EXPECT_EQ(q_binomial(4, 2), int_poly({1, 1, 2, 1, 1}));
  EXPECT_TRUE(q_binomial(3, 5).is_zero());
  EXPECT_TRUE(q_binomial(3, -1).is_zero());
}

TEST(QBinomial, MatchesPascalRuleAndSymmetry) {
  for (int n = 0; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      const IntPoly b = q_binomial(n, k);
      EXPECT_EQ(oracle::to_vector(b), oracle::q_pascal(n, k)) << n << "," << k;
      EXPECT_EQ(evaluate(b, 1), binomial(n, k));
      EXPECT_EQ(b, q_binomial(n, n - k));
    }
  }
}

TEST(Unimodal, Examples) {
  EXPECT_TRUE(is_b_unimodal(a5(), is_nonnegative));
  EXPECT_FALSE(is_b_unimodal(int_poly({1, 0, 1}), is_nonnegative));
  EXPECT_TRUE(is_b_unimodal(q_eulerian(4), is_q_positive));
  EXPECT_TRUE(is_b_unimodal(int_poly({1, 1, 1}), is_nonnegative));
  EXPECT_TRUE(is_b_unimodal(IntPoly{}, is_nonnegative));
}

TEST(Unimodal, QOrderIsFinerThanNumeric) {
  // 1 + (2q)t + (1 + q^2) t^2: numeric values 1, 2, 2 but (1+q^2) - 2q is not q-positive
  QTPoly p = qt({int_poly({1}), int_poly({0, 2}), int_poly({1, 0, 1})});
  EXPECT_TRUE(is_b_unimodal(at_q_one(p), is_nonnegative));
  EXPECT_FALSE(is_b_unimodal(p, is_q_positive));
}

TEST(Series, ProductIsAssociativeAndCommutative) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-3, 3);
  auto random_series = [&](int order, SeriesScaling scaling) {
    TruncSeries<QTPoly> s(order, scaling);
    for (int n = 0; n <= order; ++n)
      s[n] = qt({int_poly({coef(rng), coef(rng)}), int_poly({coef(rng)})});
    return s;
  };
  for (int order = 0; order <= 10; ++order) {
    for (auto scaling : {SeriesScaling::kPlain, SeriesScaling::kQFactorial}) {
      auto a = random_series(order, scaling);
      auto b = random_series(order, scaling);
      auto c = random_series(order, scaling);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ((a * b) * c, a * (b * c));
    }
  }
}

TEST(Series, ExpQSquaredHasGaussianSumNumerators) {
  // numerator n of exp_q(z)^2 is sum_k [n choose k]_q, which is 2^n at q = 1
  auto e = exp_q<QTPoly>(6, QTPoly(1));
  auto sq = e * e;
  for (int n = 0; n <= 6; ++n) {
    IntPoly expected;
    for (int k = 0; k <= n; ++k) expected += q_binomial(n, k);
    EXPECT_EQ(sq[n], QTPoly(expected));
    EXPECT_EQ(evaluate(expected, 1), BigInt(1) << n);
  }
}

TEST(Series, MismatchedOrdersAreRejected) {
  TruncSeries<QTPoly> a(3, SeriesScaling::kPlain), b(4, SeriesScaling::kPlain);
  EXPECT_THROW(a + b, ValidationError);
}

TEST(QTRPoly, SpecializesR) {
  QTRPoly p = QTRPoly::monomial(1, 0, 0, 2) + QTRPoly::monomial(1, 0, 1, 0);
  EXPECT_EQ(p.at_r(1), qt({int_poly({1}), int_poly({1})}));
  EXPECT_EQ(p.at_r(0), qt({IntPoly{}, int_poly({1})}));
  EXPECT_EQ(p.r_as_t(), qt({IntPoly{}, int_poly({1}), int_poly({1})}));
  EXPECT_TRUE((p - p).is_zero());
}

TEST(Render, TextMatchesCanonicalForm) {
  QTPoly a3 = qt({int_poly({1}), int_poly({2, 1, 1}), int_poly({1})});
  EXPECT_EQ(to_text(a3), "1 + (2 + q + q^2)*t + t^2");
  EXPECT_EQ(to_text(int_poly({1, 4, 1})), "1 + 4*t + t^2");
  EXPECT_EQ(to_text(int_poly({0, -1, 3})), "-t + 3*t^2");
  EXPECT_EQ(to_text(IntPoly{}), "0");
}

TEST(Render, JsonRoundTrip) {
  QTPoly p = qt({int_poly({1}), int_poly({2, -1, 1}), IntPoly{}, int_poly({0, 0, 5})});
  nlohmann::json j = to_json(p);
  EXPECT_EQ(qt_poly_from_json(j), p);
  EXPECT_EQ(to_json(qt_poly_from_json(j)), j);
  EXPECT_EQ(j[1], nlohmann::json({"2", "-1", "1"}));
  IntPoly big = IntPoly::monomial(parse_decimal("123456789012345678901234567890"), 2);
  EXPECT_EQ(int_poly_from_json(to_json(big)), big);
}
