#include <gtest/gtest.h>

#include <set>

#include "gammapos/permstat.hpp"
#include "oracle.hpp"

using namespace gammapos;

namespace {

std::vector<std::string> strings(const std::vector<Permutation>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

}  // namespace

TEST(Permutation, ParseAndRender) {
  EXPECT_EQ(Permutation::parse("3412").to_string(), "3412");
  auto big = Permutation::parse("10,1,2,3,4,5,6,7,8,9");
  EXPECT_EQ(big.size(), 10);
  EXPECT_EQ(big(1), 10);
  EXPECT_EQ(big.to_string(), "10,1,2,3,4,5,6,7,8,9");
}

TEST(Permutation, RejectsMalformedInput) {
  EXPECT_THROW(Permutation::parse("1224"), ValidationError);
  EXPECT_THROW(Permutation::parse("13"), ValidationError);
  EXPECT_THROW(Permutation::parse("1a"), ValidationError);
  EXPECT_THROW(Permutation::parse("1,,2"), ValidationError);
  EXPECT_THROW(Permutation(std::vector<int>{0, 1}), ValidationError);
}

TEST(Permutation, Inverse) {
  EXPECT_EQ(Permutation::parse("312").inverse().to_string(), "231");
  EXPECT_EQ(Permutation::parse("3412").inverse().to_string(), "3412");
}

TEST(Stats, Examples) {
  auto s = stats(Permutation::parse("321"));
  EXPECT_EQ(s.des_set, (std::vector<int>{1, 2}));
  EXPECT_EQ(s.maj, 3);
  EXPECT_EQ(s.exc, 1);
  EXPECT_EQ(s.inv, 3);
  EXPECT_EQ(s.fix, 1);
  EXPECT_TRUE(s.has_double_descent());

  s = stats(Permutation::parse("3412"));
  EXPECT_EQ(s.des_set, (std::vector<int>{2}));
  EXPECT_EQ(s.maj, 2);
  EXPECT_EQ(s.exc, 2);
  EXPECT_EQ(s.inv, 4);
  EXPECT_EQ(s.fix, 0);
}

TEST(Stats, Identity) {
  for (int n = 0; n <= 6; ++n) {
    auto s = stats(Permutation::identity(n));
    EXPECT_TRUE(s.des_set.empty());
    EXPECT_EQ(s.des + s.maj + s.exc + s.inv, 0);
    EXPECT_EQ(s.fix, n);
  }
}

TEST(Stats, AgreesWithOracleAndRanges) {
  for (int n = 0; n <= 6; ++n) {
    for_each_permutation(n, 9, [&](const Permutation& p) {
      auto s = stats(p);
      auto o = oracle::raw_stats(std::vector<int>(p.images().begin(), p.images().end()));
      EXPECT_EQ(s.des_set, o.des_set);
      EXPECT_EQ(s.des, static_cast<int>(s.des_set.size()));
      EXPECT_EQ(s.maj, o.maj);
      EXPECT_EQ(s.exc, o.exc);
      EXPECT_EQ(s.inv, o.inv);
      EXPECT_EQ(s.fix, o.fix);
      EXPECT_LE(s.exc, std::max(n - 1, 0));
      EXPECT_LE(s.inv, n * (n - 1) / 2);
    });
  }
}

TEST(Classes, Examples) {
  EXPECT_EQ(strings(enumerate_class(gamma_class(3, 1))), (std::vector<std::string>{"213", "312"}));
  EXPECT_EQ(strings(enumerate_class(tilde_gamma_class(2, 1))), (std::vector<std::string>{"21"}));
  EXPECT_EQ(strings(enumerate_class(gamma0_class(4, 1))),
            (std::vector<std::string>{"1324", "1423", "2314", "2413", "3412"}));
}

TEST(Classes, InvPolynomials) {
  EXPECT_EQ(class_inv_poly(gamma_class(3, 1)), int_poly({0, 1, 1}));
  EXPECT_EQ(class_inv_poly(tilde_gamma_class(2, 1)), int_poly({0, 1}));
  EXPECT_EQ(class_inv_poly(gamma0_class(4, 1)), int_poly({0, 1, 2, 1, 1}));
}

TEST(Classes, SplitByDescentsMatchesSeparateQueries) {
  for (int n = 1; n <= 6; ++n) {
    auto split = class_inv_polys_by_des(gamma_class(n, 0));
    for (int k = 0; k < static_cast<int>(split.size()); ++k)
      EXPECT_EQ(split[static_cast<std::size_t>(k)], class_inv_poly(gamma_class(n, k)));
  }
}

TEST(Classes, FlagsAreIndependent) {
  ClassSpec only_final;
  only_final.n = 3;
  only_final.no_final_descent = true;
  // 123, 213, 312 avoid a descent at position 2
  EXPECT_EQ(strings(enumerate_class(only_final)), (std::vector<std::string>{"123", "213", "312"}));
  ClassSpec only_initial;
  only_initial.n = 3;
  only_initial.no_initial_descent = true;
  EXPECT_EQ(strings(enumerate_class(only_initial)), (std::vector<std::string>{"123", "132", "231"}));
}

TEST(Classes, EnumerationBound) {
  EXPECT_THROW(enumerate_class(gamma_class(10, 0)), ResourceError);
  EXPECT_THROW(class_inv_poly(gamma_class(5, 1), 4), ResourceError);
  EXPECT_NO_THROW(class_inv_poly(gamma_class(5, 1), 5));
}

TEST(DescentClass, Examples) {
  auto c = descent_class_check(3, std::vector<int>{1});
  EXPECT_EQ(c.inv_poly, int_poly({0, 1, 1}));
  EXPECT_EQ(c.inverse_maj_poly, int_poly({0, 1, 1}));
  EXPECT_TRUE(c.equal);

  c = descent_class_check(5, std::vector<int>{});
  EXPECT_EQ(c.inv_poly, IntPoly(1));
  EXPECT_TRUE(c.equal);

  c = descent_class_check(4, std::vector<int>{2});
  EXPECT_EQ(c.inv_poly, int_poly({0, 1, 2, 1, 1}));
  EXPECT_EQ(c.inverse_maj_poly, int_poly({0, 1, 2, 1, 1}));
}

TEST(DescentClass, RejectsBadSets) {
  EXPECT_THROW(descent_class_check(3, std::vector<int>{3}), ValidationError);
  EXPECT_THROW(descent_class_check(3, std::vector<int>{0}), ValidationError);
  EXPECT_THROW(descent_class_check(3, std::vector<int>{1, 1}), ValidationError);
}

TEST(DescentClass, EquidistributedOnEveryClass) {
  for (int n = 1; n <= 7; ++n) {
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      std::vector<int> j;
      for (int i = 1; i < n; ++i)
        if (mask >> (i - 1) & 1u) j.push_back(i);
      EXPECT_TRUE(descent_class_check(n, j).equal) << "n=" << n << " mask=" << mask;
    }
  }
}

TEST(Derangements, Examples) {
  EXPECT_EQ(strings(derangements(2)), (std::vector<std::string>{"21"}));
  EXPECT_EQ(strings(derangements(3)), (std::vector<std::string>{"231", "312"}));
  EXPECT_EQ(derangements(4).size(), 9u);
  EXPECT_TRUE(derangements(1).empty());
}

TEST(Equidistribution, DescentsAndExcedances) {
  for (int n = 0; n <= 8; ++n) {
    std::vector<long long> by_des(static_cast<std::size_t>(n) + 1), by_exc(static_cast<std::size_t>(n) + 1);
    for_each_permutation(n, 9, [&](const Permutation& p) {
      auto s = stats(p);
      ++by_des[static_cast<std::size_t>(s.des)];
      ++by_exc[static_cast<std::size_t>(s.exc)];
    });
    EXPECT_EQ(by_des, by_exc) << n;
  }
}

TEST(Equidistribution, MajorIndexAndInversionsGiveQFactorial) {
  for (int n = 0; n <= 8; ++n) {
    IntPoly maj, inv;
    for_each_permutation(n, 9, [&](const Permutation& p) {
      auto s = stats(p);
      maj += IntPoly::monomial(1, s.maj);
      inv += IntPoly::monomial(1, s.inv);
    });
    EXPECT_EQ(maj, q_factorial(n));
    EXPECT_EQ(inv, q_factorial(n));
  }
}

TEST(Classes, PrwCardinalitiesMatchTildeGamma) {
  for (int n = 1; n <= 7; ++n) {
    for (int k = 0; 2 * k <= n; ++k) {
      auto tilde = enumerate_class(tilde_gamma_class(n, k)).size();
      auto prw = enumerate_class(prw_class(n + 1, k)).size();
      EXPECT_EQ(tilde, prw) << "n=" << n << " k=" << k;
    }
  }
}
