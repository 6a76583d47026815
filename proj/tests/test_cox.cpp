#include <gtest/gtest.h>

#include <lvcox/cox.hpp>

#include "support/fixtures.hpp"

using namespace lvcox;
using fixtures::v;

TEST(Cox, TransformOfS2SplitsTheColor) {
    const auto res = cox_transform(fixtures::s2());
    const auto& sk = res.skeleton;
    EXPECT_EQ(sk.sigma_sc, (std::vector<Vec>{v({1})}));
    ASSERT_EQ(sk.divisors.size(), 2u);
    EXPECT_EQ(sk.divisors[0].name, "D'");
    EXPECT_EQ(sk.divisors[1].name, "D''");
    for (const auto& d : sk.divisors) {
        EXPECT_EQ(d.c, v({1}));
        EXPECT_EQ(d.varsigma, (std::set<std::size_t>{0}));
    }
    EXPECT_EQ(res.provenance, (std::vector<std::pair<std::string, std::string>>{{"D'", "D"}, {"D''", "D"}}));
    EXPECT_TRUE(validate(sk).empty());
    EXPECT_TRUE(is_factorial(sk));
}

TEST(Cox, TransformOfF1) {
    const auto res = cox_transform(fixtures::f1());
    const auto& sk = res.skeleton;
    EXPECT_EQ(sk.sigma_sc, (std::vector<Vec>{v({1, 0}), v({0, 1})}));
    ASSERT_EQ(sk.divisors.size(), 5u);
    EXPECT_EQ(sk.divisors[0].name, "D1'");
    EXPECT_EQ(sk.divisors[0].c, v({1, 0}));
    EXPECT_EQ(sk.divisors[1].name, "D1''");
    EXPECT_EQ(sk.divisors[1].c, v({1, 0}));
    EXPECT_EQ(sk.divisor("E").c, v({-1, -1}));
    EXPECT_EQ(sk.divisor("D2").c, v({0, 1}));
    EXPECT_EQ(res.provenance.size(), 5u);
}

TEST(Cox, FactorialIsFixed) {
    const auto sk = fixtures::p2();
    const auto res = cox_transform(sk);
    EXPECT_EQ(res.skeleton.sigma_sc, sk.sigma_sc);
    ASSERT_EQ(res.skeleton.divisors.size(), sk.divisors.size());
    for (std::size_t i = 0; i < sk.divisors.size(); ++i) EXPECT_EQ(res.skeleton.divisors[i].c, sk.divisors[i].c);
}

TEST(Cox, ClassGroup) {
    EXPECT_EQ(class_group(fixtures::pt()).rank, 0u);
    EXPECT_EQ(class_group(fixtures::p2()).rank, 0u);
    const auto cl = class_group(fixtures::s2());
    EXPECT_EQ(cl.rank, 1u);
    EXPECT_EQ(cl.generator_names, (std::vector<std::string>{"D"}));
}

TEST(Cox, AmbientOfP2) {
    const auto amb = cox_ambient(fixtures::p2());
    EXPECT_EQ(amb.pullback_matrix, (std::vector<Vec>{v({2}), v({-1})}));
    EXPECT_EQ(amb.pullback(v({1})), v({2, -1}));
    EXPECT_EQ(amb.pushforward(v({1, 1})), v({1}));
    EXPECT_EQ(amb.t_bar_generators, (std::vector<Vec>{v({2, -1})}));
    EXPECT_EQ(cox_ambient(fixtures::f1()).pullback_matrix,
              (std::vector<Vec>{v({2, 0}), v({0, 1}), v({0, 1}), v({-2, -1})}));
    EXPECT_TRUE(cox_ambient(fixtures::pt()).pullback_matrix.empty());
}

TEST(Cox, FixedPoint) {
    EXPECT_TRUE(has_fixed_point(fixtures::pt()));
    EXPECT_TRUE(has_fixed_point(fixtures::p1()));
    EXPECT_TRUE(has_fixed_point(fixtures::p2()));
    EXPECT_FALSE(has_fixed_point(fixtures::s2()));
    EXPECT_TRUE(has_fixed_point(fixtures::f1()));
}

TEST(Cox, FixedPointDiffersFromCompletenessOnArbitraryData) {
    // V1-V6 valid but not of the shape produced by actual varieties
    const auto sk = fixtures::make("x", "A1xA1", {v({2, 0}), v({0, 2})},
                                   {fixtures::div("Da", {0}, v({2, -3})), fixtures::div("Db", {1}, v({-3, 2}))});
    ASSERT_TRUE(validate(sk).empty());
    EXPECT_TRUE(has_fixed_point(sk));
    EXPECT_FALSE(is_complete(sk));
}
