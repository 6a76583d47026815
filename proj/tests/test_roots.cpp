#include <gtest/gtest.h>

#include <set>

#include <lvcox/roots.hpp>

#include "support/root_oracle.hpp"

using namespace lvcox;

namespace {

const std::vector<RootComponent> kAll = {
    {RootType::A, 1}, {RootType::A, 2}, {RootType::A, 3}, {RootType::A, 5}, {RootType::B, 2},
    {RootType::B, 3}, {RootType::B, 5}, {RootType::C, 3}, {RootType::C, 4}, {RootType::D, 4},
    {RootType::D, 5}, {RootType::E, 6}, {RootType::E, 7}, {RootType::E, 8}, {RootType::F, 4},
    {RootType::G, 2}};

} // namespace

TEST(Roots, SpecParsing) {
    const auto s = RootSystemSpec::parse("A1xB3xG2");
    ASSERT_EQ(s.components.size(), 3u);
    EXPECT_EQ(s.str(), "A1xB3xG2");
    for (const char* bad : {"C2", "D3", "E9", "A0", "F3", "G3", "B1"})
        EXPECT_THROW(RootSystem{RootSystemSpec::parse(bad)}, InadmissibleSpec) << bad;
}

TEST(Roots, LabelsAreComponentAndIndex) {
    const RootSystem rs(RootSystemSpec::parse("A2xA1"));
    EXPECT_EQ(rs.labels(), (std::vector<std::string>{"c1.1", "c1.2", "c2.1"}));
    EXPECT_EQ(rs.index_of("c2.1"), 2u);
    EXPECT_THROW(rs.index_of("c3.1"), UnknownLabel);
}

TEST(Roots, CartanMatchesTextbook) {
    for (const auto& c : kAll) {
        const RootSystemSpec spec{{c}};
        const RootSystem rs(spec);
        EXPECT_EQ(rs.cartan(), oracle::textbook_cartan(spec)) << spec.str();
    }
}

TEST(Roots, PositiveRootsMatchReflectionClosure) {
    for (const auto& c : kAll) {
        const RootSystemSpec spec{{c}};
        const RootSystem rs(spec);
        const auto expected = oracle::positive_roots_by_reflection(oracle::textbook_cartan(spec));
        const std::set<std::vector<int>> got(rs.positive_roots().begin(), rs.positive_roots().end());
        EXPECT_EQ(got, expected) << spec.str();
        EXPECT_EQ(rs.positive_roots().size(), oracle::positive_root_count(c.type, c.rank)) << spec.str();
    }
}

TEST(Roots, ProductCountsAdd) {
    const RootSystem rs(RootSystemSpec::parse("A2xG2xB3"));
    EXPECT_EQ(rs.positive_roots().size(), 3u + 6u + 9u);
}

TEST(Roots, DimGP) {
    const RootSystem a1(RootSystemSpec::parse("A1"));
    EXPECT_EQ(dim_GP(a1, std::set<std::size_t>{}), 0u);
    EXPECT_EQ(dim_GP(a1, std::set<std::size_t>{0}), 1u);
    EXPECT_EQ(dim_GP(RootSystem(RootSystemSpec::parse("A1xA1")), std::set<std::size_t>{0, 1}), 2u);
    EXPECT_THROW(dim_GP(a1, std::vector<std::string>{"c1.2"}), UnknownLabel);
    const RootSystem a2(RootSystemSpec::parse("A2"));
    EXPECT_EQ(a2.positive_roots(), (std::vector<IntVec>{{1, 0}, {0, 1}, {1, 1}}));
    EXPECT_EQ(dim_GP(a2, std::vector<std::string>{"c1.1"}), 2u);
    EXPECT_EQ(dim_GP(a2, std::vector<std::string>{"c1.1", "c1.2"}), 3u);
    const RootSystem e8(RootSystemSpec::parse("E8"));
    EXPECT_EQ(dim_GP(e8, std::set<std::size_t>{0, 1, 2, 3, 4, 5, 6, 7}), 120u);
    // G2 with the short root in the Levi: 6 - 1
    const RootSystem g2(RootSystemSpec::parse("G2"));
    EXPECT_EQ(dim_GP(g2, std::set<std::size_t>{1}), 5u);
}

TEST(Roots, AutomorphismCounts) {
    auto count = [](const std::string& s) {
        const RootSystem rs(RootSystemSpec::parse(s));
        return based_automorphisms(rs).size();
    };
    EXPECT_EQ(count("A1"), 1u);
    EXPECT_EQ(count("A2"), 2u);
    EXPECT_EQ(count("A1xA1"), 2u);
    EXPECT_EQ(count("A3"), 2u);
    EXPECT_EQ(count("B3"), 1u);
    EXPECT_EQ(count("D4"), 6u);
    EXPECT_EQ(count("D5"), 2u);
    EXPECT_EQ(count("E6"), 2u);
    EXPECT_EQ(count("E7"), 1u);
    EXPECT_EQ(count("A1xA1xA1"), 6u);
    EXPECT_EQ(count("A2xA2"), 8u);
    EXPECT_EQ(count("F4"), 1u);
    EXPECT_EQ(count("G2"), 1u);
}

TEST(Roots, IsomorphismsPreserveCartanAndAreOrdered) {
    const RootSystem a(RootSystemSpec::parse("A1xA2"));
    const RootSystem b(RootSystemSpec::parse("A2xA1"));
    const auto isos = root_isomorphisms(a, b);
    ASSERT_EQ(isos.size(), 2u);
    EXPECT_LT(isos[0].image, isos[1].image);
    for (const auto& phi : isos)
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                EXPECT_EQ(a.cartan()[i][j], b.cartan()[phi.image[i]][phi.image[j]]);
    EXPECT_TRUE(root_isomorphisms(a, RootSystem(RootSystemSpec::parse("A3"))).empty());
    EXPECT_TRUE(root_isomorphisms(RootSystem(RootSystemSpec::parse("B3")),
                                  RootSystem(RootSystemSpec::parse("C3")))
                    .empty());
}
