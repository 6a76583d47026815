#include <gtest/gtest.h>

#include <filesystem>

#include <lvcox/cli.hpp>
#include <lvcox/format.hpp>
#include <lvcox/iso.hpp>

#include "support/fixtures.hpp"

using namespace lvcox;
using fixtures::v;

namespace {

std::string corpus(const std::string& name) { return read_text(std::filesystem::path(LVCOX_CORPUS_DIR) / name); }

bool same(const SphericalSkeleton& a, const SphericalSkeleton& b) {
    if (a.name != b.name || a.rs.spec().str() != b.rs.spec().str() || a.sigma_sc != b.sigma_sc) return false;
    if (a.divisors.size() != b.divisors.size()) return false;
    for (std::size_t i = 0; i < a.divisors.size(); ++i) {
        const auto& x = a.divisors[i];
        const auto& y = b.divisors[i];
        if (x.name != y.name || x.varsigma != y.varsigma || x.c != y.c || x.m != y.m) return false;
    }
    return true;
}

const char* kP2 = R"({"name": "x", "root_system": [{"type": "A", "rank": 1}], "spherical_roots": [["2"]],
  "divisors": [{"name": "D", "varsigma": ["c1.1"], "c": ["2"], "m": 1},
               {"name": "E", "varsigma": [], "c": ["-1"], "m": 1}]})";

std::string with(const std::string& from, const std::string& to) {
    std::string s = kP2;
    s.replace(s.find(from), from.size(), to);
    return s;
}

} // namespace

TEST(Format, CorpusMatchesInCodeFixtures) {
    EXPECT_TRUE(same(parse_skeleton_file(corpus("FIX-PT.skel")), fixtures::pt()));
    EXPECT_TRUE(same(parse_skeleton_file(corpus("FIX-P1.skel")), fixtures::p1()));
    EXPECT_TRUE(same(parse_skeleton_file(corpus("FIX-P2.skel")), fixtures::p2()));
    EXPECT_TRUE(same(parse_skeleton_file(corpus("FIX-S2.skel")), fixtures::s2()));
    EXPECT_TRUE(same(parse_skeleton_file(corpus("FIX-F1.skel")), fixtures::f1()));
    EXPECT_TRUE(same(parse_skeleton_file(corpus("FIX-INV.skel")), fixtures::inv()));
    EXPECT_EQ(parse_skeleton_file(corpus("FIX-P2.skel")).sigma_sc, (std::vector<Vec>{v({2})}));
}

TEST(Format, CanonicalFormIsStable) {
    for (const auto& sk : fixtures::complete_fixtures()) {
        const std::string once = format_skeleton(sk);
        EXPECT_TRUE(same(parse_skeleton_file(once), sk));
        EXPECT_EQ(format_skeleton(parse_skeleton_file(once)), once);
    }
}

TEST(Format, CorpusFilesAreCanonical) {
    for (const char* f : {"FIX-PT.skel", "FIX-P1.skel", "FIX-P2.skel", "FIX-S2.skel", "FIX-F1.skel", "FIX-INV.skel"})
        EXPECT_EQ(format_skeleton(read_skeleton_file(corpus(f))), corpus(f)) << f;
}

TEST(Format, Fractions) {
    EXPECT_EQ(parse_rat("-3/6", "x"), Rat(-1, 2));
    EXPECT_EQ(parse_rat("7", "x"), Rat(7));
    EXPECT_THROW(parse_rat("1/0", "x"), ParseError);
    EXPECT_THROW(parse_rat("1.5", "x"), ParseError);
    EXPECT_THROW(parse_rat("+1", "x"), ParseError);
}

TEST(Format, ValidationErrors) {
    try {
        parse_skeleton_file(with(R"("m": 1})", R"("m": 0})"));
        FAIL();
    } catch (const ValidationError& e) {
        ASSERT_EQ(e.violations().size(), 1u);
        EXPECT_EQ(e.violations()[0].rule, "V5");
    }
    try {
        parse_skeleton_file(with(R"("c": ["-1"])", R"("c": ["-1/3"])"));
        FAIL();
    } catch (const ValidationError& e) {
        ASSERT_EQ(e.violations().size(), 1u);
        EXPECT_EQ(e.violations()[0].rule, "V2");
    }
    try {
        parse_skeleton_file(with(R"("c": ["2"])", R"("c": ["1/3"])"));
        FAIL();
    } catch (const ValidationError& e) {
        ASSERT_FALSE(e.violations().empty());
        EXPECT_EQ(e.violations()[0].rule, "V2");
    }
}

TEST(Format, ParseErrors) {
    auto message = [](const std::string& text) {
        try {
            read_skeleton_file(text);
        } catch (const ParseError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    EXPECT_NE(message("{").find("malformed JSON"), std::string::npos);
    EXPECT_NE(message(with(R"("m": 1},)", R"("m": 1, "extra": 2},)")).find("divisors[0]: unknown field 'extra'"),
              std::string::npos);
    EXPECT_NE(message(with(R"(["2"])", R"([2])")).find("spherical_roots[0][0]"), std::string::npos);
    EXPECT_NE(message(with(R"("c1.1")", R"("c2.1")")).find("divisors[0].varsigma[0]"), std::string::npos);
    EXPECT_NE(message(with(R"("rank": 1)", R"("rank": 0)")).find("root_system[0]"), std::string::npos);
    EXPECT_NE(message(with(R"("name": "x", )", "")).find("missing field 'name'"), std::string::npos);
}

TEST(Format, ResultViews) {
    const auto j = to_json(iota(fixtures::s2()));
    EXPECT_EQ(j["value"], "inf");
    EXPECT_TRUE(j["ray"].is_array());
    const auto cj = to_json(cox_transform(fixtures::s2()));
    EXPECT_EQ(cj["provenance"]["D'"], "D");
    EXPECT_EQ(cj["skeleton"]["spherical_roots"][0][0], "1");
}
