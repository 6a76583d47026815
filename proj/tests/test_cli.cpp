#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include <lvcox/cli.hpp>

using namespace lvcox;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return (std::filesystem::path(LVCOX_CORPUS_DIR) / name).string(); }

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "lvcox_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

} // namespace

TEST(Cli, ConjectureOnF1) {
    const auto r = cli({"conjecture", fixture("FIX-F1.skel")});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("HoldsStrict"), std::string::npos);
    EXPECT_NE(r.out.find("iota = 1"), std::string::npos);
    EXPECT_NE(r.out.find("dim G/P = 2"), std::string::npos);
    EXPECT_TRUE(r.err.empty());
}

TEST(Cli, CoxOnS2WritesTwoColors) {
    const auto path = scratch("s2_cox.skel");
    const auto r = cli({"cox", fixture("FIX-S2.skel"), "--out", path.string()});
    EXPECT_EQ(r.code, 0);
    const auto sk = parse_skeleton_file(read_text(path));
    ASSERT_EQ(sk.divisors.size(), 2u);
    for (const auto& d : sk.divisors) EXPECT_EQ(d.c, Vec{Rat(1)});
    EXPECT_NE(r.out.find("D' <- D"), std::string::npos);
}

TEST(Cli, FactorializePreconditionExitCode) {
    const auto r = cli({"factorialize", fixture("FIX-S2.skel")});
    EXPECT_EQ(r.code, 3);
    EXPECT_TRUE(r.out.empty());
    EXPECT_NE(r.err.find("not complete"), std::string::npos);
}

TEST(Cli, FactorializeWritesFileAndTrace) {
    const auto path = scratch("f1_fact.skel");
    const auto r = cli({"--format", "machine", "factorialize", fixture("FIX-F1.skel"), "--out", path.string()});
    EXPECT_EQ(r.code, 0);
    const auto trace = json::parse(r.out);
    EXPECT_EQ(trace["steps"][0]["case"], "Add-Color");
    EXPECT_TRUE(is_factorial(parse_skeleton_file(read_text(path))));
}

TEST(Cli, ValidateAndParseErrors) {
    const auto bad = scratch("bad.skel");
    std::ofstream(bad) << R"({"name": "x", "root_system": [{"type": "A", "rank": 1}], "spherical_roots": [["2"]],
      "divisors": [{"name": "D", "varsigma": ["c1.1"], "c": ["2"], "m": 0}]})";
    const auto r = cli({"validate", bad.string()});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("V5"), std::string::npos);
    EXPECT_EQ(cli({"iota", bad.string()}).code, 1);
    EXPECT_EQ(cli({"validate", fixture("FIX-P2.skel")}).code, 0);
    EXPECT_EQ(cli({"info", scratch("missing.skel").string()}).code, 1);
    EXPECT_EQ(cli({"frobnicate"}).code, 1);
}

TEST(Cli, StrictRejectsInvariantMultiplicity) {
    const auto path = scratch("strict.skel");
    std::ofstream(path) << R"({"name": "x", "root_system": [{"type": "A", "rank": 1}], "spherical_roots": [["2"]],
      "divisors": [{"name": "D", "varsigma": ["c1.1"], "c": ["2"], "m": 1},
                   {"name": "E", "varsigma": [], "c": ["-1"], "m": 2}]})";
    EXPECT_EQ(cli({"iota", path.string()}).code, 0);
    const auto r = cli({"--strict", "iota", path.string()});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("strict"), std::string::npos);
}

TEST(Cli, ViolationExitCode) {
    const auto path = scratch("violation.skel");
    std::ofstream(path) << R"({"name": "x", "root_system": [{"type": "A", "rank": 1}], "spherical_roots": [],
      "divisors": [{"name": "D", "varsigma": ["c1.1"], "c": [], "m": 3}]})";
    EXPECT_EQ(cli({"conjecture", path.string()}).code, 2);
}

TEST(Cli, IsoAndInfoAndIota) {
    const auto iso = cli({"iso", fixture("FIX-F1.skel"), fixture("FIX-F1.skel")});
    EXPECT_EQ(iso.code, 0);
    EXPECT_NE(iso.out.find("isomorphic"), std::string::npos);
    const auto no = cli({"iso", fixture("FIX-P2.skel"), fixture("FIX-S2.skel")});
    EXPECT_EQ(no.out, "not isomorphic\n");
    const auto info = cli({"--format", "machine", "info", fixture("FIX-F1.skel")});
    EXPECT_EQ(json::parse(info.out)["class_group"]["rank"], 1);
    const auto iota = cli({"iota", fixture("FIX-S2.skel"), "--format", "machine"});
    EXPECT_EQ(json::parse(iota.out)["value"], "inf");
    EXPECT_EQ(cli({"iota", "--affine", fixture("FIX-S2.skel")}).code, 3);
}

TEST(Cli, BatchIsSortedAndIndependentOfJobs) {
    const auto one = cli({"batch", LVCOX_CORPUS_DIR});
    const auto four = cli({"batch", LVCOX_CORPUS_DIR, "--jobs", "4"});
    EXPECT_EQ(one.code, 0);
    EXPECT_EQ(one.out, four.out);
    EXPECT_LT(one.out.find("FIX-F1"), one.out.find("FIX-INV"));
    const auto machine = cli({"--format", "machine", "batch", LVCOX_CORPUS_DIR, "-j", "3"});
    EXPECT_EQ(json::parse(machine.out).size(), 6u);
}
