#include <gtest/gtest.h>

#include <filesystem>

#include "biquad/catalog.hpp"
#include "biquad/pointsearch.hpp"
#include "biquad/reference.hpp"
#include "test_util.hpp"

using namespace biquad;
using testutil::last_line;
using testutil::run_cli;

namespace {
bool cli_available() { return std::filesystem::exists(testutil::cli_path()); }
}  // namespace

#define REQUIRE_CLI() \
    if (!cli_available()) GTEST_SKIP() << "CLI binary not found; run through ctest"

TEST(CliSolve, RegistryBackedQuadruple) {
    REQUIRE_CLI();
    const auto r = run_cli("solve --h 16 --multiple 2");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(last_line(r.out), "1203^4+16*38^4=653^4+16*588^4");
}

TEST(CliSolve, ScaleTrickForHOne) {
    REQUIRE_CLI();
    const auto r = run_cli("solve --h 1 --t 2 --multiple 2");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(last_line(r.out), "1203^4+76^4=653^4+1176^4");

    // without an explicit multiple the trivial multiple-1 quadruple is
    // skipped automatically
    const auto r2 = run_cli("solve --h 1 --t 2");
    EXPECT_EQ(r2.exit_code, 0);
    EXPECT_EQ(last_line(r2.out), "1203^4+76^4=653^4+1176^4");

    // and without --t the scale sequence reaches t=2 on its own
    const auto r3 = run_cli("solve --h 1");
    EXPECT_EQ(r3.exit_code, 0);
    EXPECT_EQ(last_line(r3.out), "1203^4+76^4=653^4+1176^4");
}

TEST(CliSolve, DegenerateH) {
    REQUIRE_CLI();
    EXPECT_EQ(run_cli("solve --h 0").exit_code, 3);
    EXPECT_EQ(run_cli("solve --h 1 --t 1").exit_code, 3);  // h*t^4 = 1
    EXPECT_EQ(run_cli("solve --h nonsense").exit_code, 3);
}

TEST(CliSolve, SearchOnlyCurve) {
    REQUIRE_CLI();
    // h=17 is not in the registry; the bounded search finds (340, 68).
    const auto r = run_cli("solve --h 17");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(last_line(r.out), "6^4+17*3^4=7^4+17*2^4");
    EXPECT_NE(r.out.find("quadruple=(6,3,7,2)"), std::string::npos);
}

TEST(CliSolve, NegativeH) {
    REQUIRE_CLI();
    const auto r = run_cli("solve --h -63");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(last_line(r.out), "47^4+63*13^4=16^4+63*18^4");
}

TEST(CliSolve, ExhaustionExitCode) {
    REQUIRE_CLI();
    // h=2 with tiny bounds and t pinned to 1: nothing findable
    const auto r = run_cli("solve --h 2 --t 1 --search-num 50 --search-den 2");
    EXPECT_EQ(r.exit_code, 2);
}

TEST(CliExpand, FourTermIdentity) {
    REQUIRE_CLI();
    testutil::TempDir tmp;
    const auto r =
        run_cli("expand --h 23 --n 4 --catalog " + tmp.file("cat.jsonl"));
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(last_line(r.out), "9^4+105^4+16^4+64^4=83^4+80^4+21^4+84^4");

    const auto records = read_catalog(tmp.file("cat.jsonl"));
    ASSERT_EQ(records.size(), 1u);
    EXPECT_EQ(records[0].n, 4);
    const Verdict v = verify_record(records[0]);
    EXPECT_TRUE(v.valid && v.nontrivial);
}

TEST(CliExpand, CancelledEightTerm) {
    REQUIRE_CLI();
    const auto r = run_cli("expand --h 10 --n 8 --cancel --catalog ''");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(last_line(r.out), "3^4+4^4+4^4+5^4+14^4=7^4+7^4+8^4+10^4+12^4");
}

TEST(CliExpand, SecondMultiple) {
    REQUIRE_CLI();
    const auto r = run_cli("expand --h 10 --n 8 --multiple 2 --catalog ''");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(last_line(r.out),
              "906^4+1295^4+185^4+370^4+657^4+876^4+1095^4+1314^4="
              "838^4+1533^4+219^4+438^4+555^4+740^4+925^4+1110^4");
}

TEST(CliExpand, ExplicitDecomposition) {
    REQUIRE_CLI();
    const auto r = run_cli("expand --h 23 --dec '+5/2^4,-1/2^4,-4/2^4' --catalog ''");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(last_line(r.out), "9^4+105^4+16^4+64^4=83^4+80^4+21^4+84^4");

    // --dec must sum to h
    EXPECT_EQ(run_cli("expand --h 23 --dec '+2^4' --catalog ''").exit_code, 3);
}

TEST(CliExpand, WeightedDecomposition) {
    REQUIRE_CLI();
    const auto r = run_cli("expand --h 5 --dec '+2*1^4,+3*1^4' --catalog ''");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(last_line(r.out), "417^4+2*117^4+3*117^4=19^4+2*281^4+3*281^4");
}

TEST(CliExpand, NoDecompositionFound) {
    REQUIRE_CLI();
    const auto r = run_cli("expand --h 7/5 --n 2 --bound 4 --catalog ''");
    EXPECT_EQ(r.exit_code, 2);
}

TEST(CliVerify, CatalogAcceptAndReject) {
    REQUIRE_CLI();
    testutil::TempDir tmp;
    const std::string path = tmp.file("all.jsonl");
    const Registry reg = Registry::load_file(testutil::registry_path());
    for (const auto& rec : reference_identity_records(reg)) append_record(path, rec);

    const auto ok = run_cli("verify " + path);
    EXPECT_EQ(ok.exit_code, 0);
    EXPECT_NE(ok.out.find("17 records"), std::string::npos);

    // mutate a single digit inside a term
    std::string text = testutil::read_file(path);
    const auto pos = text.find("\"105\"");
    ASSERT_NE(pos, std::string::npos);
    text.replace(pos, 5, "\"106\"");
    const std::string bad = tmp.file("bad.jsonl");
    testutil::write_file(bad, text);
    const auto rej = run_cli("verify " + bad);
    EXPECT_EQ(rej.exit_code, 1);
    EXPECT_NE(rej.out.find("INVALID"), std::string::npos);
}

TEST(CliVerify, EmptyFile) {
    REQUIRE_CLI();
    testutil::TempDir tmp;
    testutil::write_file(tmp.file("empty.jsonl"), "");
    const auto r = run_cli("verify " + tmp.file("empty.jsonl"));
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("0 records"), std::string::npos);
}

TEST(CliVerify, ParseFailureNamesLine) {
    REQUIRE_CLI();
    testutil::TempDir tmp;
    testutil::write_file(tmp.file("garbage.jsonl"), "{\"n\": 2}\n");
    const auto r = run_cli("verify " + tmp.file("garbage.jsonl"));
    EXPECT_EQ(r.exit_code, 3);
}

TEST(CliVerify, InlineTerms) {
    REQUIRE_CLI();
    EXPECT_EQ(run_cli("verify --left 9,105,16,64 --right 83,80,21,84").exit_code, 0);
    EXPECT_EQ(run_cli("verify --left 1,2 --right 1,3").exit_code, 1);
    const auto perm = run_cli("verify --left 1,2 --right 2,1");
    EXPECT_EQ(perm.exit_code, 0);  // valid, reported trivial
    EXPECT_NE(perm.out.find("trivial"), std::string::npos);
    EXPECT_EQ(run_cli("verify --left 417,117,117 --right 19,281,281 "
                      "--left-weights 1,2,3 --right-weights 1,2,3")
                  .exit_code,
              0);
}

TEST(CliReproduce, FullSuitePasses) {
    REQUIRE_CLI();
    const auto r = run_cli("reproduce");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out.find("[FAIL]"), std::string::npos);
    EXPECT_NE(r.out.find("0 failed"), std::string::npos);
}

TEST(CliReproduce, OnlyFilter) {
    REQUIRE_CLI();
    const auto r = run_cli("reproduce --only 7");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("example 7"), std::string::npos);
    EXPECT_EQ(r.out.find("example 3"), std::string::npos);

    EXPECT_EQ(run_cli("reproduce --only 42").exit_code, 3);
}

TEST(CliReproduce, MissingRegistryIsDataError) {
    REQUIRE_CLI();
    const auto r = run_cli("reproduce", "BIQUAD_REGISTRY=/nonexistent/registry.json");
    EXPECT_EQ(r.exit_code, 3);
}

TEST(CliReproduce, CorruptRegistryIsDataError) {
    REQUIRE_CLI();
    testutil::TempDir tmp;
    testutil::write_file(tmp.file("reg.json"),
                         R"([{"h": "16", "points": [["340", "681"]], "source": "broken"}])");
    const auto r = run_cli("reproduce", "BIQUAD_REGISTRY=" + tmp.file("reg.json"));
    EXPECT_EQ(r.exit_code, 3);
}

TEST(CliUsage, BadInvocations) {
    REQUIRE_CLI();
    EXPECT_EQ(run_cli("").exit_code, 3);            // subcommand required
    EXPECT_EQ(run_cli("solve").exit_code, 3);       // --h required
    EXPECT_EQ(run_cli("frobnicate").exit_code, 3);  // unknown subcommand
    EXPECT_EQ(run_cli("expand --h 23").exit_code, 3);  // needs --n or --dec
    EXPECT_EQ(run_cli("--help").exit_code, 0);
}
