#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "json.hpp"

using namespace qtoric;
using nlohmann::json;

namespace {

struct Result
{
    int code;
    std::string out, err;
};

Result call(std::vector<std::string> args)
{
    args.insert(args.begin(), "qtoric");
    std::vector<char*> argv;
    for (auto& a : args)
        argv.push_back(a.data());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(Cli, VerifyExamples)
{
    auto r = call({"verify", "--case", "C1", "--disc", "-19"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json::parse(r.out)["status"], "ProvenNonzero");
    r = call({"verify", "--case", "C1", "--disc=-7"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out)["status"], "ForcedZero");
    r = call({"verify", "--case", "C2", "--disc", "-4"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out)["status"], "NotApplicable");
    r = call({"verify", "--case", "C2", "--disc", "-35", "--congruence-only"});
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(json::parse(r.out)["period_sum"].is_null());
}

TEST(Cli, UsageErrorsExitTwo)
{
    EXPECT_EQ(call({"verify", "--case", "C1", "--disc", "-12"}).code, 2);
    EXPECT_EQ(call({"verify", "--case", "C1", "--disc", "abc"}).code, 2);
    EXPECT_EQ(call({"verify", "--case", "C9", "--disc", "-19"}).code, 2);
    EXPECT_EQ(call({"verify", "--case", "C1"}).code, 2);
    EXPECT_EQ(call({"verify", "--case", "C1", "--disc", "-19", "--allow-nonmaximal"}).code, 2);
    EXPECT_EQ(call({"frobnicate"}).code, 2);
    EXPECT_EQ(call({}).code, 2);
    EXPECT_EQ(call({"hecke", "--case", "C2", "--primes", "3"}).code, 2);
    EXPECT_EQ(call({"--config", "/nonexistent.json", "selftest"}).code, 2);
    EXPECT_EQ(call({"--config", std::string(QTORIC_TEST_DATA) + "/indefinite.json", "selftest"}).code,
              2);
    EXPECT_EQ(call({"scan", "--case", "C1", "--max", "2000000"}).code, 2);
    EXPECT_EQ(call({"lvalue", "--case", "C1", "--disc", "-20", "--tol", "-1"}).code, 2);
    EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(Cli, Hecke)
{
    auto r = call({"hecke", "--case", "C1", "--primes", "3,5,7"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        EXPECT_NE(line.find("match=true"), std::string::npos) << line;
    }
    EXPECT_EQ(rows, 3);
    // default list drops 3 for disc(O) = 6
    r = call({"hecke", "--case", "C2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.find("\n3 "), std::string::npos);
    EXPECT_NE(r.out.find("13 38 38 match=true"), std::string::npos);
}

TEST(Cli, LValueAndOrbit)
{
    auto r = call({"lvalue", "--case", "C2", "--disc", "-35", "--tol", "1e-8"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(j["epsilon"], 1);
    EXPECT_EQ(j["probe_sign"], 1);
    EXPECT_GT(std::abs(j["value"].get<double>()), 1e-3);
    r = call({"orbit", "--case", "C1", "--disc", "-19"});
    ASSERT_EQ(r.code, 0) << r.err;
    j = json::parse(r.out);
    EXPECT_EQ(j["classes"].size(), 1u);
    EXPECT_EQ(std::stoll(j["period_sum"].get<std::string>()) % 2 != 0, true);
    r = call({"orbit", "--case", "C1", "--disc", "-7"});
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(json::parse(r.out)["period_sum"].is_null());
}

TEST(Cli, Selftest)
{
    auto r = call({"selftest"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "selftest: ok\n");
    r = call({"--config", std::string(QTORIC_TEST_DATA) + "/hurwitz.json", "selftest"});
    EXPECT_EQ(r.code, 0) << r.err;
}

TEST(Cli, ConfigCaseIsUsable)
{
    auto r = call({"--config", std::string(QTORIC_TEST_DATA) + "/hurwitz.json", "verify", "--case",
                   "HZ", "--disc", "-19"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json::parse(r.out)["status"], "ProvenNonzero");
}

TEST(Cli, ScanIsDeterministicAcrossWorkerCounts)
{
    auto a = call({"scan", "--case", "C1", "--max", "600", "--jobs", "1", "--check-eichler"});
    auto b = call({"scan", "--case", "C1", "--max", "600", "--jobs", "4", "--check-eichler"});
    auto c = call({"scan", "--case", "C1", "--max", "600", "--jobs", "3", "--check-eichler"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, c.out);
    EXPECT_EQ(a.err, b.err);
    // rows ascend in |Delta| and each round-trips through the JSON schema
    std::istringstream in(a.out);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, csv_header());
    std::int64_t last = 0;
    while (std::getline(in, line)) {
        auto v = verdict_from_csv(line);
        EXPECT_GT(-v.delta, last);
        last = -v.delta;
        EXPECT_EQ(verdict_from_json(to_json(v)), v);
    }
    auto summary = json::parse(a.err);
    EXPECT_EQ(summary["violations"], 0);
    EXPECT_EQ(summary["eichler_mismatches"], 0);
}

TEST(Cli, ScanFiltersAndFiles)
{
    std::string path = ::testing::TempDir() + "qtoric_scan.jsonl";
    auto r = call({"scan", "--case", "C1", "--max", "500", "--prime-only", "--residue", "5",
                   "--modulus", "8", "--check-congruence", "--format", "jsonl", "--out", path});
    ASSERT_EQ(r.code, 0) << r.err;
    auto summary = json::parse(r.out);
    EXPECT_EQ(summary["congruence_violations"], 0);
    EXPECT_GT(summary["vectors_checked"].get<int>(), 0);
    std::istringstream in(slurp(path));
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        auto v = verdict_from_json(line);
        EXPECT_EQ(v.status, Status::ProvenNonzero) << line;
        ++n;
    }
    EXPECT_EQ(n, summary["rows"].get<int>());
    EXPECT_GT(n, 10);
    std::remove(path.c_str());
}

TEST(Cli, ScanC5MatchesTheClassCondition)
{
    auto r = call({"scan", "--case", "C5", "--max", "1500", "--congruence-only"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        auto v = verdict_from_csv(line);
        bool expected = ((v.delta % 3) + 3) % 3 == 2 && v.epsilon == 1 && v.h % 3 != 0;
        EXPECT_EQ(v.status == Status::ProvenNonzero, expected) << line;
    }
}
