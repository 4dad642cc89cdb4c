#include "tyv/harness.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

using namespace tyv;
namespace fs = std::filesystem;

namespace {

struct CliRun {
    int code;
    std::string out;
};

CliRun cli(const std::string& args) {
    const char* bin = std::getenv("TYV_CLI");
    if (!bin) return {-1, "TYV_CLI not set"};
    std::string cmd = std::string(bin) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {-1, "popen failed"};
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
    int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

nlohmann::ordered_json without_timing(nlohmann::ordered_json j) {
    for (auto& it : j["items"]) it.erase("millis");
    return j;
}

fs::path scratch(const std::string& name) {
    fs::path p = fs::current_path() / "harness-scratch" / name;
    fs::create_directories(p.parent_path());
    return p;
}

}  // namespace

TEST(Report, EmptySuiteHasMetadata) {
    CheckReport r;
    r.suite = "rtt";
    r.lie_type = "A1";
    r.normalization = kRankOneNormalization;
    auto j = r.to_json();
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    EXPECT_EQ(keys, (std::vector<std::string>{"tool", "version", "suite", "lie_type", "params", "normalization", "items"}));
    EXPECT_TRUE(j["items"].empty());
    EXPECT_EQ(r.exit_code(), 0);
}

TEST(Report, PassFailAndError) {
    std::vector<CheckItem> items{
        {"ok", "a", [] { return Outcome{}; }},
        {"bad", "b",
         [] {
             Tally t;
             t.expect(false, "x", 3);
             return t.outcome();
         }},
    };
    auto res = run_items(items, 2);
    ASSERT_EQ(res.size(), 2u);
    EXPECT_EQ(res[0].status, "pass");
    EXPECT_GE(res[0].millis, 0);
    EXPECT_EQ(res[1].status, "fail");
    EXPECT_EQ(res[1].residual_terms, 3u);
    EXPECT_NE(res[1].detail.find("3 residual monomials"), std::string::npos);
    CheckReport r;
    r.items = res;
    EXPECT_EQ(r.exit_code(), 1);
    items.push_back({"boom", "c", []() -> Outcome { throw std::runtime_error("nope"); }});
    r.items = run_items(items, 3);
    EXPECT_EQ(r.items[2].status, "error");
    EXPECT_EQ(r.exit_code(), 2);
}

TEST(Config, RejectsBadInput) {
    SuiteConfig c;
    c.suite = "nonsense";
    EXPECT_THROW(c.validate(), ConfigError);
    c.suite = "rank1";
    c.type = "B2";
    EXPECT_THROW(c.validate(), ConfigError);
    c.type.reset();
    c.mutation = Mutation::parse("tcfSerre2f:-5");
    EXPECT_THROW(c.validate(), ConfigError);
    c.suite = "classical";
    EXPECT_NO_THROW(c.validate());
    c.jobs = 0;
    EXPECT_THROW(c.validate(), ConfigError);
}

TEST(Suite, DeterministicModuloTiming) {
    SuiteConfig c;
    c.suite = "classical";
    c.type = "A2";
    c.zdeg = 4;
    auto a = run_suite(c).to_json();
    c.jobs = 4;
    auto b = run_suite(c).to_json();
    EXPECT_EQ(without_timing(a), without_timing(b));
    EXPECT_EQ(a["lie_type"], "A2");
    for (const auto& it : a["items"]) EXPECT_FALSE(it["anchor"].get<std::string>().empty());
}

TEST(Cache, WrittenMatchedAndRepaired) {
    fs::path dir = scratch("cache");
    fs::remove_all(dir);
    setenv("TYV_CACHE_DIR", dir.c_str(), 1);
    ChevalleyData cd(LieType::parse("B2"));
    EXPECT_EQ(sync_structure_cache(cd), CacheState::Written);
    EXPECT_EQ(sync_structure_cache(cd), CacheState::Matched);
    fs::path file = dir / (std::string("B2-v") + kVersion + ".json");
    ASSERT_TRUE(fs::exists(file));
    auto j = nlohmann::ordered_json::parse(std::ifstream(file));
    EXPECT_EQ(j["family"], "B");
    EXPECT_FALSE(j["eta"].empty());
    EXPECT_EQ(j["bracket"][0][3].size(), 4u);
    std::ofstream(file) << "{\"family\": \"tampered\"}";
    EXPECT_EQ(sync_structure_cache(cd), CacheState::Rebuilt);
    EXPECT_EQ(sync_structure_cache(cd), CacheState::Matched);
}

TEST(Cli, ClassicalA2Passes) {
    CliRun r = cli("check classical --type A2 --zdeg 6");
    EXPECT_EQ(r.code, 0) << r.out;
}

TEST(Cli, SerreMutationFails) {
    CliRun r = cli("check classical --type C2 --zdeg 6 --mutate tcfSerre2f:-5");
    EXPECT_EQ(r.code, 1) << r.out;
    EXPECT_NE(r.out.find("FAIL  tcfSerre2f"), std::string::npos) << r.out;
}

TEST(Cli, RankOneDefaultsPass) {
    CliRun r = cli("check rank1 --order 8 --maxidx 10 --jobs 2");
    EXPECT_EQ(r.code, 0) << r.out;
}

TEST(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(cli("check nonsense").code, 2);
    EXPECT_EQ(cli("check").code, 2);
    EXPECT_EQ(cli("check classical --type X9").code, 2);
    EXPECT_EQ(cli("check rank1 --mutate bogus:1").code, 2);
    EXPECT_EQ(cli("check rank1 --mutate ty1").code, 2);
    EXPECT_EQ(cli("frobnicate").code, 2);
    EXPECT_EQ(cli("check rtt --order 3 --json /nonexistent-dir/r.json").code, 2);
}

TEST(Cli, JsonReportOfAMutatedRun) {
    fs::path out = scratch("mutated.json");
    CliRun r = cli("check embedding --type A2 --mutate phi_h_xsq:0 --json " + out.string());
    EXPECT_EQ(r.code, 1) << r.out;
    auto j = nlohmann::ordered_json::parse(std::ifstream(out));
    EXPECT_EQ(j["suite"], "embedding");
    EXPECT_EQ(j["params"]["mutation"], "phi_h_xsq:0");
    bool seen = false;
    for (const auto& it : j["items"])
        if (it["id"] == "HBrel") {
            seen = true;
            EXPECT_EQ(it["status"], "fail");
            EXPECT_NE(it["detail"].get<std::string>().find("residual monomials"), std::string::npos);
        }
    EXPECT_TRUE(seen);
}

TEST(Cli, Roots) {
    CliRun r = cli("roots --type G2");
    EXPECT_EQ(r.code, 0) << r.out;
    auto j = nlohmann::ordered_json::parse(r.out);
    EXPECT_EQ(j["positive_roots"].size(), 6u);
    EXPECT_EQ(j["checks"]["jacobi"], "pass");
}
