#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "uebkit/json_io.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    json report;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "uebkit");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = uebkit::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    json report = out.str().empty() ? json() : json::parse(out.str());
    return {code, report, err.str()};
}

// Drops timing and file-location fields, which legitimately differ between runs.
json strip(json j) {
    if (j.is_object()) {
        j.erase("seconds");
        j.erase("command");
        j.erase("path");
        for (auto& [k, v] : j.items()) v = strip(v);
    } else if (j.is_array()) {
        for (auto& v : j) v = strip(v);
    }
    return j;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir = fs::temp_directory_path() / ("uebkit_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }
    std::string path(const std::string& name) const { return (dir / name).string(); }

    fs::path dir;
};

// Re-encode a basis file through the library and write it back out.
void reexport(const std::string& from, const std::string& to) {
    json j = json::parse(slurp(from));
    auto b = uebkit::basis_from_json(j);
    std::ofstream(to, std::ios::binary) << uebkit::basis_to_json(b).dump() << "\n";
}

}  // namespace

TEST(CliHash, Sha256KnownVectors) {
    EXPECT_EQ(uebkit::cli::sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    EXPECT_EQ(uebkit::cli::sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_F(Cli, PauliRoundTripGivesIdenticalReports) {
    auto c = run_cli({"construct", "pauli:4", "-o", path("a.json")});
    ASSERT_EQ(c.code, 0) << c.err;
    EXPECT_EQ(c.report["members"], 16);
    EXPECT_EQ(c.report["seed"], 20240611);
    reexport(path("a.json"), path("b.json"));
    EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
    for (const char* kind : {"ueb", "nice"}) {
        auto va = run_cli({"verify", kind, path("a.json")});
        auto vb = run_cli({"verify", kind, path("b.json")});
        EXPECT_EQ(va.code, 0) << va.err;
        EXPECT_EQ(strip(va.report), strip(vb.report));
    }
    EXPECT_EQ(c.report["artifacts"]["output"]["sha256"], run_cli({"verify", "ueb", path("b.json")}).report["artifacts"]["input"]["sha256"]);
}

TEST_F(Cli, SymbolicSamRoundTrip) {
    auto c = run_cli({"construct", "sam", "--latin", "cyclic:4", "--hadamard", "halpha", "-o", path("s.json")});
    ASSERT_EQ(c.code, 0) << c.err;
    reexport(path("s.json"), path("t.json"));
    EXPECT_EQ(slurp(path("s.json")), slurp(path("t.json")));
    auto v = run_cli({"verify", "ueb", path("t.json")});
    EXPECT_EQ(v.code, 0);
    auto w = run_cli({"analyze", "wickedness", path("t.json")});
    EXPECT_EQ(w.code, 0);
    EXPECT_TRUE(w.report["witness_found"].get<bool>());
    auto n = run_cli({"verify", "nice", path("t.json")});
    EXPECT_EQ(n.code, 1);
}

TEST_F(Cli, EmbeddedBasisWithoutOut) {
    auto c = run_cli({"construct", "pauli:2"});
    ASSERT_EQ(c.code, 0);
    EXPECT_EQ(uebkit::basis_from_json(c.report["basis"]).members.size(), 4u);
}

TEST_F(Cli, MutatedBasisFailsWithWitness) {
    ASSERT_EQ(run_cli({"construct", "pauli:3", "-o", path("p.json")}).code, 0);
    json j = json::parse(slurp(path("p.json")));
    auto b = uebkit::basis_from_json(j);
    b.members[4] = b.members[5];
    std::ofstream(path("q.json")) << uebkit::basis_to_json(b).dump();
    auto v = run_cli({"verify", "ueb", path("q.json")});
    EXPECT_EQ(v.code, 1);
    bool found = false;
    for (const auto& c : v.report["checks"]) {
        if (c["name"] == "pairwise orthogonal") {
            found = true;
            EXPECT_FALSE(c["passed"].get<bool>());
            EXPECT_EQ(c["witness"]["members"], json::array({4, 5}));
        }
    }
    EXPECT_TRUE(found);
    EXPECT_NE(v.err.find("failed: pairwise orthogonal"), std::string::npos);
}

TEST_F(Cli, LatinViolationReported) {
    std::ofstream(path("l.json")) << "[[0,1],[0,1]]";
    auto v = run_cli({"verify", "latin", path("l.json")});
    EXPECT_EQ(v.code, 1);
    EXPECT_EQ(v.report["checks"][0]["witness"]["line"], "column");
}

TEST_F(Cli, InputErrorsExitTwo) {
    std::ofstream(path("bad.json")) << "{not json";
    EXPECT_EQ(run_cli({"verify", "ueb", path("bad.json")}).code, 2);
    EXPECT_EQ(run_cli({"verify", "ueb", path("missing.json")}).code, 2);
    EXPECT_EQ(run_cli({"verify", "bogus", path("bad.json")}).code, 2);
    EXPECT_EQ(run_cli({"construct", "pauli:x"}).code, 2);
    EXPECT_EQ(run_cli({"construct"}).code, 2);
    std::ofstream(path("shape.json")) << R"({"d": 2})";
    auto r = run_cli({"verify", "ueb", path("shape.json")});
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(r.report.contains("error"));
}

TEST_F(Cli, SeedIsEchoed) {
    auto r = run_cli({"--seed", "77", "construct", "pauli:2"});
    EXPECT_EQ(r.report["seed"], 77);
}

TEST_F(Cli, InduceFromCenter) {
    auto r = run_cli({"analyze", "induce", "--group", "heisenberg:3", "--from", "center", "-o", path("i.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.report["dim"], 9);
    EXPECT_EQ(r.report["zero_fraction"], "8/9");
    EXPECT_EQ(uebkit::basis_from_json(json::parse(slurp(path("i.json")))).members.size(), 27u);
}

TEST_F(Cli, CounterexampleExportRoundTrip) {
    auto c = run_cli({"construct", "counterexample165", "--export", path("ce.json"), "--factors-only"});
    ASSERT_EQ(c.code, 0) << c.err;
    auto v = run_cli({"verify", "counterexample165", path("ce.json"), "--no-nice"});
    ASSERT_EQ(v.code, 0) << v.err;
    // The construct report and the verify report share every pipeline check.
    json cc = strip(c.report["checks"]), vc = strip(v.report["checks"]);
    for (const auto& check : cc) EXPECT_NE(std::find(vc.begin(), vc.end(), check), vc.end()) << check.dump();
    EXPECT_EQ(strip(c.report["counterexample165"]), strip(v.report["counterexample165"]));

    json j = json::parse(slurp(path("ce.json")));
    auto& entries = j["generators"][1]["matrix"]["factors"][1]["entries"];
    // Z5 has a 1 in its top-left corner.
    ASSERT_EQ(uebkit::scalar_from_json(entries[0]), uebkit::PhasedScalar(1));
    entries[0] = uebkit::scalar_to_json(uebkit::PhasedScalar(2));
    std::ofstream(path("ce_bad.json")) << j.dump();
    auto bad = run_cli({"verify", "counterexample165", path("ce_bad.json"), "--no-nice"});
    EXPECT_EQ(bad.code, 1);
    EXPECT_FALSE(bad.report["checks"][0]["passed"].get<bool>());
    EXPECT_EQ(bad.report["checks"][0]["witness"], json::array({1}));
}
