// Copyright 2026 The arcforms Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

namespace arcforms::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
  int code = -1;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("arcforms_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  Result Cli(std::vector<std::string> args) const {
    std::ostringstream out, err;
    Result r;
    r.code = ::arcforms::cli::Run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
  }

  static std::string Slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  // Drops the wall-clock field, the only nondeterministic part of a report.
  static json Stable(json j) {
    j.erase("elapsed_ms");
    return j;
  }

  std::string NewArc(const std::string& type, int q, int k, const std::string& name) {
    const Result r = Cli({"arc", "new", "--type", type, "--q", std::to_string(q), "--k",
                          std::to_string(k), "-o", Path(name)});
    EXPECT_EQ(r.code, kExitOk) << r.err;
    return Path(name);
  }

  fs::path dir_;
};

TEST_F(CliTest, ArcNewAndVerify) {
  const std::string tc7 = NewArc("nrc", 7, 4, "tc7.json");
  const json arc = json::parse(Slurp(tc7));
  EXPECT_EQ(arc["k"], 4);
  EXPECT_EQ(arc["points"].size(), 8u);
  const Result v = Cli({"arc", "verify", tc7});
  EXPECT_EQ(v.code, kExitOk);
  EXPECT_TRUE(v.report()["passed"].get<bool>());
  EXPECT_EQ(v.report()["command"], "arc verify");
  EXPECT_NE(v.err.find("PASS"), std::string::npos);
}

TEST_F(CliTest, ArcTypes) {
  NewArc("conic", 5, 3, "c5.json");
  NewArc("hyperoval", 8, 3, "h8.json");
  EXPECT_EQ(json::parse(Slurp(Path("h8.json")))["points"].size(), 10u);
  EXPECT_EQ(Cli({"arc", "new", "--type", "conic", "--q", "5", "--k", "4", "-o", Path("x.json")}).code,
            kExitUsage);
  EXPECT_EQ(Cli({"arc", "new", "--type", "hyperoval", "--q", "5", "-o", Path("x.json")}).code,
            kExitUsage);

  std::ofstream(Path("pts.json")) << "[[1,0,0],[0,1,0],[0,0,1],[1,1,1],[1,1,0]]";
  const Result custom = Cli({"arc", "new", "--type", "custom", "--q", "5", "--k", "3",
                             "--points", Path("pts.json"), "-o", Path("custom.json")});
  EXPECT_EQ(custom.code, kExitVerificationFailed);
  const json check = custom.report()["checks"][0];
  EXPECT_EQ(check["name"], "is_arc");
  EXPECT_EQ(check["witnesses"][0]["dependent_subset"], json::parse("[0,1,4]"));
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Cli({}).code, kExitUsage);
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Cli({"arc"}).code, kExitUsage);
  EXPECT_EQ(Cli({"arc", "verify"}).code, kExitUsage);
  EXPECT_EQ(Cli({"arc", "verify", Path("missing.json")}).code, kExitUsage);
  std::ofstream(Path("bad.json")) << "not json";
  EXPECT_EQ(Cli({"arc", "verify", Path("bad.json")}).code, kExitUsage);
  EXPECT_EQ(Cli({"--format", "xml", "arc", "verify", Path("bad.json")}).code, kExitUsage);
  EXPECT_EQ(Cli({"arc", "new", "--type", "nrc", "--q", "6", "--k", "3", "-o", Path("x.json")}).code,
            kExitUsage);
  const Result help = Cli({"--help"});
  EXPECT_EQ(help.code, kExitOk);
  EXPECT_NE(help.out.find("arc"), std::string::npos);
}

TEST_F(CliTest, PhiAndQuadric) {
  const std::string tc7 = NewArc("nrc", 7, 4, "tc7.json");
  const Result phi = Cli({"phi", tc7, "--t", "2"});
  EXPECT_EQ(phi.code, kExitOk);
  EXPECT_EQ(phi.report()["notes"]["dim"], 3);
  EXPECT_EQ(phi.report()["notes"]["basis"].size(), 3u);
  const Result quadric = Cli({"tensor", "quadric-check", tc7});
  EXPECT_EQ(quadric.code, kExitOk) << quadric.err;
  const std::string c8 = NewArc("nrc", 8, 4, "tc8.json");
  EXPECT_EQ(Cli({"tensor", "quadric-check", c8}).code, kExitUsage);
}

TEST_F(CliTest, ProjectAndMds) {
  const std::string tc5 = NewArc("nrc", 5, 4, "tc5.json");
  const Result p = Cli({"arc", "project", tc5, "--index", "5", "-o", Path("proj.json")});
  EXPECT_EQ(p.code, kExitOk) << p.err;
  const json proj = json::parse(Slurp(Path("proj.json")));
  EXPECT_EQ(proj["k"], 3);
  EXPECT_EQ(proj["points"].size(), 5u);
  EXPECT_EQ(Cli({"arc", "mds", tc5}).code, kExitOk);
  EXPECT_EQ(Cli({"arc", "project", tc5, "--index", "6", "-o", Path("p2.json")}).code, kExitUsage);
}

TEST_F(CliTest, ArtifactsRoundTrip) {
  const std::string tc7 = NewArc("nrc", 7, 4, "tc7.json");
  ASSERT_EQ(Cli({"tangents", "build", tc7, "-o", Path("ts.json")}).code, kExitOk);
  ASSERT_EQ(Cli({"tensor", "build", tc7, "-o", Path("mf.json")}).code, kExitOk);
  ASSERT_EQ(Cli({"sbbt", "build", tc7, "-o", Path("sb.json")}).code, kExitOk);

  // Rebuilding produces byte-identical files.
  ASSERT_EQ(Cli({"tangents", "build", tc7, "-o", Path("ts2.json")}).code, kExitOk);
  EXPECT_EQ(Slurp(Path("ts.json")), Slurp(Path("ts2.json")));

  const Result lemma_fresh = Cli({"tangents", "lemma-check", tc7});
  const Result lemma_loaded = Cli({"tangents", "lemma-check", tc7, "--tangents", Path("ts.json")});
  EXPECT_EQ(lemma_fresh.code, kExitOk);
  EXPECT_EQ(Stable(lemma_fresh.report()), Stable(lemma_loaded.report()));

  const Result tensor_fresh = Cli({"tensor", "verify", tc7});
  const Result tensor_loaded = Cli({"tensor", "verify", tc7, "--tangents", Path("ts.json"),
                                    "--tensor", Path("mf.json")});
  EXPECT_EQ(tensor_fresh.code, kExitOk) << tensor_fresh.err;
  EXPECT_EQ(Stable(tensor_fresh.report()), Stable(tensor_loaded.report()));

  const Result sbbt_fresh = Cli({"sbbt", "verify", tc7});
  const Result sbbt_loaded = Cli({"sbbt", "verify", tc7, "--sbbt", Path("sb.json")});
  EXPECT_EQ(sbbt_fresh.code, kExitOk);
  EXPECT_EQ(Stable(sbbt_fresh.report()), Stable(sbbt_loaded.report()));
  EXPECT_EQ(sbbt_fresh.report()["notes"]["dual_classification"].size(), 400u);
}

TEST_F(CliTest, CorruptedArtifactsFail) {
  const std::string c7 = NewArc("conic", 7, 3, "c7.json");
  ASSERT_EQ(Cli({"tensor", "build", c7, "-o", Path("mf.json")}).code, kExitOk);
  json mf = json::parse(Slurp(Path("mf.json")));
  mf["coeffs"][0] = (mf["coeffs"][0].get<int>() + 1) % 7;
  std::ofstream(Path("mf_bad.json")) << mf.dump();
  EXPECT_EQ(Cli({"tensor", "verify", c7, "--tensor", Path("mf_bad.json")}).code,
            kExitVerificationFailed);

  ASSERT_EQ(Cli({"tangents", "build", c7, "-o", Path("ts.json")}).code, kExitOk);
  json ts = json::parse(Slurp(Path("ts.json")));
  auto& coeffs = ts["fS"][ts["fS"].size() - 1]["form"]["coeffs"];
  for (auto& c : coeffs) c = c.get<int>() * 2 % 7;
  std::ofstream(Path("ts_bad.json")) << ts.dump();
  const Result lemma = Cli({"tangents", "lemma-check", c7, "--tangents", Path("ts_bad.json")});
  EXPECT_EQ(lemma.code, kExitVerificationFailed);
}

TEST_F(CliTest, Extract) {
  const std::string c5 = NewArc("conic", 5, 3, "c5.json");
  const Result one = Cli({"tensor", "extract", c5, "--exponents", "[[0,0,0]]"});
  EXPECT_EQ(one.code, kExitOk) << one.err;
  EXPECT_EQ(one.report()["notes"]["form"]["t"], 2);
  const Result all = Cli({"tensor", "extract", c5, "--exponents", "all"});
  EXPECT_EQ(all.code, kExitOk);
  EXPECT_EQ(all.report()["notes"]["extracted"], 4);
  EXPECT_EQ(Cli({"tensor", "extract", c5, "--exponents", "[[1,1,0]]"}).code, kExitUsage);
  EXPECT_EQ(Cli({"tensor", "extract", c5, "--exponents", "{"}).code, kExitUsage);
}

TEST_F(CliTest, SearchExactNotes) {
  const std::string tc5 = NewArc("nrc", 5, 4, "tc5.json");
  const Result r = Cli({"tensor", "verify", tc5, "--search-exact"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.report()["notes"]["exact_correction"]["exact_correction_exists"].get<bool>());
}

TEST_F(CliTest, SuitePassesOnReferenceArcs) {
  for (const auto& [type, q, k] : std::vector<std::tuple<std::string, int, int>>{
           {"conic", 4, 3}, {"conic", 9, 3}, {"nrc", 7, 4}, {"nrc", 8, 4}, {"hyperoval", 8, 3}}) {
    const std::string path = NewArc(type, q, k, type + std::to_string(q) + ".json");
    const Result r = Cli({"suite", path});
    EXPECT_EQ(r.code, kExitOk) << type << " " << q << "\n" << r.err;
    const json report = r.report();
    // Check names are merged in sorted order.
    std::vector<std::string> names;
    for (const auto& c : report["checks"]) names.push_back(c["name"]);
    EXPECT_TRUE(std::is_sorted(names.begin(), names.end()));
  }
}

TEST_F(CliTest, SeedIsDeterministicAndEchoed) {
  const std::string c7 = NewArc("conic", 7, 3, "c7.json");
  const Result a = Cli({"--seed", "5", "tangents", "lemma-check", c7});
  const Result b = Cli({"tangents", "lemma-check", c7, "--seed", "5"});
  EXPECT_EQ(a.report()["inputs"]["seed"], 5);
  EXPECT_EQ(Stable(a.report()), Stable(b.report()));
}

TEST_F(CliTest, HumanFormat) {
  const std::string c7 = NewArc("conic", 7, 3, "c7.json");
  const Result r = Cli({"--format", "human", "arc", "verify", c7});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("arc verify: PASS", 0), 0u) << r.out;
}

}  // namespace
}  // namespace arcforms::cli
