#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace polyctrl::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  json parsed() const { return json::parse(out); }
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "polyctrl");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("polyctrl_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(Cli, AnalyzeExitCodes) {
  const auto div = write("div.json", R"({"ring": {"vars": ["x1","x2","x3"]}, "rows": [["x1","x2","x3"]]})");
  const Result a = run_cli({"analyze", div});
  EXPECT_EQ(a.code, kControllable);
  EXPECT_EQ(a.parsed()["status"], "controllable");
  EXPECT_EQ(a.parsed()["codim"], 3);
  EXPECT_NE(a.err.find("groebner basis size"), std::string::npos);

  const auto one = write("one.json", R"({"ring": {"vars": 3}, "rows": [["x1"]]})");
  const Result b = run_cli({"analyze", one});
  EXPECT_EQ(b.code, kUncontrollable);
  EXPECT_EQ(b.parsed()["codim"], 1);

  const auto curl = write(
      "curl.json",
      R"({"ring": {"vars": 3}, "rows": [["0","-x3","x2"],["x3","0","-x1"],["-x2","x1","0"]]})");
  const Result c = run_cli({"analyze", curl});
  EXPECT_EQ(c.code, kIndeterminate);
  EXPECT_EQ(c.parsed()["reason"], "rank_deficient");

  const auto empty = write("empty.json", R"({"ring": {"vars": ["x"]}, "rows": [["x","x + 1"]]})");
  EXPECT_EQ(run_cli({"analyze", empty}).parsed()["codim"], "inf");
}

TEST_F(Cli, ErrorClasses) {
  EXPECT_EQ(run_cli({"analyze", path("missing.json")}).code, kIo);
  EXPECT_EQ(run_cli({"analyze", write("bad.json", "{not json")}).code, kParse);
  EXPECT_EQ(run_cli({"analyze", write("p.json", R"({"ring": {"vars": 1}, "rows": [["2x1"]]})")}).code,
            kParse);
  EXPECT_EQ(run_cli({"analyze", write("s.json", R"({"ring": {"vars": 1}})")}).code, kSchema);
  EXPECT_EQ(run_cli({"analyze", write("r.json", R"({"ring": {"vars": 2}, "rows": [["x1"], ["x1", "x2"]]})")}).code,
            kSchema);
  EXPECT_EQ(run_cli({"analyze", write("v.json", R"({"ring": {"vars": ["a", "a"]}, "rows": [["a"]]})")}).code,
            kSchema);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kUsage);
  EXPECT_EQ(run_cli({}).code, kUsage);
  EXPECT_EQ(run_cli({"minors", write("m.json", R"({"ring": {"vars": 1}, "rows": [["x1"]]})"), "--size",
                     "2"})
                .code,
            kUsage);
}

TEST_F(Cli, GroebnerAndDimension) {
  const auto ideal = write("i.json", R"({"vars": 3, "gens": ["x1", "x2"]})");
  const json d = run_cli({"dim", ideal}).parsed();
  EXPECT_EQ(d["dim"], 1);
  EXPECT_EQ(d["codim"], 2);
  const json g = run_cli({"gb", ideal}).parsed();
  EXPECT_EQ(g["basis"], json({"x2", "x1"}));
  const auto lex = write("l.json", R"({"vars": ["x","y"], "gens": ["x - y", "y^2 - 1"], "order": "lex"})");
  EXPECT_EQ(run_cli({"gb", lex}).parsed()["order"], "lex");
  EXPECT_EQ(run_cli({"gb", write("o.json", R"({"vars": 1, "gens": ["x1"], "order": "deglex"})")}).code,
            kSchema);
}

TEST_F(Cli, Minors) {
  const auto div = write("div.json", R"({"ring": {"vars": 3}, "rows": [["x1","x2","x3"]]})");
  const json m = run_cli({"minors", div, "--size", "1"}).parsed();
  EXPECT_EQ(m["count"], 3);
  EXPECT_EQ(m["minors"], json({"x1", "x2", "x3"}));
}

TEST_F(Cli, Oracle) {
  const Result r = run_cli({"oracle", "--X", "[[0,1],[0,0]]", "--U", "[[0],[1]]"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.parsed()["agree"], true);
  EXPECT_EQ(r.parsed()["controllable"], true);
  EXPECT_EQ(run_cli({"oracle", "--X", "[[1,0],[0,1]]", "--U", "[[1],[1]]"}).parsed()["controllable"],
            false);
  EXPECT_EQ(run_cli({"oracle", "--X", "[[0,1]]", "--U", "[[1]]"}).code, kUsage);
  EXPECT_EQ(run_cli({"oracle", "--X", "[[0", "--U", "[[1]]"}).code, kParse);
}

TEST_F(Cli, PatchReport) {
  const auto file = write("p.json", R"({"ring": {"vars": ["s"], "laurent": true}, "rows": [["s - 1"]],
    "window": [8], "region1": {"cells": [0, 1], "value": 0}, "region2": {"cells": [6, 7], "value": 1}})");
  const Result r = run_cli({"patch", file});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.parsed()["summary"], "consistent");
  EXPECT_EQ(r.parsed()["infeasible"], 1);
  const auto none = write("n.json", R"({"ring": {"vars": ["s"], "laurent": true}, "rows": [["s - 1"]]})");
  EXPECT_EQ(run_cli({"patch", none}).parsed()["summary"], "no evidence");
}

TEST_F(Cli, ExperimentAppendsCsv) {
  const std::string csv = path("runs.csv");
  const std::vector<std::string> args = {"experiment", "--l", "1", "--k", "2", "--n", "2", "--d", "1",
                                         "--trials", "40", "--seed", "7", "--out", csv};
  ASSERT_EQ(run_cli(args).code, kOk);
  ASSERT_EQ(run_cli(args).code, kOk);
  std::ifstream in(csv);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0].rfind("seed,l,k,n,d", 0), 0u);
  auto strip = [](const std::string& row) {
    const auto last = row.rfind(',');
    return row.substr(0, row.rfind(',', last - 1)) + row.substr(last);
  };
  EXPECT_EQ(strip(lines[1]), strip(lines[2]));
  EXPECT_EQ(lines[1].rfind("7,1,2,2,1,9,1,40,", 0), 0u);
}

TEST_F(Cli, ExperimentGuards) {
  EXPECT_EQ(run_cli({"experiment", "--l", "3", "--k", "2"}).code, kUsage);
  EXPECT_EQ(run_cli({"experiment", "--trials", "0"}).code, kUsage);
  EXPECT_EQ(run_cli({"experiment", "--density", "2"}).code, kUsage);
  EXPECT_EQ(run_cli({"experiment", "--trials", "2", "--out", path("no/such/dir/x.csv")}).code, kIo);
  EXPECT_EQ(run_cli({"ci-experiment", "--m", "3", "--n", "2"}).code, kUsage);
}

TEST_F(Cli, CiExperiment) {
  const Result r = run_cli({"ci-experiment", "--m", "1", "--n", "1", "--d", "1", "--trials", "20"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.parsed()["complete_intersections"], 20);
}

TEST_F(Cli, Help) {
  const Result r = run_cli({"--help"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("analyze"), std::string::npos);
}

}  // namespace
