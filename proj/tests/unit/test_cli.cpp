#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "nsalg/cli.hpp"

using namespace nsalg;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "nsalg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = std::filesystem::temp_directory_path() / ("nsalg-cli-" + std::to_string(::getpid()));
    cli::export_specs(dir_.string());
  }
  static void TearDownTestSuite() { std::filesystem::remove_all(dir_); }
  static std::string spec(const std::string& name) { return (dir_ / (name + ".json")).string(); }
  static std::string write(const std::string& name, const std::string& text) {
    std::ofstream(dir_ / name) << text;
    return (dir_ / name).string();
  }

  static std::filesystem::path dir_;
};

std::filesystem::path CliTest::dir_;

std::size_t count_lines(const std::string& s, const std::string& prefix) {
  std::istringstream in(s);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);) n += line.rfind(prefix, 0) == 0;
  return n;
}

}  // namespace

TEST_F(CliTest, SplitAssociativeNS) {
  CliRun r = run({"split", "--catalog", "associative", "--scheme", "ns", "--format", "text"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out, "{"), 3u);
  EXPECT_EQ(count_lines(r.out, "extra "), 1u);
  EXPECT_NE(r.out.find("{2} (a>b)<c - a>(b<c)"), std::string::npos) << r.out;
}

TEST_F(CliTest, SplitLieReduced) {
  CliRun r = run({"split", "--catalog", "lie", "--scheme", "ns", "--reduce-anticommutative"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out, "#"), 1u);
  EXPECT_NE(r.out.find("a|b + b|a"), std::string::npos);
  std::istringstream in(r.out);
  std::size_t lines = 0;
  for (std::string line; std::getline(in, line);) ++lines;
  EXPECT_EQ(lines, 4u);
}

TEST_F(CliTest, SplitNapDendriform) {
  CliRun r = run({"split", "--catalog", "nap", "--scheme", "dendriform"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out, "{"), 2u);
}

TEST_F(CliTest, SplitJsonAndTex) {
  CliRun j = run({"split", "--catalog", "associative", "--format", "json"});
  ASSERT_EQ(j.code, 0);
  auto doc = Json::parse(j.out);
  EXPECT_EQ(doc["sources"][0]["derived"].size(), 3u);
  EXPECT_TRUE(doc["sources"][0].contains("extra"));
  EXPECT_EQ(relation_from_json(doc["sources"][0]["derived"][1]["relation"]["tree"]),
            parse_relation("(a>b)<c - a>(b<c)"));
  CliRun t = run({"split", "--catalog", "associative", "--format", "tex", "--fold-star"});
  EXPECT_NE(t.out.find("(a\\prec b)\\prec c - a\\prec(b\\star c) = 0"), std::string::npos) << t.out;
}

TEST_F(CliTest, SplitFromSpecFile) {
  CliRun r = run({"split", "--spec", spec("category-nap"), "--scheme", "dendriform"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, run({"split", "--catalog", "nap", "--scheme", "dendriform"}).out);
}

TEST_F(CliTest, SplitIsDeterministic) {
  for (const auto& name : catalog_names()) {
    for (const std::string fmt : {"text", "json", "tex"}) {
      CliRun a = run({"split", "--catalog", name, "--format", fmt});
      CliRun b = run({"split", "--catalog", name, "--format", fmt, "--jobs", "2"});
      EXPECT_EQ(a.out, b.out);
    }
  }
}

TEST_F(CliTest, CheckExitCodes) {
  EXPECT_EQ(run({"check", "--spec", spec("sl2-identity"), "--check", "nijenhuis"}).code, 0);
  const std::string random_op = write("sl2-random.json", R"({
    "version": 1,
    "category": {"name": "lie"},
    "algebra": {"dim": 3, "basisNames": ["e", "f", "h"],
                "products": {"mu": [[["0","0","0"],["0","0","1"],["-2","0","0"]],
                                    [["0","0","-1"],["0","0","0"],["0","2","0"]],
                                    [["2","0","0"],["0","-2","0"],["0","0","0"]]]}},
    "operator": {"kind": "nijenhuis", "matrix": [["0","1","0"],["0","0","0"],["0","0","1/2"]]}
  })");
  CliRun bad = run({"check", "--spec", random_op, "--check", "nijenhuis"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find(" at ("), std::string::npos) << bad.out;
  const std::string truncated = write("truncated.json", R"({"version": 1, "algebra": {"dim": )");
  CliRun t = run({"check", "--spec", truncated, "--check", "category"});
  EXPECT_EQ(t.code, 2);
  EXPECT_NE(t.err.find("line"), std::string::npos);
  EXPECT_EQ(run({"check", "--spec", spec("sl2"), "--check", "nonsense"}).code, 2);
  EXPECT_EQ(run({"check", "--spec", spec("sl2"), "--check", "nijenhuis"}).code, 2);  // no operator
}

TEST_F(CliTest, CheckDispatch) {
  for (const std::string c : {"relative-rb", "lift", "rb-tridendriform", "rb-ns", "nijrb", "graph", "bimodule"}) {
    EXPECT_EQ(run({"check", "--spec", spec("ut2-column-rb"), "--check", c}).code, 0) << c;
  }
  for (const std::string c : {"operator", "rb", "lift", "graph", "rb-ns"}) {
    EXPECT_EQ(run({"check", "--spec", spec("ut2-rb"), "--check", c}).code, 0) << c;
  }
  for (const std::string c : {"operator", "twisted-rb", "trb-ns", "graph"}) {
    EXPECT_EQ(run({"check", "--spec", spec("ut2-reynolds"), "--check", c}).code, 0) << c;
  }
  for (const std::string c : {"ns", "ns-to-twisted-rb"}) {
    EXPECT_EQ(run({"check", "--spec", spec("twilled4-ns"), "--check", c}).code, 0) << c;
  }
  EXPECT_EQ(run({"check", "--spec", spec("twilled4-ns"), "--check", "dendriform"}).code, 1);
  EXPECT_EQ(run({"check", "--spec", spec("sl2-twilled"), "--check", "nijenhuis-ns"}).code, 0);
  EXPECT_EQ(run({"check", "--spec", spec("trunc-poly3"), "--check", "category"}).code, 0);
}

TEST_F(CliTest, Verify) {
  EXPECT_EQ(run({"verify", "--spec", spec("twilled4-twilled"), "--oracle", "xstar", "--max-len", "4"}).code, 0);
  EXPECT_EQ(run({"verify", "--spec", spec("ut2-twilled"), "--oracle", "pairsij", "--max-pow", "6"}).code, 0);
  EXPECT_EQ(run({"verify", "--spec", spec("twilled4-ns"), "--oracle", "cross-check"}).code, 0);
  const std::string non_nij = write("non-nij.json", R"({
    "version": 1,
    "algebra": {"dim": 2, "products": {"mu": [[["1","0"],["0","1"]],[["0","1"],["0","0"]]]}},
    "operator": {"kind": "nijenhuis", "matrix": [["0","1"],["1","0"]]}
  })");
  CliRun r = run({"verify", "--spec", non_nij, "--oracle", "xstar"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("NotNijenhuis"), std::string::npos) << r.err;
  EXPECT_EQ(run({"verify", "--spec", spec("sl2-identity"), "--oracle", "xstar", "--max-len", "9"}).code, 2);
}

TEST_F(CliTest, Catalog) {
  CliRun r = run({"catalog"});
  EXPECT_EQ(r.code, 0);
  CliRun j = run({"catalog", "--json"});
  auto doc = Json::parse(j.out);
  EXPECT_GE(doc["presentations"].size(), 6u);
  EXPECT_GE(doc["algebras"].size(), 5u);
  EXPECT_EQ(run({"catalog", "--bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST_F(CliTest, OutputFlagWritesFile) {
  const auto path = (dir_ / "out.txt").string();
  CliRun r = run({"--output", path, "split", "--catalog", "nap"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), run({"split", "--catalog", "nap"}).out);
}
