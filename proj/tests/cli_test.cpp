#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <sys/wait.h>

#include "json.hpp"

#include "ddl/cli.hpp"
#include "support.hpp"

namespace ddl {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Outcome {
  int status;
  std::string out, err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return test::fixture_path(name); }

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("ddl-cli-" + std::to_string(::getpid()) + "-" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

TEST(Cli, RankGolden) {
  const Outcome r = run_cli({"rank", fixture("exA.kb")});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, test::read_text(fixture("golden/exA.rank.txt")));
}

TEST(Cli, RankWithoutDefeasibleAxioms) {
  const Outcome r = run_cli({"rank", fixture("example2.kb")});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.rfind("no defeasible axioms\n", 0), 0u);
}

TEST(Cli, CompileGolden) {
  const Outcome r = run_cli({"compile", fixture("exB.kb")});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, test::read_text(fixture("golden/exB.dlp")));
}

TEST_F(CliFiles, CompileToFileMatchesStandardOutput) {
  const fs::path target = dir_ / "exB.dlp";
  const Outcome r = run_cli({"compile", fixture("exB.kb"), "-o", target.string()});
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(test::read_text(target.string()), run_cli({"compile", fixture("exB.kb")}).out);
}

TEST(Cli, SolveAllGolden) {
  const Outcome r = run_cli({"solve", fixture("exB.kb")});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, test::read_text(fixture("golden/exB.solve.txt")));
}

TEST(Cli, SolveTwoAnswerSets) {
  const Outcome r = run_cli({"solve", fixture("two_answer_sets.kb")});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "{c(a), -c(b)}\n{-c(a), c(b)}\n");
}

TEST(Cli, ConsequenceExitCodes) {
  const std::string kb = fixture("two_answer_sets.kb");
  EXPECT_EQ(run_cli({"solve", kb, "--query", "c(a)", "--mode", "brave"}).status, 0);
  const Outcome cautious = run_cli({"solve", kb, "--query", "c(a)"});
  EXPECT_EQ(cautious.status, 1);
  EXPECT_EQ(cautious.out, "cautious c(a): no\n");
  EXPECT_EQ(run_cli({"solve", fixture("exB.kb"), "--query", "-f(b)"}).status, 0);
}

// An empty dbox compiles to the empty program: one empty answer set.
TEST(Cli, EmptyProgram) {
  const Outcome r = run_cli({"solve", fixture("example2.kb")});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "{}\n");
  EXPECT_EQ(run_cli({"solve", fixture("example2.kb"), "--query", "cat(a)", "--mode", "brave"}).status, 1);
}

TEST(Cli, EmptyUniverseIsAnError) {
  const Outcome r = run_cli({"solve", fixture("exA.kb")});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("Herbrand universe is empty"), std::string::npos);
}

TEST(Cli, Entail) {
  const std::string kb = fixture("exA.kb");
  const Outcome yes = run_cli({"entail", kb, "--query", "Cat ~[= Docile"});
  EXPECT_EQ(yes.status, 0);
  EXPECT_EQ(yes.out, "Cat ~[= Docile: yes\n");
  EXPECT_EQ(run_cli({"entail", kb, "--query", "Tiger ~[= Docile"}).status, 1);
  EXPECT_EQ(run_cli({"entail", kb, "--query", "Tiger [= Feline"}).status, 0);
  EXPECT_EQ(run_cli({"entail", kb, "--query", "Cat [= Docile"}).status, 1);
  EXPECT_EQ(run_cli({"entail", kb, "--query", "Cat ~[= Dog"}).status, 2);
  EXPECT_EQ(run_cli({"entail", kb, "--query", "Cat ~[= -Tiger"}).out, "Cat ~[= !Tiger: yes\n");
  EXPECT_EQ(run_cli({"entail", fixture("exB.kb"), "--query", "Preyfish ~[= Preyfish"}).status, 0);
}

TEST(Cli, JsonCarriesTheTextFields) {
  const Outcome text = run_cli({"rank", fixture("exB.kb")});
  const Outcome js = run_cli({"--format", "json", "rank", fixture("exB.kb")});
  ASSERT_EQ(js.status, 0);
  const json r = json::parse(js.out);
  EXPECT_EQ(r["command"], "rank");
  for (const auto& e : r["ranks"]) {
    const std::string line = "rank " + std::to_string(e["rank"].get<int>()) + "  " + e["axiom"].get<std::string>();
    EXPECT_NE(text.out.find(line + "\n"), std::string::npos) << line;
  }
  EXPECT_EQ(r["sequence_sizes"], json::array({5, 2}));

  const json sets = json::parse(run_cli({"--format", "json", "solve", fixture("two_answer_sets.kb")}).out);
  ASSERT_EQ(sets["answer_sets"].size(), 2u);
  EXPECT_EQ(sets["answer_sets"][0][0], (json{{"negated", false}, {"predicate", "c"}, {"args", {"a"}}}));

  const json entail = json::parse(run_cli({"--format", "json", "entail", fixture("exA.kb"), "--query", "Cat ~[= Agile"}).out);
  EXPECT_EQ(entail["result"], "yes");
  EXPECT_EQ(entail["defeasible"], true);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).status, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).status, 2);
  EXPECT_EQ(run_cli({"check-postulates", "--cases", "0"}).status, 2);
  EXPECT_EQ(run_cli({"--format", "xml", "rank", fixture("exA.kb")}).status, 2);
  EXPECT_EQ(run_cli({"solve", fixture("exB.kb"), "--mode", "brave"}).status, 2);
  EXPECT_EQ(run_cli({"solve", fixture("exB.kb"), "--mode", "all", "--query", "f(a)"}).status, 2);
  EXPECT_EQ(run_cli({"rank", "/nonexistent.kb"}).status, 2);
  EXPECT_EQ(run_cli({"--help"}).status, 0);
}

TEST_F(CliFiles, ParseErrorNamesFileAndLine) {
  const fs::path kb = dir_ / "bad.kb";
  std::ofstream(kb) << "concept A, B, C.\ndbox: (A & B) ~[= C.\n";
  const Outcome r = run_cli({"rank", kb.string()});
  EXPECT_EQ(r.status, 2);
  EXPECT_EQ(r.err.rfind(kb.string() + ":2", 0), 0u) << r.err;
}

TEST(Cli, CheckPostulatesIsDeterministic) {
  const Outcome a = run_cli({"check-postulates", "--seed", "7", "--cases", "15"});
  const Outcome b = run_cli({"check-postulates", "--seed", "7", "--cases", "15"});
  EXPECT_EQ(a.status, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("RM_DL"), std::string::npos);
  EXPECT_EQ(a.out.substr(a.out.size() - 5), "pass\n");
}

// The installed binary behaves like the library entry point, exit status included.
TEST(Cli, BinaryExitStatus) {
  const std::string cmd = std::string(DDL_BINARY) + " solve '" + fixture("two_answer_sets.kb") +
                          "' --query 'c(a)' 2>&1";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string out;
  char buf[256];
  while (std::fgets(buf, sizeof buf, pipe)) out += buf;
  const int status = ::pclose(pipe);
  ASSERT_TRUE(WIFEXITED(status));
  EXPECT_EQ(WEXITSTATUS(status), 1);
  EXPECT_EQ(out, "cautious c(a): no\n");
}

}  // namespace
}  // namespace ddl
