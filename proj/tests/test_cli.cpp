#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "succinct/cli.hpp"

using namespace succinct;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

/// Splits on spaces; single quotes group.
std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false, any = false;
  for (char c : line) {
    if (c == '\'') {
      quoted = !quoted;
      any = true;
    } else if (c == ' ' && !quoted) {
      if (any) out.push_back(cur);
      cur.clear();
      any = false;
    } else {
      cur.push_back(c);
      any = true;
    }
  }
  if (any) out.push_back(cur);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kCommands[] = {"gen",      "size-table", "compile", "check-defines", "analyze", "encode",
                           "crosscheck", "types",    "numbers", "bounds",        "eval"};

}  // namespace

class HelpExample : public ::testing::TestWithParam<const char*> {};

TEST_P(HelpExample, MatchesGolden) {
  std::string cmd = GetParam();
  auto help = run({cmd, "--help"});
  ASSERT_EQ(help.code, 0);
  auto at = help.out.find("Example: succinct ");
  ASSERT_NE(at, std::string::npos) << help.out;
  auto line = help.out.substr(at + 18, help.out.find('\n', at) - at - 18);
  auto args = split(line);
  ASSERT_FALSE(args.empty());
  EXPECT_EQ(args.front(), cmd);
  auto r = run(args);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, read_file(std::string(SUCCINCT_GOLDEN_DIR) + "/" + cmd + ".txt"));
}

INSTANTIATE_TEST_SUITE_P(Cli, HelpExample, ::testing::ValuesIn(kCommands),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (auto& c : s)
                             if (c == '-') c = '_';
                           return s;
                         });

TEST(Cli, CheckDefinesReportsTheWord) {
  auto r = run({"check-defines", "--logic", "fo", "--i", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "defines: llrr (length 4)\n");
  auto m = run({"check-defines", "--logic", "mso", "--i", "2"});
  EXPECT_EQ(m.out, "defines: lllrrlrr (length 8)\n");
}

TEST(Cli, CheckDefinesCounterexample) {
  auto r = run({"check-defines", "--logic", "fo", "--family", "psi_no_order", "--i", "1"});
  EXPECT_EQ(r.code, cli::kExitVerify);
  EXPECT_EQ(r.out, "not a singleton: accepts llrr and llrlrr\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"gen", "--logic", "so", "--i", "0"}).code, cli::kExitUsage);
  auto syntax = run({"eval", "--formula", "(exists1 x", "--word", "l"});
  EXPECT_EQ(syntax.code, cli::kExitUsage);
  EXPECT_NE(syntax.err.find("position 10"), std::string::npos);
  EXPECT_EQ(run({"eval", "--formula", "(letter-l x)", "--word", "l"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--state-budget", "10", "check-defines", "--i", "2"}).code, cli::kExitBudget);
  EXPECT_EQ(run({"check-defines", "--i", "2", "--state-budget", "10"}).code, cli::kExitBudget);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Json) {
  auto r = run({"--json", "gen", "--logic", "mso", "--family", "psi", "--i", "1"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["size"], 533);
  EXPECT_EQ(j["logic"], "mso");
  auto b = nlohmann::json::parse(run({"--json", "bounds", "--logic", "fo", "--n", "100"}).out);
  EXPECT_EQ(b["upper"], "tower(55)");
  EXPECT_EQ(b["lower"].size(), 2u);
  auto t = nlohmann::json::parse(run({"--json", "types", "--logic", "fo", "--k", "2"}).out);
  EXPECT_EQ(t["types"], 96);
  EXPECT_EQ(t["within_bound"], true);
}

TEST(Cli, BoundsForFirstOrderIncludeTheCubicRoot) {
  auto r = run({"bounds", "--logic", "fo", "--n", "100"});
  EXPECT_EQ(r.out,
            "lower DN: twr((100/18.811)^(1/5)) = twr(1.397) = 4\n"
            "lower LS: twr((100/106.381)^(1/3)) = twr(0.980) = 2\n"
            "upper DN, LS, H: twr(50 + log*(2550) + 1) = tower(55)\n");
}

TEST(Cli, NumbersFromFile) {
  auto path = testing::TempDir() + "/sentences.txt";
  {
    std::ofstream f(path);
    f << "# a comment\n(exists1 x (letter-l x))\n\n"
      << "(exists1 x (exists1 y (and (lt x y) (and (letter-l x) (and (letter-r y) (forall1 z (or (eq z x) (eq z y))))))))\n";
  }
  auto r = run({"numbers", path});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("sentences: 2 (2 compiled)"), std::string::npos);
  EXPECT_NE(r.out.find("DN = 2  witness #1"), std::string::npos);
  std::ofstream(path) << "(letter-l x)\n";
  EXPECT_EQ(run({"numbers", path}).code, cli::kExitUsage);
  EXPECT_EQ(run({"numbers", "/nonexistent/file"}).code, cli::kExitUsage);
}

TEST(Cli, RandomNumbersAreSeeded) {
  auto a = run({"--seed", "3", "numbers", "--random", "5"});
  auto b = run({"numbers", "--random", "5", "--seed", "3"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.code, 0);
}

TEST(Cli, EncodeAll) {
  auto r = run({"encode", "--logic", "mso", "--i", "2", "--all"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("lllrrlrr"), std::string::npos);
  EXPECT_NE(r.out.find("llrllrrr"), std::string::npos);
  EXPECT_NE(r.out.find("count: 2"), std::string::npos);
  EXPECT_EQ(run({"encode", "--logic", "mso", "--i", "2"}).out, "lllrrlrr\nlength: 8\n");
}

TEST(Cli, CompileDot) {
  auto r = run({"compile", "--formula", "(letter-l x)", "--dot"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("digraph dfa {", 0), 0u);
}
