#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "sumset/cli.hpp"

using sumset::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string path(const std::string& name) { return std::string(SUMSET_BIN_DIR) + "/cli_" + name; }

std::string write(const std::string& name, const std::string& text) {
  const std::string p = path(name);
  std::ofstream(p) << text;
  return p;
}

// Metric lines only: everything between the seed line and the verdict.
std::string metrics(const std::string& records) {
  std::istringstream in(records);
  std::string line, out;
  bool on = false;
  while (std::getline(in, line)) {
    if (line.rfind("verdict", 0) == 0) on = false;
    if (on) out += line + "\n";
    if (line.rfind("seed", 0) == 0) on = true;
  }
  return out;
}

}  // namespace

TEST(CliTest, GenChrMatchesDisplayedSet) {
  const Result r = call({"gen", "chr", "--d", "2", "--N", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "dim 2\n0 1\n0 2\n0 3\n1 1\n1 2\n1 3\n");
  EXPECT_EQ(call({"gen", "simplex", "--d", "3"}).out, "dim 3\n0 0 0\n0 0 1\n0 1 0\n1 0 0\n");
  const Result a = call({"gen", "random-lattice", "--d", "2", "--n", "20", "--box", "10", "--seed", "7"});
  EXPECT_EQ(a.out, call({"gen", "random-lattice", "--d", "2", "--n", "20", "--box", "10", "--seed", "7"}).out);
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 21);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(call({"gen", "chr", "--d", "0"}).code, 2);
  EXPECT_EQ(call({"gen", "nothing"}).code, 2);
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"select", "--input", path("missing.txt")}).code, 2);
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(CliTest, SelectModes) {
  call({"gen", "chr", "--d", "2", "--N", "50", "--out", path("chr50.txt")});
  const Result general = call({"select", "--input", path("chr50.txt"), "--mode", "general"});
  EXPECT_EQ(general.code, 0);
  EXPECT_NE(general.out.find("strategy=line-covered"), std::string::npos);
  EXPECT_NE(general.out.find("verdict\tpass"), std::string::npos);

  call({"gen", "simplex", "--d", "2", "--out", path("simplex.txt")});
  const Result small = call({"select", "--input", path("simplex.txt")});
  EXPECT_EQ(small.code, 0);
  EXPECT_NE(small.out.find("strategy=small-set-full"), std::string::npos);
  EXPECT_EQ(call({"select", "--input", path("simplex.txt"), "--mode", "triple1d"}).code, 2);

  const Result lc = call({"select", "--input", path("chr50.txt"), "--mode", "line-covered", "--json"});
  EXPECT_EQ(lc.code, 0);
  EXPECT_NE(lc.out.find("lines\t2"), std::string::npos);
  EXPECT_NE(lc.out.find("{\"command\""), std::string::npos);

  write("ten.txt", "dim 1\n0\n1\n2\n3\n4\n5\n6\n7\n8\n9\n");
  const Result t = call({"select", "--input", path("ten.txt"), "--mode", "triple1d"});
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("achieved\t19"), std::string::npos);
}

TEST(CliTest, SelectReportsExhaustion) {
  // a starved budget on a set too large for the small-set stage
  call({"gen", "random-lattice", "--d", "2", "--n", "200", "--box", "1000", "--seed", "3", "--out", path("sparse.txt")});
  const Result r = call({"select", "--input", path("sparse.txt"), "--sample-size", "1", "--rounds", "1",
                         "--max-greedy", "1", "--direction-budget", "1"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("verdict\tfail"), std::string::npos);
  EXPECT_NE(r.out.find("witness\t"), std::string::npos);
}

TEST(CliTest, VerifyChecks) {
  call({"gen", "chr", "--d", "2", "--N", "3", "--out", path("chr3.txt")});
  const Result f = call({"verify", "--check", "freiman", "--input", path("chr3.txt")});
  EXPECT_EQ(f.code, 0);
  EXPECT_NE(f.out.find("slack\t0/1"), std::string::npos);
  EXPECT_EQ(call({"verify", "--check", "m2", "--input", path("chr3.txt")}).code, 0);
  EXPECT_EQ(call({"verify", "--check", "ruzsa", "--input", path("chr3.txt")}).code, 0);

  write("ap10.txt", "dim 1\n0\n1\n2\n3\n4\n5\n6\n7\n8\n9\n");
  EXPECT_EQ(call({"verify", "--check", "pr", "--k", "2", "--input", path("ap10.txt")}).code, 0);
  EXPECT_EQ(call({"verify", "--check", "pr", "--k", "3", "--input", path("ap10.txt"), "--decimal"}).code, 0);

  const Result xs = call({"verify", "--check", "xs", "--p", "13", "--m", "2", "--exhaustive", "--maxsize", "5"});
  EXPECT_EQ(xs.code, 0);
  EXPECT_NE(xs.out.find("xs_failures\t0"), std::string::npos);

  write("z7a.txt", "cyclic 7 1\n0\n1\n3\n");
  write("z7b.txt", "cyclic 7 1\n0\n2\n");
  const Result cd =
      call({"verify", "--check", "cauchy-davenport", "--input", path("z7a.txt"), "--input-b", path("z7b.txt")});
  EXPECT_EQ(cd.code, 0);
  EXPECT_NE(cd.out.find("sumset_size\t5"), std::string::npos);
  EXPECT_EQ(call({"verify", "--check", "popular-nesting", "--input", path("z7a.txt")}).code, 0);
  // freiman on a degenerate set is a precondition failure
  write("line.txt", "dim 2\n0 0\n1 1\n");
  EXPECT_EQ(call({"verify", "--check", "freiman", "--input", path("line.txt")}).code, 2);
}

TEST(CliTest, VerifyXsOnFiles) {
  call({"gen", "interval", "--p", "101", "--length", "39", "--out", path("i40.txt")});
  call({"gen", "interval", "--p", "101", "--start", "90", "--length", "19", "--out", path("i20.txt")});
  const Result r = call({"verify", "--check", "xs", "--input", path("i40.txt"), "--input-b", path("i20.txt")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("achieved\t59"), std::string::npos);
}

TEST(CliTest, Manifest) {
  call({"gen", "chr", "--d", "2", "--N", "4", "--out", path("m1.txt")});
  call({"gen", "grid", "--d", "2", "--N", "3", "--out", path("m2.txt")});
  write("manifest.txt", "cli_m1.txt\n# comment\ncli_m2.txt cli_m1.txt\n");
  const Result r = call({"verify", "--check", "freiman", "--manifest", path("manifest.txt")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("runs\t2"), std::string::npos);
  EXPECT_NE(r.out.find("failed\t0"), std::string::npos);
}

TEST(CliTest, SimAndDeterminism) {
  call({"gen", "interval", "--p", "101", "--length", "39", "--out", path("sa.txt")});
  call({"gen", "interval", "--p", "101", "--length", "29", "--out", path("sb.txt")});
  const std::vector<std::string> args{"sim", "--input-a", path("sa.txt"), "--input-b", path("sb.txt"),
                                      "--t-count", "10", "--c", "25", "--trials", "300", "--seed", "4"};
  const Result a = call(args), b = call(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(metrics(a.out), metrics(b.out));
  EXPECT_FALSE(metrics(a.out).empty());

  write("g.txt", "cyclic 5 1\n0\n1\n2\n3\n4\n");
  const Result whole = call({"sim", "--input-a", path("g.txt"), "--input-b", path("g.txt"), "--t-count", "5"});
  EXPECT_EQ(whole.code, 0);
  EXPECT_NE(whole.out.find("mean_uncovered\t0/1"), std::string::npos);

  write("sparse_a.txt", "cyclic 31 1\n0\n1\n3\n");
  write("sparse_b.txt", "cyclic 31 1\n0\n7\n20\n");
  const Result vac = call({"sim", "--input-a", path("sparse_a.txt"), "--input-b", path("sparse_b.txt"),
                           "--t-count", "2", "--c", "2", "--trials", "1"});
  EXPECT_EQ(vac.code, 0);
  EXPECT_NE(vac.out.find("verdict\tvacuous"), std::string::npos);
}
