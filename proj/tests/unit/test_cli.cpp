#include <gtest/gtest.h>

#include <chrono>
#include <sstream>

#include "cli.hpp"
#include "gammapos/gammapos.hpp"

using namespace gammapos;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ComputeExamples) {
  auto r = run({"compute", "q-eulerian", "--n", "3", "--format", "text"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1 + (2 + q + q^2)*t + t^2\n");

  r = run({"compute", "eulerian", "--n", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1\n");

  r = run({"compute", "eulerian", "--n", "4", "--format", "csv"});
  EXPECT_EQ(r.out, "1,11,11,1\n");
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(run({"verify", "gamma", "--family", "binomial-eulerian-qt", "--n", "4"}).code, 0);
  EXPECT_EQ(run({"verify", "gal", "--polytope", "stellohedron", "--n", "3"}).code, 0);
  EXPECT_EQ(run({"verify", "cgk", "--r", "2", "--s", "3", "--q-level"}).code, 0);
  EXPECT_EQ(run({"verify", "descent-class", "--n", "4", "--set", "1,3"}).code, 0);
  // the literal derangement forms are the negative control
  EXPECT_EQ(run({"verify", "derangement-literal", "--n", "2"}).code, 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"compute", "no-such-family", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"compute", "eulerian"}).code, 2);
  EXPECT_EQ(run({"compute", "eulerian", "--n", "-1"}).code, 2);
  EXPECT_EQ(run({"verify", "gamma", "--family", "bogus", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"compute", "eulerian", "--n", "3", "--format", "xml"}).code, 2);
}

TEST(Cli, ResourceErrors) {
  EXPECT_EQ(run({"compute", "eulerian", "--n", "10"}).code, 3);
  EXPECT_EQ(run({"compute", "complex", "--polytope", "stellohedron", "--n", "6"}).code, 3);
  EXPECT_EQ(run({"compute", "Q", "--n", "3", "--m", "9"}).code, 3);
  EXPECT_EQ(run({"suite", "--max-n", "10"}).code, 3);
}

TEST(Cli, HelpExitsZero) {
  auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("compute"), std::string::npos);
  EXPECT_NE(r.out.find("Exit codes"), std::string::npos);
}

TEST(Cli, JsonRoundTrips) {
  auto r = run({"compute", "q-eulerian", "--n", "4", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const QTPoly parsed = qt_poly_from_json(nlohmann::json::parse(r.out));
  EXPECT_EQ(parsed, q_eulerian(4));
  EXPECT_EQ(to_json(parsed).dump() + "\n", r.out);

  r = run({"compute", "binomial-eulerian", "--n", "5", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(int_poly_from_json(nlohmann::json::parse(r.out)), binomial_eulerian_poly(5));
}

TEST(Cli, VerifyJsonReport) {
  auto r = run({"verify", "gamma", "--family", "eulerian-qt", "--n", "5", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["identity"], "gamma-theorem:eulerian-qt");
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["gamma_vector"].size(), 3u);
}

TEST(Cli, TableCsvHasOneRowPerN) {
  auto r = run({"table", "q-eulerian", "--from", "1", "--to", "4", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[2], "3,\"1\",\"2 + q + q^2\",\"1\"");
}

TEST(Cli, TableGammaText) {
  auto r = run({"table", "gamma", "--family", "eulerian-t", "--from", "5", "--to", "5"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "n=5: 1 | 22 | 16\n");
}

TEST(Suite, VacuousAtZero) {
  EXPECT_TRUE(cli::suite_registry(0).empty());
  auto r = run({"suite", "--max-n", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0/0 checks passed\n");
}

TEST(Suite, PassesAtFourQuickly) {
  const auto start = std::chrono::steady_clock::now();
  auto r = run({"suite", "--max-n", "4"});
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_LT(secs, 5.0);
  EXPECT_TRUE(r.err.empty());
}

TEST(Suite, PassesAtSix) {
  auto r = run({"suite", "--max-n", "6", "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["failed"], 0);
  EXPECT_EQ(j["checks"].size(), cli::suite_registry(6).size());
}

TEST(Suite, RegistryGrowsWithMaxN) {
  EXPECT_LT(cli::suite_registry(3).size(), cli::suite_registry(6).size());
  EXPECT_EQ(cli::suite_registry(8).size(), cli::suite_registry(9).size());
}
