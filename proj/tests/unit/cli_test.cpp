#include "edegen_cli/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <nlohmann/json.hpp>

#include "edegen/edge_list.hpp"
#include "edegen/graph.hpp"

namespace edegen::cli {
namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("edegen_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::remove_all(dir_);
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

TEST_F(CliTest, PolytopeThreeListsFourVertices) {
  const Result r = run({"polytope", "3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "n 3\nvertices 4\n0 0\n1 1\n3 2\n2 1\ninteger_points 4\np_n 0 0\n");
}

TEST_F(CliTest, PolytopeJson) {
  const Result r = run({"polytope", "10", "--json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["n"], 10);
  EXPECT_EQ(j["vertices"].size(), 18u);
  EXPECT_EQ(j["integer_point_count"], 130);
  EXPECT_EQ(j["p_n"], nlohmann::json::array({56, 65}));
}

TEST_F(CliTest, RealizeRoundTripsThroughDegen) {
  const Result r = run({"realize", "5", "2", "5", "-o", path("g.txt")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Result d = run({"degen", path("g.txt")});
  ASSERT_EQ(d.code, kExitOk) << d.err;
  EXPECT_NE(d.out.find("n 5\nedges 5\ndegeneracy 2\n"), std::string::npos) << d.out;
}

TEST_F(CliTest, RealizeToStdout) {
  const Result r = run({"realize", "5", "1", "4"});
  ASSERT_EQ(r.code, kExitOk);
  std::istringstream in(r.out);
  EXPECT_EQ(stat_pair(read_edge_list(in)), (StatPair{4, 1}));
}

TEST_F(CliTest, RealizeRejectsUnrealizablePair) {
  const Result r = run({"realize", "5", "2", "8"});
  EXPECT_EQ(r.code, kExitDomain);
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(run({"realize", "5", "7", "1"}).code, kExitDomain);
}

TEST_F(CliTest, DegenPrintsCoreNumbers) {
  std::ofstream(path("tri.txt")) << "n 4\n0 1\n1 2\n0 2\n2 3\n";
  const Result r = run({"degen", path("tri.txt")});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "n 4\nedges 4\ndegeneracy 2\ncore_numbers 2 2 2 1\n");
}

TEST_F(CliTest, DegenReportsMalformedFileAsUsage) {
  std::ofstream(path("bad.txt")) << "n 3\n0 0\n";
  EXPECT_EQ(run({"degen", path("bad.txt")}).code, kExitUsage);
  EXPECT_EQ(run({"degen", path("missing.txt")}).code, kExitUsage);
}

TEST_F(CliTest, CensusWritesAndReusesCache) {
  const Result r = run({"census", "4", "--cache", dir_.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out,
            "edegen-census 1\nn 4\npair-order lex-uv\n0 0 1\n1 1 6\n2 1 15\n3 1 16\n3 2 4\n"
            "4 2 15\n5 2 6\n6 3 1\n");
  EXPECT_TRUE(std::filesystem::exists(dir_ / "census_n4.v1.txt"));
  EXPECT_EQ(run({"census", "4", "--cache", dir_.string()}).out, r.out);
}

TEST_F(CliTest, CensusGuardIsAResourceError) {
  EXPECT_EQ(run({"census", "8"}).code, kExitResource);
  EXPECT_EQ(run({"census", "12", "--allow-large"}).code, kExitResource);
}

TEST_F(CliTest, DistUniformOnThreeNodes) {
  const Result r = run({"dist", "3", "--theta", "0,0"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "e,d,count,probability\n0,0,1,0.125\n1,1,3,0.375\n2,1,3,0.375\n3,2,1,0.125\n");
}

TEST_F(CliTest, DistAcceptsNegativeParameters) {
  const Result a = run({"dist", "4", "--theta=-1,2"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  const Result b = run({"dist", "4", "--theta", "-1,2"});
  ASSERT_EQ(b.code, kExitOk) << b.err;
  EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, MleOnVertexHasNoEstimate) {
  const Result r = run({"mle", "5", "--observed", "0.3,0.5"});
  EXPECT_EQ(r.code, kExitDomain);
  EXPECT_EQ(r.out, "status NoMLE\n");
  EXPECT_EQ(run({"mle", "5", "--observed", "3/10,1/2"}).code, kExitDomain);
  EXPECT_EQ(run({"mle", "5", "--observed", "3,2", "--raw"}).code, kExitDomain);
}

TEST_F(CliTest, MleInteriorConverges) {
  const Result r = run({"mle", "5", "--observed", "1/2,1/2"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.rfind("status converged\ntheta ", 0), 0u) << r.out;
}

TEST_F(CliTest, ClassifyDirection) {
  const Result r = run({"classify-dir", "1,-1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "direction 1 -1\ncone lower\nalpha 3/4 1/2\n");
  const Result u = run({"classify-dir", "--", "-1,1"});
  ASSERT_EQ(u.code, kExitOk) << u.err;
  EXPECT_EQ(u.out, "direction -1 1\ncone upper\nalpha 1/4 1/2\n");
  EXPECT_EQ(run({"classify-dir", "2,-4"}).out, "direction 2 -4\ncone boundary\nalpha none\n");
  const auto j = nlohmann::json::parse(run({"classify-dir", "0,-1", "--json"}).out);
  EXPECT_EQ(j["cone"], "empty");
}

TEST_F(CliTest, ClassifyRejectsMalformedDirection) {
  EXPECT_EQ(run({"classify-dir", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"classify-dir", "0,0"}).code, kExitUsage);
  EXPECT_EQ(run({"classify-dir", "a,1"}).code, kExitUsage);
}

TEST_F(CliTest, SampleRequiresSeedAndIsDeterministic) {
  EXPECT_EQ(run({"sample", "5", "--theta", "0,0", "--steps", "100"}).code, kExitUsage);
  const std::vector<std::string> args{"sample", "5", "--theta", "1,-1", "--steps", "100",
                                      "--seed", "7", "--thin", "10"};
  const Result a = run(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, run(args).out);
  std::istringstream in(a.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "step,e,d,accepted");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 10);
}

TEST_F(CliTest, ExtremalReportJson) {
  const Result r = run({"extremal", "6", "--beta", "0,0", "--dir", "0,-1", "--eta", "0.1",
                     "--ladder", "1,10,100"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["cone"], "empty");
  EXPECT_EQ(j["ladder"].size(), 3u);
  EXPECT_EQ(run({"extremal", "6", "--beta", "0,0", "--dir", "1,0", "--eta", "0.1"}).code,
            kExitDomain);
  EXPECT_EQ(run({"extremal", "9", "--beta", "0,0", "--dir", "0,-1", "--eta", "0.1"}).code,
            kExitUsage);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"polytope"}).code, kExitUsage);
  EXPECT_EQ(run({"polytope", "2"}).code, kExitDomain);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

}  // namespace
}  // namespace edegen::cli
