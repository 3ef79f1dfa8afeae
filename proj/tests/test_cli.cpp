#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "eikon/io.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

std::string scene(const std::string& name) { return std::string(EIKON_TEST_DATA) + "/" + name + ".json"; }

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = eikon::cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string temp_path(const std::string& name) { return ::testing::TempDir() + "eikon_" + name; }

}  // namespace

TEST(Cli, Help) {
  Outcome r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE((r.out + r.err).find("counterexample"), std::string::npos);
}

TEST(Cli, BadInputExitsTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"grid", "--scene", "/nonexistent.json", "--out", temp_path("x.csv")}).code, 2);
  Outcome r = run({"trace", "--scene", scene("disk"), "--start", "0,0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("StartOnMedialAxis"), std::string::npos) << r.err;
  EXPECT_EQ(run({"trace", "--scene", scene("disk"), "--start", "0.5"}).code, 2);
  // The spiral scene has no grid.
  EXPECT_EQ(run({"fmm", "--scene", scene("spiral"), "--out", temp_path("s.csv")}).code, 2);
}

TEST(Cli, FailedVerificationExitsOne) {
  Outcome r = run({"verify", "boundary-gradient", "--scene", scene("square"), "--point", "0,0"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("\"pass\": false"), std::string::npos);
  r = run({"verify", "boundary-gradient", "--scene", scene("disk"), "--point", "0,1"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
}

TEST(Cli, GridWritesReadableFiles) {
  std::string csv = temp_path("grid.csv"), js = temp_path("grid.json");
  ASSERT_EQ(run({"grid", "--scene", scene("disk"), "--out", csv}).code, 0);
  ASSERT_EQ(run({"grid", "--scene", scene("disk"), "--out", js}).code, 0);
  std::ifstream in(csv);
  eikon::GridField a = eikon::read_grid_csv(in);
  eikon::GridField b = eikon::grid_from_json(slurp(js));
  EXPECT_EQ(a.grid.dims, (std::vector<int>{128, 128}));
  EXPECT_EQ(a.values, b.values);
  std::remove(csv.c_str());
  std::remove(js.c_str());
}

TEST(Cli, FmmRefine) {
  std::string out = temp_path("fmm.csv");
  Outcome r = run({"fmm", "--scene", scene("halfspace"), "--out", out, "--refine"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("max_abs"), std::string::npos) << r.out;
  std::remove(out.c_str());
}

TEST(Cli, HalfSpaceC1IsExact) {
  Outcome r = run({"verify", "c1", "--scene", scene("halfspace"), "--point", "0,0", "--radius", "0.5"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"ratio_sup\": 0.0"), std::string::npos) << r.out;
}

TEST(Cli, SpiralTable) {
  Outcome r = run({"counterexample", "spiral", "--thetas", "10,100,1000", "--theta-max", "4000"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("100,0.009751650738213968,0.031104877758314942,"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  r = run({"counterexample", "spiral", "--thetas", "5,10", "--theta-max", "40", "--wall", "exp"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("0.5326543184"), std::string::npos) << r.out;
}

TEST(Cli, Cusp) {
  Outcome r = run({"counterexample", "cusp"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("misclassified 0"), std::string::npos) << r.out;
}

TEST(Cli, Deterministic) {
  std::vector<std::string> args{"verify", "lipschitz", "--scene", scene("disk"), "--level",
                                "0",      "--delta",   "0.5",          "--dmax",   "0.8", "--pairs", "2000"};
  Outcome a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  args.insert(args.end(), {"--seed", "99"});
  EXPECT_NE(run(args).out, a.out);
}

TEST(Cli, TraceAndLevelSet) {
  Outcome r = run({"trace", "--scene", scene("disk"), "--start", "0.5,0", "--dt", "0.1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("t,x1,x2,d\n0,0.5,0,0.5\n", 0), 0u) << r.out;
  r = run({"levelset", "--scene", scene("halfspace"), "--level", "0.25"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("chain,closed,x,y\n0,0,0.25,", 0), 0u) << r.out;
  EXPECT_EQ(run({"levelset", "--scene", scene("disk"), "--level", "9"}).code, 2);
}
