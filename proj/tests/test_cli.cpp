#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "senslab/senslab.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "\"" SENSLAB_CLI_PATH "\" " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json last_line(const std::string& out) {
  auto end = out.find_last_not_of('\n');
  auto start = out.rfind('\n', end);
  return json::parse(out.substr(start == std::string::npos ? 0 : start + 1, end - (start == std::string::npos ? 0 : start + 1) + 1));
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("senslab-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

}  // namespace

TEST_F(Cli, GenThenMeasure) {
  auto g = run("gen --family majority --n 5 --out " + path("m.tt"));
  ASSERT_EQ(g.code, 0);
  EXPECT_EQ(last_line(g.out)["outputs"]["ones"], 16);
  auto m = run("measure --in " + path("m.tt"));
  ASSERT_EQ(m.code, 0);
  const auto j = last_line(m.out);
  EXPECT_EQ(j["command"], "measure");
  EXPECT_EQ(j["outputs"]["s"], 3);
  EXPECT_EQ(j["outputs"]["deg"], 5);
  EXPECT_EQ(j["outputs"]["mu1"]["exact"], "1/2");
  const auto table = senslab::io::load_tt(path("m.tt"));
  EXPECT_EQ(table, senslab::families::majority(5));
}

TEST_F(Cli, ExtendWritesReadableBall) {
  ASSERT_EQ(run("gen --family random-dt --depth 2 --n 8 --seed 3 --out " + path("f.tt")).code, 0);
  const auto f = senslab::io::load_tt(path("f.tt"));
  const unsigned s = senslab::sensitivity(f).s;
  auto e = run("extend --tt " + path("f.tt") + " --radius " + std::to_string(2 * s) + " --rule maj --write-ball " +
               path("f.ball") + " --out " + path("g.tt") + " --truth " + path("f.tt"));
  ASSERT_EQ(e.code, 0);
  EXPECT_TRUE(last_line(e.out)["pass"].get<bool>());
  EXPECT_EQ(senslab::io::load_tt(path("g.tt")), f);
  const auto ball = senslab::io::load_ball(path("f.ball"));
  EXPECT_EQ(ball.radius(), 2 * s);
  auto e2 = run("extend --in " + path("f.ball") + " --rule maj --truth " + path("f.tt"));
  EXPECT_EQ(e2.code, 0);
  auto v = run("eval --in " + path("f.ball") + " --s " + std::to_string(s) + " --all --algo top-down --truth " + path("f.tt"));
  EXPECT_EQ(v.code, 0);
}

TEST_F(Cli, AssertionFailureExitsOne) {
  ASSERT_EQ(run("gen --family or --n 6 --out " + path("or.tt")).code, 0);
  auto e = run("extend --tt " + path("or.tt") + " --center 111111 --radius 2 --rule maj --truth " + path("or.tt"));
  EXPECT_EQ(e.code, 1);
  EXPECT_FALSE(last_line(e.out)["pass"].get<bool>());
}

TEST_F(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("gen --n 4").code, 2);
  EXPECT_EQ(run("gen --family nope --n 4").code, 2);
  EXPECT_EQ(run("measure --in " + path("missing.tt")).code, 2);
  std::ofstream(path("bad.tt")) << "not a table\n";
  EXPECT_EQ(run("measure --in " + path("bad.tt")).code, 2);
  EXPECT_EQ(run("ns --in " + path("bad.tt") + " --delta 3/5").code, 2);
}

TEST_F(Cli, MaxNEnvironmentCap) {
  EXPECT_EQ(run("gen --family parity --n 12 --out " + path("p.tt")).code, 0);
  EXPECT_EQ(run("gen --family parity --n 12 --out " + path("p.tt"), "SENSLAB_MAX_N=8").code, 2);
  EXPECT_EQ(run("gen --family parity --n 8 --out " + path("p.tt"), "SENSLAB_MAX_N=8").code, 0);
}

TEST_F(Cli, SeededOutputIsByteIdentical) {
  ASSERT_EQ(run("gen --family random-dt --depth 2 --n 10 --seed 7 --out " + path("f.tt")).code, 0);
  const std::string args = "interpolate --n 3 --s 1 --k 12 --trials 40 --seed 11";
  EXPECT_EQ(run(args).out, run(args).out);
  const std::string bench = "bench --n 10 --s 2 --algo parallel --samples 20 --seed 4";
  const auto a = run(bench);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, run(bench).out);
  EXPECT_NE(a.out, run("bench --n 10 --s 2 --algo parallel --samples 20 --seed 5").out);
}

TEST_F(Cli, EnumerateAndCorrect) {
  auto en = run("enumerate --n 3 --s 2");
  ASSERT_EQ(en.code, 0);
  EXPECT_NE(en.out.find("118"), std::string::npos);
  EXPECT_EQ(run("enumerate --n 5 --s 1").code, 2);
  ASSERT_EQ(run("gen --family dictator --var 1 --n 10 --out " + path("d.tt")).code, 0);
  auto c = run("correct --mode local --in " + path("d.tt") + " --s 1 --k 3 --eps 1/20 --x 1111111111 --seed 2 --truth " +
               path("d.tt"));
  ASSERT_EQ(c.code, 0);
  EXPECT_EQ(last_line(c.out)["outputs"]["queries"], 729);
  auto gc = run("correct --mode global --in " + path("d.tt") + " --s 1 --truth " + path("d.tt"));
  EXPECT_EQ(gc.code, 0);
}

TEST_F(Cli, OutputIsJsonLines) {
  auto r = run("verify --suite counting --n 3");
  ASSERT_EQ(r.code, 0);
  std::size_t lines = 0, pos = 0;
  while (pos < r.out.size()) {
    auto nl = r.out.find('\n', pos);
    ASSERT_NE(nl, std::string::npos);
    EXPECT_TRUE(json::accept(r.out.substr(pos, nl - pos)));
    ++lines;
    pos = nl + 1;
  }
  EXPECT_GE(lines, 1u);
}

TEST_F(Cli, VerifyAllSmallN) {
  EXPECT_EQ(run("verify --suite all --n 4 --seed 1").code, 0);
}
