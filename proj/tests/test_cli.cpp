#include "mg/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace mg {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + needle.size())) ++n;
  return n;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("mg_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
    unsetenv("MG_SEED");
  }
  void TearDown() override {
    fs::remove_all(dir_);
    unsetenv("MG_SEED");
  }

  std::string write(const std::string& name, const std::string& text) {
    fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string worked(const std::string& metric, const std::string& mode) {
    return write("worked.json", R"({"metric":")" + metric + R"(","scalar_mode":")" + mode +
                                    R"(","circles":[{"cx":"0","cy":"0","r":"1"},{"cx":"6","cy":"0","r":"2"},{"cx":"0","cy":"6","r":"3"}]})");
  }

  fs::path dir_;
};

TEST_F(Cli, DistExamples) {
  EXPECT_EQ(run({"dist", "--metric", "lp:2", "--from", "0,0", "--to", "3,4"}).out, "5\n");
  EXPECT_EQ(run({"dist", "--metric", "alpha-k:2/1", "--from", "0,0", "--to", "3,4"}).out, "7\n");
  EXPECT_EQ(run({"dist", "--metric", "lp:inf", "--from", "0,0", "--to", "3,4"}).out, "4\n");
  EXPECT_EQ(run({"dist", "--metric", "alpha-k:3/2", "--from", "0,0", "--to", "3,4", "--exact"}).out, "11/2\n");
  EXPECT_EQ(run({"dist", "--metric", "euclidean", "--from", "1/3,0", "--to", "1/3,2"}).out, "2\n");
  EXPECT_EQ(run({"dist", "--metric", "lp:3", "--from", "0,0", "--to", "1,1"}).out, "1.25992104989487\n");
}

TEST_F(Cli, DistErrors) {
  auto bad = run({"dist", "--metric", "lq:2", "--from", "0,0", "--to", "3,4"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("error"), std::string::npos);
  EXPECT_EQ(run({"dist", "--metric", "lp:3", "--from", "0,0", "--to", "3,4", "--exact"}).code, 1);
  EXPECT_EQ(run({"dist", "--metric", "lp:2", "--from", "0", "--to", "3,4"}).code, 1);
  EXPECT_EQ(run({"dist", "--metric", "lp:2"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(Cli, CircleListsVerticesAndClassifies) {
  auto r = run({"circle", "--metric", "alpha-k:2", "--exact", "--point", "1/2,1/2", "--point", "1,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("8 vertices"), std::string::npos);
  EXPECT_NE(r.out.find("A2 1/2 1/2 collinear"), std::string::npos);
  EXPECT_NE(r.out.find("1/2,1/2: on"), std::string::npos);
  EXPECT_NE(r.out.find("1,1: outside"), std::string::npos);

  auto c = run({"circle", "--metric", "lp:3", "--samples", "8", "--svg", path("c.svg")});
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("curve, p=3"), std::string::npos);
  EXPECT_EQ(count(slurp(path("c.svg")), "<path"), 1u);
}

TEST_F(Cli, MongeWorkedExact) {
  auto r = run({"monge", worked("alpha-k:3/2", "exact"), "--svg", path("m.svg")});
  EXPECT_EQ(r.code, 0);
  json j = json::parse(r.out);
  EXPECT_EQ(j["status"], "PASS");
  EXPECT_EQ(j["monge_points"]["closed_form"]["P23"], json({{"x", "18"}, {"y", "-12"}}));
  std::string svg = slurp(path("m.svg"));
  EXPECT_EQ(count(svg, "<path class=\"circle\""), 3u);
  EXPECT_EQ(count(svg, "<line class=\"tangent\""), 6u);
  EXPECT_EQ(count(svg, "<line class=\"monge-line\""), 1u);
  EXPECT_EQ(count(svg, "<circle class=\"monge-point\""), 3u);
}

TEST_F(Cli, MongeWorkedLp3) {
  auto r = run({"monge", worked("lp:3", "float")});
  EXPECT_EQ(r.code, 0);
  json j = json::parse(r.out);
  EXPECT_EQ(j["status"], "PASS");
  for (const auto& [k, v] : j["residuals"]["apex_discrepancy"].items()) EXPECT_LT(v.get<double>(), 1e-9) << k;
  EXPECT_LT(j["residuals"]["collinearity_tangent"].get<double>(), 1e-9);
}

TEST_F(Cli, MongeModeFlags) {
  std::string f = worked("lp:1", "float");
  EXPECT_EQ(json::parse(run({"monge", f}).out)["scalar_mode"], "float");
  EXPECT_EQ(json::parse(run({"monge", f, "--exact"}).out)["scalar_mode"], "exact");
  EXPECT_EQ(run({"monge", f, "--exact", "--float"}).code, 1);
  EXPECT_EQ(run({"monge", worked("lp:3", "float"), "--exact"}).code, 1);
}

TEST_F(Cli, MongeInvalidInput) {
  std::string overlap = write("o.json", R"({"metric":"alpha-k:3/2","scalar_mode":"exact","circles":[
      {"cx":"0","cy":"0","r":"2"},{"cx":"1","cy":"0","r":"3"},{"cx":"40","cy":"40","r":"1"}]})");
  auto r = run({"monge", overlap});
  EXPECT_EQ(r.code, 1);
  json j = json::parse(r.out);
  EXPECT_FALSE(j["admissible"]["ok"].get<bool>());
  EXPECT_EQ(j["admissible"]["reasons"][0], "overlap(1,2)");

  EXPECT_EQ(run({"monge", path("missing.json")}).code, 1);
  EXPECT_EQ(run({"monge", write("bad.json", "{not json")}).code, 1);
  EXPECT_EQ(run({"monge", write("two.json", R"({"metric":"lp:1","circles":[{"cx":0,"cy":0,"r":1},{"cx":5,"cy":0,"r":2}]})")}).code, 1);
}

TEST_F(Cli, TangentsExamples) {
  auto e = run({"tangents", write("e.json", R"({"metric":"euclidean","circles":[{"cx":0,"cy":0,"r":1},{"cx":4,"cy":0,"r":2}]})")});
  EXPECT_EQ(e.code, 0);
  EXPECT_NE(e.out.find("apex: (-4, 0)"), std::string::npos) << e.out;

  auto t = run({"tangents", write("t.json", R"({"metric":"alpha-k:2","scalar_mode":"exact","circles":[{"cx":0,"cy":0,"r":1},{"cx":6,"cy":0,"r":2}]})"),
                "--svg", path("t.svg")});
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("apex: (-6, 0)"), std::string::npos) << t.out;
  std::string svg = slurp(path("t.svg"));
  EXPECT_EQ(count(svg, "<path class=\"circle\""), 2u);
  EXPECT_EQ(count(svg, "<line class=\"tangent\""), 2u);

  auto q = run({"tangents", write("q.json", R"({"metric":"lp:1","scalar_mode":"exact","circles":[{"cx":0,"cy":0,"r":1},{"cx":5,"cy":2,"r":1}]})")});
  EXPECT_EQ(q.code, 0);
  EXPECT_NE(q.out.find("apex: at infinity, direction (1, 2/5)"), std::string::npos) << q.out;

  auto bad = run({"tangents", write("b.json", R"({"metric":"lp:1","circles":[{"cx":0,"cy":0,"r":3},{"cx":1,"cy":0,"r":1}]})")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("inadmissible"), std::string::npos);
}

TEST_F(Cli, FuzzIsDeterministic) {
  std::vector<std::string> args{"fuzz", "--family", "lp", "--trials", "25", "--seed", "7"};
  auto a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("failures: 0"), std::string::npos);

  auto threaded = args;
  threaded.insert(threaded.end(), {"--threads", "4"});
  EXPECT_EQ(run(threaded).out, a.out);

  auto one = run({"fuzz", "--trials", "1", "--seed", "3"});
  EXPECT_EQ(one.out, run({"fuzz", "--trials", "1", "--seed", "3"}).out);
}

TEST_F(Cli, SeedFromEnvironment) {
  auto base = run({"fuzz", "--family", "euclidean", "--trials", "3", "--seed", "5"});
  setenv("MG_SEED", "99", 1);
  auto env = run({"fuzz", "--family", "euclidean", "--trials", "3", "--seed", "5"});
  EXPECT_NE(env.out.find("seed: 99"), std::string::npos);
  EXPECT_EQ(env.out, run({"fuzz", "--family", "euclidean", "--trials", "3", "--seed", "99"}).out);
  EXPECT_NE(base.out, env.out);
  setenv("MG_SEED", "abc", 1);
  EXPECT_EQ(run({"fuzz", "--trials", "1"}).code, 1);
}

TEST_F(Cli, FuzzRejectsBadConfig) {
  EXPECT_EQ(run({"fuzz", "--trials", "0"}).code, 1);
  EXPECT_EQ(run({"fuzz", "--family", "hex"}).code, 1);
  EXPECT_EQ(run({"fuzz", "--coord-range", "-2"}).code, 1);
}

// Every fuzz trial replays through `monge` with the same verdict, so a
// failing case echoed by the summary re-fails.
TEST_F(Cli, FuzzCasesReplayThroughMonge) {
  for (auto family : {FuzzFamily::alpha, FuzzFamily::lp, FuzzFamily::euclidean}) {
    FuzzConfig cfg;
    cfg.family = family;
    cfg.seed = 11;
    for (std::size_t i = 0; i < 5; ++i) {
      TrialResult t = run_trial(cfg, i);
      auto r = run({"monge", write("replay.json", to_json(t.instance).dump())});
      EXPECT_EQ(r.code == 0, t.pass);
      json j = json::parse(r.out);
      EXPECT_EQ(j["status"] == "PASS", t.pass);
    }
  }
}

TEST_F(Cli, EchoedFailureLineParsesBack) {
  FuzzConfig cfg;
  cfg.family = FuzzFamily::lp;
  cfg.trials = 3;
  FuzzSummary s = run_fuzz(cfg);
  s.trials[1].pass = false;
  s.trials[1].failure = "forced";
  std::string text = format_summary(s);
  auto at = text.find("failed trial 1 (forced): ");
  ASSERT_NE(at, std::string::npos);
  std::string line = text.substr(at + 25, text.find('\n', at) - at - 25);
  RawInstance back = parse_instance_text(line);
  EXPECT_EQ(to_json(back), to_json(s.trials[1].instance));
}

TEST_F(Cli, GalleryWritesSevenPaths) {
  EXPECT_EQ(run({"gallery", "--svg", path("g.svg")}).code, 0);
  EXPECT_EQ(count(slurp(path("g.svg")), "<path"), 7u);
  EXPECT_EQ(run({"gallery", "--svg", path("no/such/dir/g.svg")}).code, 1);
}

}  // namespace
}  // namespace mg
