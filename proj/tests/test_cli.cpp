#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

const std::string kCli = DETLAB_CLI;
const std::string kData = DETLAB_DATA;

struct Output {
  int code = -1;
  std::string out;
};

Output run(const std::string& args, const std::string& env = "") {
  Output r;
  std::string cmd = env + kCli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return kData + "/" + name; }

std::string temp_file(const std::string& name, const std::string& body) {
  std::string path = std::string(DETLAB_TMP) + "/" + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST(Cli, CheckExitCodes) {
  EXPECT_EQ(run("check good " + data("sqfr_n4_d2.mat")).code, 0);
  EXPECT_EQ(run("check good " + data("stgood_Z.mat")).code, 1);
  EXPECT_EQ(run("check standard " + data("stgood_Z.mat")).code, 0);
  EXPECT_EQ(run("check standard " + temp_file("empty.mat", "ring n=3 p=32003\n")).code, 3);
  EXPECT_EQ(run("check standard " + temp_file("bad.mat", "ring n=3\nx0 ; x9\n")).code, 3);
  EXPECT_EQ(run("check standard " + data("does_not_exist.mat")).code, 4);
  EXPECT_EQ(run("check frobnicate " + data("stgood_Z.mat")).code, 3);
  EXPECT_EQ(run("check acm " + data("veronese.ideal")).code, 0);
  EXPECT_EQ(run("check acm " + temp_file("skew.ideal", "ring n=4\nx0*x2\nx0*x3\nx1*x2\nx1*x3\n")).code, 1);
  EXPECT_EQ(run("check one-generic " + data("stgood_Z.mat")).code, 1);
  EXPECT_EQ(run("check one-generic --mode generalized " + temp_file("cat.mat", "ring n=4\nx0;x1;x2\nx1;x2;x3\n")).code,
            2);
}

TEST(Cli, ComputeExamples) {
  auto mu = run("compute mu --square " + data("verodeform_Is.ideal"));
  EXPECT_EQ(mu.code, 0);
  EXPECT_EQ(mu.out, "55\n");
  auto dm = run("compute degree-matrix " + data("stgood_M.mat"));
  EXPECT_EQ(dm.out, "1 1\n1 1\n1 1\n1 1\n");
  auto betti = run("compute betti --json " + data("veronese.ideal"));
  auto j = nlohmann::json::parse(betti.out);
  EXPECT_EQ(j["result"]["ranks"], (std::vector<int>{6, 8, 3}));
  EXPECT_EQ(j["schema_version"], 1);
  auto sec = run("compute section --hyperplane x4 --json " + data("stgood_M.mat"));
  EXPECT_EQ(nlohmann::json::parse(sec.out)["result"]["saturated"], true);
  EXPECT_EQ(run("compute hilbert " + data("veronese.ideal")).code, 0);
  EXPECT_EQ(run("compute minors --size 1 " + data("stgood_M.mat")).code, 0);
  EXPECT_EQ(run("compute artinian " + data("veronese.ideal")).code, 0);
  EXPECT_EQ(run("compute cone-family --s 0 " + data("veronese.ideal")).code, 0);
  EXPECT_EQ(run("compute bdl " + data("n1curve_n3.ideal") + " " + data("gensect_S_n3.ideal") + " --form x1").code, 0);
  EXPECT_EQ(run("compute bdl " + data("n1curve_n3.ideal")).code, 3);
  EXPECT_EQ(run("compute bdl " + data("gensect_S_n3.ideal") + " " + data("n1curve_n3.ideal") + " --form x1").code, 4);
}

TEST(Cli, JsonIsDeterministicModuloTiming) {
  auto strip = [](std::string s) {
    auto j = nlohmann::json::parse(s);
    j.erase("timing");
    return j.dump();
  };
  std::string args = "check good --json --seed 3 " + data("sqfr_n4_d2.mat");
  auto a = run(args), b = run(args);
  EXPECT_EQ(strip(a.out), strip(b.out));
  auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["seed"], 3);
  EXPECT_EQ(j["field"], "F_32003");
  EXPECT_EQ(j["command"][0], "detlab");
}

TEST(Cli, SeedFromEnvironment) {
  auto r = run("check good --json " + data("sqfr_n4_d2.mat"));
  EXPECT_EQ(nlohmann::json::parse(r.out)["seed"], 1);
  auto e = run("check good --json " + data("sqfr_n4_d2.mat"), "DETLAB_SEED=9 ");
  EXPECT_EQ(nlohmann::json::parse(e.out)["seed"], 9);
}

TEST(Cli, ReproduceAndConstruct) {
  EXPECT_EQ(run("reproduce stgood").code, 0);
  EXPECT_EQ(run("reproduce verodeform --seed 1").code, 0);
  EXPECT_EQ(run("reproduce n+1curve --n 3").code, 0);
  EXPECT_EQ(run("reproduce no-such-example").code, 3);
  EXPECT_EQ(run("reproduce").code, 3);
  auto c = run("construct vero");
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("ring n=6 p=32003"), std::string::npos);
  EXPECT_EQ(run("construct vero --matrix --field 65537").out.find("p=65537") != std::string::npos, true);
  EXPECT_EQ(run("construct deg9gen10 --matrix").code, 4);
  EXPECT_EQ(run("construct nope").code, 4);
}
