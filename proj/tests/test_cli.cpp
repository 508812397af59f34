#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tropica_cli/cli.hpp"

using namespace tropica::cli;

namespace {

struct Captured {
  int status;
  std::string out;
  std::string err;
};

Captured invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "tropica");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::filesystem::path temp_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("tropica_test_" + name + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

int shell(const std::string& args) {
  const std::string cmd = std::string(TROPICA_BIN) + " " + args + " >/dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

}  // namespace

TEST(Cli, DoubleHurwitzText) {
  const auto r = invoke({"double-hurwitz", "--genus", "1", "--mu", "3", "--nu", "3"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "2\n");
}

TEST(Cli, DoubleHurwitzJson) {
  const auto r = invoke({"--json", "double-hurwitz", "--genus", "0", "--mu", "2,1", "--nu", "2,1"});
  ASSERT_EQ(r.status, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["total"], "4/1");
  EXPECT_EQ(doc["s"], 2);
  EXPECT_EQ(doc["covers"].size(), 2u);
  EXPECT_EQ(doc["schemaVersion"], 1);
  for (const auto& c : doc["covers"]) EXPECT_TRUE(c["graph"].get<std::string>().starts_with("V "));
}

TEST(Cli, ModuliTypes) {
  const auto r = invoke({"moduli", "--genus", "0", "--marks", "4"});
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(r.out.starts_with("4 types\n"));
  const auto j = invoke({"moduli", "--genus", "1", "--marks", "2", "--poset", "--json"});
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["types"].size(), 5u);
  EXPECT_EQ(doc["foldedMaximal"], 1);
  EXPECT_FALSE(doc["poset"].empty());
}

TEST(Cli, EllipticAndOracle) {
  const auto e = invoke({"elliptic", "--degree", "4", "--genus", "2"});
  EXPECT_EQ(e.status, 0);
  const auto o = invoke({"oracle", "elliptic", "--degree", "4", "--genus", "2"});
  EXPECT_EQ(o.status, 0);
  EXPECT_EQ(e.out, o.out);
  const auto l = invoke({"elliptic", "--degree", "3", "--genus", "2", "--list-covers", "--json"});
  ASSERT_EQ(l.status, 0);
  const auto doc = nlohmann::json::parse(l.out);
  EXPECT_EQ(doc["total"], doc["directTotal"]);
}

TEST(Cli, ChambersCsv) {
  const auto r = invoke({"--csv", "chambers", "--lmu", "2", "--lnu", "2", "--verify"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("++,"), std::string::npos);
  EXPECT_NE(r.out.find("2*mu1"), std::string::npos);
}

TEST(Cli, GraphComplexDump) {
  const auto dir = temp_dir("gc");
  const auto path = (dir / "d.txt").string();
  const auto r = invoke({"--force", "graph-complex", "--genus", "5", "--edges", "11", "--dump-matrix", path});
  EXPECT_EQ(r.status, 0);
  std::ifstream in(path);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    long row, col;
    std::string value;
    ASSERT_TRUE(ss >> row >> col >> value);
    EXPECT_NE(value.find('/'), std::string::npos);
    ++lines;
  }
  EXPECT_GT(lines, 0);
  std::filesystem::remove_all(dir);
}

TEST(Cli, FeynmanFromFile) {
  const auto dir = temp_dir("feyn");
  const auto path = (dir / "theta.txt").string();
  std::ofstream(path) << "V 2 E 3 L 0\ne 0 1\ne 0 1\ne 0 1\n";
  const auto r = invoke({"--json", "feynman", "--graph", path, "--order", "2,1", "--dmax", "2"});
  ASSERT_EQ(r.status, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["order"], (std::vector<int>{2, 1}));
  EXPECT_EQ(doc["coarse"].size(), 3u);
  const auto bad = invoke({"feynman", "--graph", path, "--order", "1,1", "--dmax", "2"});
  EXPECT_EQ(bad.status, 2);
  std::filesystem::remove_all(dir);
}

TEST(Cli, MirrorCheck) {
  const auto r = invoke({"--json", "mirror-check", "--genus", "2", "--dmax", "3"});
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(nlohmann::json::parse(r.out)["allAgree"].get<bool>());
}

TEST(Cli, ExitStatuses) {
  EXPECT_EQ(invoke({"double-hurwitz", "--genus", "x", "--mu", "3", "--nu", "3"}).status, 2);
  EXPECT_EQ(invoke({"double-hurwitz", "--genus", "0", "--mu", "3", "--nu", "2"}).status, 2);
  EXPECT_EQ(invoke({"double-hurwitz", "--genus", "0", "--mu", "3"}).status, 2);
  EXPECT_EQ(invoke({"frobnicate"}).status, 2);
  EXPECT_EQ(invoke({"oracle", "elliptic", "--degree", "7", "--genus", "2"}).status, 3);
  EXPECT_EQ(invoke({"moduli", "--genus", "0", "--marks", "10"}).status, 3);
  EXPECT_EQ(invoke({"graph-complex", "--genus", "5"}).status, 3);
  EXPECT_EQ(invoke({"--json", "--csv", "moduli", "--genus", "0", "--marks", "4"}).status, 2);
  EXPECT_EQ(invoke({"--help"}).status, 0);
}

TEST(Cli, DispatchRejectsUnknownParameters) {
  RunConfig c;
  c.command = "moduli";
  c.params = {{"genus", "0"}, {"marks", "4"}, {"colour", "red"}};
  EXPECT_EQ(dispatch(c).status, 2);
  c.params.erase("colour");
  EXPECT_EQ(dispatch(c).status, 0);
  c.threads = -1;
  EXPECT_EQ(dispatch(c).status, 2);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args = {"--json", "chambers", "--lmu", "2", "--lnu", "3"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
  const std::vector<std::string> threaded = {"--json", "--threads", "1", "chambers", "--lmu", "2", "--lnu", "3"};
  EXPECT_EQ(invoke(args).out, invoke(threaded).out);
}

TEST(Cli, CacheHitMatchesMiss) {
  const auto dir = temp_dir("cache");
  RunConfig c;
  c.command = "elliptic";
  c.params = {{"degree", "3"}, {"genus", "2"}, {"per-graph", "true"}};
  c.cache_dir = dir;
  for (auto format : {OutputFormat::text, OutputFormat::json, OutputFormat::csv}) {
    c.format = format;
    const auto first = dispatch(c);
    const auto second = dispatch(c);
    EXPECT_TRUE(second.cache_hit);
    EXPECT_EQ(first.output, second.output);
    RunConfig uncached = c;
    uncached.cache_dir.reset();
    EXPECT_EQ(dispatch(uncached).output, first.output);
  }
  EXPECT_NE(cache_key(c).find(c.command), std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST(Cli, BinaryExitCodes) {
  EXPECT_EQ(shell("double-hurwitz --genus 1 --mu 3 --nu 3"), 0);
  EXPECT_EQ(shell("double-hurwitz --genus 1 --mu 3"), 2);
  EXPECT_EQ(shell("oracle line --genus 0 --mu 7 --nu 7"), 3);
  EXPECT_EQ(shell("--force oracle line --genus 0 --mu 7 --nu 4,3"), 0);
}
