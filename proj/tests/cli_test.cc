#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "json.hpp"
#include "pencilgraph/golden.h"

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun Cli(const std::string& args) {
  const char* bin = std::getenv("PENCILGRAPH_CLI");
  EXPECT_NE(bin, nullptr) << "PENCILGRAPH_CLI is not set";
  CliRun r;
  if (!bin) return r;
  const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  char buf[1 << 16];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

TEST(CliTest, BuildJson) {
  const CliRun r = Cli("build -r 3 -s 1");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["vertices"].size(), 42u);
  EXPECT_EQ(j["adjacency"].size(), 42u);
  EXPECT_EQ(j["display"][0], "(1,23,45,67)");
}

TEST(CliTest, BuildDotAndText) {
  const CliRun dot = Cli("build -r 3 -s 1 --format dot");
  ASSERT_EQ(dot.status, 0);
  EXPECT_EQ(dot.out.rfind("graph G {", 0), 0u);
  EXPECT_NE(dot.out.find("0 -- 1;"), std::string::npos);
  const CliRun text = Cli("build -r 4 -s 1 --full --format text");
  ASSERT_EQ(text.status, 0);
  EXPECT_NE(text.out.find("75600 vertices"), std::string::npos);
  EXPECT_NE(text.out.find("30 component(s)"), std::string::npos);
}

TEST(CliTest, CensusCsvMatchesTable) {
  const CliRun r = Cli("census --rho 4");
  ASSERT_EQ(r.status, 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "super_type,distance,count");
  std::set<std::string> got, want;
  while (std::getline(in, line)) got.insert(line);
  for (const auto& row : pg::Golden()["table1"]["4"]) {
    want.insert(row["st"].get<std::string>() + "," + std::to_string(row["d"].get<int>()) + "," +
                std::to_string(row["sum"].get<uint64_t>()));
  }
  EXPECT_EQ(got, want);
}

TEST(CliTest, ReportIsGreen) {
  const CliRun r = Cli("report -r 4 -s 2");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["summary"]["fail"], 0);
  for (const auto& c : j["checks"]) EXPECT_EQ(c["status"], "pass") << c["name"];
}

TEST(CliTest, ReportIsDeterministic) {
  const CliRun a = Cli("report -r 3 -s 1 --threads 1");
  const CliRun b = Cli("report -r 3 -s 1 --threads 3");
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(CliTest, OtherVerbs) {
  EXPECT_EQ(Cli("verify -r 4 -s 2 --format text").status, 0);
  const CliRun aut = Cli("aut -r 3 -s 1");
  ASSERT_EQ(aut.status, 0);
  EXPECT_EQ(nlohmann::json::parse(aut.out)["order"], 24);
  const CliRun hrho = Cli("hrho --rho 3 --format text");
  ASSERT_EQ(hrho.status, 0);
  EXPECT_NE(hrho.out.find("J3 = (1372456)"), std::string::npos);
  const CliRun cfg = Cli("config -r 3 -s 1 --format text");
  ASSERT_EQ(cfg.status, 0);
  EXPECT_NE(cfg.out.find("(42_4, 42_4)"), std::string::npos);
  EXPECT_NE(cfg.out.find("duality: found"), std::string::npos);
  const CliRun levi = Cli("config -r 3 -s 1 --format dot");
  EXPECT_NE(levi.out.find("kind=line"), std::string::npos);
  const CliRun homog = Cli("homog -r 3 -s 1");
  ASSERT_EQ(homog.status, 0);
  EXPECT_TRUE(nlohmann::json::parse(homog.out)["h_property"]["pass"].get<bool>());
}

TEST(CliTest, OutFile) {
  const std::string path = ::testing::TempDir() + "census3.csv";
  ASSERT_EQ(Cli("census --rho 3 --out " + path).status, 0);
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(ss.str(), "super_type,distance,count\n(1),0,1\n(2)^2,1,21\n(3)^2,2,56\n"
                      "(2)(4),2,42\n(7),3,48\n");
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(Cli("").status, 2);
  EXPECT_EQ(Cli("bogus").status, 2);
  EXPECT_EQ(Cli("build -r 2 -s 1").status, 2);
  EXPECT_EQ(Cli("build -r 4 -s 3").status, 2);
  EXPECT_EQ(Cli("build").status, 2);
  EXPECT_EQ(Cli("build -r 3 -s 1 --format csv").status, 2);
  EXPECT_EQ(Cli("build -r 3 -s 1 --format xml").status, 2);
  EXPECT_EQ(Cli("census --rho 9").status, 2);
  EXPECT_EQ(Cli("census --rho 5").status, 2);
  EXPECT_EQ(Cli("build -r 4 -s 1 --cap-vertices 100").status, 2);
}

}  // namespace
