#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "amdeg/serialize.hpp"

namespace {

struct CliRun {
  int code;
  std::string out;
};

// Runs the CLI with stderr discarded and returns its exit code and stdout.
CliRun cli(const std::string& args) {
  const std::string cmd = std::string(AMDEG_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r{-1, ""};
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& body) {
  auto path = std::filesystem::temp_directory_path() / ("amdeg_cli_" + std::to_string(::getpid()) + "_" + name);
  std::ofstream(path) << body;
  return path.string();
}

amdeg::Json json_of(const std::string& args) {
  CliRun r = cli("--json " + args);
  EXPECT_EQ(r.code, 0) << args;
  return amdeg::Json::parse(r.out);
}

}  // namespace

TEST(Cli, ConstructScroll) {
  CliRun r = cli("construct 'S(3)'");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("3 generators in 4 variables"), std::string::npos) << r.out;
}

TEST(Cli, ConstructVeronese) {
  amdeg::Json j = json_of("construct veronese");
  EXPECT_EQ(j.at("num_vars"), 6);
  EXPECT_EQ(j.at("generators").size(), 6u);
}

TEST(Cli, BadSpecsExitTwo) {
  EXPECT_EQ(cli("construct 'S()'").code, 2);
  EXPECT_EQ(cli("construct 'S(1,2)'").code, 2);
  EXPECT_EQ(cli("construct nonsense").code, 2);
  EXPECT_EQ(cli("analyze 'project(S(3), (0:1:0))'").code, 2);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(cli("").code, 2);
  EXPECT_EQ(cli("frobnicate").code, 2);
  EXPECT_EQ(cli("--prime 32004 construct 'S(3)'").code, 2);
  EXPECT_EQ(cli("--prime 2 construct 'S(3)'").code, 2);
  EXPECT_EQ(cli("--jobs 0 reproduce tables-c2").code, 2);
  EXPECT_EQ(cli("--help").code, 0);
}

TEST(Cli, AnalyzeIdealFile) {
  std::string path = write_temp("good.txt", "ring 4\n# twisted cubic\nx0*x2 - x1^2\nx0*x3 - x1*x2\n\nx1*x3 - x2^2\n");
  CliRun r = cli("analyze " + path);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("degree class minimal"), std::string::npos) << r.out;
  std::filesystem::remove(path);
}

TEST(Cli, MalformedFilesExitTwo) {
  for (const auto& [name, body] : std::vector<std::pair<std::string, std::string>>{
           {"noring.txt", "x0*x1\n"},
           {"badpoly.txt", "ring 3\nx0 +* x1\n"},
           {"badvar.txt", "ring 3\nx7^2\n"},
           {"inhom.txt", "ring 3\nx0^2 + x1\n"},
           {"badring.txt", "ring 99\nx0\n"},
       }) {
    std::string path = write_temp(name, body);
    EXPECT_EQ(cli("analyze " + path).code, 2) << name;
    std::filesystem::remove(path);
  }
  EXPECT_EQ(cli("analyze /nonexistent/ideal.txt").code, 2);
}

TEST(Cli, PointOnVarietyExitsThree) {
  EXPECT_EQ(cli("analyze 'project(S(3), (1:0:0:0))'").code, 3);
  EXPECT_EQ(cli("construct 'project(S(4), (0:0:0:0:1))'").code, 3);
}

TEST(Cli, AnalyzeOcticThirdCenter) {
  amdeg::Json j = json_of("analyze 'project(S(8), (0:0:0:0:1:0:0:0:0))'");
  const auto& rows = j.at("report").at("betti").at("rows");
  EXPECT_EQ(rows.at(0), amdeg::Json({19, 57, 69, 34, 5, 0, 0}));
  EXPECT_EQ(rows.at(1), amdeg::Json({0, 0, 5, 20, 21, 8, 1}));
  for (const auto& c : j.at("report").at("checks")) EXPECT_TRUE(c.at("passed").get<bool>()) << c.dump();
}

TEST(Cli, AnalyzeSegre) {
  CliRun r = cli("analyze segre22");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("case 2.4a"), std::string::npos) << r.out;
}

TEST(Cli, AnalyzeExitsOneWhenACheckFails) {
  // Double line with an embedded point: degree 4 in P^3, so almost minimal
  // by the numbers, but not integral, and its quadric count is off.
  CliRun r = cli("analyze 'ideal(4; x0^3; x0^2*x1; x0^2*x2; x0*x1^2; x1^3; x1^2*x2)'");
  EXPECT_EQ(r.code, 1) << r.out;
  EXPECT_NE(r.out.find("FAIL  quadric_count"), std::string::npos) << r.out;
}

TEST(Cli, ReproduceTargets) {
  CliRun r = cli("reproduce tables-c4");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("1/1 items passed"), std::string::npos) << r.out;
  EXPECT_EQ(cli("reproduce ex4.9").code, 2);
  EXPECT_EQ(cli("reproduce").code, 2);
}

TEST(Cli, ReproduceOcticTable) {
  amdeg::Json j = json_of("reproduce ex4.1");
  EXPECT_TRUE(j.at("passed").get<bool>());
  EXPECT_EQ(j.at("items").size(), 3u);
}

TEST(Cli, Enumerate) {
  EXPECT_EQ(json_of("enumerate 2").at("rows").size(), 5u);
  amdeg::Json c4 = json_of("enumerate 4");
  EXPECT_EQ(c4.at("rows").size(), 11u);
  int top = 0;
  for (const auto& row : c4.at("rows")) top = std::max(top, row.at("dim_x").get<int>());
  EXPECT_EQ(top, 6);
  EXPECT_EQ(json_of("enumerate 1").at("rows").size(), 3u);
  EXPECT_EQ(cli("enumerate 0").code, 2);
}

TEST(Cli, JsonSchemas) {
  amdeg::Json a = json_of("analyze 'project(S(4), (0:0:1:0:0))'");
  for (const char* k : {"input", "prime", "seed", "notes", "report"}) EXPECT_TRUE(a.contains(k)) << k;
  const auto& rep = a.at("report");
  for (const char* k : {"num_vars", "invariants", "betti", "hilbert_series", "degree_class", "theorem_case", "checks",
                        "degenerate", "quadrics", "cubics", "acm", "gorenstein"})
    EXPECT_TRUE(rep.contains(k)) << k;
  for (const char* k : {"rows", "convention"}) EXPECT_TRUE(rep.at("betti").contains(k)) << k;
  for (const char* k : {"numerator", "den_exp", "reduced_numerator", "reduced_den_exp"})
    EXPECT_TRUE(rep.at("hilbert_series").contains(k)) << k;
  for (const char* k : {"dim", "codim", "degree", "depth", "codepth", "regularity"})
    EXPECT_TRUE(rep.at("invariants").contains(k)) << k;

  amdeg::Json c = json_of("construct 'S(2,1)'");
  for (const char* k : {"spec", "num_vars", "prime", "generators", "display_names"}) EXPECT_TRUE(c.contains(k)) << k;

  amdeg::Json r = json_of("reproduce tables-c2");
  for (const char* k : {"target", "prime", "seed", "items", "passed"}) EXPECT_TRUE(r.contains(k)) << k;
  for (const char* k : {"id", "passed", "failures", "partition_rows"}) EXPECT_TRUE(r.at("items").at(0).contains(k)) << k;

  amdeg::Json e = json_of("enumerate 3");
  for (const char* k : {"parts", "type", "r_plus_1", "dim_x"}) EXPECT_TRUE(e.at("rows").at(0).contains(k)) << k;
}

TEST(Cli, DeterministicForFixedSeed) {
  CliRun a = cli("--json --seed 4 reproduce thm2.1");
  CliRun b = cli("--json --seed 4 reproduce thm2.1");
  ASSERT_EQ(a.code, 0);
  auto strip = [](amdeg::Json j) {
    for (auto& it : j.at("items")) it.erase("seconds");
    return j;
  };
  EXPECT_EQ(strip(amdeg::Json::parse(a.out)), strip(amdeg::Json::parse(b.out)));
  CliRun c = cli("--seed 4 construct 'project(veronese, random)'");
  CliRun d = cli("--seed 4 construct 'project(veronese, random)'");
  EXPECT_EQ(c.out, d.out);
}

TEST(Cli, ParallelJobsKeepManifestOrder) {
  auto ids = [](const CliRun& r) {
    std::vector<std::string> out;
    for (const auto& it : amdeg::Json::parse(r.out).at("items")) out.push_back(it.at("id"));
    return out;
  };
  CliRun serial = cli("--json reproduce thm2.2");
  CliRun parallel = cli("--json --jobs 3 reproduce thm2.2");
  EXPECT_EQ(ids(serial), ids(parallel));
}

TEST(Cli, OtherPrime) {
  CliRun r = cli("--prime 31991 reproduce thm2.1");
  EXPECT_EQ(r.code, 0) << r.out;
}
