#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "covspec_cli/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = covspec::cli::cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

std::filesystem::path scratch(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("covspec_cli_test_" + name);
  std::filesystem::remove_all(p);
  return p;
}

}  // namespace

TEST(Cli, NoArgumentsIsUsageError) {
  auto r = run({});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("graph"), std::string::npos);
}

TEST(Cli, UnknownSubcommand) {
  auto r = run({"bogus"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("unknown subcommand 'bogus'"), std::string::npos);
  EXPECT_NE(r.err.find("torus"), std::string::npos);
}

TEST(Cli, HelpExitsCleanly) {
  auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("family"), std::string::npos);
}

TEST(Cli, BadOptionIsUsageError) {
  EXPECT_EQ(run({"torus", "--frobnicate"}).code, 2);
  EXPECT_EQ(run({"torus"}).code, 2);
  EXPECT_EQ(run({"torus", "--basis", "[[1,0],[2,0]]"}).code, 2);
  EXPECT_EQ(run({"torus", "--basis", "[[1,0],"}).code, 2);
}

TEST(Cli, RhombicTorusJson) {
  auto r = run({"torus", "--rhombic", "1.0", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  const auto& entries = j.at("spectrum").at("entries");
  ASSERT_EQ(entries.size(), 2u);
  EXPECT_NEAR(entries[0].at("value").at("float").get<double>(), std::sqrt(2 - 2 * std::cos(1.0)) / 2, 1e-12);
}

TEST(Cli, DiagonalTorusCsv) {
  auto r = run({"torus", "--basis", "[[3,0],[0,2]]", "--csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "value,mult,unit,exact\n1,1,1,1\n1.5,1,1,3/2\n");
}

TEST(Cli, TorusDeltaSublattice) {
  auto r = run({"torus", "--basis", "[[3,0],[0,2]]", "--delta", "6/5"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("rank"), 1);
  EXPECT_FALSE(j.at("whole").get<bool>());
}

TEST(Cli, TodenseCsvRows) {
  auto r = run({"family", "todense", "--j", "4", "--csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(count_lines(r.out), 17);
  EXPECT_EQ(r.out.rfind("value,mult,unit,exact\n", 0), 0u);
}

TEST(Cli, FamilyOutputFiles) {
  auto dir = scratch("family");
  auto r = run({"family", "torus_collapse", "--from", "2", "--to", "4", "--out", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  for (auto name : {"spectra.json", "convergence.csv", "gaps.csv"}) EXPECT_TRUE(std::filesystem::exists(dir / name));
  std::ifstream conv(dir / "convergence.csv");
  std::string text((std::istreambuf_iterator<char>(conv)), {});
  EXPECT_EQ(text, "index,d_H\n2,0.25\n3,0.166666666667\n4,0.125\n");
  std::filesystem::remove_all(dir);
}

TEST(Cli, UnknownFamily) { EXPECT_EQ(run({"family", "nothing"}).code, 2); }

TEST(Cli, Heisenberg) {
  auto r = run({"heisenberg", "--params", R"({"n":2,"r":[2,10],"s":[10,1],"c":1,"a":[0.125,0.5]})", "--compare",
                R"({"n":2,"r":[20,1],"s":[10,1],"c":1,"a":["1/8","1/2"]})"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("regime"), "central_included");
  EXPECT_NEAR(j.at("m_central").get<double>(), std::sqrt(M_PI / 2 * (1 - M_PI / 8)), 1e-12);
  EXPECT_TRUE(j.at("compare").at("laplace_isospectral").get<bool>());
}

TEST(Cli, HeisenbergMissingParams) { EXPECT_EQ(run({"heisenberg"}).code, 2); }

TEST(Cli, SunadaPreset) {
  auto r = run({"sunada", "--preset", "komatsu-p3"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.at("komatsu").get<bool>());
  EXPECT_EQ(j.at("nontrivial_count"), nlohmann::json::array({26, 26}));
  EXPECT_EQ(j.at("groups")[0].at("min_generators"), 3);
  EXPECT_EQ(j.at("groups")[1].at("min_generators"), 2);
}

TEST(Cli, SunadaTriple) {
  // Z/2 x Z/2 acting regularly; two different order-2 subgroups are not
  // conjugate and fail the condition.
  auto r = run({"sunada", "--triple", R"j({"N":4,"G_gens":["(1 2)(3 4)","(1 3)(2 4)"],"H1":["(1 2)(3 4)"],"H2":["(1 3)(2 4)"]})j"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_FALSE(nlohmann::json::parse(r.out).at("holds").get<bool>());
}

TEST(Cli, GraphBouquet) {
  auto r = run({"graph", "--bouquet", "1,3/2,2", "--csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "value,mult,unit,exact\n0.5,1,1,1/2\n0.75,1,1,3/4\n1,1,1,1\n");
}

TEST(Cli, GraphDeckAndWitness) {
  auto r = run({"graph", "--bouquet", "1,2", "--delta", "3/4", "--deck", "--lift", "g1"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("lift").at("result"), "closed");
  EXPECT_EQ(j.at("deck_group").at("kind"), "free_rank");

  r = run({"graph", "--bouquet", "1,2", "--delta", "1/2", "--witness", "--lift", "g1"});
  ASSERT_EQ(r.code, 0) << r.err;
  j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("lift").at("result"), "open");
  EXPECT_EQ(j.at("witness"), "g1");
}

TEST(Cli, GraphDeltaNeedsQuery) {
  EXPECT_EQ(run({"graph", "--bouquet", "1,2", "--delta", "1"}).code, 2);
  EXPECT_EQ(run({"graph", "--bouquet", "1,2", "--deck"}).code, 2);
}

TEST(Cli, GraphInputFile) {
  auto dir = scratch("graph");
  std::filesystem::create_directories(dir);
  const auto file = dir / "theta.json";
  std::ofstream(file) << R"({"vertices":2,"edges":[{"u":0,"v":1,"len":1},{"u":0,"v":1,"len":2},{"u":0,"v":1,"len":4}]})";
  auto r = run({"graph", "--input", file.string(), "--csv", "--out", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "value,mult,unit,exact\n1.5,1,1,3/2\n2.5,1,1,5/2\n");
  EXPECT_TRUE(std::filesystem::exists(dir / "spectra.json"));
  std::filesystem::remove_all(dir);
}

TEST(Cli, MaxCosetsEnvironment) {
  ::setenv("COVSPEC_MAX_COSETS", "zero", 1);
  EXPECT_EQ(run({"graph", "--bouquet", "1,2", "--delta", "3/4", "--deck"}).code, 2);
  ::setenv("COVSPEC_MAX_COSETS", "1000", 1);
  EXPECT_EQ(run({"graph", "--bouquet", "1,2", "--delta", "3/4", "--deck"}).code, 0);
  ::unsetenv("COVSPEC_MAX_COSETS");
}
