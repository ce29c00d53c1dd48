#include "gaussdistill/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

using namespace gaussdistill;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

// Value printed after "key = " on its own line.
double printed(const std::string& text, const std::string& key) {
  const auto at = text.find("\n" + key + " = ");
  if (at == std::string::npos) return NAN;
  return std::stod(text.substr(at + key.size() + 4));
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("gaussdistill_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

}  // namespace

TEST(CliEval, VacuumHasNoEntanglement) {
  const auto r = run_cli({"eval", "--a", "1", "--c", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(printed(r.out, "E_N"), 0.0);
  EXPECT_EQ(printed(r.out, "f"), 1.0);
}

TEST(CliEval, SqueezedVacuum) {
  const auto r = run_cli({"eval", "--r", "0.5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NEAR(printed(r.out, "E_N"), 1.442695, 1e-6);
  EXPECT_NEAR(printed(r.out, "f"), std::exp(-2.0), 1e-11);
}

TEST(CliEval, UnphysicalStateIsAUsageError) {
  const auto r = run_cli({"eval", "--a", "2", "--c", "2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("sqrt(a^2 - 1)"), std::string::npos);
  EXPECT_EQ(run_cli({"eval"}).code, 2);
  EXPECT_EQ(run_cli({"eval", "--r", "0.5", "--a", "2"}).code, 2);
}

TEST(CliUsage, UnknownCommandsAndHelp) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--samples", "abc"}).code, 2);
  const auto help = run_cli({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("verify"), std::string::npos);
}

TEST_F(CliFiles, EvalJson) {
  ASSERT_EQ(run_cli({"eval", "--a", "2", "--c", "1.5", "--out", path("e.json")}).code, 0);
  const auto j = nlohmann::json::parse(slurp(path("e.json")));
  EXPECT_NEAR(j.at("log_negativity").get<double>(), 1.0, 1e-12);
  EXPECT_EQ(j.at("covariance").at("entries").size(), 16u);
}

TEST_F(CliFiles, VerifyCsvIsReproducible) {
  const std::vector<std::string> args = {"verify", "--samples", "300", "--seed", "9", "--out",
                                         path("a.csv")};
  const auto first = run_cli(args);
  EXPECT_EQ(first.code, 0);
  EXPECT_EQ(first.out.rfind("PASS", 0), 0u);
  auto again = args;
  again.back() = path("b.csv");
  EXPECT_EQ(run_cli(again).code, 0);
  const auto csv = slurp(path("a.csv"));
  EXPECT_EQ(csv, slurp(path("b.csv")));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 301);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "seed,a,c,en_initial,en_final,det_final,det_a,det_b,f_final,g_final,margin");
}

TEST_F(CliFiles, VerifyJsonSummary) {
  ASSERT_EQ(run_cli({"verify", "--samples", "200", "--format", "json", "--out", path("s.json")}).code,
            0);
  const auto j = nlohmann::json::parse(slurp(path("s.json")));
  EXPECT_EQ(j.at("trials").get<int>(), 200);
  EXPECT_TRUE(j.at("pass").get<bool>());
  EXPECT_LE(j.at("max_margin").get<double>(), j.at("tolerance").get<double>());
}

TEST_F(CliFiles, UnwritableOutputIsAnIoError) {
  const auto r = run_cli({"verify", "--samples", "5", "--out", path("missing/dir/x.csv")});
  EXPECT_EQ(r.code, 2);
}

TEST(CliVerify, BadCounts) {
  EXPECT_EQ(run_cli({"verify", "--samples", "0"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--samples", "-4"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--format", "xml"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--squeeze-min", "3", "--squeeze-max", "2"}).code, 2);
}

TEST(CliChecks, ThreePassLines) {
  const auto r = run_cli({"check-lemmas", "--trials", "200"});
  EXPECT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  int passes = 0;
  while (std::getline(in, line)) passes += line.rfind("PASS", 0) == 0;
  EXPECT_EQ(passes, 3);
  EXPECT_EQ(run_cli({"check-lemmas", "--trials", "-1"}).code, 2);
}

TEST_F(CliFiles, OptimizeReportsTwentyParameters) {
  const auto r = run_cli({"optimize", "--a", "2", "--c", "1.5", "--restarts", "50", "--seed", "1",
                          "--out", path("o.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("PASS", 0), 0u);
  const auto j = nlohmann::json::parse(slurp(path("o.json")));
  EXPECT_EQ(j.at("params").size(), 20u);
  EXPECT_LE(std::abs(j.at("best_margin").get<double>()), 1e-5);
  EXPECT_EQ(run_cli({"optimize", "--a", "2", "--restarts", "0"}).code, 2);
}
