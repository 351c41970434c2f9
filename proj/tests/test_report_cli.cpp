#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ncres/report.hpp"

using namespace ncres;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "ncres");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

} // namespace

TEST(ReportCli, TheoremOneAtMOneIsAllZero) {
  const CliRun r = cli({"--theorem", "1", "--m-min", "1", "--m-max", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["schema"], "ncres-report/1");
  ASSERT_EQ(j["theorems"].size(), 1u);
  EXPECT_TRUE(j["theorems"][0]["totals"].empty());
  for (const auto& c : j["theorems"][0]["cases"]) EXPECT_TRUE(c["reduced"].empty());
}

TEST(ReportCli, SecondTheoremCaseFourShowsSubterms) {
  const CliRun r = cli({"--theorem", "2", "--case", "IV", "--m-max", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  ASSERT_EQ(j["theorems"].size(), 2u);
  for (const auto& t : j["theorems"]) {
    ASSERT_EQ(t["cases"].size(), 1u);
    const Json& subs = t["cases"][0]["subterms"];
    ASSERT_EQ(subs.size(), 3u);
    EXPECT_EQ(subs[0]["name"], "A1");
    EXPECT_EQ(subs[1]["name"], "A2");
    EXPECT_EQ(subs[2]["name"], "A3");
    EXPECT_TRUE(subs[1]["reduced"].empty());
  }
}

TEST(ReportCli, ReportsAreByteIdentical) {
  const CliRun a = cli({"--theorem", "all", "--oracle", "both", "--m-max", "2"});
  const CliRun b = cli({"--theorem", "all", "--oracle", "both", "--m-max", "2"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(Json::parse(a.out)["config"]["seed"], 20240607);
}

TEST(ReportCli, SeedChangesOnlyQuadratureSamples) {
  const Json a = Json::parse(cli({"--theorem", "3", "--m-max", "2", "--seed", "1"}).out);
  const Json b = Json::parse(cli({"--theorem", "3", "--m-max", "2", "--seed", "2"}).out);
  EXPECT_NE(a, b);
  EXPECT_EQ(a["theorems"][1]["totals"], b["theorems"][1]["totals"]);
}

TEST(ReportCli, MarkdownMirrorsTheReport) {
  const CliRun r = cli({"--theorem", "2", "--case", "IV", "--m-max", "1", "--format", "markdown"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("# Boundary residue verification report"), std::string::npos);
  EXPECT_NE(r.out.find("## T2, m = 1"), std::string::npos);
  EXPECT_NE(r.out.find("| IV | A2 | 0 |"), std::string::npos);
  EXPECT_NE(r.out.find("## Closed-form constants"), std::string::npos);
}

TEST(ReportCli, WritesFileAtomically) {
  const auto dir = std::filesystem::temp_directory_path() / ("ncres_cli_test_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const auto path = dir / "report.json";
  const CliRun r = cli({"--theorem", "1", "--m-max", "1", "--out", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(Json::parse(slurp(path))["schema"], "ncres-report/1");
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir)) ++files;
  EXPECT_EQ(files, 1u);
  std::filesystem::remove_all(dir);
}

TEST(ReportCli, UsageErrorsExitWithTwo) {
  EXPECT_EQ(cli({"--bogus"}).code, 2);
  EXPECT_EQ(cli({"--theorem", "4"}).code, 2);
  EXPECT_EQ(cli({"--case", "VI"}).code, 2);
  EXPECT_EQ(cli({"--m-min", "0"}).code, 2);
  EXPECT_EQ(cli({"--m-min", "3", "--m-max", "2"}).code, 2);
  EXPECT_EQ(cli({"--tolerance", "0"}).code, 2);
  EXPECT_EQ(cli({"--oracle", "guess"}).code, 2);
  EXPECT_EQ(cli({"--format", "xml"}).code, 2);
  EXPECT_EQ(cli({"--m-max", "1", "--out", "/nonexistent-dir/report.json"}).code, 2);
}

TEST(ReportCli, HelpExitsWithZero) {
  const CliRun r = cli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("--theorem"), std::string::npos);
}

TEST(ReportCli, ErrataAndManifestPresent) {
  const Json j = Json::parse(cli({"--theorem", "1", "--m-max", "2"}).out);
  EXPECT_EQ(j["errata"].size(), 23u * 2u);
  EXPECT_FALSE(j["manifest"].empty());
  EXPECT_EQ(j["projection_fixtures"].size(), 2u * projection_fixtures().size());
  EXPECT_TRUE(j["summary"]["oracles_pass"].get<bool>());
}
