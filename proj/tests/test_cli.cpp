#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "potsum/cli/cli.hpp"
#include "potsum/cli/report.hpp"

using namespace potsum::cli;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "potsum");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

bool has_float(const nlohmann::json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured())
    for (const auto& item : j)
      if (has_float(item)) return true;
  return false;
}

std::string without_timing(const std::string& text) {
  const auto pos = text.rfind("done in ");
  return pos == std::string::npos ? text : text.substr(0, pos);
}

}  // namespace

TEST(Cli, SearchMatchesGoldenFile) {
  const CliRun r = run({"search", "--m", "4", "--limit", "1000", "--boundary", "appendix"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(without_timing(r.out), read_file(POTSUM_TESTDATA_DIR "/search_m4_limit1000.txt"));
  EXPECT_NE(r.out.find("done in "), std::string::npos);
}

TEST(Cli, TheoremBoundaryFlagsBoundaryOnlyHit) {
  const CliRun r = run({"search", "--m", "4", "--limit", "30", "--boundary", "theorem"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(without_timing(r.out), "4 4 2\n3 4 2 boundary-only\n25 4 13\n7 4 3\n7 4 4\n13 4 7\n19 4 10\n");
}

TEST(Cli, CsvAndJsonSearch) {
  const CliRun csv = run({"search", "--m", "4", "--limit", "10", "--format", "csv"});
  EXPECT_EQ(csv.out, "q,m,n,boundary_only\n4,4,2,0\n7,4,3,0\n7,4,4,0\n");
  const CliRun json = run({"search", "--m", "4", "--limit", "10", "--format", "json"});
  ASSERT_EQ(json.code, 0);
  const auto j = nlohmann::json::parse(json.out);
  EXPECT_EQ(j["hits"].size(), 3u);
  EXPECT_EQ(j["hits"][0]["q"], 4);
  EXPECT_EQ(j["parameters"]["boundary"], "appendix");
}

// Parse, rebuild the report, emit again: identical bytes.
TEST(Cli, JsonRoundTrip) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"search", "--m", "5", "--limit", "200", "--format", "json"},
           {"verify", "--suite", "charsums", "--qmax", "60", "--format", "json"},
           {"field", "--q", "49", "--show-potents", "9", "--format", "json"}}) {
    const CliRun r = run(args);
    const auto parsed = nlohmann::json::parse(r.out);
    EXPECT_EQ(parsed.dump(2) + "\n", r.out);
    EXPECT_EQ(render_json(report_from_json(parsed)), r.out) << args[0];
    EXPECT_FALSE(has_float(parsed)) << args[0];
  }
}

TEST(Cli, FieldDescription) {
  const CliRun r = run({"field", "--q", "7", "--show-potents", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("modulus x\n"), std::string::npos);
  EXPECT_NE(r.out.find("generator 3\n"), std::string::npos);
  EXPECT_NE(r.out.find("z=2 y=4"), std::string::npos);
  EXPECT_NE(r.out.find("C_4 = {0, 1, 2, 4}"), std::string::npos);
  EXPECT_NE(run({"field", "--q", "4"}).out.find("modulus x^2 + x + 1"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({"field", "--q", "6"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"search", "--boundary", "nowhere"}).code, kExitUsage);
  EXPECT_EQ(run({"search", "--m", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"search", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--qmax", "3"}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"field", "--q", "7", "--show-potents", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Cli, VerifySuitesPass) {
  const CliRun c = run({"verify", "--suite", "charsums", "--qmax", "200"});
  EXPECT_EQ(c.code, kExitOk) << c.out;
  EXPECT_NE(c.out.find(" 0 failures"), std::string::npos);
  // Published-form discrepancies are listed without failing the run.
  EXPECT_NE(c.out.find("erratum: STterms-published"), std::string::npos);
  EXPECT_NE(c.out.find("erratum: U4-bound-published q=7"), std::string::npos);
  for (const char* name : {"Neq", "STterms", "Meq", "Jacobi-norm", "nu", "union-deficiency"})
    EXPECT_NE(c.out.find(name), std::string::npos) << name;
  EXPECT_EQ(run({"verify", "--suite", "potents", "--qmax", "64"}).code, kExitOk);
}

TEST(Cli, OutFileAndJobs) {
  const auto path = std::filesystem::temp_directory_path() / "potsum_cli_test.csv";
  const CliRun r = run({"search", "--limit", "50", "--jobs", "2", "--format", "csv", "--out", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(read_file(path.string()).rfind("q,m,n,boundary_only\n4,4,2,0\n", 0), 0u);
  std::filesystem::remove(path);
}
