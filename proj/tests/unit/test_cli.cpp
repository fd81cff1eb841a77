#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "newtonleaf/errors.hpp"

using namespace newtonleaf;
using namespace newtonleaf::cli;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "newtonleaf");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int status = main_with_args(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "newtonleaf_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Cli, ReportBasicElement) {
  auto o = invoke({"report", "--group", "GL2", "--element", "{lambda:[1,0],w:s}"});
  ASSERT_EQ(o.status, kOk) << o.err;
  auto t = parse_csv(o.out);
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_EQ(t.rows[0][3], "(1/2,1/2)");
  EXPECT_EQ(t.rows[0][5], "true");
  EXPECT_EQ(t.rows[0][6], "0");
}

TEST(Cli, ReportRoundTrip) {
  auto o = invoke({"report", "--group", "GSp4", "--element", "{lambda:[1,1,1],w:e}", "--element", "{lambda:[1,0,1],w:s1}"});
  ASSERT_EQ(o.status, kOk) << o.err;
  auto d = parse_datum("GSp4");
  auto t = parse_csv(o.out);
  ASSERT_EQ(t.rows.size(), 2u);
  for (const auto& row : t.rows) {
    auto parsed = leaf_report_from_row(d, t.header, row);
    EXPECT_TRUE(same_report(parsed, leaf_report(parsed.element)));
  }
}

TEST(Cli, AdmissibleRows) {
  auto o = invoke({"adm", "--group", "GL2", "--mu", "1,0", "--level", "iwahori"});
  ASSERT_EQ(o.status, kOk) << o.err;
  EXPECT_EQ(parse_csv(o.out).rows.size(), 3u);
  auto h = invoke({"adm", "--group", "GL2", "--mu", "1,0", "--level", "hyperspecial"});
  EXPECT_EQ(parse_csv(h.out).rows.size(), 1u);
}

TEST(Cli, WittSelfCheckSucceeds) {
  auto o = invoke({"witt-selfcheck", "--p", "2", "--length", "3"});
  EXPECT_EQ(o.status, kOk) << o.err;
  for (const auto& row : parse_csv(o.out).rows) EXPECT_EQ(row[2], "true") << row[0];
}

TEST(Cli, ValidationErrorsExitOne) {
  EXPECT_EQ(invoke({"report", "--group", "E8", "--element", "{lambda:[0],w:e}"}).status, kInvalid);
  EXPECT_EQ(invoke({"report", "--group", "GL2"}).status, kInvalid);
  EXPECT_EQ(invoke({"adm", "--group", "GL2", "--mu", "0,1"}).status, kInvalid);
  EXPECT_EQ(invoke({"frobnicate"}).status, kInvalid);
  EXPECT_EQ(invoke({"report", "--group", "GL2", "--element", "{lambda:[1,0],w:e}", "--format", "xml"}).status, kInvalid);
}

TEST(Cli, BudgetErrorsExitThree) {
  auto o = invoke({"adlv", "--group", "GL3", "--element", "{lambda:[1,0,0],w:e}", "--mu", "1,0,0", "--p", "3",
                   "--depth", "2", "--max-candidates", "10"});
  EXPECT_EQ(o.status, kBudget);
  EXPECT_NE(o.err.find("budget"), std::string::npos);
  EXPECT_EQ(invoke({"adlv", "--group", "GL2", "--element", "{lambda:[1,0],w:e}", "--mu", "1,0", "--p", "5"}).status,
            kBudget);
}

TEST(Cli, WittSizeGuardExitsThree) {
  auto o = invoke({"witt-selfcheck", "--p", "7", "--length", "4"});
  EXPECT_EQ(o.status, kBudget);
}

TEST(Cli, SpecFileAndOverrides) {
  auto path = scratch("job.json");
  {
    std::ofstream f(path);
    f << R"({"command":"adm","group":"GL3","mu":[1,0,0]})";
  }
  auto o = invoke({"--spec", path.string()});
  ASSERT_EQ(o.status, kOk) << o.err;
  EXPECT_EQ(parse_csv(o.out).rows.size(), 7u);
  auto h = invoke({"--spec", path.string(), "--level", "hyperspecial"});
  EXPECT_EQ(parse_csv(h.out).rows.size(), 1u);
}

TEST(Cli, UnknownSpecKeyRejected) {
  EXPECT_THROW(job_from_json(parse_relaxed_json(R"({"command":"adm","colour":"red"})")), ConfigurationError);
  auto path = scratch("bad.json");
  {
    std::ofstream f(path);
    f << R"({"command":"adm","group":"GL2","mu":[1,0],"colour":"red"})";
  }
  EXPECT_EQ(invoke({"--spec", path.string()}).status, kInvalid);
}

TEST(Cli, JobSpecJsonRoundTrip) {
  JobSpec job;
  job.command = "adlv";
  job.group = "GL3";
  job.elements = {"{lambda:[1,0,0],w:e}"};
  job.mu = IntVector{1, 0, 0};
  job.p = 3;
  job.depth = 2;
  Json j = job_to_json(job);
  EXPECT_EQ(job_to_json(job_from_json(j)), j);
}

TEST(Cli, OutputDirectoryOverride) {
  auto dir = scratch("outdir");
  std::filesystem::remove_all(dir);
  ::setenv("NEWTONLEAF_OUTPUT_DIR", dir.string().c_str(), 1);
  auto o = invoke({"adm", "--group", "GL2", "--mu", "1,0", "--output", "adm.csv"});
  ::unsetenv("NEWTONLEAF_OUTPUT_DIR");
  ASSERT_EQ(o.status, kOk) << o.err;
  EXPECT_TRUE(o.out.empty());
  std::ifstream f(dir / "adm.csv");
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(parse_csv(ss.str()).rows.size(), 3u);
}

TEST(Cli, JsonFormat) {
  auto o = invoke({"report", "--group", "GL2", "--element", "{lambda:[1,0],w:e}", "--format", "json"});
  ASSERT_EQ(o.status, kOk) << o.err;
  Json j = Json::parse(o.out);
  EXPECT_EQ(j.at("command"), "report");
  EXPECT_EQ(j.at("reports").size(), 1u);
}

TEST(Cli, AdlvCensus) {
  auto o = invoke({"adlv", "--group", "GL2", "--element", "{lambda:[1,0],w:s}", "--mu", "1,0", "--p", "2"});
  ASSERT_EQ(o.status, kOk) << o.err;
  auto t = parse_csv(o.out);
  ASSERT_FALSE(t.rows.empty());
  for (const auto& row : t.rows) EXPECT_EQ(row[3], "true");
}
