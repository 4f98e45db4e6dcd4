// Renderers: JSON schemas, CSV quoting, pretty-text anchors, and byte
// stability. Exact quantities must appear as "p/q" strings, never floats.

#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "coalesce/io.hpp"
#include "coalesce/simulate.hpp"
#include "coalesce/verify.hpp"

namespace {

using coalesce::analyze;
using coalesce::Format;
using coalesce::Json;
using coalesce::parse_format;
using coalesce::render_analysis;

TEST(Formats, ParseNamesOnly) {
  EXPECT_EQ(parse_format("json"), Format::json);
  EXPECT_EQ(parse_format("csv"), Format::csv);
  EXPECT_EQ(parse_format("pretty"), Format::pretty);
  EXPECT_THROW(parse_format("xml"), std::invalid_argument);
  EXPECT_THROW(parse_format(""), std::invalid_argument);
}

TEST(AnalysisJson, SchemaAndValues) {
  const auto doc = Json::parse(render_analysis(analyze(4, true), Format::json));
  const std::vector<std::string> top{"n", "stages", "total", "variance"};
  std::vector<std::string> keys;
  for (const auto& item : doc.items()) keys.push_back(item.key());
  EXPECT_EQ(keys, top);

  EXPECT_EQ(doc["n"], 4);
  EXPECT_EQ(doc["total"], "9");
  EXPECT_EQ(doc["variance"], "32");
  ASSERT_EQ(doc["stages"].size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(doc["stages"][i]["t"], 4 - static_cast<int>(i));
    EXPECT_EQ(doc["stages"][i].contains("e"), i < 3);  // absorbing stage has no exit time
  }
  EXPECT_EQ(doc["stages"][0]["e"], "1");
  EXPECT_EQ(doc["stages"][1]["e"], "2");
  EXPECT_EQ(doc["stages"][2]["e"], "6");
  EXPECT_EQ(doc["stages"][2]["landing"], Json::array({"1/3", "2/3"}));
  EXPECT_EQ(doc["stages"][3]["landing"], Json::array({"1"}));

  const auto bare = Json::parse(render_analysis(analyze(4), Format::json));
  EXPECT_FALSE(bare.contains("variance"));
}

TEST(AnalysisCsv, RowsAndTrailers) {
  const std::string csv = render_analysis(analyze(4, true), Format::csv);
  EXPECT_EQ(csv.rfind("t,e,landing\n", 0), 0u);
  EXPECT_NE(csv.find("2,6,[22]=1/3;[31]=2/3\n"), std::string::npos);
  EXPECT_NE(csv.find("total,9,\n"), std::string::npos);
  EXPECT_NE(csv.find("variance,32,\n"), std::string::npos);
}

TEST(AnalysisPretty, Anchors) {
  const std::string text = render_analysis(analyze(4, true), Format::pretty);
  EXPECT_NE(text.find("n = 4\n"), std::string::npos);
  EXPECT_NE(text.find("t = 2  e = 6  landing: [22] 1/3  [31] 2/3\n"), std::string::npos);
  EXPECT_NE(text.find("total = 9\n"), std::string::npos);
  EXPECT_NE(text.find("variance = 32\n"), std::string::npos);
}

TEST(Csv, CellQuoting) {
  EXPECT_EQ(coalesce::detail::csv_cell("plain"), "plain");
  EXPECT_EQ(coalesce::detail::csv_cell("[12,3,1]"), "\"[12,3,1]\"");
  EXPECT_EQ(coalesce::detail::csv_cell("a\"b"), "\"a\"\"b\"");
  EXPECT_EQ(coalesce::detail::csv_row({"x", "1,2", "y"}), "x,\"1,2\",y\n");
}

TEST(Csv, WideLabelsQuotedEndToEnd) {
  // n = 12 puts the comma-bearing absorbing label "[12,]" into a CSV cell.
  const std::string csv = render_analysis(analyze(12), Format::csv);
  EXPECT_NE(csv.find("\"[12,]=1\""), std::string::npos);
}

TEST(SymmetricRender, AllFormats) {
  const auto sys = coalesce::build_system(4);
  const auto x = coalesce::expected_wins(4);
  const auto doc = Json::parse(coalesce::render_symmetric(sys, x, Format::json));
  EXPECT_EQ(doc["n"], 4);
  EXPECT_EQ(doc["x"], Json::array({"9/4", "7/2", "13/4"}));
  EXPECT_EQ(doc["total"], "9");

  const std::string csv = coalesce::render_symmetric(sys, x, Format::csv);
  EXPECT_EQ(csv.rfind("i,x_i\n", 0), 0u);
  EXPECT_NE(csv.find("1,9/4\n"), std::string::npos);
  EXPECT_NE(csv.find("3,13/4\n"), std::string::npos);

  const std::string text = coalesce::render_symmetric(sys, x, Format::pretty);
  EXPECT_NE(text.find("x_1 = 9/4\n"), std::string::npos);
  EXPECT_NE(text.find("n * x_1 = 9\n"), std::string::npos);
}

TEST(ChecksRender, PassAndFailShapes) {
  const auto checks = coalesce::run_all_checks(4);
  const auto doc = Json::parse(coalesce::render_checks(4, checks, Format::json));
  EXPECT_EQ(doc["n"], 4);
  EXPECT_TRUE(doc["all_pass"].get<bool>());
  ASSERT_EQ(doc["checks"].size(), checks.size());
  for (const auto& entry : doc["checks"]) {
    EXPECT_TRUE(entry.contains("name"));
    EXPECT_TRUE(entry["pass"].get<bool>());
    EXPECT_FALSE(entry.contains("detail"));
  }
  const std::string text = coalesce::render_checks(4, checks, Format::pretty);
  EXPECT_NE(text.find("PASS"), std::string::npos);
  EXPECT_NE(text.find("all checks passed"), std::string::npos);

  const std::vector<coalesce::CheckReport> failing{{"demo identity", false, "boom"}};
  const auto bad = Json::parse(coalesce::render_checks(3, failing, Format::json));
  EXPECT_FALSE(bad["all_pass"].get<bool>());
  EXPECT_EQ(bad["checks"][0]["detail"], "boom");
  const std::string bad_text = coalesce::render_checks(3, failing, Format::pretty);
  EXPECT_NE(bad_text.find("FAIL"), std::string::npos);
  EXPECT_NE(bad_text.find("CHECKS FAILED"), std::string::npos);
  const std::string bad_csv = coalesce::render_checks(3, failing, Format::csv);
  EXPECT_EQ(bad_csv.rfind("name,pass,detail\n", 0), 0u);
  EXPECT_NE(bad_csv.find("demo identity,false,boom\n"), std::string::npos);
}

TEST(ComparisonRender, AllFormats) {
  const auto report = coalesce::simulate({3, 500, 2});
  const auto comparison = coalesce::compare(report, analyze(3, true));
  const auto doc = Json::parse(coalesce::render_comparison(report, comparison, Format::json));
  for (const char* key : {"n", "trials", "master_seed", "z_threshold", "stages", "total_mean",
                          "total_variance", "comparison", "max_abs_z", "all_within"}) {
    EXPECT_TRUE(doc.contains(key)) << key;
  }
  ASSERT_GT(doc["comparison"].size(), 0u);
  for (const char* key : {"quantity", "observed", "expected", "se", "z", "within"}) {
    EXPECT_TRUE(doc["comparison"][0].contains(key)) << key;
  }

  const std::string csv = coalesce::render_comparison(report, comparison, Format::csv);
  EXPECT_EQ(csv.rfind("quantity,observed,expected,se,z,within\n", 0), 0u);

  const std::string text = coalesce::render_comparison(report, comparison, Format::pretty);
  EXPECT_NE(text.find("max |z| = "), std::string::npos);
  EXPECT_NE(text.find("total time"), std::string::npos);
}

TEST(EnumerationRender, AllFormats) {
  std::vector<coalesce::StageSpace> stages;
  for (int t = 6; t >= 1; --t) stages.push_back(coalesce::enumerate_stage(6, t));
  const auto doc = Json::parse(coalesce::render_enumeration(6, stages, Format::json));
  EXPECT_EQ(doc["n"], 6);
  ASSERT_EQ(doc["stages"].size(), 6u);
  EXPECT_EQ(doc["stages"][2]["states"], Json::array({"[2211]", "[3111]"}));
  EXPECT_EQ(doc["stages"][3]["size"], 3);

  const std::string text = coalesce::render_enumeration(6, stages, Format::pretty);
  EXPECT_NE(text.find("S(6,3), 3 states: [222] [321] [411]\n"), std::string::npos);
  EXPECT_NE(text.find("S(6,1), 1 state: [6]\n"), std::string::npos);

  const std::string csv = coalesce::render_enumeration(6, stages, Format::csv);
  EXPECT_EQ(csv.rfind("t,index,partition\n", 0), 0u);
  EXPECT_NE(csv.find("3,1,[321]\n"), std::string::npos);
}

TEST(MatrixRender, StructureAndValues) {
  const auto chain = coalesce::build_full_chain(6);
  const auto doc = Json::parse(coalesce::render_stage_matrices(6, chain, Format::json));
  ASSERT_EQ(doc["stages"].size(), 6u);
  EXPECT_EQ(doc["stages"][0]["t"], 6);
  EXPECT_EQ(doc["stages"][0]["within"][0][0], "0");
  EXPECT_EQ(doc["stages"][0]["descent"][0][0], "1");
  EXPECT_FALSE(doc["stages"][5].contains("descent"));  // absorbing stage

  const std::string text = coalesce::render_stage_matrices(6, chain, Format::pretty);
  EXPECT_NE(text.find("t=3"), std::string::npos);
  EXPECT_NE(text.find("4/5"), std::string::npos);  // [222] -> [321] inside stage three
  EXPECT_NE(text.find("[51]"), std::string::npos);
}

TEST(Render, ByteStableAcrossCalls) {
  const auto analysis = analyze(5, true);
  EXPECT_EQ(render_analysis(analysis, Format::json), render_analysis(analysis, Format::json));
  EXPECT_EQ(render_analysis(analysis, Format::pretty),
            render_analysis(analysis, Format::pretty));
}

}  // namespace
