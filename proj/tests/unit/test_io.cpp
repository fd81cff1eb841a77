#include <gtest/gtest.h>

#include "helpers.hpp"
#include "newtonleaf/errors.hpp"
#include "newtonleaf/io.hpp"

using namespace newtonleaf;
using namespace testing_helpers;

TEST(Io, RelaxedJsonQuotesBareWords) {
  Json j = parse_relaxed_json("{lambda:[1,0],w:s1s2}");
  EXPECT_EQ(j.at("lambda"), Json::array({1, 0}));
  EXPECT_EQ(j.at("w"), "s1s2");
  EXPECT_EQ(parse_relaxed_json(R"({"group":"GL2"})").at("group"), "GL2");
  EXPECT_EQ(parse_relaxed_json("{flag:true,none:null}").at("flag"), true);
}

TEST(Io, ElementRoundTrip) {
  for (const std::string name : {"GL2", "GL3", "Sp4", "GSp4"}) {
    auto d = group(name);
    for (const auto& x : elements_up_to_length(d, 2, {})) EXPECT_EQ(parse_element(d, format_element(x)), x);
  }
  auto gl3 = group("GL3");
  EXPECT_EQ(parse_element(gl3, "{lambda:[1,0,0],w:[1,2]}"), parse_element(gl3, "{lambda:[1,0,0],w:s1s2}"));
  EXPECT_EQ(format_element(parse_element(group("GL2"), "{lambda:[1,0],w:s}")), "{lambda:[1,0],w:s1}");
}

TEST(Io, MalformedElementsRejected) {
  auto d = group("GL2");
  EXPECT_THROW(parse_element(d, "{lambda:[1,0,0],w:e}"), Error);
  EXPECT_THROW(parse_element(d, "{lambda:[1,0],w:s7}"), Error);
  EXPECT_THROW(parse_element(d, "{lambda:[1,0]"), Error);
  EXPECT_THROW(parse_element(group("SL2"), "{lambda:[1,0],w:e}"), Error);
}

TEST(Io, DatumSpellings) {
  EXPECT_EQ(parse_datum("GL3")->name(), datum_from_json(parse_relaxed_json("{group:GL,n:3}"))->name());
  EXPECT_EQ(parse_datum("GSp4")->weyl().size(), 8u);
  EXPECT_THROW(parse_datum("GL"), ConfigurationError);
  EXPECT_THROW(datum_from_json(parse_relaxed_json("{group:GL,n:2,extra:1}")), ConfigurationError);
}

TEST(Io, MonomialRoundTrip) {
  MonomialIsocrystal m;
  m.permutation = {2, 0, 1};
  m.exponents = iv({1, -1, 0});
  m.signs = {1, -1, 1};
  m.frobenius_power = 2;
  EXPECT_EQ(monomial_from_json(monomial_to_json(m)), m);
  auto simple = monomial_from_json(parse_relaxed_json("{permutation:[1,0],exponents:[1,0]}"));
  EXPECT_EQ(simple.frobenius_power, 1);
  EXPECT_THROW(monomial_from_json(parse_relaxed_json("{permutation:[0,0],exponents:[1,0]}")), Error);
}

TEST(Io, CsvQuotingRoundTrip) {
  CsvWriter w({"a", "b"});
  w.row({"plain", "needs,\"quotes\""});
  w.row({"", "x"});
  std::string text = w.str();
  EXPECT_EQ(text.rfind("# schema=1\n", 0), 0u);
  auto t = parse_csv(text);
  EXPECT_EQ(t.header, (std::vector<std::string>{"a", "b"}));
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_EQ(t.rows[0][1], "needs,\"quotes\"");
  EXPECT_EQ(t.rows[1][0], "");
  EXPECT_THROW(w.row({"only one"}), Error);
}

TEST(Io, LeafReportRoundTripThroughRowAndJson) {
  for (const std::string name : {"GL2", "GL3", "GSp4"}) {
    auto d = group(name);
    for (const auto& sigma : {FrobeniusAction::trivial(d), FrobeniusAction::opposition(d)}) {
      for (const auto& x : elements_up_to_length(d, 1, {})) {
        auto r = leaf_report(x, sigma);
        auto back = leaf_report_from_row(d, leaf_report_header(), leaf_report_row(r));
        EXPECT_TRUE(same_report(r, back)) << format_element(x);
        EXPECT_TRUE(same_report(r, leaf_report_from_json(d, leaf_report_to_json(r))));
      }
    }
  }
}

TEST(Io, ReportRowFormat) {
  auto r = leaf_report(elt(group("GL2"), "{lambda:[1,0],w:s}"));
  auto row = leaf_report_row(r);
  EXPECT_EQ(row, (std::vector<std::string>{"GL2", "trivial", "{lambda:[1,0],w:s1}", "(1/2,1/2)", "1", "true", "0",
                                           "4", "0,0,0,0", "true"}));
}

TEST(Io, LatticeFormat) {
  EXPECT_EQ(format_lattice(LatticeModel::standard(2, 1, 2)), "[[2,0],[0,2]]");
}
