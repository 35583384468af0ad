#include <hypernull/io.hpp>

#include <gtest/gtest.h>

#include <sstream>

using namespace hypernull;

TEST(Io, ParseFormat)
{
  EXPECT_EQ(io::parse_format("json"), io::Format::Json);
  EXPECT_EQ(io::parse_format("csv"), io::Format::Csv);
  EXPECT_EQ(io::parse_format("text"), io::Format::Text);
  EXPECT_THROW(io::parse_format("xml"), std::invalid_argument);
}

TEST(Io, ComponentsJsonRoundTrip)
{
  for (int n = 1; n <= 9; ++n) {
    const auto cs = components(n);
    const auto j = io::components_to_json(n, cs);
    const auto text = j.dump();
    const auto back = io::components_from_json(io::json::parse(text));
    ASSERT_EQ(back.size(), cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i) {
      EXPECT_EQ(back[i].generator_set, cs[i].generator_set);
      EXPECT_EQ(back[i].generator_set.source, cs[i].generator_set.source);
    }
    EXPECT_EQ(io::components_to_json(n, back), j);
  }
}

TEST(Io, ComponentJsonShape)
{
  const auto cs = components(5);
  const auto j = io::components_to_json(5, cs);
  EXPECT_EQ(j.at("n"), 5);
  EXPECT_EQ(j.at("count"), 11);
  const auto& first = j.at("components").at(0);
  EXPECT_TRUE(first.at("S").is_array());
  EXPECT_TRUE(first.at("generators").at(0).is_string());
  EXPECT_EQ(first.at("codim").get<int>() + first.at("dim").get<int>(), 11);
}

TEST(Io, ComponentsJsonRejectsInconsistentInput)
{
  auto j = io::components_to_json(5, components(5));
  auto bad_dim = j;
  bad_dim["components"][0]["dim"] = 99;
  EXPECT_THROW(io::components_from_json(bad_dim), std::invalid_argument);
  auto bad_count = j;
  bad_count["count"] = 3;
  EXPECT_THROW(io::components_from_json(bad_count), std::invalid_argument);
  auto bad_s = j;
  bad_s["components"][0]["S"] = io::json::array();
  EXPECT_THROW(io::components_from_json(bad_s), std::invalid_argument);
}

TEST(Io, RowsJsonRoundTrip)
{
  const auto rows = verify_rows(40, {10, 2});
  const auto j = io::rows_to_json(rows);
  EXPECT_TRUE(j.at("all_hold").get<bool>());
  EXPECT_EQ(j.at("rows").at(6).at("am"), "88071");
  EXPECT_EQ(j.at("rows").at(6).at("gm"), "7280");
  EXPECT_EQ(j.at("rows").at(6).at("sources").at("gm"), "enumeration");
  EXPECT_EQ(j.at("rows").at(30).at("sources").at("gm"), "recurrence");
  EXPECT_EQ(io::rows_from_json(io::json::parse(j.dump())), rows);
}

TEST(Io, CsvHeadersAreVersioned)
{
  std::ostringstream comps, rows, nullity, series;
  io::write_components(comps, 3, components(3), io::Format::Csv);
  io::write_rows(rows, verify_rows(3), io::Format::Csv);
  io::write_nullity(nullity, nullity_rows(2, 3), io::Format::Csv);
  io::write_series(series, series_rows(3), io::Format::Csv);
  auto head = [](const std::ostringstream& os) {
    std::istringstream in(os.str());
    std::string a, b;
    std::getline(in, a);
    std::getline(in, b);
    return a + "|" + b;
  };
  EXPECT_EQ(head(comps), "# hypernull components csv v1|n,S,ideal,codim,dim");
  EXPECT_EQ(head(rows), "# hypernull verify csv v1|n,am,gm,holds,am_source,gm_source");
  EXPECT_EQ(head(nullity), "# hypernull am csv v1|n,k,D_rec,D_closed,match");
  EXPECT_EQ(head(series), "# hypernull series csv v1|n,eta,eta_prime,gm_zero,provenance");
  EXPECT_NE(nullity.str().find("\n2,3,35,35,true\n"), std::string::npos);
}

TEST(Io, TextComponentsOnePerLine)
{
  std::ostringstream os;
  io::write_components(os, 1, components(1), io::Format::Text);
  EXPECT_EQ(os.str(), "<x1,x2>\n<x1,x3>\n<x2,x3>\n");
}

TEST(Report, VerifyTableMatchesReferenceValues)
{
  const std::vector<long> am{3, 35, 151, 891, 3983, 19795, 88071, 407531, 1792063, 7993155, 34740791};
  const std::vector<long> gm{3, 13, 72, 140, 812, 1648, 7280, 18064, 60928, 176576, 509376};
  const auto rows = verify_rows(11);
  ASSERT_EQ(rows.size(), 11u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].n, static_cast<int>(i) + 1);
    EXPECT_EQ(rows[i].am, am[i]);
    EXPECT_EQ(rows[i].gm, gm[i]);
    EXPECT_TRUE(rows[i].holds);
    EXPECT_EQ(rows[i].holds, rows[i].gm <= rows[i].am);
  }
  EXPECT_EQ(rows[0].gm_source, "override");
  EXPECT_EQ(rows[2].gm_source, "enumeration");
}

TEST(Report, DeterministicAcrossThreadCounts)
{
  const auto one = verify_rows(60, {20, 1});
  const auto four = verify_rows(60, {20, 4});
  const auto again = verify_rows(60, {20, 4});
  EXPECT_EQ(one, four);
  EXPECT_EQ(four, again);
  std::ostringstream a, b;
  io::write_rows(a, one, io::Format::Json);
  io::write_rows(b, four, io::Format::Json);
  EXPECT_EQ(a.str(), b.str());
}

TEST(Report, ParallelForIndexPropagatesFailure)
{
  EXPECT_THROW(parallel_for_index(16, 4,
                                  [](std::size_t i) {
                                    if (i == 7)
                                      throw std::runtime_error("boom");
                                  }),
               std::runtime_error);
}

TEST(Report, RejectsEmptyRange)
{
  EXPECT_THROW(verify_rows(0), std::invalid_argument);
  EXPECT_THROW(nullity_rows(0, 3), std::invalid_argument);
}

TEST(Report, OracleResultText)
{
  std::ostringstream os;
  io::write_oracle_result(os, oracle::check(5));
  EXPECT_EQ(os.str(), "n=5 OK (11 components)\n");
}
