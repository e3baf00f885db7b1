#include <gtest/gtest.h>

#include <sstream>

#include "nhq/counts_csv.hpp"
#include "nhq/errors.hpp"

namespace nhq {
namespace {

std::vector<CountsRow> parse(const std::string& text) {
  std::istringstream in(text);
  return read_counts_csv(in);
}

std::string error_of(const std::string& text) {
  try {
    parse(text);
  } catch (const DataError& e) {
    return e.what();
  }
  return {};
}

TEST(CountsCsv, ParsesPlainFile) {
  const auto rows = parse(
      "# comment\n"
      "axis,shots,n_g,n_plus,n_minus\n"
      "x,100,10,60,30\n"
      "\n"
      "y,100,10,45,45\n"
      "z,100,12,80,8\n");
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].line, 3u);
  EXPECT_EQ(rows[2].record.axis, Axis::z);
  EXPECT_EQ(rows[2].record.counts[1], 80);
  EXPECT_FALSE(rows[0].time.has_value());
  const auto groups = group_counts(rows);
  ASSERT_EQ(groups.size(), 1u);
  EXPECT_EQ(groups[0].records[1].counts[1], 45);
}

TEST(CountsCsv, ColumnOrderIsFree) {
  const auto rows = parse("n_minus,n_plus,n_g,shots,axis,t\n3,2,1,6,z,0.5\n");
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].record.counts, (std::array<std::int64_t, 3>{1, 2, 3}));
  EXPECT_DOUBLE_EQ(*rows[0].time, 0.5);
}

TEST(CountsCsv, MissingHeaderColumnIsNamed) {
  EXPECT_NE(error_of("axis,shots,n_g,n_plus\nx,1,0,1\n").find("n_minus"), std::string::npos);
  EXPECT_NE(error_of("").find("missing header"), std::string::npos);
}

TEST(CountsCsv, RowErrorsReportLineNumbers) {
  const std::string header = "axis,shots,n_g,n_plus,n_minus\n";
  EXPECT_NE(error_of(header + "x,0,0,0,0\n").find("line 2"), std::string::npos);
  EXPECT_NE(error_of(header + "x,10,1,1,1\n").find("line 2"), std::string::npos);
  EXPECT_NE(error_of(header + "x,10,1,9\n").find("line 2"), std::string::npos);
  EXPECT_NE(error_of(header + "\nw,10,1,8,1\n").find("line 3"), std::string::npos);
  EXPECT_NE(error_of(header + "x,ten,1,8,1\n").find("shots"), std::string::npos);
  EXPECT_NE(error_of(header + "x,10,-1,10,1\n").find("nonnegative"), std::string::npos);
  EXPECT_NE(error_of("axis,shots,n_g,n_plus,n_minus,extra\n").find("extra"), std::string::npos);
}

TEST(CountsCsv, ZeroShotsRejected) {
  EXPECT_NE(error_of("axis,shots,n_g,n_plus,n_minus\nz,0,0,0,0\n").find("shots must be positive"),
            std::string::npos);
}

TEST(CountsCsv, GroupsByTime) {
  const auto rows = parse(
      "t,axis,shots,n_g,n_plus,n_minus\n"
      "0,x,10,0,5,5\n"
      "0.5,x,10,0,5,5\n"
      "0,y,10,0,5,5\n"
      "0.5,y,10,0,5,5\n"
      "0,z,10,0,10,0\n"
      "0.5,z,10,1,8,1\n");
  const auto groups = group_counts(rows);
  ASSERT_EQ(groups.size(), 2u);
  EXPECT_DOUBLE_EQ(*groups[1].time, 0.5);
  EXPECT_EQ(groups[1].records[2].counts[0], 1);
}

TEST(CountsCsv, IncompleteGroupIsError) {
  const auto rows = parse("axis,shots,n_g,n_plus,n_minus\nx,1,0,1,0\ny,1,0,1,0\nx,1,0,1,0\n");
  EXPECT_THROW(group_counts(rows), DataError);
}

TEST(CountsCsv, WriteReadRoundTrip) {
  std::vector<CountsRow> rows;
  for (Axis a : {Axis::x, Axis::y, Axis::z}) {
    CountsRow r;
    r.time = 1.25;
    r.record.axis = a;
    r.record.shots = 20;
    r.record.counts = {2, 10, 8};
    rows.push_back(r);
  }
  std::ostringstream out;
  write_counts_csv(out, rows);
  const auto back = parse(out.str());
  ASSERT_EQ(back.size(), 3u);
  EXPECT_EQ(back[1].record.axis, Axis::y);
  EXPECT_DOUBLE_EQ(*back[2].time, 1.25);

  rows[0].record.exact = true;
  std::ostringstream sink;
  EXPECT_THROW(write_counts_csv(sink, rows), InvalidArgument);
}

}  // namespace
}  // namespace nhq
