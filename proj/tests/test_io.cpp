#include <gtest/gtest.h>

#include <sstream>
#include <string>

#include <fibprod/expand.hpp>
#include <fibprod/format.hpp>

using fibprod::coeff_array;
using fibprod::expand;
using fibprod::parse_bfile;
using fibprod::parse_csv;
using fibprod::parse_json;
using fibprod::write_bfile;
using fibprod::write_csv;
using fibprod::write_json;

namespace {

std::string bfile_text(const coeff_array& arr) {
  std::ostringstream os;
  write_bfile(os, arr);
  return os.str();
}

}  // namespace

TEST(Bfile, GoldenBytes) {
  EXPECT_EQ(bfile_text(expand(4)), "0 1\n1 -1\n2 -1\n3 0\n4 1\n");
}

TEST(Bfile, ContainsEighteen) {
  const std::string text = bfile_text(expand(18));
  EXPECT_NE(text.find("18 1\n"), std::string::npos);
  EXPECT_EQ(text.substr(text.size() - 5), "18 1\n");  // no trailing blank line
}

TEST(Bfile, RoundTripTenThousand) {
  const auto arr = expand(10000);
  std::stringstream stream;
  write_bfile(stream, arr);
  EXPECT_EQ(parse_bfile(stream), arr);
}

TEST(Bfile, WriterIsDeterministic) {
  const auto arr = expand(1000);
  EXPECT_EQ(bfile_text(arr), bfile_text(arr));
}

TEST(Bfile, ParserRejectsMalformedInput) {
  {
    std::istringstream is("0 1\n2 -1\n");  // gap in positions
    EXPECT_THROW(parse_bfile(is), std::invalid_argument);
  }
  {
    std::istringstream is("0 2\n");  // out-of-range coefficient
    EXPECT_THROW(parse_bfile(is), std::invalid_argument);
  }
  {
    std::istringstream is("0\n");  // missing separator
    EXPECT_THROW(parse_bfile(is), std::invalid_argument);
  }
  {
    std::istringstream is("0 01\n");  // non-canonical coefficient token
    EXPECT_THROW(parse_bfile(is), std::invalid_argument);
  }
}

TEST(Csv, GoldenBytes) {
  std::ostringstream os;
  write_csv(os, expand(0));
  EXPECT_EQ(os.str(), "position,coefficient\n0,1\n");
}

TEST(Csv, RoundTrip) {
  const auto arr = expand(500);
  std::stringstream stream;
  write_csv(stream, arr);
  EXPECT_EQ(parse_csv(stream), arr);
}

TEST(Csv, ParserRequiresHeader) {
  std::istringstream is("0,1\n");
  EXPECT_THROW(parse_csv(is), std::invalid_argument);
}

TEST(Json, GoldenBytes) {
  std::ostringstream os;
  write_json(os, expand(2));
  EXPECT_EQ(os.str(), R"([["0",1],["1",-1],["2",-1]])");
}

TEST(Json, RoundTrip) {
  const auto arr = expand(500);
  std::stringstream stream;
  write_json(stream, arr);
  EXPECT_EQ(parse_json(stream), arr);
}

TEST(Json, ParserRejectsMalformedInput) {
  {
    std::istringstream is("{\"a\":1}");
    EXPECT_THROW(parse_json(is), std::invalid_argument);
  }
  {
    std::istringstream is(R"([["0",5]])");
    EXPECT_THROW(parse_json(is), std::invalid_argument);
  }
  {
    std::istringstream is(R"([["1",1]])");  // positions must start at 0
    EXPECT_THROW(parse_json(is), std::invalid_argument);
  }
  {
    std::istringstream is("not json");
    EXPECT_THROW(parse_json(is), std::invalid_argument);
  }
}
