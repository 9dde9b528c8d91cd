#include <gtest/gtest.h>

#include <string>

#include "cmarr/json_io.hpp"
#include "test_support.hpp"

using namespace cmarr;
using cmarr::io::json;
using cmarr::testing::pt;

namespace {

ErrorKind kind_of(const std::string& text) {
  try {
    io::parse_configuration(text);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::internal;
}

}  // namespace

TEST(JsonIo, RationalsAreReducedStrings) {
  EXPECT_EQ(io::to_json(Rational(6, 4)), json("3/2"));
  EXPECT_EQ(io::to_json(Rational(-4, 2)), json("-2"));
  EXPECT_EQ(io::to_json(pt("0", "1")), json::array({"0", "1"}));
}

TEST(JsonIo, ConfigurationRoundTrips) {
  Configuration c{pt("0"), pt("1/3", "-7/2")};
  const json j = io::to_json(c);
  EXPECT_EQ(j.dump(), R"({"k":2,"points":[["0","0"],["1/3","-7/2"]]})");
  EXPECT_EQ(io::configuration_from_json(j), c);
}

TEST(JsonIo, IntegerCoordinatesAreAccepted) {
  auto c = io::parse_configuration(R"({"k":2,"points":[[1,0],["1/2",-3]]})");
  EXPECT_EQ(c[0], pt("1"));
  EXPECT_EQ(c[1], pt("1/2", "-3"));
}

TEST(JsonIo, MalformedConfigurationsAreParseErrors) {
  EXPECT_EQ(kind_of("not json"), ErrorKind::parse);
  EXPECT_EQ(kind_of("[]"), ErrorKind::parse);
  EXPECT_EQ(kind_of(R"({"k":1})"), ErrorKind::parse);
  EXPECT_EQ(kind_of(R"({"k":0,"points":[]})"), ErrorKind::parse);
  EXPECT_EQ(kind_of(R"({"k":3,"points":[["0","0"],["1","0"]]})"), ErrorKind::parse);
  EXPECT_EQ(kind_of(R"({"points":[["0","0"]]})"), ErrorKind::parse);
  EXPECT_EQ(kind_of(R"({"k":1,"points":[["1/0","0"]]})"), ErrorKind::parse);
  EXPECT_EQ(kind_of(R"({"k":1,"points":[["0.5","0"]]})"), ErrorKind::parse);
  EXPECT_EQ(kind_of(R"({"k":1,"points":[["1","2","3"]]})"), ErrorKind::parse);
  EXPECT_EQ(kind_of(R"({"k":1,"points":[[1.5,"0"]]})"), ErrorKind::parse);
}

TEST(JsonIo, KeysSerializeSorted) {
  const json j = io::to_json(build_arrangement(2, 4));
  const std::string text = j.dump();
  EXPECT_LT(text.find("\"hyperplane_count\""), text.find("\"hyperplanes\""));
  EXPECT_LT(text.find("\"hyperplanes\""), text.find("\"k\""));
  EXPECT_LT(text.find("\"k\""), text.find("\"kind\""));
  EXPECT_LT(text.find("\"kind\""), text.find("\"t\""));
  EXPECT_EQ(j["hyperplane_count"], 9);
  EXPECT_EQ(j["kind"], "single-t");
}

TEST(JsonIo, IndexSetsAreOneBased) {
  EXPECT_EQ(io::to_json(IndexSet{0, 2}), json::array({1, 3}));
  const auto pair = SubsetPair::make({0, 1}, {2, 3});
  EXPECT_EQ(io::to_json(pair).dump(), R"({"left":[1,2],"right":[3,4]})");
}

TEST(JsonIo, WitnessCarriesCommonValue) {
  auto m = in_M(2, cmarr::testing::unit_square());
  ASSERT_TRUE(m.witness.has_value());
  const json w = io::to_json(*m.witness);
  EXPECT_EQ(w["s"], 2);
  EXPECT_EQ(w["common_value"], json::array({"1", "1"}));
}

TEST(JsonIo, HugeIntegersBecomeStrings) {
  BigInt big = BigInt(1) << 80;
  EXPECT_TRUE(io::to_json(big).is_string());
  EXPECT_EQ(io::to_json(BigInt(-5)), json(-5));
}
