#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "ncpart/error.hpp"
#include "ncpart/json_io.hpp"

using namespace ncpart;
using nlohmann::json;

TEST(JsonIo, PartitionRoundTrip) {
  const NCPartition p = validate_partition({{1, 3, 5}, {2}, {4}, {6, 7, 11, 12}, {8}, {9, 10}}, 12);
  const json j = to_json(p);
  EXPECT_EQ(j["n"], 12);
  EXPECT_EQ(j["blocks"][0], json({1, 3, 5}));
  EXPECT_EQ(partition_from_json(j), p);
  EXPECT_EQ(partition_from_json(json::parse(j.dump())), p);
}

TEST(JsonIo, PartitionValidation) {
  EXPECT_THROW(partition_from_json(json::parse(R"({"n":4,"blocks":[[1,3],[2,4]]})")), CrossingError);
  EXPECT_THROW(partition_from_json(json::parse(R"({"n":3,"blocks":[[1,2]]})")), Error);
  EXPECT_THROW(partition_from_json(json::parse(R"({"blocks":[[1]]})")), Error);
  EXPECT_THROW(partition_from_json(json::parse(R"({"n":2,"blocks":[[1,"x"]]})")), Error);
}

TEST(JsonIo, TreeRoundTrip) {
  const PlaneTree t = make_tree({3, 1, 0, 1, 0, 4, 0, 1, 2, 0, 0, 0, 0});
  EXPECT_EQ(tree_from_json(to_json(t)), t);
  EXPECT_THROW(tree_from_json(json::parse(R"({"degrees":[2,0]})")), Error);
}

TEST(JsonIo, WeightSpecs) {
  EXPECT_EQ(parse_weight_spec("all")(7), 1.0);
  EXPECT_EQ(parse_weight_spec("set:2")(3), 0.0);
  EXPECT_EQ(parse_weight_spec("divisible:5")(10), 1.0);
  EXPECT_EQ(parse_weight_spec("prime")(9), 0.0);
  EXPECT_EQ(parse_weight_spec("[1, 0.5, 2]")(2), 2.0);
  EXPECT_EQ(parse_weight_spec(R"({"kind":"set","members":[2,4]})")(4), 1.0);
  EXPECT_EQ(parse_weight_spec(R"({"kind":"predicate","name":"odd"})")(3), 1.0);
  EXPECT_EQ(parse_weight_spec(R"({"kind":"explicit","values":[1,0,3]})")(2), 3.0);
  EXPECT_THROW(parse_weight_spec("nonsense"), Error);
  EXPECT_THROW(parse_weight_spec("[1, 0.5"), Error);
}

TEST(JsonIo, ExplicitWeightFile) {
  const std::string path = testing::TempDir() + "ncpart_weights.json";
  {
    std::ofstream out(path);
    out << "[1, 0, 1, 1]";
  }
  const WeightSeq w = parse_weight_spec("explicit:" + path);
  EXPECT_EQ(w(3), 1.0);
  EXPECT_EQ(w(1), 0.0);
  std::remove(path.c_str());
  EXPECT_THROW(parse_weight_spec("explicit:" + path), Error);
}

TEST(JsonIo, Cumulants) {
  const CumulantSeq exact = cumulants_from_json(json::parse(R"({"kappa":["0","1/2","1/3"]})"));
  ASSERT_NE(exact.exact_values(), nullptr);
  EXPECT_EQ((*exact.exact_values())[1], Rational(1, 2));
  const CumulantSeq geo = cumulants_from_json(json::parse(R"({"kappa":[1],"geometric_ratio":1})"));
  EXPECT_NEAR(support_max(geo).s_max, 4.0, 1e-9);
  EXPECT_NEAR(support_max(cumulants_from_json(json::parse(R"({"preset":"semicircle"})"))).s_max, 2.0, 1e-9);
  EXPECT_NEAR(support_max(cumulants_from_json(json::parse("[0, 1]"))).s_max, 2.0, 1e-9);
  EXPECT_THROW(cumulants_from_json(json::parse(R"({"kappa":["1/0"]})")), Error);
}
