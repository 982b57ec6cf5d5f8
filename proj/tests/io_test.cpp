#include <gtest/gtest.h>

#include <fstream>

#include "ueig/catalog.hpp"
#include "ueig/io.hpp"

namespace ueig {
namespace {

TEST(TensorJson, RoundTrip) {
  Tensor t = example_4_7();
  Json j = tensor_to_json(t);
  EXPECT_EQ(j["entries"].size(), 4u);
  EXPECT_EQ(j["dims"], Json({10, 8, 5, 7}));
  EXPECT_EQ(max_abs_diff(parse_tensor(j.dump()), t), 0.0);

  Tensor r = random_tensor({2, 3}, 4);
  EXPECT_EQ(max_abs_diff(tensor_from_json(tensor_to_json(r)), r), 0.0);
}

TEST(TensorJson, OneBasedIndices) {
  Tensor t = parse_tensor(R"({"dims":[2,3],"entries":[{"idx":[2,3],"re":1.5,"im":-2}]})");
  EXPECT_EQ(t({1, 2}), Complex(1.5, -2));
  Json j = tensor_to_json(t);
  EXPECT_EQ(j["entries"][0]["idx"], Json({2, 3}));
}

TEST(TensorJson, MissingImaginaryPartDefaultsToZero) {
  Tensor t = parse_tensor(R"({"dims":[1],"entries":[{"idx":[1],"re":2}]})");
  EXPECT_EQ(t({0}), Complex(2));
}

TEST(TensorJson, SchemaErrors) {
  EXPECT_THROW(parse_tensor(R"({"entries":[]})"), InputError);
  EXPECT_THROW(parse_tensor(R"({"dims":[2],"entries":[{"idx":[3],"re":1}]})"), InputError);
  EXPECT_THROW(parse_tensor(R"({"dims":[2],"entries":[{"re":1}]})"), InputError);
  EXPECT_THROW(parse_tensor(R"({"dims":[2],"entries":[{"idx":[1],"re":"x"}]})"), InputError);
  EXPECT_THROW(parse_tensor(R"({"dims":[-2],"entries":[]})"), InputError);
  EXPECT_THROW(parse_tensor(R"([1,2])"), InputError);
}

TEST(TensorJson, SyntaxErrorQuotesTheLine) {
  try {
    parse_tensor("{\"dims\": [2,2],\n \"entries\": [x]}");
    FAIL();
  } catch (const InputError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("line 2"), std::string::npos) << msg;
    EXPECT_NE(msg.find("\"entries\": [x]"), std::string::npos) << msg;
    EXPECT_NE(msg.find('^'), std::string::npos) << msg;
  }
}

TEST(TensorJson, TruncatedInputPointsAtTheEnd) {
  try {
    parse_tensor("{\"dims\": [2,2],\n \"entries\": [\n");
    FAIL();
  } catch (const InputError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("unexpected end of input"), std::string::npos) << msg;
    EXPECT_NE(msg.find("\"entries\": ["), std::string::npos) << msg;
  }
}

TEST(TensorJson, MissingFile) {
  EXPECT_THROW(read_tensor_file("/nonexistent/t.json"), InputError);
}

TEST(EmbeddedJson, CarriesSourceDims) {
  Json j = embedded_to_json(sym_embed(example_4_1().tensor()));
  EXPECT_EQ(j["dims"], Json({6, 6, 6}));
  EXPECT_EQ(j["source_dims"], Json({2, 2, 2}));
}

TEST(EigenpairJson, Fields) {
  UEigenpair p;
  p.lambda = 0.5;
  p.factors.vectors = {{Complex(1, 0)}, {Complex(0, 1)}};
  p.residual = 1e-10;
  p.trace.status = Status::converged;
  Json j = eigenpair_to_json(p, Algorithm::joint, 7, std::nullopt);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"lambda", "gme", "factors", "residual", "iterations",
                                            "status", "algorithm", "seed"}));
  EXPECT_TRUE(j["gme"].is_null());
  EXPECT_EQ(j["algorithm"], "joint");
  EXPECT_EQ(j["status"], "converged");
  EXPECT_EQ(j["factors"][1][0]["im"], 1.0);
}

}  // namespace
}  // namespace ueig
