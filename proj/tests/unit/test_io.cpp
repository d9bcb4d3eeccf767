#include "dihedral/errors.hpp"
#include "dihedral/io.hpp"
#include "dihedral/oracle.hpp"
#include "dihedral/transport.hpp"
#include "dihedral/zeroone.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <json.hpp>

using namespace dihedral;
using namespace testing_support;
using nlohmann::json;

TEST(Instance, ParsesStringsAndIntegers) {
  const auto inst = io::parse_instance(R"({"rows": [1, "1/2", "3/2"], "cols": ["3"], "class": "real", "subgroup": "h"})");
  EXPECT_EQ(inst.margins.rows().size(), 3u);
  EXPECT_EQ(inst.margins.rows()[1], Scalar(1, 2));
  EXPECT_EQ(inst.matrix_class, MatrixClass::Real);
  EXPECT_EQ(inst.subgroup, SubgroupId::Horizontal);
}

TEST(Instance, RoundTrip) {
  io::Instance inst;
  inst.margins = pair({2, 1, 2}, {2, 1, 2});
  inst.matrix_class = MatrixClass::ZeroOne;
  inst.subgroup = SubgroupId::Full;
  const auto back = io::parse_instance(io::instance_json(inst));
  EXPECT_EQ(back.margins.rows().to_string(), "2,1,2");
  EXPECT_EQ(back.margins.cols().to_string(), "2,1,2");
  EXPECT_EQ(back.matrix_class, MatrixClass::ZeroOne);
  EXPECT_EQ(back.subgroup, SubgroupId::Full);
}

TEST(Instance, Errors) {
  auto kind_of = [](const std::string& text) {
    try {
      io::parse_instance(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Argument;
  };
  EXPECT_EQ(kind_of("{"), ErrorKind::Parse);
  EXPECT_EQ(kind_of(R"({"rows": [1], "cols": [2], "class": "real", "subgroup": "trivial"})"), ErrorKind::SumMismatch);
  EXPECT_EQ(kind_of(R"({"rows": [1], "cols": [1], "class": "boolean", "subgroup": "trivial"})"), ErrorKind::Parse);
  EXPECT_EQ(kind_of(R"({"rows": [1], "cols": [1], "class": "real", "subgroup": "rot45"})"), ErrorKind::Parse);
  EXPECT_EQ(kind_of(R"({"rows": [-1], "cols": [-1], "class": "real", "subgroup": "trivial"})"), ErrorKind::Bounds);
}

TEST(Matrix, ParsesTextAndJson) {
  const auto text = io::parse_matrix("1 0 1/2\n0 2 0\n");
  ASSERT_EQ(text.rows(), 2u);
  ASSERT_EQ(text.cols(), 3u);
  EXPECT_EQ(text(0, 2), Scalar(1, 2));
  const auto arr = io::parse_matrix("[[1, \"1/2\"], [0, 3]]");
  EXPECT_EQ(arr(0, 1), Scalar(1, 2));
  EXPECT_EQ(arr(1, 1), Scalar(3));
  const auto rep = io::parse_matrix(R"({"feasible": true, "witness": [["1","0"],["0","1"]]})");
  EXPECT_EQ(rep(1, 1), Scalar(1));
  EXPECT_THROW(io::parse_matrix("1 0\n1\n"), Error);
  EXPECT_THROW(io::parse_matrix("[[1, 0], [1]]"), Error);
  EXPECT_THROW(io::parse_matrix("1 x\n"), Error);
}

TEST(Matrix, TextRoundTrip) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const auto a = random_rational_matrix(rng, static_cast<std::size_t>(pick(rng, 1, 4)),
                                          static_cast<std::size_t>(pick(rng, 1, 4)));
    EXPECT_EQ(io::parse_matrix(io::matrix_text(a)), a);
  }
}

TEST(Report, JsonCarriesConditionsAndWitness) {
  io::Instance inst;
  inst.margins = pair({6, 6, 6, 2, 1, 1}, {4, 4, 2, 2, 2, 4, 4});
  inst.matrix_class = MatrixClass::ZeroOne;
  inst.subgroup = SubgroupId::Vertical;
  const auto report = zeroone::feasible01(inst.margins, inst.subgroup);
  const auto doc = json::parse(io::report_json(inst, report));
  EXPECT_FALSE(doc.at("feasible").get<bool>());
  EXPECT_TRUE(doc.at("witness").is_null());
  EXPECT_EQ(doc.at("class"), "zero-one");
  EXPECT_EQ(doc.at("subgroup"), "v");
  bool saw = false;
  for (const auto& c : doc.at("conditions"))
    if (c.at("label") == "Ainfty.c") {
      saw = true;
      EXPECT_FALSE(c.at("holds").get<bool>());
    }
  EXPECT_TRUE(saw);

  inst.margins = pair({2, 1, 2}, {2, 1, 2});
  inst.subgroup = SubgroupId::Full;
  const auto yes = zeroone::feasible01(inst.margins, inst.subgroup);
  const auto text = io::report_json(inst, yes);
  const auto witness = io::parse_matrix(text);
  EXPECT_TRUE(oracle::verify(witness, inst.margins, inst.subgroup, inst.matrix_class).passed());
}

TEST(Report, TextLayout) {
  io::Instance inst;
  inst.margins = pair({1, 1}, {1, 1});
  inst.matrix_class = MatrixClass::Integral;
  inst.subgroup = SubgroupId::Trivial;
  const auto text = io::report_text(inst, transport::feasible(inst.margins, inst.subgroup, inst.matrix_class));
  EXPECT_NE(text.find("T.sum: true"), std::string::npos) << text;
  EXPECT_NE(text.find("\nfeasible\n"), std::string::npos) << text;
}

TEST(VerifyOutput, TextAndJson) {
  const auto bad = oracle::verify(DenseMatrix(2, 2), pair({1, 1}, {1, 1}), SubgroupId::Trivial, MatrixClass::Integral);
  const auto text = io::verify_text(bad);
  EXPECT_EQ(text.rfind("fail", 0), 0u);
  EXPECT_NE(text.find("invariance ok"), std::string::npos);
  const auto doc = json::parse(io::verify_json(bad));
  EXPECT_FALSE(doc.at("pass").get<bool>());

  const auto good = oracle::verify(to_dense(IntMatrix{{1, 0}, {0, 1}}), pair({1, 1}, {1, 1}), SubgroupId::Diagonal,
                                   MatrixClass::ZeroOne);
  EXPECT_EQ(io::verify_text(good).rfind("pass", 0), 0u);
}
