#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "abelscope/homology.hpp"
#include "abelscope/serialize.hpp"

using namespace abelscope;

namespace {

Json load(const std::string& name) {
  std::ifstream in(std::string(ABELSCOPE_TEST_DATA) + "/" + name);
  EXPECT_TRUE(in) << name;
  return Json::parse(in);
}

void expect_same_algebra(const LieAlgebra& a, const LieAlgebra& b) {
  EXPECT_EQ(a.labels(), b.labels());
  EXPECT_EQ(a.weights(), b.weights());
  EXPECT_EQ(a.structure_constants(), b.structure_constants());
}

}  // namespace

TEST(RatJson, Forms) {
  EXPECT_EQ(rat_to_json(Rat(Int(-3), Int(6))), "-1/2");
  EXPECT_EQ(rat_to_json(Rat(4)), "4/1");
  EXPECT_EQ(rat_from_json(Json("6/4")), Rat(Int(3), Int(2)));
  EXPECT_EQ(rat_from_json(Json(7)), Rat(7));
  EXPECT_THROW(rat_from_json(Json(1.5)), InputError);
  EXPECT_THROW(rat_from_json(Json("1/0")), InputError);
}

TEST(MatrixJson, RoundTrip) {
  const QMat m = QMat::from_rows({{Rat(1), Rat(Int(1), Int(3))}, {Rat(-2), Rat(0)}});
  EXPECT_EQ(matrix_from_json(matrix_to_json(m)), m);
  EXPECT_THROW(matrix_from_json(Json::parse(R"([["1/1"],["1/1","2/1"]])")), InputError);
}

TEST(AlgebraJson, FixturesMatchBuiltInAlgebras) {
  expect_same_algebra(algebra_from_json(load("u9.json")), build_u9_algebra());
  expect_same_algebra(algebra_from_json(load("abels4.json")), build_abels4_algebra());
}

TEST(AlgebraJson, RoundTrip) {
  for (const auto& L : {build_u9_algebra(), build_abels4_algebra(), abelian_algebra({Weight{1}, Weight{-2}})}) {
    const Json j = algebra_to_json(L);
    expect_same_algebra(algebra_from_json(j), L);
    EXPECT_EQ(algebra_to_json(algebra_from_json(j)).dump(), j.dump());
  }
}

TEST(AlgebraJson, LabelsAreOptional) {
  const LieAlgebra L = algebra_from_json(Json::parse(R"({"dim":2,"rank":1,"weights":[[1],[2]],"brackets":[]})"));
  EXPECT_EQ(L.labels(), (std::vector<std::string>{"x0", "x1"}));
}

TEST(AlgebraJson, SchemaViolations) {
  const char* bad[] = {
      R"({"rank":1,"weights":[],"brackets":[]})",
      R"({"dim":1,"rank":1,"weights":[[1,2]],"brackets":[]})",
      R"({"dim":2,"rank":1,"weights":[[1],[1]],"brackets":[[0,1,[["1/1",5]]]]})",
      R"({"dim":2,"rank":1,"weights":[[1],[1]],"brackets":[[1,0,[]]]})",
      R"({"dim":2,"rank":1,"weights":[[1],[1]],"brackets":[[0,1]]})",
      R"({"dim":-1,"rank":1,"weights":[],"brackets":[]})",
      R"({"dim":1,"rank":1,"weights":[[0.5]],"brackets":[]})",
      R"([1,2,3])",
  };
  for (const char* text : bad) EXPECT_THROW(algebra_from_json(Json::parse(text)), InputError) << text;
}

TEST(GammaJson, RoundTripAndValidation) {
  const GroupParams params{Prime(3)};
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const GammaElt g = random_element(params, RandomBounds{}, rng);
    EXPECT_EQ(gamma_from_json(params, gamma_to_json(g)), g);
  }
  EXPECT_THROW(gamma_from_json(params, Json::parse(R"({"u":{"02":"1/2"}})")), InputError);
  EXPECT_THROW(gamma_from_json(params, Json::parse(R"({"sl2":[1,1,1,1]})")), InputError);
  EXPECT_THROW(gamma_from_json(params, Json::parse(R"({"u":{"01":"1/1"}})")), InputError);
  EXPECT_EQ(gamma_from_json(params, Json::parse(R"({"u":{"04":"1/9"}})")), elementary(0, 4, Rat(Int(1), Int(9))));
}

TEST(WedgeJson, SparseLabels) {
  const LieAlgebra L = build_u9_algebra();
  const Vec v = wedge_monomial(L, {"e24", "e02"});
  EXPECT_EQ(wedge_vector_to_json(L, 2, v).dump(), R"({"e02^e24":"-1/1"})");
}

TEST(VerdictJson, Shape) {
  const Json j = verdict_to_json(abels_check(abelian_algebra({Weight{1, 0}, Weight{-1, 0}})));
  EXPECT_FALSE(j["condition1"]["pass"].get<bool>());
  EXPECT_EQ(j["condition1"]["offending_pair"].size(), 2u);
  EXPECT_FALSE(j["finitely_presented"].get<bool>());
  const Json ok = verdict_to_json(abels_check(build_u9_algebra()));
  EXPECT_FALSE(ok["condition1"].contains("offending_pair"));
  EXPECT_EQ(ok["condition2"]["h2_weight0_dim"], 0);
}

TEST(BallJson, Shape) {
  const Marking<CyclicOracle> m(CyclicOracle(5), {1L});
  const Json j = ball_to_json(ball(m, 2));
  EXPECT_EQ(j["vertices"], 5);
  EXPECT_EQ(j["edges"].size(), 5u);
  EXPECT_EQ(j["depths"].size(), 5u);
}
