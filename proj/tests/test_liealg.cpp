#include <gtest/gtest.h>

#include <map>
#include <set>
#include <random>

#include "abelscope/liealg.hpp"
#include "oracles.hpp"

using namespace abelscope;

namespace {

Vec unit(const LieAlgebra& L, const std::string& label) { return L.unit(L.index_of(label)); }

// The 3-dim algebra [x0,x1]=x2, [x0,x2]=x0, [x1,x2]=0.
LieAlgebra jacobi_violating() {
  return LieAlgebra({"x0", "x1", "x2"}, {Weight{0}, Weight{0}, Weight{0}},
                    {{0, 1, {{Rat(1), 2}}}, {0, 2, {{Rat(1), 0}}}}, 1);
}

using Mat = std::vector<std::vector<Rat>>;

Mat matrix_unit(int n, int i, int j) {
  Mat m(n, std::vector<Rat>(n));
  m[i][j] = 1;
  return m;
}

Mat commutator(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat c(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c[i][j] += a[i][k] * b[k][j] - b[i][k] * a[k][j];
  return c;
}

// Reads the coefficient vector of a matrix in the basis of matrix units named
// by `pairs`, failing if the matrix has mass outside the pattern.
Vec coordinates(const Mat& m, const std::vector<std::pair<int, int>>& pairs) {
  Vec v(pairs.size());
  Mat rest = m;
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    v[a] = m[pairs[a].first][pairs[a].second];
    rest[pairs[a].first][pairs[a].second] = 0;
  }
  for (const auto& row : rest)
    for (const auto& x : row) EXPECT_TRUE(x.is_zero());
  return v;
}

// Evaluates sum over cyclic permutations of [x,[y,z]] directly.
Vec jacobi_sum(const LieAlgebra& L, std::size_t i, std::size_t j, std::size_t k) {
  const Vec a = bracket(L, L.unit(i), bracket(L, L.unit(j), L.unit(k)));
  const Vec b = bracket(L, L.unit(j), bracket(L, L.unit(k), L.unit(i)));
  const Vec c = bracket(L, L.unit(k), bracket(L, L.unit(i), L.unit(j)));
  Vec s(L.dim());
  for (std::size_t t = 0; t < s.size(); ++t) s[t] = a[t] + b[t] + c[t];
  return s;
}

}  // namespace

TEST(Bracket, MatrixUnitExamples) {
  const LieAlgebra L = build_u9_algebra();
  EXPECT_EQ(bracket(L, unit(L, "e02"), unit(L, "e23")), unit(L, "e03"));
  EXPECT_TRUE(is_zero(bracket(L, unit(L, "e02"), unit(L, "e12"))));
  EXPECT_EQ(bracket(L, unit(L, "e23"), unit(L, "e34")), unit(L, "e24"));
  EXPECT_THROW(bracket(L, Vec(3), unit(L, "e02")), InputError);
}

TEST(Bracket, AgreesWithMatrixCommutators) {
  const std::vector<std::pair<int, int>> pairs{{0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3},
                                               {2, 4}, {3, 4}, {0, 4}, {1, 4}};
  const LieAlgebra L = build_u9_algebra();
  ASSERT_EQ(L.dim(), pairs.size());
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      const Mat c = commutator(matrix_unit(5, pairs[a].first, pairs[a].second),
                               matrix_unit(5, pairs[b].first, pairs[b].second));
      EXPECT_EQ(L.bracket_basis(a, b), coordinates(c, pairs)) << L.labels()[a] << "," << L.labels()[b];
    }
  }
}

TEST(Jacobi, U9AlgebraPassesByFullEnumeration) {
  const LieAlgebra L = build_u9_algebra();
  EXPECT_FALSE(check_jacobi(L));
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j)
      for (std::size_t k = j + 1; k < L.dim(); ++k) EXPECT_TRUE(is_zero(jacobi_sum(L, i, j, k)));
}

TEST(Jacobi, AbelianPasses) { EXPECT_FALSE(check_jacobi(abelian_algebra({Weight{1}, Weight{2}, Weight{3}}))); }

TEST(Jacobi, ViolatingExampleReportsTriple) {
  // By hand: [x0,[x1,x2]] + [x1,[x2,x0]] + [x2,[x0,x1]] = 0 + [x1,-x0] + [x2,x2] = x2.
  const LieAlgebra L = jacobi_violating();
  const Vec s = jacobi_sum(L, 0, 1, 2);
  EXPECT_EQ(s, (Vec{Rat(0), Rat(0), Rat(1)}));
  const auto t = check_jacobi(L);
  ASSERT_TRUE(t);
  EXPECT_EQ(*t, (std::array<std::size_t, 3>{0, 1, 2}));
}

TEST(DerivedSubalgebra, U9Algebra) {
  const LieAlgebra L = build_u9_algebra();
  const Subspace d = derived_subalgebra(L);
  EXPECT_EQ(d.dim(), 5u);
  std::vector<Vec> expected;
  for (const char* l : {"e03", "e13", "e24", "e04", "e14"}) expected.push_back(unit(L, l));
  EXPECT_EQ(d, Subspace::span(L.dim(), expected));
}

TEST(DerivedSubalgebra, AbelianAndAbels4) {
  EXPECT_EQ(derived_subalgebra(abelian_algebra({Weight{1, 0}, Weight{0, 1}})).dim(), 0u);
  const LieAlgebra A = build_abels4_algebra();
  EXPECT_EQ(derived_subalgebra(A).dim(), 3u);
}

TEST(Weights, U9Algebra) {
  const LieAlgebra L = build_u9_algebra();
  EXPECT_EQ(L.weight(L.index_of("e02")), (Weight{1, 0}));
  EXPECT_EQ(L.weight(L.index_of("e24")), (Weight{-1, 0}));
  EXPECT_EQ(L.weight(L.index_of("e04")), (Weight{0, 0}));
  std::multiset<Weight> all(L.weights().begin(), L.weights().end());
  const std::multiset<Weight> expected{{1, 0}, {1, 0}, {-1, 1}, {0, -1}, {0, 1}, {0, 1}, {-1, 0}, {0, 0}, {0, 0}};
  EXPECT_EQ(all, expected);
  EXPECT_FALSE(check_weight_additivity(L));
}

TEST(Weights, AbelianizationOfU9Algebra) {
  const auto w = abelianization_weights(build_u9_algebra());
  EXPECT_EQ(w, (std::vector<Weight>{{1, 0}, {1, 0}, {-1, 1}, {0, -1}}));
}

TEST(Weights, Abels4) {
  const LieAlgebra A = build_abels4_algebra();
  EXPECT_FALSE(check_jacobi(A));
  EXPECT_EQ(A.weight(A.index_of("e14")), (Weight{0, 0}));
  EXPECT_EQ(abelianization_weights(A), (std::vector<Weight>{{1, 0}, {-1, 1}, {0, -1}}));
}

TEST(Weights, AbelianizationMatchesBlockDimensionsBruteForce) {
  // Oracle: for each weight w, multiplicity = dim L_w - dim([L,L] ∩ L_w),
  // where [L,L] ∩ L_w is spanned by brackets of pairs with weights adding to w.
  std::mt19937_64 rng(21);
  for (int t = 0; t < 20; ++t) {
    const auto pairs = oracle::random_closed_pattern(rng, 5);
    const LieAlgebra L = matrix_unit_algebra(pairs, {2, 3}, oracle::random_scales(rng, pairs.size()));
    std::map<Weight, std::size_t> expected;
    std::set<Weight> distinct(L.weights().begin(), L.weights().end());
    for (const auto& w : distinct) {
      std::vector<Vec> brackets;
      for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = 0; j < L.dim(); ++j)
          if (L.weight(i) + L.weight(j) == w) brackets.push_back(L.bracket_basis(i, j));
      const std::size_t block = weight_indices(L, w).size();
      const std::size_t hit = Subspace::span(L.dim(), brackets).dim();
      if (block > hit) expected[w] = block - hit;
    }
    std::map<Weight, std::size_t> got;
    for (const auto& w : abelianization_weights(L)) ++got[w];
    EXPECT_EQ(got, expected);
  }
}

TEST(Weights, AdditivityViolationDetected) {
  const LieAlgebra L({"a", "b", "c"}, {Weight{1}, Weight{1}, Weight{1}}, {{0, 1, {{Rat(1), 2}}}}, 1);
  const auto bad = check_weight_additivity(L);
  ASSERT_TRUE(bad);
  EXPECT_EQ(*bad, (std::array<std::size_t, 3>{0, 1, 2}));
  EXPECT_THROW(abelianization_weights(L), DomainError);
}

TEST(LieAlgebraValidation, RejectsBadInput) {
  EXPECT_THROW(LieAlgebra({"a", "b"}, {Weight{0}}, {}, 1), InputError);
  EXPECT_THROW(LieAlgebra({"a", "b"}, {Weight{0}, Weight{0}}, {{1, 0, {}}}, 1), InputError);
  EXPECT_THROW(LieAlgebra({"a", "b"}, {Weight{0}, Weight{0}}, {{0, 1, {{Rat(1), 7}}}}, 1), InputError);
  EXPECT_THROW(LieAlgebra({"a", "b"}, {Weight{0}, Weight{0}}, {{0, 1, {}}, {0, 1, {}}}, 1), InputError);
  EXPECT_THROW(LieAlgebra({"a", "b"}, {Weight{0}, Weight{0, 1}}, {}, 1), InputError);
  EXPECT_THROW(matrix_unit_algebra({{0, 1}, {1, 2}}, {1}), InputError);  // (0,2) missing
  EXPECT_THROW(build_u9_algebra().index_of("e99"), InputError);
}

TEST(LieProperties, BracketIsAntisymmetricAndBilinear) {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<int> c(-3, 3);
  const LieAlgebra L = build_u9_algebra();
  auto rand_vec = [&] {
    Vec v(L.dim());
    for (auto& x : v) x = Rat(c(rng));
    return v;
  };
  for (int t = 0; t < 100; ++t) {
    const Vec x = rand_vec(), y = rand_vec(), z = rand_vec();
    const Vec xy = bracket(L, x, y);
    const Vec yx = bracket(L, y, x);
    for (std::size_t i = 0; i < L.dim(); ++i) EXPECT_EQ(xy[i], -yx[i]);
    Vec sum(L.dim());
    for (std::size_t i = 0; i < L.dim(); ++i) sum[i] = x[i] + Rat(2) * z[i];
    const Vec lhs = bracket(L, sum, y);
    const Vec zy = bracket(L, z, y);
    for (std::size_t i = 0; i < L.dim(); ++i) EXPECT_EQ(lhs[i], xy[i] + Rat(2) * zy[i]);
  }
}

TEST(LieProperties, RandomClosedAlgebrasAreLieAndWeightHomogeneous) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 20; ++t) {
    const int n = 4 + t % 3;
    const auto pairs = oracle::random_closed_pattern(rng, n);
    const LieAlgebra L = matrix_unit_algebra(pairs, {1, 2}, oracle::random_scales(rng, pairs.size()));
    EXPECT_FALSE(check_jacobi(L));
    EXPECT_FALSE(check_weight_additivity(L));
    // Multiplicity bookkeeping: abelianization size = dim - dim [L,L].
    EXPECT_EQ(abelianization_weights(L).size(), L.dim() - derived_subalgebra(L).dim());
    std::size_t total = 0;
    std::set<Weight> distinct(L.weights().begin(), L.weights().end());
    for (const auto& w : distinct) total += weight_indices(L, w).size();
    EXPECT_EQ(total, L.dim());
  }
}
