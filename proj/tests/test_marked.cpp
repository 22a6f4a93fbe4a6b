#include <gtest/gtest.h>

#include <set>

#include "abelscope/marked.hpp"

using namespace abelscope;

namespace {

Marking<IntegerOracle> z_marking() { return Marking<IntegerOracle>(IntegerOracle{}, {Int(1)}); }
Marking<CyclicOracle> zmod_marking(long n) { return Marking<CyclicOracle>(CyclicOracle(n), {1L}); }

template <class O>
Marking<O> gamma_marking(O o) {
  std::vector<typename O::Element> gens;
  std::vector<std::string> names;
  for (const auto& [name, g] : default_generators()) {
    if constexpr (std::is_same_v<O, GammaOracle>) {
      gens.push_back(g);
    } else {
      gens.push_back(canonical_mod_MZ(g));
    }
    names.push_back(name);
  }
  return Marking<O>(std::move(o), std::move(gens), std::move(names));
}

// A free abelian group Z^2 given as pairs, for a second non-cyclic example.
struct Z2Oracle {
  using Element = std::pair<long, long>;
  Element identity() const { return {0, 0}; }
  Element mul(const Element& a, const Element& b) const { return {a.first + b.first, a.second + b.second}; }
  Element inv(const Element& a) const { return {-a.first, -a.second}; }
  bool eq(const Element& a, const Element& b) const { return a == b; }
  std::string key(const Element& a) const { return std::to_string(a.first) + "," + std::to_string(a.second); }
};

// Deliberately inconsistent: eq disagrees with key on the identity.
struct BrokenOracle {
  using Element = long;
  long identity() const { return 0; }
  long mul(long a, long b) const { return (a + b) % 3; }
  long inv(long a) const { return (3 - a) % 3; }
  bool eq(long a, long b) const { return a == b && a != 0; }
  std::string key(long a) const { return std::to_string(a); }
};

}  // namespace

TEST(Ball, IntegersRadiusTwo) {
  const BallGraph b = ball(z_marking(), 2);
  EXPECT_EQ(b.vertex_count, 5u);
  EXPECT_EQ(b.edges.size(), 4u);
  // Path shape: every vertex has in+out degree at most 2, exactly two endpoints of degree 1.
  std::vector<int> degree(b.vertex_count, 0);
  for (const auto& e : b.edges) {
    ++degree[e.src];
    ++degree[e.dst];
  }
  EXPECT_EQ(std::count(degree.begin(), degree.end(), 1), 2);
  EXPECT_EQ(std::count(degree.begin(), degree.end(), 2), 3);
}

TEST(Ball, CyclicFiveRadiusTwoIsAFiveCycle) {
  const BallGraph b = ball(zmod_marking(5), 2);
  EXPECT_EQ(b.vertex_count, 5u);
  EXPECT_EQ(b.edges.size(), 5u);
  // Brute force: following label-0 edges from vertex 0 returns after 5 steps.
  std::size_t v = 0;
  std::set<std::size_t> visited;
  for (int i = 0; i < 5; ++i) {
    visited.insert(v);
    const auto it = std::find_if(b.edges.begin(), b.edges.end(), [&](const Edge& e) { return e.src == v; });
    ASSERT_NE(it, b.edges.end());
    v = it->dst;
  }
  EXPECT_EQ(v, 0u);
  EXPECT_EQ(visited.size(), 5u);
}

TEST(Ball, RadiusZero) {
  for (const BallGraph& b : {ball(z_marking(), 0), ball(zmod_marking(3), 0)}) {
    EXPECT_EQ(b.vertex_count, 1u);
    EXPECT_TRUE(b.edges.empty());
  }
  const BallGraph g = ball(gamma_marking(GammaOracle{GroupParams{Prime(2)}}), 0);
  EXPECT_EQ(g.vertex_count, 1u);
  // Generators are not the identity, so no loop edges at the root.
  EXPECT_TRUE(g.edges.empty());
}

TEST(Ball, IntegerBallSizes) {
  for (std::size_t r = 0; r <= 10; ++r) EXPECT_EQ(ball(z_marking(), r).vertex_count, 2 * r + 1);
}

TEST(Ball, FreeAbelianRankTwoSizes) {
  const Marking<Z2Oracle> m(Z2Oracle{}, {{1, 0}, {0, 1}});
  for (std::size_t r = 0; r <= 6; ++r) EXPECT_EQ(ball(m, r).vertex_count, 2 * r * r + 2 * r + 1);
}

TEST(Ball, VertexWordsEvaluateToDistinctElements) {
  const auto m = gamma_marking(GammaOracle{GroupParams{Prime(3)}});
  const BallGraph b = ball(m, 2);
  std::set<std::string> keys;
  for (std::size_t v = 0; v < b.vertex_count; ++v) {
    const Word w = vertex_word(b, v);
    EXPECT_EQ(w.size(), b.depths[v]);
    keys.insert(evaluate(m, w).key());
  }
  EXPECT_EQ(keys.size(), b.vertex_count);
  for (const auto& e : b.edges) {
    Word w = vertex_word(b, e.src);
    w.push_back(Letter{e.gen, false});
    EXPECT_EQ(evaluate(m, w), evaluate(m, vertex_word(b, e.dst)));
  }
}

TEST(Ball, InconsistentOracleIsReported) {
  const Marking<BrokenOracle> m(BrokenOracle{}, {1L});
  EXPECT_THROW(ball(m, 3), InternalError);
}

TEST(Marking, RejectsEmptyGenerators) {
  EXPECT_THROW(Marking<IntegerOracle>(IntegerOracle{}, {}), InputError);
  EXPECT_THROW(Marking<IntegerOracle>(IntegerOracle{}, {Int(1)}, {"a", "b"}), InputError);
  EXPECT_THROW(CyclicOracle(0), InputError);
}

TEST(BallsEqual, Examples) {
  const BallGraph z1 = ball(z_marking(), 1);
  EXPECT_TRUE(balls_equal(z1, z1));
  EXPECT_TRUE(balls_equal(z1, ball(zmod_marking(5), 1)));
  EXPECT_FALSE(balls_equal(ball(z_marking(), 2), ball(zmod_marking(5), 2)));
  EXPECT_THROW(balls_equal(z1, ball(z_marking(), 2)), InputError);
  const Marking<Z2Oracle> two(Z2Oracle{}, {{1, 0}, {0, 1}});
  EXPECT_THROW(balls_equal(z1, ball(two, 1)), InputError);
}

TEST(Agreement, Examples) {
  EXPECT_EQ(agreement_radius(z_marking(), z_marking(), 4), 4u);
  EXPECT_EQ(agreement_radius(z_marking(), zmod_marking(5), 5), 1u);
  // Z/n agrees with Z while the ball of radius r has 2r+1 < n vertices.
  for (long n = 2; n <= 12; ++n) {
    EXPECT_EQ(agreement_radius(z_marking(), zmod_marking(n), 8), static_cast<std::size_t>((n - 2) / 2)) << n;
  }
  const Marking<Z2Oracle> two(Z2Oracle{}, {{1, 0}, {0, 1}});
  EXPECT_THROW(agreement_radius(z_marking(), two, 3), InputError);
}

TEST(Divergence, CyclicVersusIntegers) {
  const auto w = divergence_witness(z_marking(), zmod_marking(5), 5);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->trivial_in, 2);
  EXPECT_EQ(w->word.size(), 5u);
  EXPECT_EQ(evaluate(zmod_marking(5), w->word), 0);
  EXPECT_NE(evaluate(z_marking(), w->word), 0);
  EXPECT_FALSE(divergence_witness(z_marking(), zmod_marking(5), 2));
  EXPECT_FALSE(divergence_witness(z_marking(), z_marking(), 6));
}

TEST(Divergence, GammaVersusQuotient) {
  const GroupParams params{Prime(2)};
  const auto g = gamma_marking(GammaOracle{params});
  const auto q = gamma_marking(GammaModMZOracle{params});
  EXPECT_EQ(agreement_radius(g, q, 3), 3u);
  const auto w = divergence_witness(g, q, 4);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->trivial_in, 2);
  const GammaElt x = evaluate(g, w->word);
  EXPECT_TRUE(is_in_MZ(x));
  EXPECT_FALSE(x.is_identity());
  EXPECT_TRUE(is_in_MZ(evaluate(q, w->word).rep));
  EXPECT_LE(w->word.size(), 8u);
}

TEST(MarkedProperties, TruncationIsPrefixAndDeterministic) {
  const auto m = gamma_marking(GammaOracle{GroupParams{Prime(2)}});
  const BallGraph big = ball(m, 3);
  EXPECT_TRUE(balls_equal(ball(m, 3), big));
  std::size_t prev = 0;
  for (std::size_t r = 0; r <= 3; ++r) {
    const BallGraph small = ball(m, r);
    EXPECT_TRUE(balls_equal(truncate(big, r), small)) << r;
    EXPECT_GE(small.vertex_count, prev);
    prev = small.vertex_count;
  }
  EXPECT_THROW(truncate(big, 4), InputError);
}

TEST(MarkedProperties, EdgeSetIsSymmetricUnderInversion) {
  // For every edge v -g-> w the inverse letter leads back, and every vertex
  // strictly inside the ball has exactly one outgoing edge per generator.
  const auto m = gamma_marking(GammaOracle{GroupParams{Prime(3)}});
  const BallGraph b = ball(m, 3);
  std::vector<std::size_t> out(b.vertex_count, 0);
  for (const auto& e : b.edges) {
    ++out[e.src];
    Word w = vertex_word(b, e.dst);
    w.push_back(Letter{e.gen, true});
    EXPECT_EQ(evaluate(m, w), evaluate(m, vertex_word(b, e.src)));
  }
  for (std::size_t v = 0; v < b.vertex_count; ++v)
    if (b.depths[v] < b.radius) EXPECT_EQ(out[v], b.generator_count);
}

TEST(Words, Formatting) {
  const Word w{{0, false}, {1, true}};
  EXPECT_EQ(word_str(w, {"a", "b"}), "a b^-1");
  EXPECT_EQ(word_str({}, {"a"}), "1");
  EXPECT_EQ(inverse_word(w), (Word{{1, false}, {0, true}}));
}
