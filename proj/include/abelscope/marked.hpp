#pragma once

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "abelscope/exact.hpp"
#include "abelscope/gamma.hpp"

namespace abelscope {

/// A group given by evaluation. key() must be a canonical text form:
/// eq(a, b) holds exactly when key(a) == key(b).
template <class O>
concept GroupOracle = requires(const O& o, const typename O::Element& a, const typename O::Element& b) {
  { o.identity() } -> std::convertible_to<typename O::Element>;
  { o.mul(a, b) } -> std::convertible_to<typename O::Element>;
  { o.inv(a) } -> std::convertible_to<typename O::Element>;
  { o.eq(a, b) } -> std::convertible_to<bool>;
  { o.key(a) } -> std::convertible_to<std::string>;
};

struct IntegerOracle {
  using Element = Int;
  Int identity() const { return 0; }
  Int mul(const Int& a, const Int& b) const { return a + b; }
  Int inv(const Int& a) const { return -a; }
  bool eq(const Int& a, const Int& b) const { return a == b; }
  std::string key(const Int& a) const { return a.get_str(); }
};

/// Z/n with elements kept in [0, n).
struct CyclicOracle {
  using Element = long;
  /// Throws InputError for n < 1.
  explicit CyclicOracle(long n);
  long modulus;
  long identity() const { return 0; }
  long mul(long a, long b) const { return (a + b) % modulus; }
  long inv(long a) const { return (modulus - a) % modulus; }
  bool eq(long a, long b) const { return a == b; }
  std::string key(long a) const { return std::to_string(a); }
};

struct GammaOracle {
  using Element = GammaElt;
  GroupParams params;
  GammaElt identity() const { return abelscope::identity(); }
  GammaElt mul(const GammaElt& a, const GammaElt& b) const { return abelscope::mul(params, a, b); }
  GammaElt inv(const GammaElt& a) const { return abelscope::inv(params, a); }
  bool eq(const GammaElt& a, const GammaElt& b) const { return a == b; }
  std::string key(const GammaElt& a) const { return a.key(); }
};

/// Gamma/M_Z; elements are kept as canonical coset representatives.
struct GammaModMZOracle {
  using Element = CosetRep;
  GroupParams params;
  CosetRep identity() const { return canonical_mod_MZ(abelscope::identity()); }
  CosetRep mul(const CosetRep& a, const CosetRep& b) const {
    return canonical_mod_MZ(abelscope::mul(params, a.rep, b.rep));
  }
  CosetRep inv(const CosetRep& a) const { return canonical_mod_MZ(abelscope::inv(params, a.rep)); }
  bool eq(const CosetRep& a, const CosetRep& b) const {
    return is_in_MZ(abelscope::mul(params, abelscope::inv(params, a.rep), b.rep));
  }
  std::string key(const CosetRep& a) const { return a.rep.key(); }
};

/// A group with an ordered tuple of generators.
template <GroupOracle O>
struct Marking {
  O oracle;
  std::vector<typename O::Element> generators;
  std::vector<std::string> names;

  /// Throws InputError for an empty generator list or a name count mismatch.
  Marking(O o, std::vector<typename O::Element> gens, std::vector<std::string> gen_names = {})
      : oracle(std::move(o)), generators(std::move(gens)), names(std::move(gen_names)) {
    if (generators.empty()) throw InputError("a marking needs at least one generator");
    if (names.empty()) {
      for (std::size_t i = 0; i < generators.size(); ++i) names.push_back("g" + std::to_string(i));
    }
    if (names.size() != generators.size()) throw InputError("one name per generator is required");
  }
};

/// One letter of a word: generator `gen`, inverted or not.
struct Letter {
  std::size_t gen;
  bool inverse;
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

Word inverse_word(const Word& w);
/// "x02 x23^-1 ..." ("1" for the empty word).
std::string word_str(const Word& w, const std::vector<std::string>& names);

struct Edge {
  std::size_t src;
  std::size_t gen;
  std::size_t dst;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A radius-r ball of a Cayley graph with canonical BFS vertex numbering.
/// Vertex 0 is the identity; vertices are numbered in discovery order,
/// expanding each vertex by the generators in index order and then their
/// inverses. Only edges labeled by positive generators are stored.
struct BallGraph {
  std::size_t radius = 0;
  std::size_t generator_count = 0;
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;                 ///< sorted
  std::vector<std::size_t> depths;         ///< word length of each vertex
  /// BFS tree: the parent of each non-root vertex and the letter reaching it.
  std::vector<std::pair<std::size_t, Letter>> tree;
};

/// Geodesic word for vertex v read off the BFS tree.
Word vertex_word(const BallGraph& b, std::size_t v);

/// The sub-ball of radius r <= b.radius. Because BFS numbering visits
/// vertices by depth, this is a prefix of b.
BallGraph truncate(const BallGraph& b, std::size_t r);

/// Compares canonical forms. Throws InputError on radius or arity mismatch.
bool balls_equal(const BallGraph& a, const BallGraph& b);

template <GroupOracle O>
typename O::Element evaluate(const Marking<O>& m, const Word& w) {
  auto x = m.oracle.identity();
  for (const auto& l : w) {
    const auto& g = m.generators.at(l.gen);
    x = m.oracle.mul(x, l.inverse ? m.oracle.inv(g) : g);
  }
  return x;
}

namespace detail {

template <GroupOracle O>
std::vector<typename O::Element> inverses(const Marking<O>& m) {
  std::vector<typename O::Element> out;
  for (const auto& g : m.generators) out.push_back(m.oracle.inv(g));
  return out;
}

// Vertex lookup by canonical key, cross-checked against the oracle's equality.
template <GroupOracle O>
std::optional<std::size_t> find_vertex(const Marking<O>& m,
                                       const std::unordered_map<std::string, std::size_t>& index,
                                       const std::vector<typename O::Element>& elems,
                                       const typename O::Element& x, const std::string& key) {
  const auto it = index.find(key);
  if (it == index.end()) return std::nullopt;
  if (!m.oracle.eq(elems[it->second], x)) throw InternalError("oracle keys are not canonical");
  return it->second;
}

}  // namespace detail

template <GroupOracle O>
BallGraph ball(const Marking<O>& m, std::size_t r) {
  const auto& o = m.oracle;
  const auto inv_gens = detail::inverses(m);
  const std::size_t k = m.generators.size();

  BallGraph b;
  b.radius = r;
  b.generator_count = k;
  std::vector<typename O::Element> elems{o.identity()};
  std::unordered_map<std::string, std::size_t> index{{o.key(elems[0]), 0}};
  b.depths = {0};
  b.tree = {{0, Letter{0, false}}};

  // Right multiplication by g_i gives the edge v -> v g_i labeled i.
  for (std::size_t v = 0; v < elems.size(); ++v) {
    const bool expand = b.depths[v] < r;
    for (std::size_t dir = 0; dir < 2; ++dir) {
      if (dir == 1 && !expand) break;
      for (std::size_t i = 0; i < k; ++i) {
        auto x = o.mul(elems[v], dir == 0 ? m.generators[i] : inv_gens[i]);
        const std::string key = o.key(x);
        auto found = detail::find_vertex(m, index, elems, x, key);
        if (!found && expand) {
          found = elems.size();
          index.emplace(key, *found);
          elems.push_back(std::move(x));
          b.depths.push_back(b.depths[v] + 1);
          b.tree.emplace_back(v, Letter{i, dir == 1});
        }
        if (found && dir == 0) b.edges.push_back({v, i, *found});
      }
    }
  }
  b.vertex_count = elems.size();
  std::sort(b.edges.begin(), b.edges.end());
  return b;
}

/// Largest r <= rmax whose balls agree. Throws InputError on arity mismatch.
template <GroupOracle O1, GroupOracle O2>
std::size_t agreement_radius(const Marking<O1>& m1, const Marking<O2>& m2, std::size_t rmax) {
  if (m1.generators.size() != m2.generators.size()) throw InputError("markings have different generator counts");
  const BallGraph b1 = ball(m1, rmax);
  const BallGraph b2 = ball(m2, rmax);
  for (std::size_t r = 1; r <= rmax; ++r) {
    if (!balls_equal(truncate(b1, r), truncate(b2, r))) return r - 1;
  }
  return rmax;
}

/// A word that is trivial in exactly one of two markings.
struct RelationWitness {
  Word word;
  int trivial_in;  ///< 1 or 2
};

/// Breadth-first search over words of length <= rmax in both markings at
/// once. Stops at the first pair of words u, v that reach the same element
/// in one marking but different elements in the other, returning u v^-1.
template <GroupOracle O1, GroupOracle O2>
std::optional<RelationWitness> divergence_witness(const Marking<O1>& m1, const Marking<O2>& m2, std::size_t rmax) {
  if (m1.generators.size() != m2.generators.size()) throw InputError("markings have different generator counts");
  const std::size_t k = m1.generators.size();
  const auto inv1 = detail::inverses(m1);
  const auto inv2 = detail::inverses(m2);

  struct Node {
    typename O1::Element x1;
    typename O2::Element x2;
    std::size_t depth;
    std::size_t parent;
    Letter letter;
  };
  std::vector<Node> nodes{{m1.oracle.identity(), m2.oracle.identity(), 0, 0, Letter{0, false}}};
  std::unordered_map<std::string, std::size_t> seen1{{m1.oracle.key(nodes[0].x1), 0}};
  std::unordered_map<std::string, std::size_t> seen2{{m2.oracle.key(nodes[0].x2), 0}};

  auto word_of = [&](std::size_t v) {
    Word w;
    for (; v != 0; v = nodes[v].parent) w.push_back(nodes[v].letter);
    std::reverse(w.begin(), w.end());
    return w;
  };
  auto relation = [&](const Word& u, std::size_t v, int trivial_in) {
    Word w = u;
    const Word tail = inverse_word(word_of(v));
    w.insert(w.end(), tail.begin(), tail.end());
    return RelationWitness{std::move(w), trivial_in};
  };

  for (std::size_t v = 0; v < nodes.size() && nodes[v].depth < rmax; ++v) {
    for (std::size_t dir = 0; dir < 2; ++dir) {
      for (std::size_t i = 0; i < k; ++i) {
        const bool inverse = dir == 1;
        auto y1 = m1.oracle.mul(nodes[v].x1, inverse ? inv1[i] : m1.generators[i]);
        auto y2 = m2.oracle.mul(nodes[v].x2, inverse ? inv2[i] : m2.generators[i]);
        const std::string k1 = m1.oracle.key(y1);
        const std::string k2 = m2.oracle.key(y2);
        const auto h1 = seen1.find(k1);
        const auto h2 = seen2.find(k2);
        if (h1 != seen1.end() && h2 != seen2.end() && h1->second == h2->second) continue;
        Word u = word_of(v);
        u.push_back(Letter{i, inverse});
        if (h1 != seen1.end() && h2 == seen2.end()) return relation(u, h1->second, 1);
        if (h2 != seen2.end() && h1 == seen1.end()) return relation(u, h2->second, 2);
        if (h1 != seen1.end()) {
          // Both seen, at different nodes: one of them already disagrees with u.
          return relation(u, h1->second, 1);
        }
        const std::size_t id = nodes.size();
        nodes.push_back({std::move(y1), std::move(y2), nodes[v].depth + 1, v, Letter{i, inverse}});
        seen1.emplace(k1, id);
        seen2.emplace(k2, id);
      }
    }
  }
  return std::nullopt;
}

}  // namespace abelscope
