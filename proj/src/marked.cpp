#include "abelscope/marked.hpp"

namespace abelscope {

CyclicOracle::CyclicOracle(long n) : modulus(n) {
  if (n < 1) throw InputError("cyclic group order must be positive");
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l.inverse = !l.inverse;
  return out;
}

std::string word_str(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string s;
  for (const auto& l : w) {
    if (!s.empty()) s += ' ';
    s += names.at(l.gen);
    if (l.inverse) s += "^-1";
  }
  return s;
}

Word vertex_word(const BallGraph& b, std::size_t v) {
  if (v >= b.vertex_count) throw InputError("vertex out of range");
  Word w;
  for (; v != 0; v = b.tree[v].first) w.push_back(b.tree[v].second);
  return Word(w.rbegin(), w.rend());
}

BallGraph truncate(const BallGraph& b, std::size_t r) {
  if (r > b.radius) throw InputError("cannot truncate a ball to a larger radius");
  BallGraph out;
  out.radius = r;
  out.generator_count = b.generator_count;
  while (out.vertex_count < b.vertex_count && b.depths[out.vertex_count] <= r) ++out.vertex_count;
  out.depths.assign(b.depths.begin(), b.depths.begin() + static_cast<std::ptrdiff_t>(out.vertex_count));
  out.tree.assign(b.tree.begin(), b.tree.begin() + static_cast<std::ptrdiff_t>(out.vertex_count));
  for (const auto& e : b.edges) {
    if (e.src < out.vertex_count && e.dst < out.vertex_count) out.edges.push_back(e);
  }
  return out;
}

bool balls_equal(const BallGraph& a, const BallGraph& b) {
  if (a.radius != b.radius) throw InputError("balls have different radii");
  if (a.generator_count != b.generator_count) throw InputError("balls have different generator counts");
  return a.vertex_count == b.vertex_count && a.depths == b.depths && a.edges == b.edges;
}

}  // namespace abelscope
