#include "abelscope/liealg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace abelscope {

bool Weight::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](long x) { return x == 0; });
}

Weight operator+(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank()) throw InputError("weight rank mismatch");
  std::vector<long> c(a.rank());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
  return Weight(std::move(c));
}

std::string Weight::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << ')';
  return os.str();
}

LieAlgebra::LieAlgebra(std::vector<std::string> labels, std::vector<Weight> weights,
                       const std::vector<BracketEntry>& brackets, std::size_t rank)
    : labels_(std::move(labels)), weights_(std::move(weights)), rank_(rank) {
  if (weights_.size() != labels_.size()) throw InputError("one weight per basis element is required");
  for (const auto& w : weights_) {
    if (w.rank() != rank_) throw InputError("weight " + w.str() + " does not have rank " + std::to_string(rank_));
  }
  const std::size_t n = labels_.size();
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& b : brackets) {
    if (b.i >= b.j) throw InputError("bracket entries need i < j");
    if (b.j >= n) throw InputError("bracket index out of range");
    const auto key = std::make_pair(b.i, b.j);
    if (!seen.insert(key).second) {
      throw InputError("duplicate bracket entry (" + std::to_string(b.i) + "," + std::to_string(b.j) + ")");
    }
    Vec v(n);
    for (const auto& t : b.terms) {
      if (t.index >= n) throw InputError("bracket term index out of range");
      v[t.index] += t.coeff;
    }
    if (!is_zero(v)) brackets_.emplace(key, std::move(v));
  }
}

std::size_t LieAlgebra::index_of(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw InputError("unknown basis label '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

Vec LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  if (i >= dim() || j >= dim()) throw InputError("basis index out of range");
  if (i == j) return Vec(dim());
  const auto it = brackets_.find({std::min(i, j), std::max(i, j)});
  if (it == brackets_.end()) return Vec(dim());
  if (i < j) return it->second;
  Vec v = it->second;
  for (auto& x : v) x = -x;
  return v;
}

Vec LieAlgebra::unit(std::size_t i) const {
  Vec v(dim());
  v.at(i) = 1;
  return v;
}

Vec bracket(const LieAlgebra& L, const Vec& x, const Vec& y) {
  if (x.size() != L.dim() || y.size() != L.dim()) throw InputError("bracket: vector length differs from algebra dimension");
  Vec out(L.dim());
  for (const auto& [key, v] : L.structure_constants()) {
    const auto [i, j] = key;
    // x_i y_j - x_j y_i multiplies [e_i, e_j].
    const Rat c = x[i] * y[j] - x[j] * y[i];
    if (c.is_zero()) continue;
    for (std::size_t k = 0; k < out.size(); ++k) {
      if (!v[k].is_zero()) out[k] += c * v[k];
    }
  }
  return out;
}

std::optional<std::array<std::size_t, 3>> check_jacobi(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vec xi = L.unit(i), xj = L.unit(j), xk = L.unit(k);
        Vec sum = bracket(L, L.bracket_basis(i, j), xk);
        const Vec b = bracket(L, L.bracket_basis(j, k), xi);
        const Vec c = bracket(L, L.bracket_basis(k, i), xj);
        for (std::size_t t = 0; t < n; ++t) sum[t] += b[t] + c[t];
        if (!is_zero(sum)) return std::array{i, j, k};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::array<std::size_t, 3>> check_weight_additivity(const LieAlgebra& L) {
  for (const auto& [key, v] : L.structure_constants()) {
    const Weight expected = L.weight(key.first) + L.weight(key.second);
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (!v[k].is_zero() && L.weight(k) != expected) return std::array{key.first, key.second, k};
    }
  }
  return std::nullopt;
}

Subspace derived_subalgebra(const LieAlgebra& L) {
  std::vector<Vec> vectors;
  for (const auto& [key, v] : L.structure_constants()) vectors.push_back(v);
  return Subspace::span(L.dim(), vectors);
}

std::vector<std::size_t> weight_indices(const LieAlgebra& L, const Weight& w) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < L.dim(); ++i) {
    if (L.weight(i) == w) out.push_back(i);
  }
  return out;
}

std::vector<Weight> abelianization_weights(const LieAlgebra& L) {
  if (check_weight_additivity(L)) throw DomainError("structure constants are not weight-homogeneous");
  const Subspace derived = derived_subalgebra(L);
  std::vector<Weight> distinct;
  for (const auto& w : L.weights()) {
    if (std::find(distinct.begin(), distinct.end(), w) == distinct.end()) distinct.push_back(w);
  }
  std::vector<Weight> out;
  for (const auto& w : distinct) {
    const auto idx = weight_indices(L, w);
    const std::size_t in_derived = intersect_with_coordinate_subspace(derived, idx).dim();
    out.insert(out.end(), idx.size() - in_derived, w);
  }
  return out;
}

LieAlgebra matrix_unit_algebra(const std::vector<std::pair<int, int>>& pairs,
                               const std::vector<int>& torus_indices, const std::vector<Rat>& scales) {
  if (!scales.empty() && scales.size() != pairs.size()) throw InputError("one scale per matrix unit is required");
  std::map<std::pair<int, int>, std::size_t> position;
  std::vector<std::string> labels;
  std::vector<Weight> weights;
  for (const auto& [i, j] : pairs) {
    if (i < 0 || i >= j || j > 9) throw InputError("matrix unit pairs need 0 <= i < j <= 9");
    if (!position.emplace(std::make_pair(i, j), labels.size()).second) throw InputError("duplicate matrix unit");
    labels.push_back("e" + std::to_string(i) + std::to_string(j));
    std::vector<long> w;
    for (int t : torus_indices) w.push_back((j == t ? 1 : 0) - (i == t ? 1 : 0));
    weights.emplace_back(std::move(w));
  }
  auto scale = [&](std::size_t a) { return scales.empty() ? Rat(1) : scales[a]; };
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    if (scale(a).is_zero()) throw InputError("matrix unit scale must be nonzero");
  }

  std::vector<BracketEntry> entries;
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    for (std::size_t b = a + 1; b < pairs.size(); ++b) {
      const auto [i, j] = pairs[a];
      const auto [k, l] = pairs[b];
      BracketEntry e{a, b, {}};
      const Rat s = scale(a) * scale(b);
      // [E_ij, E_kl] = delta_jk E_il - delta_li E_kj
      auto add = [&](int r, int c, const Rat& sign) {
        const auto it = position.find({r, c});
        if (it == position.end()) throw InputError("matrix unit set is not closed under composition");
        e.terms.push_back({sign * s / scale(it->second), it->second});
      };
      if (j == k) add(i, l, 1);
      if (l == i) add(k, j, -1);
      if (!e.terms.empty()) entries.push_back(std::move(e));
    }
  }
  return LieAlgebra(std::move(labels), std::move(weights), entries, torus_indices.size());
}

LieAlgebra build_u9_algebra() {
  return matrix_unit_algebra({{0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {0, 4}, {1, 4}}, {2, 3});
}

LieAlgebra build_abels4_algebra() {
  return matrix_unit_algebra({{1, 2}, {2, 3}, {3, 4}, {1, 3}, {2, 4}, {1, 4}}, {2, 3});
}

LieAlgebra abelian_algebra(const std::vector<Weight>& weights) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < weights.size(); ++i) labels.push_back("x" + std::to_string(i));
  const std::size_t rank = weights.empty() ? 0 : weights.front().rank();
  return LieAlgebra(std::move(labels), weights, {}, rank);
}

}  // namespace abelscope
