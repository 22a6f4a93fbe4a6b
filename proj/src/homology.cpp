#include "abelscope/homology.hpp"

namespace abelscope {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

void enumerate(std::size_t n, std::size_t degree, std::vector<std::size_t>& prefix,
               std::vector<std::vector<std::size_t>>& out) {
  if (prefix.size() == degree) {
    out.push_back(prefix);
    return;
  }
  const std::size_t start = prefix.empty() ? 0 : prefix.back() + 1;
  for (std::size_t i = start; i < n; ++i) {
    prefix.push_back(i);
    enumerate(n, degree, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

WedgeBasis::WedgeBasis(std::size_t n, std::size_t degree) : n_(n), degree_(degree) {
  if (degree < 1 || degree > 3) throw InputError("wedge degree must be 1, 2 or 3");
  std::vector<std::size_t> prefix;
  enumerate(n, degree, prefix, tuples_);
}

std::size_t WedgeBasis::position(const std::vector<std::size_t>& t) const {
  if (t.size() != degree_) throw InputError("wedge tuple has the wrong degree");
  std::size_t pos = 0;
  std::size_t next = 0;
  for (std::size_t s = 0; s < t.size(); ++s) {
    if (t[s] < next || t[s] >= n_) throw InputError("wedge tuple is not strictly increasing in range");
    // Count tuples that agree on the first s entries but have a smaller entry at s.
    for (std::size_t x = next; x < t[s]; ++x) pos += binomial(n_ - 1 - x, degree_ - 1 - s);
    next = t[s] + 1;
  }
  return pos;
}

std::string WedgeBasis::label(const LieAlgebra& L, std::size_t pos) const {
  std::string s;
  for (auto i : tuple(pos)) s += (s.empty() ? "" : "^") + L.labels().at(i);
  return s;
}

namespace {

// Adds c * (e_a ^ v) to the degree-2 vector `out`.
void add_wedge(const WedgeBasis& w2, Vec& out, const Rat& c, std::size_t a, const Vec& v) {
  for (std::size_t b = 0; b < v.size(); ++b) {
    if (v[b].is_zero() || a == b) continue;
    if (a < b) {
      out[w2.position({a, b})] += c * v[b];
    } else {
      out[w2.position({b, a})] -= c * v[b];
    }
  }
}

Weight monomial_weight(const LieAlgebra& L, const std::vector<std::size_t>& t) {
  Weight w = Weight::zero(L.rank());
  for (auto i : t) w = w + L.weight(i);
  return w;
}

}  // namespace

Vec wedge_monomial(const LieAlgebra& L, const std::vector<std::string>& labels) {
  const WedgeBasis basis(L.dim(), labels.size());
  std::vector<std::size_t> idx;
  for (const auto& l : labels) idx.push_back(L.index_of(l));
  Vec v(basis.size());
  int sign = 1;
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = 0; b + 1 < idx.size() - a; ++b) {
      if (idx[b] == idx[b + 1]) return v;
      if (idx[b] > idx[b + 1]) {
        std::swap(idx[b], idx[b + 1]);
        sign = -sign;
      }
    }
  }
  for (std::size_t b = 0; b + 1 < idx.size(); ++b) {
    if (idx[b] == idx[b + 1]) return v;
  }
  v[basis.position(idx)] = sign;
  return v;
}

QMat d2_matrix(const LieAlgebra& L) {
  const WedgeBasis w2(L.dim(), 2);
  QMat m(L.dim(), w2.size());
  for (std::size_t c = 0; c < w2.size(); ++c) {
    const auto& t = w2.tuple(c);
    const Vec b = L.bracket_basis(t[0], t[1]);
    for (std::size_t r = 0; r < L.dim(); ++r) m(r, c) = -b[r];
  }
  return m;
}

QMat d3_matrix(const LieAlgebra& L) {
  const WedgeBasis w2(L.dim(), 2);
  const WedgeBasis w3(L.dim(), 3);
  QMat m(w2.size(), w3.size());
  for (std::size_t c = 0; c < w3.size(); ++c) {
    const auto& t = w3.tuple(c);
    const std::size_t i = t[0], j = t[1], k = t[2];
    Vec col(w2.size());
    add_wedge(w2, col, 1, k, L.bracket_basis(i, j));
    add_wedge(w2, col, 1, j, L.bracket_basis(k, i));
    add_wedge(w2, col, 1, i, L.bracket_basis(j, k));
    for (std::size_t r = 0; r < w2.size(); ++r) m(r, c) = col[r];
  }
  return m;
}

std::optional<std::array<std::size_t, 3>> check_complex(const LieAlgebra& L) {
  const QMat composite = d2_matrix(L) * d3_matrix(L);
  const WedgeBasis w3(L.dim(), 3);
  for (std::size_t c = 0; c < composite.cols(); ++c) {
    if (!is_zero(composite.column(c))) {
      const auto& t = w3.tuple(c);
      return std::array{t[0], t[1], t[2]};
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> weight_positions(const LieAlgebra& L, std::size_t degree, const Weight& w) {
  const WedgeBasis basis(L.dim(), degree);
  std::vector<std::size_t> out;
  for (std::size_t pos = 0; pos < basis.size(); ++pos) {
    if (monomial_weight(L, basis.tuple(pos)) == w) out.push_back(pos);
  }
  return out;
}

Subspace kernel_weight_basis(const LieAlgebra& L, const Weight& w) {
  const auto cols = weight_positions(L, 2, w);
  const QMat d2 = d2_matrix(L);
  QMat block(d2.rows(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < d2.rows(); ++r) block(r, c) = d2(r, cols[c]);

  const Subspace kernel = kernel_basis(block);
  std::vector<Vec> embedded;
  for (const auto& k : kernel.basis()) {
    Vec v(d2.cols());
    for (std::size_t c = 0; c < cols.size(); ++c) v[cols[c]] = k[c];
    embedded.push_back(std::move(v));
  }
  return Subspace::span(d2.cols(), embedded);
}

Subspace image_weight_basis(const LieAlgebra& L, const Weight& w) {
  const QMat d3 = d3_matrix(L);
  std::vector<Vec> cols;
  for (auto c : weight_positions(L, 3, w)) cols.push_back(d3.column(c));
  return Subspace::span(d3.rows(), cols);
}

std::size_t h2_weight_dim(const LieAlgebra& L, const Weight& w) {
  const std::size_t ker = kernel_weight_basis(L, w).dim();
  const std::size_t im = image_weight_basis(L, w).dim();
  if (im > ker) throw InternalError("image of d3 exceeds kernel of d2; the complex is not a chain complex");
  return ker - im;
}

bool segment_contains_origin(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank()) throw InputError("segment endpoints have different ranks");
  // 0 = t a + (1-t) b for some t in [0,1] iff a, b are linearly dependent and
  // do not point the same way.
  for (std::size_t i = 0; i < a.rank(); ++i) {
    for (std::size_t j = i + 1; j < a.rank(); ++j) {
      if (a[i] * b[j] - a[j] * b[i] != 0) return false;
    }
  }
  long dot = 0;
  for (std::size_t i = 0; i < a.rank(); ++i) dot += a[i] * b[i];
  return dot <= 0;
}

AbelsVerdict abels_check(const LieAlgebra& L) {
  AbelsVerdict v;
  const auto ab = abelianization_weights(L);
  for (std::size_t i = 0; i < ab.size() && v.condition1.pass; ++i) {
    for (std::size_t j = i; j < ab.size(); ++j) {
      if (segment_contains_origin(ab[i], ab[j])) {
        v.condition1.pass = false;
        v.condition1.offending_pair = std::make_pair(ab[i], ab[j]);
        break;
      }
    }
  }
  v.condition2.h2_weight0_dim = h2_weight_dim(L, Weight::zero(L.rank()));
  v.condition2.pass = v.condition2.h2_weight0_dim == 0;
  v.finitely_presented = v.condition1.pass && v.condition2.pass;
  return v;
}

std::optional<Vec> express_in_image(const LieAlgebra& L, const Vec& v) {
  if (v.size() != binomial(L.dim(), 2)) throw InputError("express_in_image: vector is not in the degree-2 space");
  return solve(d3_matrix(L), v);
}

}  // namespace abelscope
