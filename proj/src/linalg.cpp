#include "abelscope/linalg.hpp"

#include <algorithm>

namespace abelscope {

QMat QMat::from_rows(const std::vector<Vec>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  QMat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("ragged matrix rows");
    std::copy(rows[r].begin(), rows[r].end(), m.a_.begin() + static_cast<std::ptrdiff_t>(r * cols));
  }
  return m;
}

QMat QMat::identity(std::size_t n) {
  QMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vec QMat::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

QMat QMat::transpose() const {
  QMat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool QMat::is_zero() const { return abelscope::is_zero(a_); }

QMat operator*(const QMat& a, const QMat& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product: inner dimensions differ");
  QMat out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rat& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
      }
    }
  }
  return out;
}

Vec operator*(const QMat& a, std::span<const Rat> v) {
  if (a.cols() != v.size()) throw InputError("matrix-vector product: dimension mismatch");
  Vec out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (!v[k].is_zero() && !a(i, k).is_zero()) out[i] += a(i, k) * v[k];
    }
  }
  return out;
}

bool is_zero(std::span<const Rat> v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.is_zero(); });
}

Echelon rref(const QMat& m) {
  Echelon e{m, {}};
  QMat& a = e.reduced;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
    std::size_t pivot = lead;
    while (pivot < a.rows() && a(pivot, c).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != lead) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(lead, j));
    }
    const Rat inv = Rat(1) / a(lead, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(lead, j) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead || a(r, c).is_zero()) continue;
      const Rat f = a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) {
        if (!a(lead, j).is_zero()) a(r, j) -= f * a(lead, j);
      }
    }
    e.pivots.push_back(c);
    ++lead;
  }
  return e;
}

std::size_t rank(const QMat& m) { return rref(m).pivots.size(); }

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vec>& vectors) {
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) throw InputError("span: vector length differs from ambient dimension");
  }
  Subspace s(ambient_dim);
  if (vectors.empty()) return s;
  const Echelon e = rref(QMat::from_rows(vectors));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    const auto row = e.reduced.row(r);
    s.basis_.emplace_back(row.begin(), row.end());
  }
  s.pivots_ = e.pivots;
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<Vec> rows;
  const QMat id = QMat::identity(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) rows.emplace_back(id.row(i).begin(), id.row(i).end());
  return span(ambient_dim, rows);
}

Subspace kernel_basis(const QMat& m) {
  const Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;

  std::vector<Vec> vectors;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), vectors);
}

Subspace column_space(const QMat& m) {
  std::vector<Vec> cols;
  cols.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return Subspace::span(m.rows(), cols);
}

std::optional<Vec> in_span(std::span<const Rat> v, const Subspace& s) {
  if (v.size() != s.ambient_dim()) throw InputError("in_span: vector length differs from ambient dimension");
  // With a reduced echelon basis the coefficient of basis_i is read off at its pivot.
  Vec coeffs(s.dim());
  Vec residual(v.begin(), v.end());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    coeffs[i] = v[s.pivots()[i]];
    if (coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < residual.size(); ++j) residual[j] -= coeffs[i] * s.basis()[i][j];
  }
  if (!is_zero(residual)) return std::nullopt;
  return coeffs;
}

Subspace intersect_with_coordinate_subspace(const Subspace& s, std::span<const std::size_t> coords) {
  std::vector<bool> keep(s.ambient_dim(), false);
  for (auto c : coords) {
    if (c >= s.ambient_dim()) throw InputError("coordinate index out of range");
    keep[c] = true;
  }
  std::vector<std::size_t> outside;
  for (std::size_t j = 0; j < s.ambient_dim(); ++j) {
    if (!keep[j]) outside.push_back(j);
  }
  // Coefficient vectors c with sum c_i basis_i vanishing on every outside coordinate.
  QMat constraints(outside.size(), s.dim());
  for (std::size_t r = 0; r < outside.size(); ++r)
    for (std::size_t i = 0; i < s.dim(); ++i) constraints(r, i) = s.basis()[i][outside[r]];

  const Subspace coeffs = kernel_basis(constraints);
  std::vector<Vec> vectors;
  for (const auto& c : coeffs.basis()) {
    Vec v(s.ambient_dim());
    for (std::size_t i = 0; i < s.dim(); ++i) {
      if (c[i].is_zero()) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] += c[i] * s.basis()[i][j];
    }
    vectors.push_back(std::move(v));
  }
  return Subspace::span(s.ambient_dim(), vectors);
}

std::optional<Vec> solve(const QMat& m, std::span<const Rat> b) {
  if (b.size() != m.rows()) throw InputError("solve: right-hand side length differs from row count");
  QMat aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const Echelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

}  // namespace abelscope
