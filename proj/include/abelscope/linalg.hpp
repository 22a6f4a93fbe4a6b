#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "abelscope/exact.hpp"

namespace abelscope {

using Vec = std::vector<Rat>;

/// Dense row-major matrix over Q.
class QMat {
 public:
  QMat() = default;
  QMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  /// Builds from nested rows; all rows must have equal length (InputError otherwise).
  static QMat from_rows(const std::vector<Vec>& rows);
  static QMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  std::span<const Rat> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }
  Vec column(std::size_t c) const;

  QMat transpose() const;
  bool is_zero() const;

  friend bool operator==(const QMat&, const QMat&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> a_;
};

QMat operator*(const QMat& a, const QMat& b);
Vec operator*(const QMat& a, std::span<const Rat> v);

bool is_zero(std::span<const Rat> v);

struct Echelon {
  QMat reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form with pivot columns.
Echelon rref(const QMat& m);
std::size_t rank(const QMat& m);

/// A linear subspace of Q^n held in canonical form: its basis is the set of
/// nonzero rows of a reduced echelon matrix, so equal subspaces compare equal.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}
  /// Span of arbitrary (possibly dependent) vectors of length ambient_dim.
  static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& vectors);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

/// Basis of {v : m v = 0}.
Subspace kernel_basis(const QMat& m);

/// Span of the columns of m.
Subspace column_space(const QMat& m);

/// Coefficients c with v = sum c_i basis_i, or nullopt when v is not in s.
/// Throws InputError when v has the wrong length.
std::optional<Vec> in_span(std::span<const Rat> v, const Subspace& s);

/// {v in s : v_i = 0 for i outside coords}.
Subspace intersect_with_coordinate_subspace(const Subspace& s, std::span<const std::size_t> coords);

/// Solves m x = b. Free variables are set to zero, which makes the returned
/// solution canonical. nullopt when the system is inconsistent.
std::optional<Vec> solve(const QMat& m, std::span<const Rat> b);

}  // namespace abelscope
