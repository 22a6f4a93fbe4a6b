#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abelscope/exact.hpp"
#include "abelscope/linalg.hpp"

namespace abelscope {

/// Integer weight of a torus eigenvector, one component per torus direction.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<long> components) : c_(std::move(components)) {}
  Weight(std::initializer_list<long> components) : c_(components) {}
  static Weight zero(std::size_t rank) { return Weight(std::vector<long>(rank, 0)); }

  std::size_t rank() const { return c_.size(); }
  long operator[](std::size_t i) const { return c_[i]; }
  const std::vector<long>& components() const { return c_; }
  bool is_zero() const;

  /// Throws InputError on rank mismatch.
  friend Weight operator+(const Weight& a, const Weight& b);
  friend auto operator<=>(const Weight&, const Weight&) = default;
  friend bool operator==(const Weight&, const Weight&) = default;

  /// "(1,0)"
  std::string str() const;

 private:
  std::vector<long> c_;
};

/// One coefficient c on basis element k in the expansion of a bracket.
struct Term {
  Rat coeff;
  std::size_t index;
};

/// [x_i, x_j] = sum of terms, with i < j.
struct BracketEntry {
  std::size_t i;
  std::size_t j;
  std::vector<Term> terms;
};

/// A finite-dimensional Lie algebra over Q given by structure constants on a
/// basis of torus eigenvectors. Only [x_i, x_j] with i < j is stored.
class LieAlgebra {
 public:
  /// Validates index ranges, label/weight counts and uniform weight rank;
  /// rejects i >= j and duplicate (i, j) entries. Does not check Jacobi or
  /// weight additivity (see check_jacobi / check_weight_additivity).
  LieAlgebra(std::vector<std::string> labels, std::vector<Weight> weights,
             const std::vector<BracketEntry>& brackets, std::size_t rank);

  std::size_t dim() const { return labels_.size(); }
  std::size_t rank() const { return rank_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Weight>& weights() const { return weights_; }
  const Weight& weight(std::size_t i) const { return weights_.at(i); }
  /// Position of a basis label; throws InputError if absent.
  std::size_t index_of(const std::string& label) const;

  /// Dense expansion of [x_i, x_j] for any i, j.
  Vec bracket_basis(std::size_t i, std::size_t j) const;
  /// Stored structure constants, keyed by (i, j) with i < j.
  const std::map<std::pair<std::size_t, std::size_t>, Vec>& structure_constants() const { return brackets_; }

  Vec unit(std::size_t i) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Weight> weights_;
  std::size_t rank_;
  std::map<std::pair<std::size_t, std::size_t>, Vec> brackets_;
};

/// Bilinear extension of the structure constants. Throws InputError on length mismatch.
Vec bracket(const LieAlgebra& L, const Vec& x, const Vec& y);

/// First triple i < j < k violating the Jacobi identity, or nullopt.
std::optional<std::array<std::size_t, 3>> check_jacobi(const LieAlgebra& L);

/// First (i, j, k) where [x_i, x_j] has a nonzero coefficient on x_k and
/// weight(k) != weight(i) + weight(j), or nullopt.
std::optional<std::array<std::size_t, 3>> check_weight_additivity(const LieAlgebra& L);

/// Span of all brackets [x_i, x_j].
Subspace derived_subalgebra(const LieAlgebra& L);

/// Basis indices of weight w.
std::vector<std::size_t> weight_indices(const LieAlgebra& L, const Weight& w);

/// Multiset of weights on L/[L,L], grouped by weight in order of first
/// appearance in the basis. Throws DomainError when the brackets are not
/// weight-homogeneous.
std::vector<Weight> abelianization_weights(const LieAlgebra& L);

/// The Lie algebra spanned by matrix units E_ij for the given (i, j) pairs,
/// with [E_ij, E_kl] = delta_jk E_il - delta_li E_kj. Each pair must have
/// i < j and the set must be closed under composition. The weight of E_ij
/// has component c equal to [j == torus[c]] - [i == torus[c]], so E_ij
/// scales by p^(-weight) under conjugation by the diagonal torus elements.
/// Optional nonzero scales rescale the basis (x_a = scale_a * E_a).
LieAlgebra matrix_unit_algebra(const std::vector<std::pair<int, int>>& pairs,
                               const std::vector<int>& torus_indices,
                               const std::vector<Rat>& scales = {});

/// The 9-dimensional unipotent algebra of the 5x5 group, basis order
/// e02, e12, e03, e13, e23, e24, e34, e04, e14, torus on indices 2 and 3.
LieAlgebra build_u9_algebra();

/// The 6-dimensional algebra of Abels' 4x4 group, basis order
/// e12, e23, e34, e13, e24, e14.
LieAlgebra build_abels4_algebra();

/// Abelian algebra with the given basis weights and labels x0, x1, ...
LieAlgebra abelian_algebra(const std::vector<Weight>& weights);

}  // namespace abelscope
