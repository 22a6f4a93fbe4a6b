#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abelscope/liealg.hpp"
#include "abelscope/linalg.hpp"

namespace abelscope {

std::size_t binomial(std::size_t n, std::size_t k);

/// Strictly increasing index tuples of a fixed degree, in lexicographic order.
class WedgeBasis {
 public:
  /// degree in {1, 2, 3}.
  WedgeBasis(std::size_t n, std::size_t degree);

  std::size_t size() const { return tuples_.size(); }
  std::size_t degree() const { return degree_; }
  const std::vector<std::size_t>& tuple(std::size_t pos) const { return tuples_.at(pos); }
  const std::vector<std::vector<std::size_t>>& tuples() const { return tuples_; }

  /// Lexicographic rank of a strictly increasing tuple, computed combinatorially.
  std::size_t position(const std::vector<std::size_t>& t) const;

  /// "e02^e24" style label built from the algebra's basis labels.
  std::string label(const LieAlgebra& L, std::size_t pos) const;

 private:
  std::size_t n_;
  std::size_t degree_;
  std::vector<std::vector<std::size_t>> tuples_;
};

/// The wedge of the named basis elements in the ordered wedge basis, with the
/// sign of the sorting permutation (zero when a label repeats).
Vec wedge_monomial(const LieAlgebra& L, const std::vector<std::string>& labels);

/// Column (i,j) is -[x_i, x_j]; shape dim x C(dim,2).
QMat d2_matrix(const LieAlgebra& L);

/// Column (i,j,k) is x_k^[x_i,x_j] + x_j^[x_k,x_i] + x_i^[x_j,x_k] in the
/// ordered wedge basis; shape C(dim,2) x C(dim,3).
QMat d3_matrix(const LieAlgebra& L);

/// First degree-3 monomial (i,j,k) whose column of d2*d3 is nonzero, or nullopt.
std::optional<std::array<std::size_t, 3>> check_complex(const LieAlgebra& L);

/// Positions of degree-1/2/3 wedge monomials of total weight w.
std::vector<std::size_t> weight_positions(const LieAlgebra& L, std::size_t degree, const Weight& w);

/// Weight-w part of Ker(d2), as a subspace of the full degree-2 space.
Subspace kernel_weight_basis(const LieAlgebra& L, const Weight& w);

/// Weight-w part of Im(d3), as a subspace of the full degree-2 space.
Subspace image_weight_basis(const LieAlgebra& L, const Weight& w);

/// dim of the weight-w part of H_2 = Ker(d2)/Im(d3).
std::size_t h2_weight_dim(const LieAlgebra& L, const Weight& w);

/// True iff 0 lies on the closed segment [a, b]. Throws InputError on rank mismatch.
bool segment_contains_origin(const Weight& a, const Weight& b);

struct Condition1 {
  bool pass = true;
  std::optional<std::pair<Weight, Weight>> offending_pair;
};

struct Condition2 {
  bool pass = true;
  std::size_t h2_weight0_dim = 0;
};

struct AbelsVerdict {
  Condition1 condition1;
  Condition2 condition2;
  bool finitely_presented = false;
};

/// Runs both conditions of Abels' finite-presentability criterion.
AbelsVerdict abels_check(const LieAlgebra& L);

/// A solution c of d3 c = v (free variables zero), or nullopt when v is not
/// in the image. Throws InputError when v is not of length C(dim,2).
std::optional<Vec> express_in_image(const LieAlgebra& L, const Vec& v);

}  // namespace abelscope
