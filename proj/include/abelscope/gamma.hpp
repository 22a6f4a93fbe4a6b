#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "abelscope/exact.hpp"
#include "abelscope/linalg.hpp"

namespace abelscope {

struct GroupParams {
  Prime p;
};

/// Positions of the nine unipotent entries u_ij inside GammaElt::u.
enum class U : std::size_t { u02, u03, u04, u12, u13, u14, u23, u24, u34 };

inline constexpr std::array<std::pair<int, int>, 9> kUnipotentPairs = {
    {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

/// Number of elementary steps from i to j: 1 for u02,u12,u23,u34; 2 for
/// u03,u13,u24; 3 for u04,u14.
int entry_degree(int i, int j);

/// Index of u_ij in GammaElt::u; throws InputError for pairs outside the pattern.
std::size_t u_index(int i, int j);

/// An element of the 5x5 group
///
///   [ a  b  u02 u03 u04 ]
///   [ c  d  u12 u13 u14 ]
///   [ 0  0  p^n2 u23 u24 ]
///   [ 0  0  0  p^n3 u34 ]
///   [ 0  0  0   0    1  ]
///
/// with ad - bc = 1 and every u_ij in Z[1/p].
struct GammaElt {
  std::array<Int, 4> sl2{Int(1), Int(0), Int(0), Int(1)};
  long n2 = 0;
  long n3 = 0;
  std::array<Rat, 9> u{};

  Rat& operator[](U i) { return u[static_cast<std::size_t>(i)]; }
  const Rat& operator[](U i) const { return u[static_cast<std::size_t>(i)]; }

  bool is_identity() const;
  /// Canonical text form, used as a hash key.
  std::string key() const;

  friend bool operator==(const GammaElt&, const GammaElt&) = default;
};

/// Description of the first violated invariant, or nullopt when g is valid.
std::optional<std::string> check_invariants(const GroupParams& params, const GammaElt& g);

GammaElt identity();
/// x_ij(q): identity plus q in position (i, j).
GammaElt elementary(int i, int j, const Rat& q);
GammaElt torus(long n2, long n3);
/// Throws InputError unless ad - bc = 1.
GammaElt sl2_element(const Int& a, const Int& b, const Int& c, const Int& d);
/// S = (0 -1; 1 0)
GammaElt gen_S();
/// T = (1 1; 0 1)
GammaElt gen_T();

/// Named generators S, T, t2, t3, x02(1), x23(1), x34(1).
std::vector<std::pair<std::string, GammaElt>> default_generators();

/// The element as an explicit 5x5 rational matrix.
QMat to_matrix(const GroupParams& params, const GammaElt& g);

GammaElt mul(const GroupParams& params, const GammaElt& a, const GammaElt& b);
GammaElt inv(const GroupParams& params, const GammaElt& g);
/// g^n for any integer n.
GammaElt power(const GroupParams& params, const GammaElt& g, const Int& n);
/// h g h^-1
GammaElt conjugate(const GroupParams& params, const GammaElt& g, const GammaElt& h);
/// g h g^-1 h^-1
GammaElt commutator(const GroupParams& params, const GammaElt& g, const GammaElt& h);

/// Upsilon: n2 = n3 = 0.
bool is_in_upsilon(const GammaElt& g);
/// Lambda: SL2 block is the identity.
bool is_in_lambda(const GammaElt& g);
/// M: only u04, u14 may be nonzero, everything else trivial.
bool is_in_M(const GammaElt& g);
/// M_Z: in M with u04, u14 integral.
bool is_in_MZ(const GammaElt& g);

/// Degree-graded filtration: an entry of degree k must lie in p^(-k m) Z.
/// Throws DomainError when g is not in Upsilon.
bool is_in_upsilon_m(const GroupParams& params, const GammaElt& g, long m);

/// The filtration condition exactly as printed in the source construction
/// (u24 listed twice, u34 unconstrained). Not closed under multiplication;
/// kept to exhibit the counterexample. Throws DomainError outside Upsilon.
bool is_in_upsilon_m_literal(const GroupParams& params, const GammaElt& g, long m);

/// Xi_m = Upsilon_m intersected with Lambda.
bool is_in_xi_m(const GroupParams& params, const GammaElt& g, long m);

/// Homomorphism onto Z^2 with kernel Upsilon.
std::pair<long, long> proj_z2(const GammaElt& g);

/// An element reduced modulo M_Z: u04 and u14 in [0, 1).
struct CosetRep {
  GammaElt rep;
  friend bool operator==(const CosetRep&, const CosetRep&) = default;
};

CosetRep canonical_mod_MZ(const GammaElt& g);

/// Order of g M_Z in M/M_Z, a power of p. Throws DomainError unless g is in M.
Int order_in_M_mod_MZ(const GroupParams& params, const GammaElt& g);

/// The p^2 - 1 cosets (a/p, b/p), ordered with b outer and a inner.
std::vector<CosetRep> discriminating_set(const GroupParams& params);

/// g^(p^(k-1)) mod M_Z where p^k is the order of g M_Z. Throws DomainError
/// unless g is in M but not in M_Z.
CosetRep order_p_witness(const GroupParams& params, const GammaElt& g);

struct RandomBounds {
  long max_torus_exponent = 2;   ///< |n2|, |n3| bound
  long valuation_depth = 2;      ///< denominators up to p^depth
  long numerator_bound = 5;      ///< numerators in [-bound, bound]
  int sl2_word_length = 4;       ///< letters from S, S^-1, T, T^-1
};

using Rng = std::mt19937_64;

/// Deterministic for a fixed seed.
GammaElt random_element(const GroupParams& params, const RandomBounds& bounds, std::uint64_t seed);
GammaElt random_element(const GroupParams& params, const RandomBounds& bounds, Rng& rng);

/// Random members of the named subgroups.
GammaElt random_M_element(const GroupParams& params, const RandomBounds& bounds, Rng& rng);
GammaElt random_MZ_element(const RandomBounds& bounds, Rng& rng);
GammaElt random_upsilon_element(const GroupParams& params, const RandomBounds& bounds, Rng& rng);
GammaElt random_lambda_element(const GroupParams& params, const RandomBounds& bounds, Rng& rng);
/// Member of the degree-graded Upsilon_m.
GammaElt random_upsilon_m_element(const GroupParams& params, long m, const RandomBounds& bounds, Rng& rng);
/// Member of Xi_m.
GammaElt random_xi_m_element(const GroupParams& params, long m, const RandomBounds& bounds, Rng& rng);

}  // namespace abelscope
