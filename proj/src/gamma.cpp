#include "abelscope/gamma.hpp"

#include <algorithm>

namespace abelscope {

int entry_degree(int i, int j) { return j - std::max(i, 1); }

std::size_t u_index(int i, int j) {
  for (std::size_t k = 0; k < kUnipotentPairs.size(); ++k) {
    if (kUnipotentPairs[k] == std::make_pair(i, j)) return k;
  }
  throw InputError("(" + std::to_string(i) + "," + std::to_string(j) + ") is not a unipotent position");
}

bool GammaElt::is_identity() const { return *this == GammaElt{}; }

std::string GammaElt::key() const {
  std::string s;
  for (const auto& x : sl2) s += x.get_str() + ',';
  s += std::to_string(n2) + ',' + std::to_string(n3);
  for (const auto& x : u) s += ',' + x.str();
  return s;
}

std::optional<std::string> check_invariants(const GroupParams& params, const GammaElt& g) {
  if (g.sl2[0] * g.sl2[3] - g.sl2[1] * g.sl2[2] != 1) return "SL2 block does not have determinant 1";
  for (std::size_t k = 0; k < g.u.size(); ++k) {
    if (!is_p_local(g.u[k], params.p)) {
      const auto [i, j] = kUnipotentPairs[k];
      return "u" + std::to_string(i) + std::to_string(j) + " = " + g.u[k].str() + " is not in Z[1/p]";
    }
  }
  return std::nullopt;
}

GammaElt identity() { return GammaElt{}; }

GammaElt elementary(int i, int j, const Rat& q) {
  GammaElt g;
  g.u[u_index(i, j)] = q;
  return g;
}

GammaElt torus(long n2, long n3) {
  GammaElt g;
  g.n2 = n2;
  g.n3 = n3;
  return g;
}

GammaElt sl2_element(const Int& a, const Int& b, const Int& c, const Int& d) {
  if (a * d - b * c != 1) throw InputError("SL2 block must have determinant 1");
  GammaElt g;
  g.sl2 = {a, b, c, d};
  return g;
}

GammaElt gen_S() { return sl2_element(0, -1, 1, 0); }
GammaElt gen_T() { return sl2_element(1, 1, 0, 1); }

std::vector<std::pair<std::string, GammaElt>> default_generators() {
  return {{"S", gen_S()},
          {"T", gen_T()},
          {"t2", torus(1, 0)},
          {"t3", torus(0, 1)},
          {"x02", elementary(0, 2, 1)},
          {"x23", elementary(2, 3, 1)},
          {"x34", elementary(3, 4, 1)}};
}

QMat to_matrix(const GroupParams& params, const GammaElt& g) {
  QMat m(5, 5);
  m(0, 0) = g.sl2[0];
  m(0, 1) = g.sl2[1];
  m(1, 0) = g.sl2[2];
  m(1, 1) = g.sl2[3];
  m(2, 2) = prime_power(params.p, g.n2);
  m(3, 3) = prime_power(params.p, g.n3);
  m(4, 4) = 1;
  for (std::size_t k = 0; k < kUnipotentPairs.size(); ++k) {
    const auto [i, j] = kUnipotentPairs[k];
    m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = g.u[k];
  }
  return m;
}

// The element is the block matrix [[A, U], [0, D]] with A in SL2(Z), U the
// 2x3 block of columns 2..4 and D the 3x3 upper triangular corner. Products
// and inverses are taken blockwise.
GammaElt mul(const GroupParams& params, const GammaElt& a, const GammaElt& b) {
  using enum U;
  const Rat da2 = prime_power(params.p, a.n2);
  const Rat da3 = prime_power(params.p, a.n3);
  const Rat db2 = prime_power(params.p, b.n2);
  const Rat db3 = prime_power(params.p, b.n3);

  GammaElt c;
  const auto& A = a.sl2;
  const auto& B = b.sl2;
  c.sl2 = {A[0] * B[0] + A[1] * B[2], A[0] * B[1] + A[1] * B[3], A[2] * B[0] + A[3] * B[2],
           A[2] * B[1] + A[3] * B[3]};
  c.n2 = a.n2 + b.n2;
  c.n3 = a.n3 + b.n3;

  c[u23] = da2 * b[u23] + a[u23] * db3;
  c[u24] = da2 * b[u24] + a[u23] * b[u34] + a[u24];
  c[u34] = da3 * b[u34] + a[u34];

  const std::array<std::array<U, 3>, 2> rows = {{{u02, u03, u04}, {u12, u13, u14}}};
  for (std::size_t r = 0; r < 2; ++r) {
    const Rat ar0(A[2 * r]);
    const Rat ar1(A[2 * r + 1]);
    const auto [x2, x3, x4] = rows[r];
    c[x2] = ar0 * b[u02] + ar1 * b[u12] + a[x2] * db2;
    c[x3] = ar0 * b[u03] + ar1 * b[u13] + a[x2] * b[u23] + a[x3] * db3;
    c[x4] = ar0 * b[u04] + ar1 * b[u14] + a[x2] * b[u24] + a[x3] * b[u34] + a[x4];
  }
  return c;
}

GammaElt inv(const GroupParams& params, const GammaElt& g) {
  using enum U;
  const Rat i2 = prime_power(params.p, -g.n2);
  const Rat i3 = prime_power(params.p, -g.n3);
  const Rat d3 = prime_power(params.p, g.n3);

  // Inverse of the 3x3 corner.
  const Rat t23 = -g[u23] * i2 * i3;
  const Rat t24 = (g[u23] * g[u34] - g[u24] * d3) * i2 * i3;
  const Rat t34 = -g[u34] * i3;

  GammaElt h;
  const auto& A = g.sl2;
  h.sl2 = {A[3], -A[1], -A[2], A[0]};
  h.n2 = -g.n2;
  h.n3 = -g.n3;
  h[u23] = t23;
  h[u24] = t24;
  h[u34] = t34;

  // Top-right block is -A^-1 U D^-1.
  const std::array<std::array<U, 3>, 2> rows = {{{u02, u03, u04}, {u12, u13, u14}}};
  for (std::size_t r = 0; r < 2; ++r) {
    const Rat s0(h.sl2[2 * r]);
    const Rat s1(h.sl2[2 * r + 1]);
    const Rat w2 = s0 * g[u02] + s1 * g[u12];
    const Rat w3 = s0 * g[u03] + s1 * g[u13];
    const Rat w4 = s0 * g[u04] + s1 * g[u14];
    const auto [x2, x3, x4] = rows[r];
    h[x2] = -(w2 * i2);
    h[x3] = -(w2 * t23 + w3 * i3);
    h[x4] = -(w2 * t24 + w3 * t34 + w4);
  }
  return h;
}

GammaElt power(const GroupParams& params, const GammaElt& g, const Int& n) {
  GammaElt base = n < 0 ? inv(params, g) : g;
  Int e = abs(n);
  GammaElt acc;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc = mul(params, acc, base);
    e >>= 1;
    if (e > 0) base = mul(params, base, base);
  }
  return acc;
}

GammaElt conjugate(const GroupParams& params, const GammaElt& g, const GammaElt& h) {
  return mul(params, mul(params, h, g), inv(params, h));
}

GammaElt commutator(const GroupParams& params, const GammaElt& g, const GammaElt& h) {
  return mul(params, mul(params, g, h), mul(params, inv(params, g), inv(params, h)));
}

bool is_in_upsilon(const GammaElt& g) { return g.n2 == 0 && g.n3 == 0; }

bool is_in_lambda(const GammaElt& g) {
  return g.sl2[0] == 1 && g.sl2[1] == 0 && g.sl2[2] == 0 && g.sl2[3] == 1;
}

bool is_in_M(const GammaElt& g) {
  if (!is_in_lambda(g) || !is_in_upsilon(g)) return false;
  for (std::size_t k = 0; k < g.u.size(); ++k) {
    const auto k_enum = static_cast<U>(k);
    if (k_enum != U::u04 && k_enum != U::u14 && !g.u[k].is_zero()) return false;
  }
  return true;
}

bool is_in_MZ(const GammaElt& g) { return is_in_M(g) && g[U::u04].is_integer() && g[U::u14].is_integer(); }

bool is_in_upsilon_m(const GroupParams& params, const GammaElt& g, long m) {
  if (!is_in_upsilon(g)) throw DomainError("filtration membership is defined on Upsilon only");
  for (std::size_t k = 0; k < g.u.size(); ++k) {
    const auto [i, j] = kUnipotentPairs[k];
    if (!in_scaled_lattice(g.u[k], params.p, -entry_degree(i, j) * m)) return false;
  }
  return true;
}

bool is_in_upsilon_m_literal(const GroupParams& params, const GammaElt& g, long m) {
  using enum U;
  if (!is_in_upsilon(g)) throw DomainError("filtration membership is defined on Upsilon only");
  const auto& p = params.p;
  for (U x : {u02, u12, u23, u24}) {
    if (!in_scaled_lattice(g[x], p, -m)) return false;
  }
  for (U x : {u03, u13, u24}) {
    if (!in_scaled_lattice(g[x], p, -2 * m)) return false;
  }
  for (U x : {u04, u14}) {
    if (!in_scaled_lattice(g[x], p, -3 * m)) return false;
  }
  return true;
}

bool is_in_xi_m(const GroupParams& params, const GammaElt& g, long m) {
  return is_in_lambda(g) && is_in_upsilon(g) && is_in_upsilon_m(params, g, m);
}

std::pair<long, long> proj_z2(const GammaElt& g) { return {g.n2, g.n3}; }

CosetRep canonical_mod_MZ(const GammaElt& g) {
  // Right multiplication by M_Z shifts (u04, u14) by A (m1, m2), and A Z^2 = Z^2,
  // so fractional parts are a complete invariant of the coset.
  CosetRep c{g};
  c.rep[U::u04] = g[U::u04].frac();
  c.rep[U::u14] = g[U::u14].frac();
  return c;
}

Int order_in_M_mod_MZ(const GroupParams& params, const GammaElt& g) {
  if (!is_in_M(g)) throw DomainError("element is not in M");
  const CosetRep c = canonical_mod_MZ(g);
  const Valuation v = std::min(vp(c.rep[U::u04], params.p), vp(c.rep[U::u14], params.p));
  const long k = v.is_infinite() ? 0 : std::max(0L, -v.value());
  return prime_power(params.p, k).num();
}

std::vector<CosetRep> discriminating_set(const GroupParams& params) {
  const long p = params.p.value();
  std::vector<CosetRep> out;
  for (long b = 0; b < p; ++b) {
    for (long a = 0; a < p; ++a) {
      if (a == 0 && b == 0) continue;
      GammaElt g;
      g[U::u04] = Rat(Int(a), Int(p));
      g[U::u14] = Rat(Int(b), Int(p));
      out.push_back(canonical_mod_MZ(g));
    }
  }
  return out;
}

CosetRep order_p_witness(const GroupParams& params, const GammaElt& g) {
  if (!is_in_M(g) || is_in_MZ(g)) throw DomainError("witness requires an element of M outside M_Z");
  const Int order = order_in_M_mod_MZ(params, g);
  return canonical_mod_MZ(power(params, g, order / params.p.value()));
}

namespace {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Rat random_local(const GroupParams& params, Rng& rng, long depth, long bound) {
  const long num = uniform(rng, -bound, bound);
  const long e = uniform(rng, 0, std::max(0L, depth));
  return Rat(num) * prime_power(params.p, -e);
}

std::array<Int, 4> random_sl2(Rng& rng, int length) {
  // Right-multiplies by S^{+-1} or T^{+-1}.
  Int a = 1, b = 0, c = 0, d = 1;
  for (int i = 0; i < length; ++i) {
    switch (uniform(rng, 0, 3)) {
      case 0: std::tie(a, b, c, d) = std::make_tuple(Int(b), Int(-a), Int(d), Int(-c)); break;  // S
      case 1: std::tie(a, b, c, d) = std::make_tuple(Int(-b), Int(a), Int(-d), Int(c)); break;  // S^-1
      case 2: b += a; d += c; break;  // T
      default: b -= a; d -= c; break;  // T^-1
    }
  }
  return {a, b, c, d};
}

void fill_unipotent(const GroupParams& params, GammaElt& g, const RandomBounds& bounds, Rng& rng,
                    long depth_per_degree) {
  for (std::size_t k = 0; k < g.u.size(); ++k) {
    const auto [i, j] = kUnipotentPairs[k];
    const long depth = depth_per_degree < 0 ? bounds.valuation_depth : entry_degree(i, j) * depth_per_degree;
    g.u[k] = random_local(params, rng, depth, bounds.numerator_bound);
  }
}

}  // namespace

GammaElt random_element(const GroupParams& params, const RandomBounds& bounds, std::uint64_t seed) {
  Rng rng(seed);
  return random_element(params, bounds, rng);
}

GammaElt random_element(const GroupParams& params, const RandomBounds& bounds, Rng& rng) {
  GammaElt g;
  g.sl2 = random_sl2(rng, bounds.sl2_word_length);
  g.n2 = uniform(rng, -bounds.max_torus_exponent, bounds.max_torus_exponent);
  g.n3 = uniform(rng, -bounds.max_torus_exponent, bounds.max_torus_exponent);
  fill_unipotent(params, g, bounds, rng, -1);
  return g;
}

GammaElt random_M_element(const GroupParams& params, const RandomBounds& bounds, Rng& rng) {
  GammaElt g;
  g[U::u04] = random_local(params, rng, bounds.valuation_depth, bounds.numerator_bound);
  g[U::u14] = random_local(params, rng, bounds.valuation_depth, bounds.numerator_bound);
  return g;
}

GammaElt random_MZ_element(const RandomBounds& bounds, Rng& rng) {
  GammaElt g;
  g[U::u04] = Rat(uniform(rng, -bounds.numerator_bound, bounds.numerator_bound));
  g[U::u14] = Rat(uniform(rng, -bounds.numerator_bound, bounds.numerator_bound));
  return g;
}

GammaElt random_upsilon_element(const GroupParams& params, const RandomBounds& bounds, Rng& rng) {
  GammaElt g = random_element(params, bounds, rng);
  g.n2 = g.n3 = 0;
  return g;
}

GammaElt random_lambda_element(const GroupParams& params, const RandomBounds& bounds, Rng& rng) {
  GammaElt g = random_element(params, bounds, rng);
  g.sl2 = {Int(1), Int(0), Int(0), Int(1)};
  return g;
}

GammaElt random_upsilon_m_element(const GroupParams& params, long m, const RandomBounds& bounds, Rng& rng) {
  GammaElt g;
  g.sl2 = random_sl2(rng, bounds.sl2_word_length);
  fill_unipotent(params, g, bounds, rng, m);
  return g;
}

GammaElt random_xi_m_element(const GroupParams& params, long m, const RandomBounds& bounds, Rng& rng) {
  GammaElt g;
  fill_unipotent(params, g, bounds, rng, m);
  return g;
}

}  // namespace abelscope
