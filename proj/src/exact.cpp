#include "abelscope/exact.hpp"

#include <charconv>

namespace abelscope {

bool is_prime(long n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (long d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Prime::Prime(long p) : p_(p) {
  if (!is_prime(p)) throw InputError("not a prime: " + std::to_string(p));
}

Rat::Rat(const Int& num, const Int& den) : q_(num, den) {
  if (den == 0) throw InputError("zero denominator");
  q_.canonicalize();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

Int parse_int(std::string_view s) {
  if (!is_integer_literal(s)) throw InputError("malformed integer: '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return Int(std::string(s), 10);
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  const Int den = parse_int(text.substr(slash + 1));
  if (den < 0) throw InputError("negative denominator in '" + std::string(text) + "'");
  return Rat(parse_int(text.substr(0, slash)), den);
}

Int Rat::floor() const {
  Int out;
  mpz_fdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return out;
}

Rat Rat::frac() const { return *this - Rat(floor()); }

std::string Rat::str() const { return q_.get_num().get_str() + "/" + q_.get_den().get_str(); }

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw InputError("division by zero");
  q_ /= o.q_;
  return *this;
}

Rat prime_power(const Prime& p, long e) {
  Int pow;
  mpz_ui_pow_ui(pow.get_mpz_t(), static_cast<unsigned long>(p.value()),
                static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rat(Int(1), pow) : Rat(pow);
}

long Valuation::value() const {
  if (infinite_) throw DomainError("valuation is infinite");
  return value_;
}

Valuation operator+(const Valuation& a, const Valuation& b) {
  if (a.infinite_ || b.infinite_) return Valuation::infinity();
  return Valuation(a.value_ + b.value_);
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
  return a.value_ <=> b.value_;
}

std::string Valuation::str() const { return infinite_ ? "inf" : std::to_string(value_); }

namespace {

// Removes every factor p from n, returning the multiplicity.
long strip(Int& n, const Prime& p) {
  const Int pz(p.value());
  return static_cast<long>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
}

}  // namespace

Valuation vp(const Rat& x, const Prime& p) {
  if (x.is_zero()) return Valuation::infinity();
  Int num = x.num();
  Int den = x.den();
  return Valuation(strip(num, p) - strip(den, p));
}

bool is_p_local(const Rat& x, const Prime& p) {
  Int den = x.den();
  strip(den, p);
  return den == 1;
}

bool in_scaled_lattice(const Rat& x, const Prime& p, long k) {
  return is_p_local(x, p) && vp(x, p) >= k;
}

}  // namespace abelscope

std::size_t std::hash<abelscope::Rat>::operator()(const abelscope::Rat& r) const noexcept {
  const auto& q = r.raw();
  const std::size_t hn = mpz_get_ui(q.get_num_mpz_t()) ^ (mpz_sgn(q.get_num_mpz_t()) < 0 ? 0x9e37u : 0u);
  const std::size_t hd = mpz_get_ui(q.get_den_mpz_t());
  return hn * 1000003u ^ hd;
}
