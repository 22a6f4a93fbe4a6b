#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace abelscope {

using Int = mpz_class;

/// Raised for malformed arguments: bad primes, dimension mismatches, schema violations.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation is applied outside its mathematical domain
/// (e.g. a filtration test on an element that is not in the filtered group).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an internal consistency check fails.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

bool is_prime(long n);

/// A validated prime number.
class Prime {
 public:
  /// Throws InputError unless p is prime.
  explicit Prime(long p);

  long value() const { return p_; }
  operator long() const { return p_; }

 private:
  long p_;
};

/// Exact rational number, always stored in lowest terms with positive
/// denominator. Zero is 0/1.
class Rat {
 public:
  Rat() = default;
  Rat(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rat(int n) : q_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
  Rat(const Int& n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  /// Throws InputError when den is zero.
  Rat(const Int& num, const Int& den);

  /// Parses "a/b" or "a". Throws InputError on malformed text or zero denominator.
  static Rat parse(std::string_view text);

  Int num() const { return q_.get_num(); }
  Int den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// Largest integer not exceeding the value.
  Int floor() const;
  /// x - floor(x), in [0, 1).
  Rat frac() const;

  /// Canonical "num/den" text (the denominator is always printed).
  std::string str() const;

  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  /// Throws InputError on division by zero.
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { Rat r; r.q_ = -a.q_; return r; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

  const mpq_class& raw() const { return q_; }

 private:
  mpq_class q_;
};

/// p^e as a rational; negative exponents give 1/p^|e|.
Rat prime_power(const Prime& p, long e);

/// A p-adic valuation: an integer, or infinity (the valuation of zero only).
class Valuation {
 public:
  explicit Valuation(long v) : value_(v), infinite_(false) {}
  static Valuation infinity() { return Valuation(); }

  bool is_infinite() const { return infinite_; }
  /// Throws DomainError for infinity.
  long value() const;

  friend Valuation operator+(const Valuation& a, const Valuation& b);
  friend bool operator==(const Valuation& a, const Valuation& b) = default;
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);
  friend bool operator==(const Valuation& a, long b) { return !a.infinite_ && a.value_ == b; }
  friend std::strong_ordering operator<=>(const Valuation& a, long b) {
    return a <=> Valuation(b);
  }

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Valuation& v) { return os << v.str(); }

 private:
  Valuation() : value_(0), infinite_(true) {}
  long value_;
  bool infinite_;
};

/// p-adic valuation of x; infinity for x = 0.
Valuation vp(const Rat& x, const Prime& p);

/// True iff x lies in Z[1/p], i.e. its denominator is a power of p.
bool is_p_local(const Rat& x, const Prime& p);

/// True iff x lies in p^k Z.
bool in_scaled_lattice(const Rat& x, const Prime& p, long k);

}  // namespace abelscope

template <>
struct std::hash<abelscope::Rat> {
  std::size_t operator()(const abelscope::Rat& r) const noexcept;
};
