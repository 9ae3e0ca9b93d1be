/* Exact integer and rational arithmetic used by every other module.
 *
 * Integer is an arbitrary-precision signed integer (GMP).  Rational is a
 * thin wrapper around an exact fraction that enforces the canonical form
 * (lowest terms, positive denominator) at construction; all other modules
 * may rely on it.  Decimal strings are the only interchange format.
 */
#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>

namespace triadsq {

using Integer = mpz_class;

/* floor(sqrt(n)); throws std::domain_error for n < 0. */
Integer isqrt(const Integer& n);

/* The exact square root when n is a perfect square, empty otherwise. */
std::optional<Integer> perfect_square(const Integer& n);

/* Largest s such that s is a perfect square and s | n, for n >= 1.
 *
 * Computed from a factorization: trial division by primes below 1e5, then a
 * stack of cofactors handled by Miller-Rabin, perfect-power extraction and
 * Brent's variant of Pollard rho under a deterministic, size-scaled
 * iteration budget.  Exact for anything desk-sized (all factors <= ~13
 * digits, or a prime/prime-power tail).  A composite cofactor that resists
 * the budget is treated as squarefree, so for adversarially large inputs
 * the result is the square part of the recovered partial factorization.
 */
Integer largest_square_divisor(const Integer& n);

class Rational {
 public:
  Rational() : q_(0) {}
  Rational(int n) : q_(n) {}
  Rational(long n) : q_(n) {}
  Rational(const Integer& n) : q_(n) {}
  Rational(const Integer& num, const Integer& den);
  Rational(long num, long den);

  /* Accepts "n" or "n/d" with optional sign, decimal digits only. */
  static Rational parse(const std::string& text);

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /* "n" when the denominator is 1, else "n/d". */
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.q_ == b.q_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0   ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

 private:
  mpq_class q_;  // invariant: canonical
};

Rational abs(const Rational& r);

/* r^e for integer e (negative allowed when r != 0). */
Rational pow(const Rational& r, long e);

/* Exact square root in Q when it exists (nonnegative root), else empty. */
std::optional<Rational> rational_square_root(const Rational& r);

}  // namespace triadsq
