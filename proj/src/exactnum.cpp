#include "triadsq/exactnum.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace triadsq {

Integer isqrt(const Integer& n) {
  if (n < 0) throw std::domain_error("isqrt: negative input " + n.get_str());
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<Integer> perfect_square(const Integer& n) {
  if (n < 0 || !mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
  return isqrt(n);
}

namespace {

/* Primes below 1e5 for the trial-division stage. */
const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    constexpr unsigned long kBound = 100000;
    std::vector<bool> composite(kBound, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i < kBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j < kBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

bool probable_prime(const Integer& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

/* Brent's cycle-finding variant of Pollard rho.  Deterministic: fixed
 * polynomial increments, budget scaled down as the input grows so a huge
 * cofactor cannot stall callers.  Returns a proper factor or empty. */
std::optional<Integer> brent_rho(const Integer& n, unsigned long budget) {
  if (mpz_even_p(n.get_mpz_t())) return Integer(2);
  constexpr unsigned long kBlock = 128;
  for (unsigned long c = 1; c <= 8; ++c) {
    Integer y(2), q(1), g(1), x, ys;
    unsigned long r = 1, spent = 0;
    while (g == 1 && spent < budget) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      spent += r;
      unsigned long k = 0;
      while (k < r && g == 1 && spent < budget) {
        ys = y;
        unsigned long steps = std::min(kBlock, r - k);
        for (unsigned long i = 0; i < steps; ++i) {
          y = (y * y + c) % n;
          Integer d = x - y;
          if (sgn(d) < 0) d = -d;
          q = q * d % n;
        }
        spent += steps;
        g = gcd(q, n);
        k += steps;
      }
      r *= 2;
    }
    if (g == n) {
      // Backtrack one step at a time to split the batched gcd.
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        Integer d = x - ys;
        if (sgn(d) < 0) d = -d;
        g = gcd(d, n);
      }
    }
    if (g != 1 && g != n) return g;
  }
  return std::nullopt;
}

unsigned long rho_budget(const Integer& n) {
  size_t digits = mpz_sizeinbase(n.get_mpz_t(), 10);
  if (digits <= 20) return 1u << 22;
  if (digits <= 40) return 1u << 20;
  return 1u << 15;
}

}  // namespace

Integer largest_square_divisor(const Integer& n) {
  if (n < 1)
    throw std::domain_error("largest_square_divisor: input " + n.get_str() +
                            " < 1");
  Integer square_root_part(1);  // product of p^floor(e/2)
  Integer rest = n;
  for (unsigned long p : small_primes()) {
    if (rest == 1) break;
    if (Integer(p) * p > rest) break;
    unsigned long e = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(),
                                 Integer(p).get_mpz_t());
    for (unsigned long i = 0; i + 1 < e; i += 2) square_root_part *= p;
  }
  /* Cofactor stack: (value, multiplicity in n). */
  std::vector<std::pair<Integer, unsigned long>> stack;
  if (rest > 1) stack.emplace_back(rest, 1);
  while (!stack.empty()) {
    auto [v, mult] = stack.back();
    stack.pop_back();
    if (v == 1) continue;
    if (probable_prime(v)) {
      for (unsigned long i = 0; i + 1 < mult; i += 2) square_root_part *= v;
      continue;
    }
    if (mpz_perfect_power_p(v.get_mpz_t())) {
      // Find the largest exponent e with v = root^e and recurse on root.
      size_t bits = mpz_sizeinbase(v.get_mpz_t(), 2);
      for (unsigned long e = bits; e >= 2; --e) {
        Integer root;
        if (mpz_root(root.get_mpz_t(), v.get_mpz_t(), e)) {
          stack.emplace_back(root, mult * e);
          break;
        }
      }
      continue;
    }
    if (auto f = brent_rho(v, rho_budget(v))) {
      stack.emplace_back(*f, mult);
      stack.emplace_back(v / *f, mult);
      continue;
    }
    /* Budget exhausted: treat the straggler as squarefree. */
    for (unsigned long i = 0; i + 1 < mult; i += 2) square_root_part *= v;
  }
  return square_root_part * square_root_part;
}

Rational::Rational(const Integer& num, const Integer& den) : q_(num, den) {
  if (den == 0)
    throw std::domain_error("Rational: zero denominator (numerator " +
                            num.get_str() + ")");
  q_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational::parse: bad literal \"" + text +
                                "\"");
  }
}

std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Rational Rational::operator-() const {
  Rational r;
  r.q_ = -q_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& r, long e) {
  if (e < 0) {
    if (r.is_zero()) throw std::domain_error("pow: 0 to a negative power");
    return pow(Rational(1) / r, -e);
  }
  Rational acc(1), base = r;
  unsigned long n = static_cast<unsigned long>(e);
  while (n) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

std::optional<Rational> rational_square_root(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  auto n = perfect_square(r.num());
  if (!n) return std::nullopt;
  auto d = perfect_square(r.den());
  if (!d) return std::nullopt;
  return Rational(*n, *d);
}

}  // namespace triadsq
