/* Univariate polynomial and rational-function algebra over Q.
 *
 * Polynomials are dense, stored by ascending degree, canonical (no trailing
 * zero coefficients; the zero polynomial has an empty coefficient vector and
 * reports degree -1 as its marker).  Gcds run a subresultant PRS on
 * primitive integer images to keep intermediate coefficients bounded, and
 * are returned monic.  RationalFunction keeps numerator and denominator
 * coprime with a monic denominator; every operation restores that form.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "triadsq/exactnum.hpp"

namespace triadsq {

class Polynomial {
 public:
  Polynomial() = default;  // zero polynomial

  /* Strips trailing zeros; coefficient i is the coefficient of m^i. */
  static Polynomial from_coeffs(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& coeff, int degree);

  bool is_zero() const { return c_.empty(); }
  /* -1 marks the zero polynomial. */
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /* Coefficient of m^i; zero outside the stored range. */
  Rational coeff(int i) const;
  const Rational& lc() const;  // leading coefficient; throws on zero poly
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& x) const;
  Polynomial derivative() const;
  Polynomial monic() const;  // throws on zero poly

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& p);
  bool operator==(const Polynomial& o) const { return c_ == o.c_; }

  /* Euclidean division a = q*b + r with deg r < deg b; throws
   * std::domain_error when b is zero. */
  static std::pair<Polynomial, Polynomial> divrem(const Polynomial& a,
                                                  const Polynomial& b);
  /* Exact quotient; throws std::domain_error if the remainder is nonzero. */
  static Polynomial exact_div(const Polynomial& a, const Polynomial& b);
  /* Monic gcd; gcd(a, 0) = monic a; both zero -> std::domain_error. */
  static Polynomial gcd(const Polynomial& a, const Polynomial& b);
  static Polynomial lcm(const Polynomial& a, const Polynomial& b);

  Polynomial pow(unsigned e) const;

  /* Rendering such as "-3*m^2 + 1/2*m - 4"; "0" for the zero polynomial. */
  std::string str(const std::string& var = "m") const;

 private:
  void normalize();
  std::vector<Rational> c_;
};

/* Exact square root in Q[m] (leading coefficient of the root positive),
 * empty when p is not a square. */
std::optional<Polynomial> poly_sqrt(const Polynomial& p);

struct SquarefreeFactor {
  Polynomial factor;  // monic, squarefree, nonconstant
  int multiplicity;
};

struct SquarefreeDecomposition {
  Rational constant;  // p = constant * prod factor^multiplicity
  std::vector<SquarefreeFactor> factors;  // ascending multiplicity
};

/* Yun's algorithm; throws std::domain_error on the zero polynomial. */
SquarefreeDecomposition squarefree_factorization(const Polynomial& p);

class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Polynomial::constant(1)) {}
  RationalFunction(const Rational& c)
      : num_(Polynomial::constant(c)), den_(Polynomial::constant(1)) {}
  RationalFunction(const Polynomial& p)
      : num_(p), den_(Polynomial::constant(1)) {}
  /* Canonicalizes; throws std::domain_error when den is zero. */
  RationalFunction(const Polynomial& num, const Polynomial& den);

  /* Trusted constructor: caller guarantees gcd(num, den) = 1 and den
   * nonzero; only the monic normalization is applied. */
  static RationalFunction from_coprime(Polynomial num, Polynomial den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const;

  /* Empty when the denominator vanishes at x. */
  std::optional<Rational> eval(const Rational& x) const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a,
                                    const RationalFunction& b);
  bool operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

  RationalFunction pow(unsigned e) const;

  std::string str(const std::string& var = "m") const;

 private:
  Polynomial num_, den_;  // invariant: coprime, den monic and nonzero
};

/* Exact square root in Q(m): g with g^2 = f (numerator lc positive), empty
 * when f is not a square.  Since num and den are coprime, f is a square in
 * Q(m) iff num and den are each squares in Q[m]. */
std::optional<RationalFunction> rf_is_square(const RationalFunction& f);

}  // namespace triadsq
