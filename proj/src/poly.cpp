#include "triadsq/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace triadsq {

void Polynomial::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::from_coeffs(std::vector<Rational> coeffs) {
  Polynomial p;
  p.c_ = std::move(coeffs);
  p.normalize();
  return p;
}

Polynomial Polynomial::constant(const Rational& c) {
  return from_coeffs({c});
}

Polynomial Polynomial::monomial(const Rational& coeff, int degree) {
  if (degree < 0) throw std::domain_error("monomial: negative degree");
  std::vector<Rational> c(degree + 1);
  c[degree] = coeff;
  return from_coeffs(std::move(c));
}

Rational Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
  return c_[i];
}

const Rational& Polynomial::lc() const {
  if (c_.empty()) throw std::domain_error("lc: zero polynomial");
  return c_.back();
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial();
  std::vector<Rational> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rational((long)i) * c_[i];
  return from_coeffs(std::move(d));
}

Polynomial Polynomial::monic() const {
  Rational inv = Rational(1) / lc();
  return inv * *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < a.c_.size()) c[i] += a.c_[i];
    if (i < b.c_.size()) c[i] += b.c_[i];
  }
  return Polynomial::from_coeffs(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + (-b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial::from_coeffs(std::move(c));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  Polynomial r = p;
  for (auto& c : r.c_) c = s * c;
  r.normalize();
  return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divrem(const Polynomial& a,
                                                     const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("divrem: division by zero polynomial");
  Polynomial r = a;
  if (a.degree() < b.degree()) return {Polynomial(), r};
  std::vector<Rational> q(a.degree() - b.degree() + 1);
  Rational inv = Rational(1) / b.lc();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    Rational factor = r.lc() * inv;
    q[shift] = factor;
    // r -= factor * m^shift * b, in place
    for (size_t i = 0; i < b.c_.size(); ++i)
      r.c_[i + shift] -= factor * b.c_[i];
    r.normalize();
  }
  return {from_coeffs(std::move(q)), r};
}

Polynomial Polynomial::exact_div(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero())
    throw std::domain_error("exact_div: nonzero remainder (degree " +
                            std::to_string(r.degree()) + ")");
  return q;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial acc = constant(1), base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    if (e >>= 1) base = base * base;
  }
  return acc;
}

/* ---- subresultant PRS over primitive integer images ---- */

namespace {

using ZPoly = std::vector<Integer>;  // ascending, no trailing zeros

void znormalize(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int zdeg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

Integer zcontent(const ZPoly& p) {
  Integer g(0);
  for (const auto& c : p) g = gcd(g, c);
  return g;
}

/* Clear denominators and divide out the content; sign of lc preserved. */
ZPoly zprimitive(const Polynomial& p) {
  Integer l(1);
  for (const auto& c : p.coeffs()) l = lcm(l, c.den());
  ZPoly z(p.coeffs().size());
  for (size_t i = 0; i < z.size(); ++i) {
    const Rational& c = p.coeffs()[i];
    z[i] = c.num() * (l / c.den());
  }
  znormalize(z);
  Integer g = zcontent(z);
  if (g > 1)
    for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return z;
}

/* Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b. */
ZPoly zprem(ZPoly r, const ZPoly& b) {
  const Integer& d = b.back();
  long e = zdeg(r) - zdeg(b) + 1;
  while (!r.empty() && zdeg(r) >= zdeg(b)) {
    Integer s = r.back();
    int shift = zdeg(r) - zdeg(b);
    for (auto& c : r) c *= d;
    for (size_t i = 0; i < b.size(); ++i) r[i + shift] -= s * b[i];
    znormalize(r);
    --e;
  }
  if (e > 0) {
    Integer f;
    mpz_pow_ui(f.get_mpz_t(), d.get_mpz_t(), e);
    for (auto& c : r) c *= f;
  }
  return r;
}

void zdivexact(ZPoly& p, const Integer& d) {
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

Polynomial zmonic(const ZPoly& p) {
  std::vector<Rational> c(p.size());
  for (size_t i = 0; i < p.size(); ++i) c[i] = Rational(p[i], p.back());
  return Polynomial::from_coeffs(std::move(c));
}

}  // namespace

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero())
    throw std::domain_error("gcd: both polynomials zero");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  ZPoly A = zprimitive(a), B = zprimitive(b);
  if (zdeg(A) < zdeg(B)) std::swap(A, B);
  Integer g(1), h(1);
  while (true) {
    long delta = zdeg(A) - zdeg(B);
    ZPoly R = zprem(A, B);
    if (R.empty()) {
      Integer c = zcontent(B);
      zdivexact(B, B.back() < 0 ? Integer(-c) : c);
      return zmonic(B);
    }
    A = std::move(B);
    B = std::move(R);
    Integer divisor = g;
    for (long i = 0; i < delta; ++i) divisor *= h;
    zdivexact(B, divisor);
    g = A.back();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      Integer gn;
      mpz_pow_ui(gn.get_mpz_t(), g.get_mpz_t(), delta);
      Integer hd;
      mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), delta - 1);
      mpz_divexact(h.get_mpz_t(), gn.get_mpz_t(), hd.get_mpz_t());
    }
  }
}

Polynomial Polynomial::lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  return exact_div(a * b, gcd(a, b)).monic();
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rational c = coeff(i);
    if (c.is_zero()) continue;
    if (first) {
      if (c.sign() < 0) out << "-";
      first = false;
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
    }
    Rational a = abs(c);
    bool unit = (a == Rational(1));
    if (i == 0) {
      out << a.str();
    } else {
      if (!unit) out << a.str() << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

std::optional<Polynomial> poly_sqrt(const Polynomial& p) {
  if (p.is_zero()) return Polynomial();
  if (p.degree() % 2 != 0) return std::nullopt;
  int n = p.degree() / 2;
  auto top = rational_square_root(p.lc());
  if (!top) return std::nullopt;
  std::vector<Rational> s(n + 1);
  s[n] = *top;
  Rational twice_lc = Rational(2) * s[n];
  for (int i = n - 1; i >= 0; --i) {
    // match the coefficient of m^(n+i): 2*s_n*s_i + known cross terms
    Rational partial(0);
    for (int j = i + 1; j <= n; ++j) {
      int k = n + i - j;
      if (k >= i + 1 && k <= n) partial += s[j] * s[k];
    }
    s[i] = (p.coeff(n + i) - partial) / twice_lc;
  }
  Polynomial root = Polynomial::from_coeffs(std::move(s));
  if (root * root == p) return root;
  return std::nullopt;
}

SquarefreeDecomposition squarefree_factorization(const Polynomial& p) {
  if (p.is_zero())
    throw std::domain_error("squarefree_factorization: zero polynomial");
  SquarefreeDecomposition out;
  out.constant = p.lc();
  if (p.degree() == 0) return out;
  Polynomial P = p.monic();
  Polynomial d = Polynomial::gcd(P, P.derivative());
  Polynomial w = Polynomial::exact_div(P, d);
  Polynomial y = Polynomial::exact_div(P.derivative(), d);
  Polynomial z = y - w.derivative();
  int i = 1;
  while (w.degree() > 0) {
    Polynomial g = Polynomial::gcd(w, z);
    if (g.degree() > 0) out.factors.push_back({g, i});
    w = Polynomial::exact_div(w, g);
    y = Polynomial::exact_div(z, g);
    z = y - w.derivative();
    ++i;
  }
  return out;
}

/* ---- rational functions ---- */

RationalFunction::RationalFunction(const Polynomial& num,
                                   const Polynomial& den) {
  if (den.is_zero())
    throw std::domain_error("RationalFunction: zero denominator");
  if (num.is_zero()) {
    num_ = Polynomial();
    den_ = Polynomial::constant(1);
    return;
  }
  Polynomial g = Polynomial::gcd(num, den);
  Polynomial n = Polynomial::exact_div(num, g);
  Polynomial d = Polynomial::exact_div(den, g);
  Rational inv = Rational(1) / d.lc();
  num_ = inv * n;
  den_ = inv * d;
}

RationalFunction RationalFunction::from_coprime(Polynomial num,
                                                Polynomial den) {
  if (den.is_zero())
    throw std::domain_error("RationalFunction: zero denominator");
  RationalFunction f;
  if (num.is_zero()) return f;
  Rational inv = Rational(1) / den.lc();
  f.num_ = inv * num;
  f.den_ = inv * den;
  return f;
}

bool RationalFunction::is_constant() const {
  return num_.degree() <= 0 && den_.degree() == 0;
}

std::optional<Rational> RationalFunction::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (d.is_zero()) return std::nullopt;
  return num_.eval(x) / d;
}

RationalFunction RationalFunction::operator-() const {
  return from_coprime(-num_, den_);
}

RationalFunction operator+(const RationalFunction& a,
                           const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Polynomial g = Polynomial::gcd(a.den_, b.den_);
  if (g.degree() == 0) {
    // coprime denominators: the sum is already reduced
    return RationalFunction::from_coprime(a.num_ * b.den_ + b.num_ * a.den_,
                                          a.den_ * b.den_);
  }
  Polynomial da = Polynomial::exact_div(a.den_, g);
  Polynomial db = Polynomial::exact_div(b.den_, g);
  Polynomial t = a.num_ * db + b.num_ * da;
  if (t.is_zero()) return RationalFunction();
  Polynomial h = Polynomial::gcd(t, g);
  if (h.degree() == 0)
    return RationalFunction::from_coprime(t, da * b.den_);
  return RationalFunction::from_coprime(
      Polynomial::exact_div(t, h), da * Polynomial::exact_div(b.den_, h));
}

RationalFunction operator-(const RationalFunction& a,
                           const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction& a,
                           const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction();
  Polynomial g1 = Polynomial::gcd(a.num_, b.den_);
  Polynomial g2 = Polynomial::gcd(b.num_, a.den_);
  Polynomial n = Polynomial::exact_div(a.num_, g1) *
                 Polynomial::exact_div(b.num_, g2);
  Polynomial d = Polynomial::exact_div(a.den_, g2) *
                 Polynomial::exact_div(b.den_, g1);
  return RationalFunction::from_coprime(std::move(n), std::move(d));
}

RationalFunction operator/(const RationalFunction& a,
                           const RationalFunction& b) {
  if (b.is_zero())
    throw std::domain_error("RationalFunction: division by zero");
  RationalFunction inv = RationalFunction::from_coprime(b.den_, b.num_);
  return a * inv;
}

RationalFunction RationalFunction::pow(unsigned e) const {
  if (e == 0) return RationalFunction(Rational(1));
  if (is_zero()) return RationalFunction();
  return from_coprime(num_.pow(e), den_.pow(e));
}

std::string RationalFunction::str(const std::string& var) const {
  if (den_.degree() == 0) return num_.str(var);
  return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

std::optional<RationalFunction> rf_is_square(const RationalFunction& f) {
  if (f.is_zero()) return RationalFunction();
  // num/den coprime, so f is a square iff both parts are squares in Q[m].
  auto sd = poly_sqrt(f.den());
  if (!sd) return std::nullopt;
  auto sn = poly_sqrt(f.num());
  if (!sn) return std::nullopt;
  return RationalFunction::from_coprime(*sn, *sd);
}

}  // namespace triadsq
