#include "triadsq/parametric.hpp"

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace triadsq {

namespace {

Polynomial P(std::initializer_list<long> ascending) {
  std::vector<Rational> c;
  c.reserve(ascending.size());
  for (long v : ascending) c.emplace_back(v);
  return Polynomial::from_coeffs(std::move(c));
}

/* Fixed polynomials in m used across the closed forms. */
const Polynomial& poly_pq() {  // m^2 - 4m - 8, numerator of 2q(m)
  static const Polynomial p = P({-8, -4, 1});
  return p;
}
const Polynomial& poly_qden() {  // m^2 - 8m + 8
  static const Polynomial p = P({8, -8, 1});
  return p;
}
const Polynomial& poly_m24() {  // m^2 - 8m + 24
  static const Polynomial p = P({24, -8, 1});
  return p;
}
const Polynomial& poly_m12() {  // m^2 - 12m + 24
  static const Polynomial p = P({24, -12, 1});
  return p;
}
const Polynomial& poly_num16() {  // numerator of -p(m), degree 16
  static const Polynomial p =
      P({-63870861312L, 154014842880L, -130157641728L, 57252249600L,
         -34652291072L, 35770073088L, -25774522368L, 11595022336L,
         -3417415680L, 674709504L, -87138304L, 6494208L, -108288L, -27904L,
         2688L, -96L, 1L});
  return p;
}
const Polynomial& poly_den8() {  // degree-8 factor of the p(m) denominator
  static const Polynomial p = P({258048L, -288768L, 235520L, -128256L,
                                 39936L, -6944L, 672L, -36L, 1L});
  return p;
}
const Polynomial& poly_c2() {  // degree-8 coefficient of p^2 in ec2
  static const Polynomial p = P({143360L, -352256L, 1060864L, -705536L,
                                 291200L, -90496L, 18112L, -1936L, 83L});
  return p;
}
const Polynomial& poly_c3_inner() {  // degree-6 cofactor in the p^3 coeff
  static const Polynomial p =
      P({1536L, -19968L, 14272L, -5120L, 1112L, -136L, 7L});
  return p;
}
const Polynomial& poly_c1_inner() {  // degree-4 cofactor in the p^1 coeff
  static const Polynomial p = P({320L, -64L, 160L, -56L, 5L});
  return p;
}

/* Denominator of p(m): 12 * (m^2-4m-8)(m^2-12m+24)(m^2-8m+24)^2 * d8(m). */
const Polynomial& poly_pden() {
  static const Polynomial p =
      Rational(12) *
      (poly_pq() * poly_m12() * poly_m24() * poly_m24() * poly_den8());
  return p;
}

}  // namespace

ParamPoint::ParamPoint(Rational p_, Rational q_, Rational u_)
    : p(std::move(p_)), q(std::move(q_)), u(std::move(u_)) {
  if (p.is_zero()) throw std::domain_error("ParamPoint: p must be nonzero");
  if (q.is_zero()) throw std::domain_error("ParamPoint: q must be nonzero");
  if (p == q) throw std::domain_error("ParamPoint: p and q must differ");
}

RationalTriple::RationalTriple(Rational a_, Rational b_, Rational c_,
                               Rational cert_u_,
                               std::optional<Rational> cert_v_,
                               Rational cert_w_)
    : a(std::move(a_)),
      b(std::move(b_)),
      c(std::move(c_)),
      cert_u(std::move(cert_u_)),
      cert_v(std::move(cert_v_)),
      cert_w(std::move(cert_w_)) {
  if (a + b + c != cert_u * cert_u)
    throw std::domain_error("RationalTriple: a+b+c != cert_u^2");
  if (a * a * a + b * b * b + c * c * c != cert_w * cert_w)
    throw std::domain_error("RationalTriple: a^3+b^3+c^3 != cert_w^2");
  if (cert_v) {
    if (cert_v->sign() < 0)
      throw std::domain_error("RationalTriple: cert_v must be nonnegative");
    if (a * a + b * b + c * c != *cert_v * *cert_v)
      throw std::domain_error("RationalTriple: a^2+b^2+c^2 != cert_v^2");
  }
}

RationalTriple abc_from_pqu(const ParamPoint& pt) {
  const Rational &p = pt.p, &q = pt.q, &u = pt.u;
  Rational u2 = u * u, u3 = u2 * u;
  Rational three_p_pq = Rational(3) * p * (p - q);
  Rational three_pq = Rational(3) * p * q;
  Rational three_q_pq = Rational(3) * q * (p - q);
  Rational a = -(Rational(6) * p * p * q * u3 -
                 Rational(3) * p * (p + q) * u2 + Rational(1)) /
               three_p_pq;
  Rational b = (three_pq * u2 - Rational(1)) / three_pq;
  Rational c = (Rational(6) * p * q * q * u3 -
                Rational(3) * q * (p + q) * u2 + Rational(1)) /
               three_q_pq;
  Rational w = (three_pq * (p + q) * u3 - Rational(6) * p * q * u2 +
                Rational(1)) /
               (three_pq * (p - q));
  auto v = rational_square_root(a * a + b * b + c * c);
  return RationalTriple(std::move(a), std::move(b), std::move(c), u,
                        std::move(v), std::move(w));
}

Rational ec1_rhs(const Rational& p, const Rational& q, const Rational& u) {
  Rational qu = q * u;
  Rational q2u2 = qu * qu;
  Rational t4 = Rational(9) * q2u2 * u * u *
                (Rational(8) * q2u2 - Rational(8) * qu + Rational(3));
  Rational t3 = Rational(-6) * u * u * q *
                (Rational(12) * q2u2 * qu - Rational(3) * q2u2 -
                 Rational(2) * qu + Rational(2));
  Rational t2 = Rational(27) * q2u2 * q2u2 + Rational(12) * q2u2 * qu +
                Rational(2);
  Rational t1 = Rational(-2) * q * (Rational(6) * q2u2 + Rational(1));
  Rational t0 = Rational(2) * q * q;
  return (((t4 * p + t3) * p + t2) * p + t1) * p + t0;
}

Rational q_of_m(const Rational& m) {
  Rational den = poly_qden().eval(m);
  if (den.is_zero())
    throw std::domain_error("q_of_m: factor m^2-8m+8 vanishes at m = " +
                            m.str());
  return poly_pq().eval(m) / (Rational(2) * den);
}

std::array<Rational, 5> ec2_coefficients(const Rational& m) {
  Rational fpq = poly_pq().eval(m);
  Rational fqd = poly_qden().eval(m);
  Rational f24 = poly_m24().eval(m);
  return {Rational(8) * fpq * fpq * fqd * fqd,
          Rational(-8) * fqd * fpq * poly_c1_inner().eval(m),
          poly_c2().eval(m),
          Rational(-12) * fpq * poly_c3_inner().eval(m),
          Rational(36) * f24 * f24 * fpq * fpq};
}

Rational ec2_rhs(const Rational& p, const Rational& m) {
  auto c = ec2_coefficients(m);
  return (((c[4] * p + c[3]) * p + c[2]) * p + c[1]) * p + c[0];
}

Rational p_of_m(const Rational& m) {
  struct Factor {
    Rational value;
    const char* name;
  };
  const Factor factors[] = {{poly_pq().eval(m), "m^2-4m-8"},
                            {poly_m12().eval(m), "m^2-12m+24"},
                            {poly_m24().eval(m), "m^2-8m+24"},
                            {poly_den8().eval(m), "the degree-8 factor"}};
  for (const auto& f : factors)
    if (f.value.is_zero())
      throw std::domain_error(std::string("p_of_m: denominator factor ") +
                              f.name + " vanishes at m = " + m.str());
  Rational den = Rational(12) * factors[0].value * factors[1].value *
                 factors[2].value * factors[2].value * factors[3].value;
  return -poly_num16().eval(m) / den;
}

RationalTriple solve_for_m(const Rational& m) {
  Rational q = q_of_m(m);
  Rational p = p_of_m(m);
  if (q.is_zero() || p.is_zero() || p == q)
    throw std::domain_error("solve_for_m: degenerate parameters at m = " +
                            m.str());
  RationalTriple t = abc_from_pqu(ParamPoint(p, q, Rational(1)));
  if (!t.cert_v)
    throw std::runtime_error(
        "solve_for_m: a^2+b^2+c^2 is not a rational square at m = " +
        m.str() + " (coefficient transcription error)");
  return t;
}

ScaleSteps scale_positive_rationals(const Rational& a, const Rational& b,
                                    const Rational& c) {
  const Rational* vals[] = {&a, &b, &c};
  const char* names[] = {"a", "b", "c"};
  for (int i = 0; i < 3; ++i)
    if (vals[i]->sign() <= 0)
      throw std::domain_error(std::string("scaling requires positive ") +
                              names[i] + ", got " + vals[i]->str());
  ScaleSteps out;
  out.k = lcm(lcm(a.den(), b.den()), c.den());
  Rational k2(out.k * out.k);
  for (int i = 0; i < 3; ++i) {
    Rational r = *vals[i] * k2;
    out.raw[i] = r.num();  // denominator is 1 by construction of k
  }
  Integer g = gcd(gcd(out.raw[0], out.raw[1]), out.raw[2]);
  Integer s = largest_square_divisor(g);
  out.square_root_divisor = isqrt(s);
  for (int i = 0; i < 3; ++i) out.reduced[i] = out.raw[i] / s;
  return out;
}

ScaledTriad scale_to_integer_triad(const RationalTriple& t) {
  ScaleSteps steps = scale_positive_rationals(t.a, t.b, t.c);
  Triad triad(steps.reduced[0], steps.reduced[1], steps.reduced[2]);
  VerifyResult check = verify_triad(triad);
  if (!check.ok())
    throw std::runtime_error(
        "scale_to_integer_triad: scaled triad failed revalidation at stage " +
        stage_name(check.failure->stage));
  const Certificate& cert = *check.certificate;
  const Integer& d = steps.square_root_divisor;
  // The rescaled certificates (k u / d, k^2 v / d^2, |k^3 w| / d^3) must
  // agree with the ones recovered from the integer triad.
  Rational ku = abs(t.cert_u * Rational(steps.k, d));
  Rational k3w = abs(t.cert_w * pow(Rational(steps.k, d), 3));
  bool match = ku == Rational(cert.u) && k3w == Rational(cert.w);
  if (t.cert_v)
    match = match && abs(*t.cert_v * pow(Rational(steps.k, d), 2)) ==
                         Rational(cert.v);
  if (!match)
    throw std::runtime_error(
        "scale_to_integer_triad: rescaled certificates disagree with the "
        "verified ones");
  return ScaledTriad{std::move(triad), std::move(steps.k), cert};
}

namespace {

/* num / prod(f^e) reduced to lowest terms using the known squarefree
 * factors; avoids a general PRS gcd on large degrees. */
RationalFunction reduce_known_factors(
    Polynomial num, std::vector<std::pair<Polynomial, int>> work) {
  Polynomial den = Polynomial::constant(1);
  while (!work.empty()) {
    auto [f, e] = work.back();
    work.pop_back();
    if (f.degree() == 0 || e == 0) continue;
    Polynomial h = Polynomial::gcd(num, f);
    if (h.degree() == 0) {
      den = den * f.pow(e);
    } else if (h.degree() == f.degree()) {
      num = Polynomial::exact_div(num, f);
      if (e > 1) work.push_back({std::move(f), e - 1});
    } else {
      Polynomial rest = Polynomial::exact_div(f, h);
      work.push_back({std::move(h), e});
      work.push_back({std::move(rest), e});
    }
  }
  return RationalFunction::from_coprime(std::move(num), std::move(den));
}

[[noreturn]] void family_fail(const std::string& identity) {
  throw std::runtime_error("certify_family: identity failed: " + identity);
}

}  // namespace

FamilyReport certify_family() {
  using RF = RationalFunction;
  const RF one(Rational(1));
  const RF three(Rational(3));
  const RF six(Rational(6));

  RF q(poly_pq(), Rational(2) * poly_qden());
  RF p(-poly_num16(), poly_pden());

  // The u = 1 specialization of the parametric solution.
  RF pmq = p - q;
  RF pq = p * q;
  RF a = -(six * p * p * q - three * p * (p + q) + one) / (three * p * pmq);
  RF b = (three * pq - one) / (three * pq);
  RF c = (six * pq * q - three * q * (p + q) + one) / (three * q * pmq);

  FamilyReport report;
  report.abc = {a, b, c};
  report.sum_identity = (a + b + c == one);
  if (!report.sum_identity) family_fail("a + b + c = 1");

  // Minimal monic D with D^2*a, D^2*b, D^2*c polynomial: ceil(e/2) powers
  // of the squarefree factors of the denominators' lcm.
  Polynomial L =
      Polynomial::lcm(Polynomial::lcm(a.den(), b.den()), c.den());
  SquarefreeDecomposition sqf = squarefree_factorization(L);
  Polynomial D = Polynomial::constant(1);
  std::vector<std::pair<Polynomial, int>> dfactors;
  for (const auto& f : sqf.factors) {
    int e = (f.multiplicity + 1) / 2;
    D = D * f.factor.pow(e);
    dfactors.emplace_back(f.factor, e);
  }
  Polynomial D2 = D * D;
  Polynomial A = Polynomial::exact_div(D2 * a.num(), a.den());
  Polynomial B = Polynomial::exact_div(D2 * b.num(), b.den());
  Polynomial C = Polynomial::exact_div(D2 * c.num(), c.den());
  if (A + B + C != D2) family_fail("D^2*a + D^2*b + D^2*c = D^2");

  // Remove any common square polynomial factor (none expected, but the
  // clearing is only canonical without one).
  Polynomial G = Polynomial::gcd(Polynomial::gcd(A, B), C);
  if (G.degree() > 0) {
    SquarefreeDecomposition gf = squarefree_factorization(G);
    Polynomial s = Polynomial::constant(1);
    for (const auto& f : gf.factors)
      if (f.multiplicity >= 2) s = s * f.factor.pow(f.multiplicity / 2);
    if (s.degree() > 0) {
      Polynomial s2 = s * s;
      A = Polynomial::exact_div(A, s2);
      B = Polynomial::exact_div(B, s2);
      C = Polynomial::exact_div(C, s2);
      D = Polynomial::exact_div(D, s);
      D2 = D * D;
      dfactors.clear();
      SquarefreeDecomposition df = squarefree_factorization(D);
      for (const auto& f : df.factors)
        dfactors.emplace_back(f.factor, f.multiplicity);
    }
  }

  // Joint integer clearing, primitive across the three polynomials.
  Integer den_lcm(1);
  for (const Polynomial* poly : {&A, &B, &C})
    for (const Rational& coeff : poly->coeffs())
      den_lcm = lcm(den_lcm, coeff.den());
  Integer num_gcd(0);
  for (const Polynomial* poly : {&A, &B, &C})
    for (const Rational& coeff : poly->coeffs())
      num_gcd = gcd(num_gcd, coeff.num() * (den_lcm / coeff.den()));
  Rational mu(den_lcm, num_gcd);
  report.cleared_polys = {mu * A, mu * B, mu * C};
  report.cleared_degree = 0;
  for (const auto& poly : report.cleared_polys)
    report.cleared_degree = std::max(report.cleared_degree, poly.degree());
  report.clearing_poly = D;

  // Square roots in Q(m) of the two symmetric sums.
  Polynomial A2 = A * A, B2 = B * B, C2 = C * C;
  Polynomial S2 = A2 + B2 + C2;
  Polynomial S3 = A2 * A + B2 * B + C2 * C;
  auto with_exponent = [&dfactors](int mult) {
    std::vector<std::pair<Polynomial, int>> v = dfactors;
    for (auto& [f, e] : v) e *= mult;
    return v;
  };
  RF squares = reduce_known_factors(S2, with_exponent(4));
  RF cubes = reduce_known_factors(S3, with_exponent(6));
  auto sq = rf_is_square(squares);
  if (!sq) family_fail("a^2 + b^2 + c^2 is a square in Q(m)");
  auto cu = rf_is_square(cubes);
  if (!cu) family_fail("a^3 + b^3 + c^3 is a square in Q(m)");
  if (sq->pow(2) != squares) family_fail("squares_root^2 = a^2+b^2+c^2");
  if (cu->pow(2) != cubes) family_fail("cubes_root^2 = a^3+b^3+c^3");
  report.squares_root = *sq;
  report.cubes_root = *cu;
  return report;
}

}  // namespace triadsq
