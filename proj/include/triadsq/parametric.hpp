/* The parametric pipeline: rational solutions of
 *
 *   a + b + c = u^2,   a^2 + b^2 + c^2 = v^2,   a^3 + b^3 + c^3 = w^2
 *
 * from a two-parameter family (p, q, u), the specialization q = q(m),
 * u = 1 that turns the sum-of-squares condition into a quartic in p, the
 * closed form p = p(m) that makes that quartic a rational square
 * identically in m, integer scaling, and the degree-68 polynomial family
 * certificate.
 *
 * Note on p_of_m: the closed form is implemented with denominator
 *   12 * (m^2-4m-8) * (m^2-12m+24) * (m^2-8m+24)^2 * d8(m)
 * (d8 of degree 8, see the source); the constant factor 12 is essential for
 * ec2_rhs(p_of_m(m), m) to be a rational square.  The form was re-derived
 * by completing the square on the quartic (the residual linear condition
 * r*p + s = 0 gives p = -s/r) and cross-checked against the published
 * m = 3/2 triad, which it reproduces digit for digit.
 */
#pragma once

#include <array>
#include <optional>

#include "triadsq/exactnum.hpp"
#include "triadsq/poly.hpp"
#include "triadsq/verify.hpp"

namespace triadsq {

/* Parameters of the rational family; requires p != 0, q != 0, p != q
 * (the solution formulas divide by p, q and p - q). */
struct ParamPoint {
  ParamPoint(Rational p_, Rational q_, Rational u_);
  Rational p, q, u;
};

/* A rational solution with its certificates: a+b+c = cert_u^2,
 * a^3+b^3+c^3 = cert_w^2, and when cert_v is present
 * a^2+b^2+c^2 = cert_v^2 with cert_v >= 0.  Validated at construction. */
struct RationalTriple {
  RationalTriple(Rational a_, Rational b_, Rational c_, Rational cert_u_,
                 std::optional<Rational> cert_v_, Rational cert_w_);
  Rational a, b, c;
  Rational cert_u;
  std::optional<Rational> cert_v;
  Rational cert_w;
};

/* The solution attached to a parameter point; cert_v is recovered via
 * rational_square_root(a^2+b^2+c^2) and may be absent for points off the
 * quartic locus. */
RationalTriple abc_from_pqu(const ParamPoint& pt);

/* Right side of the quartic-in-p form of the sum-of-squares condition:
 * (3pq(p-q))^2 (a^2+b^2+c^2) as a polynomial in p, q, u. */
Rational ec1_rhs(const Rational& p, const Rational& q, const Rational& u);

/* q(m) = (m^2-4m-8) / (2(m^2-8m+8)); domain error when the denominator
 * factor vanishes (cannot happen for rational m; guarded anyway). */
Rational q_of_m(const Rational& m);

/* The rescaled quartic in p obtained from ec1 at q = q(m), u = 1,
 * multiplied through by 16(m^2-8m+8)^4. */
Rational ec2_rhs(const Rational& p, const Rational& m);

/* Coefficients of that quartic in p, ascending (c0..c4). */
std::array<Rational, 5> ec2_coefficients(const Rational& m);

/* Closed form for the distinguished rational point on ec2 (see the header
 * comment); domain error naming the vanishing denominator factor. */
Rational p_of_m(const Rational& m);

/* Full specialization: p = p_of_m(m), q = q_of_m(m), u = 1.  Throws
 * std::runtime_error if the sum of squares fails to be a rational square
 * (that would signal a transcription error in the coefficients) and
 * std::domain_error when m hits a degenerate parameter locus. */
RationalTriple solve_for_m(const Rational& m);

/* Mechanics of integer scaling: k = lcm of the three denominators, the raw
 * scaled entries k^2*(a,b,c), and the reduction by the largest square
 * divisor of their gcd (square_root_divisor is d with d^2 the divisor). */
struct ScaleSteps {
  Integer k;
  std::array<Integer, 3> raw;
  Integer square_root_divisor;
  std::array<Integer, 3> reduced;
};
ScaleSteps scale_positive_rationals(const Rational& a, const Rational& b,
                                    const Rational& c);

struct ScaledTriad {
  Triad triad;
  Integer k;
  Certificate certificate;
};

/* Scales a positive rational solution to the canonical square-reduced
 * integer triad; certificates are rescaled and revalidated against
 * verify_triad.  Domain error naming the component when one of a, b, c is
 * not positive. */
ScaledTriad scale_to_integer_triad(const RationalTriple& t);

/* The degree-68 polynomial family: a(m), b(m), c(m) built symbolically,
 * the identity a+b+c = 1, exact square roots in Q(m) of the sum of squares
 * and the sum of cubes, the minimal monic D(m) with D^2*a, D^2*b, D^2*c
 * polynomial, and the jointly primitive integer-coefficient clearings.
 * Any failed identity raises std::runtime_error naming the identity. */
struct FamilyReport {
  bool sum_identity;
  std::array<RationalFunction, 3> abc;
  RationalFunction squares_root;
  RationalFunction cubes_root;
  Polynomial clearing_poly;                // D(m), monic
  std::array<Polynomial, 3> cleared_polys; // integer coefficients
  int cleared_degree;
};
FamilyReport certify_family();

}  // namespace triadsq
