/* Elliptic-curve machinery over Q for generating further rational
 * solutions at a fixed m: the sum-of-squares quartic Y^2 = ec2(p), its
 * birational map to a Weierstrass model (completing the square on the
 * quartic, whose leading coefficient is a rational square), the chord and
 * tangent group law, and the walk P, 2P, 3P, ... pulled back through the
 * map to fresh values of p and hence fresh rational triples.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "triadsq/exactnum.hpp"
#include "triadsq/parametric.hpp"

namespace triadsq {

/* Y^2 = c4 p^4 + c3 p^3 + c2 p^2 + c1 p + c0 with c4 a nonzero square. */
struct QuarticCurve {
  Rational c4, c3, c2, c1, c0;
  Rational eval(const Rational& p) const;
};

struct QuarticPoint {
  Rational p, Y;
};

/* The quartic at parameter m (coefficients of ec2); domain error if the
 * leading coefficient degenerates to zero. */
QuarticCurve quartic_from_m(const Rational& m);

/* The distinguished point (p_of_m(m), sqrt(ec2)); a non-square ec2 value
 * here would mean a coefficient transcription error (runtime error). */
QuarticPoint base_point(const Rational& m);

/* Affine point or the point at infinity. */
struct ECPoint {
  bool infinity = true;
  Rational x, y;
  static ECPoint at_infinity() { return ECPoint{}; }
  static ECPoint affine(Rational x, Rational y) {
    return ECPoint{false, std::move(x), std::move(y)};
  }
  bool operator==(const ECPoint&) const = default;
};

/* y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6. */
struct WeierstrassCurve {
  Rational a1, a2, a3, a4, a6;
  bool contains(const ECPoint& pt) const;
  Rational discriminant() const;
};

ECPoint ec_negate(const WeierstrassCurve& e, const ECPoint& pt);
/* Chord-and-tangent addition; inputs must lie on the curve. */
ECPoint ec_add(const WeierstrassCurve& e, const ECPoint& p,
               const ECPoint& q);
/* n*P by double-and-add; negative n through negation. */
ECPoint ec_multiply(const WeierstrassCurve& e, long n, const ECPoint& p);

/* Birational map between Y^2 = quartic(p) and a Weierstrass model, built
 * by completing the square against G(p) = g p^2 + h p + k with g^2 = c4.
 * The chart divides by W = Y + G(p), so a base point on the branch W = 0
 * gets the conjugate chart (G -> -G) instead, which leaves the Weierstrass
 * model unchanged.  A base point with Y = G(p) = 0 sits on both branches
 * and is rejected.
 */
class QuarticWeierstrassMap {
 public:
  QuarticWeierstrassMap(const QuarticCurve& quartic,
                        const QuarticPoint& base);

  const WeierstrassCurve& curve() const { return e_; }
  const ECPoint& base_image() const { return base_image_; }
  /* -1 when the conjugate branch was needed for the base point. */
  int branch() const { return g_.sign(); }

  /* Empty on the exceptional locus W = Y + G(p) = 0. */
  std::optional<ECPoint> forward(const QuarticPoint& pt) const;
  /* Empty at infinity and on the exceptional locus X = 0. */
  std::optional<QuarticPoint> backward(const ECPoint& pt) const;

 private:
  Rational g_, h_, k_, r_, s_;  // completed-square data; g < 0 on branch -1
  WeierstrassCurve e_;
  ECPoint base_image_;
};

/* One multiple of the base point pulled back to the parameter line. */
struct PointSolution {
  int multiple;           // n, for n*P
  Rational p;             // parameter of the pulled-back point
  RationalTriple triple;  // solution at (p, q(m), u = 1)
  bool all_positive;
};

struct PointSolutionRun {
  QuarticPoint base;
  WeierstrassCurve curve;
  std::vector<PointSolution> solutions;
  std::vector<std::string> notices;  // skipped multiples, with reasons
};

/* Walks n = 2..count (count >= 2) over multiples of the base point at
 * parameter m; multiples landing at infinity, on exceptional loci, or on
 * degenerate parameter values are skipped with a notice. */
PointSolutionRun solutions_from_points(const Rational& m, int count);

}  // namespace triadsq
