#include "triadsq/curve.hpp"

#include <stdexcept>
#include <utility>

namespace triadsq {

Rational QuarticCurve::eval(const Rational& p) const {
  return (((c4 * p + c3) * p + c2) * p + c1) * p + c0;
}

QuarticCurve quartic_from_m(const Rational& m) {
  auto c = ec2_coefficients(m);
  if (c[4].is_zero())
    throw std::domain_error(
        "quartic_from_m: leading coefficient vanishes at m = " + m.str());
  return QuarticCurve{c[4], c[3], c[2], c[1], c[0]};
}

QuarticPoint base_point(const Rational& m) {
  Rational p0 = p_of_m(m);
  Rational val = ec2_rhs(p0, m);
  auto Y0 = rational_square_root(val);
  if (!Y0)
    throw std::runtime_error("base_point: ec2(p(m)) is not a square at m = " +
                             m.str());
  return QuarticPoint{std::move(p0), std::move(*Y0)};
}

bool WeierstrassCurve::contains(const ECPoint& pt) const {
  if (pt.infinity) return true;
  const Rational& x = pt.x;
  const Rational& y = pt.y;
  Rational lhs = y * y + a1 * x * y + a3 * y;
  Rational rhs = ((x + a2) * x + a4) * x + a6;
  return lhs == rhs;
}

Rational WeierstrassCurve::discriminant() const {
  Rational b2 = a1 * a1 + Rational(4) * a2;
  Rational b4 = Rational(2) * a4 + a1 * a3;
  Rational b6 = a3 * a3 + Rational(4) * a6;
  Rational b8 = a1 * a1 * a6 + Rational(4) * a2 * a6 - a1 * a3 * a4 +
                a2 * a3 * a3 - a4 * a4;
  return -b2 * b2 * b8 - Rational(8) * pow(b4, 3) -
         Rational(27) * b6 * b6 + Rational(9) * b2 * b4 * b6;
}

ECPoint ec_negate(const WeierstrassCurve& e, const ECPoint& pt) {
  if (pt.infinity) return pt;
  return ECPoint::affine(pt.x, -pt.y - e.a1 * pt.x - e.a3);
}

ECPoint ec_add(const WeierstrassCurve& e, const ECPoint& p,
               const ECPoint& q) {
  if (!e.contains(p) || !e.contains(q))
    throw std::domain_error("ec_add: point not on the curve");
  if (p.infinity) return q;
  if (q.infinity) return p;
  const Rational &x1 = p.x, &y1 = p.y, &x2 = q.x, &y2 = q.y;
  if (x1 == x2 && y2 == -y1 - e.a1 * x1 - e.a3) return ECPoint::at_infinity();
  Rational lam;
  if (x1 == x2) {
    lam = (Rational(3) * x1 * x1 + Rational(2) * e.a2 * x1 + e.a4 -
           e.a1 * y1) /
          (Rational(2) * y1 + e.a1 * x1 + e.a3);
  } else {
    lam = (y2 - y1) / (x2 - x1);
  }
  Rational x3 = lam * lam + e.a1 * lam - e.a2 - x1 - x2;
  Rational y3 = lam * (x1 - x3) - y1 - e.a1 * x3 - e.a3;
  return ECPoint::affine(std::move(x3), std::move(y3));
}

ECPoint ec_multiply(const WeierstrassCurve& e, long n, const ECPoint& p) {
  if (!e.contains(p)) throw std::domain_error("ec_multiply: point not on the curve");
  ECPoint base = p;
  if (n < 0) {
    base = ec_negate(e, base);
    n = -n;
  }
  ECPoint acc = ECPoint::at_infinity();
  while (n > 0) {
    if (n & 1) acc = ec_add(e, acc, base);
    n >>= 1;
    if (n > 0) base = ec_add(e, base, base);
  }
  return acc;
}

QuarticWeierstrassMap::QuarticWeierstrassMap(const QuarticCurve& quartic,
                                             const QuarticPoint& base) {
  if (base.Y * base.Y != quartic.eval(base.p))
    throw std::domain_error("QuarticWeierstrassMap: base point not on the quartic");
  auto g = rational_square_root(quartic.c4);
  if (!g || g->is_zero())
    throw std::domain_error(
        "QuarticWeierstrassMap: leading coefficient is not a nonzero square");

  // Complete the square on whichever branch keeps W = Y + G(p) nonzero at
  // the base point; both signs of g give the same Weierstrass model.
  bool usable = false;
  for (int sign : {1, -1}) {
    g_ = sign > 0 ? *g : -*g;
    h_ = quartic.c3 / (Rational(2) * g_);
    k_ = (quartic.c2 - h_ * h_) / (Rational(2) * g_);
    r_ = quartic.c1 - Rational(2) * h_ * k_;
    s_ = quartic.c0 - k_ * k_;
    Rational w0 = base.Y + (g_ * base.p + h_) * base.p + k_;
    if (!w0.is_zero()) {
      usable = true;
      break;
    }
  }
  if (!usable)
    throw std::domain_error(
        "QuarticWeierstrassMap: base point lies on the exceptional locus of "
        "both branches");

  e_ = WeierstrassCurve{
      Rational(0),
      Rational(4) * h_ * h_ - Rational(16) * g_ * k_,
      Rational(0),
      Rational(8) * g_ * (Rational(4) * h_ * r_ - Rational(8) * g_ * s_),
      Rational(64) * g_ * g_ * r_ * r_};
  if (e_.discriminant().is_zero())
    throw std::domain_error("QuarticWeierstrassMap: singular Weierstrass model");

  auto img = forward(base);
  if (!img || !e_.contains(*img))
    throw std::runtime_error("QuarticWeierstrassMap: base point maps badly");
  base_image_ = std::move(*img);
}

std::optional<ECPoint> QuarticWeierstrassMap::forward(
    const QuarticPoint& pt) const {
  Rational w = pt.Y + (g_ * pt.p + h_) * pt.p + k_;
  if (w.is_zero()) return std::nullopt;
  Rational big_t =
      -(Rational(4) * g_ * w * pt.p + Rational(2) * h_ * w + r_);
  return ECPoint::affine(Rational(8) * g_ * w, Rational(8) * g_ * big_t);
}

std::optional<QuarticPoint> QuarticWeierstrassMap::backward(
    const ECPoint& pt) const {
  if (pt.infinity || pt.x.is_zero()) return std::nullopt;
  Rational w = pt.x / (Rational(8) * g_);
  Rational big_t = pt.y / (Rational(8) * g_);
  Rational p = -(Rational(2) * h_ * w + r_ + big_t) / (Rational(4) * g_ * w);
  Rational y = w - ((g_ * p + h_) * p + k_);
  return QuarticPoint{std::move(p), std::move(y)};
}

PointSolutionRun solutions_from_points(const Rational& m, int count) {
  if (count < 2)
    throw std::domain_error("solutions_from_points: count must be >= 2");
  Rational q = q_of_m(m);
  QuarticCurve quartic = quartic_from_m(m);
  QuarticPoint base = base_point(m);
  QuarticWeierstrassMap map(quartic, base);

  PointSolutionRun run;
  run.base = base;
  run.curve = map.curve();
  ECPoint acc = map.base_image();
  for (int n = 2; n <= count; ++n) {
    acc = ec_add(map.curve(), acc, map.base_image());
    std::string label = "[" + std::to_string(n) + "]P";
    if (acc.infinity) {
      run.notices.push_back(label + " is the point at infinity; skipped");
      continue;
    }
    auto back = map.backward(acc);
    if (!back) {
      run.notices.push_back(label +
                            " lies on the exceptional locus X = 0; skipped");
      continue;
    }
    if (back->Y * back->Y != quartic.eval(back->p))
      throw std::runtime_error("solutions_from_points: pullback left the quartic");
    if (back->p.is_zero() || back->p == q) {
      run.notices.push_back(label +
                            " pulls back to a degenerate parameter; skipped");
      continue;
    }
    RationalTriple triple = abc_from_pqu(ParamPoint(back->p, q, Rational(1)));
    if (!triple.cert_v)
      throw std::runtime_error(
          "solutions_from_points: sum of squares unexpectedly not a square");
    bool pos = triple.a.sign() > 0 && triple.b.sign() > 0 &&
               triple.c.sign() > 0;
    run.solutions.push_back(
        PointSolution{n, back->p, std::move(triple), pos});
  }
  return run;
}

}  // namespace triadsq
