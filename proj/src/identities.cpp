#include "triadsq/identities.hpp"

#include <functional>
#include <stdexcept>

#include "triadsq/parametric.hpp"

namespace triadsq {

namespace {

struct SplitMix {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

/* Numerator in [-999, 999], denominator in [1, 999]. */
Rational draw(SplitMix& rng) {
  long num = static_cast<long>(rng.next() % 1999) - 999;
  long den = static_cast<long>(rng.next() % 999) + 1;
  return Rational(num, den);
}

constexpr int kRetryCap = 100;

Rational draw_where(SplitMix& rng,
                    const std::function<bool(const Rational&)>& ok) {
  for (int i = 0; i < kRetryCap; ++i) {
    Rational r = draw(rng);
    if (ok(r)) return r;
  }
  throw std::runtime_error("identities: retry cap exceeded drawing a sample");
}

struct Sample {
  std::string text;
  Rational residual;
};

Rational sq(const Rational& r) { return r * r; }

/* (a+b+c)^3 - (a^3+b^3+c^3) = 3(a+b)(b+c)(c+a). */
Sample case_cube_sum(SplitMix& rng) {
  Rational a = draw(rng), b = draw(rng), c = draw(rng);
  Rational lhs = pow(a + b + c, 3) - (a * a * a + b * b * b + c * c * c);
  Rational rhs = Rational(3) * (a + b) * (b + c) * (c + a);
  return {"a=" + a.str() + ", b=" + b.str() + ", c=" + c.str(), lhs - rhs};
}

ParamPoint draw_point(SplitMix& rng) {
  Rational p = draw_where(rng, [](const Rational& r) { return !r.is_zero(); });
  Rational q = draw_where(rng, [&p](const Rational& r) {
    return !r.is_zero() && r != p;
  });
  Rational u = draw(rng);
  return ParamPoint(p, q, u);
}

std::string point_text(const ParamPoint& pt) {
  return "p=" + pt.p.str() + ", q=" + pt.q.str() + ", u=" + pt.u.str();
}

/* a+b = p(u^3-w), b+c = q(u^3+w), (c+a)*3pq = 1. */
Sample case_pair_sums(SplitMix& rng) {
  ParamPoint pt = draw_point(rng);
  RationalTriple t = abc_from_pqu(pt);
  Rational u3 = pow(pt.u, 3);
  Rational r1 = (t.a + t.b) - pt.p * (u3 - t.cert_w);
  Rational r2 = (t.b + t.c) - pt.q * (u3 + t.cert_w);
  Rational r3 = (t.c + t.a) * Rational(3) * pt.p * pt.q - Rational(1);
  return {point_text(pt), sq(r1) + sq(r2) + sq(r3)};
}

/* The parametric solution satisfies a+b+c = u^2 and a^3+b^3+c^3 = w^2. */
Sample case_parametric_solution(SplitMix& rng) {
  ParamPoint pt = draw_point(rng);
  RationalTriple t = abc_from_pqu(pt);
  Rational r1 = (t.a + t.b + t.c) - sq(pt.u);
  Rational r2 =
      (t.a * t.a * t.a + t.b * t.b * t.b + t.c * t.c * t.c) - sq(t.cert_w);
  return {point_text(pt), sq(r1) + sq(r2)};
}

/* (3pq(p-q))^2 (a^2+b^2+c^2) equals the quartic ec1 in p. */
Sample case_sum_of_squares_quartic(SplitMix& rng) {
  ParamPoint pt = draw_point(rng);
  RationalTriple t = abc_from_pqu(pt);
  Rational lhs = sq(Rational(3) * pt.p * pt.q * (pt.p - pt.q)) *
                 (t.a * t.a + t.b * t.b + t.c * t.c);
  return {point_text(pt), lhs - ec1_rhs(pt.p, pt.q, pt.u)};
}

/* ec2(p, m) = 16 (m^2-8m+8)^4 ec1(p, q(m), 1). */
Sample case_quartic_rescaling(SplitMix& rng) {
  Rational p = draw(rng), m = draw(rng);
  Rational fqd = m * m - Rational(8) * m + Rational(8);
  Rational rhs = Rational(16) * pow(fqd, 4) * ec1_rhs(p, q_of_m(m), Rational(1));
  return {"p=" + p.str() + ", m=" + m.str(), ec2_rhs(p, m) - rhs};
}

IdentityCaseResult run_case(const std::string& name, int samples,
                            std::uint64_t seed,
                            Sample (*evaluate)(SplitMix&)) {
  IdentityCaseResult out{name, samples, true, std::nullopt};
  SplitMix rng{seed ^ fnv1a(name)};
  for (int i = 0; i < samples && out.residual_zero; ++i) {
    try {
      Sample s = evaluate(rng);
      if (!s.residual.is_zero()) {
        out.residual_zero = false;
        out.witness = s.text + ", residual=" + s.residual.str();
      }
    } catch (const std::domain_error& e) {
      out.residual_zero = false;
      out.witness = std::string("error: ") + e.what();
    }
  }
  return out;
}

}  // namespace

bool IdentityReport::all_zero() const {
  for (const auto& c : cases)
    if (!c.residual_zero) return false;
  return true;
}

IdentityReport run_identities(int samples, std::uint64_t seed) {
  if (samples < 1)
    throw std::domain_error("run_identities: samples must be >= 1");
  IdentityReport report{samples, seed, {}};
  // Fixed name order.
  report.cases.push_back(
      run_case("cube-sum-factorization", samples, seed, case_cube_sum));
  report.cases.push_back(
      run_case("pair-sum-split", samples, seed, case_pair_sums));
  report.cases.push_back(run_case("parametric-solution", samples, seed,
                                  case_parametric_solution));
  report.cases.push_back(run_case("quartic-rescaling", samples, seed,
                                  case_quartic_rescaling));
  report.cases.push_back(run_case("sum-of-squares-quartic", samples, seed,
                                  case_sum_of_squares_quartic));
  return report;
}

}  // namespace triadsq
