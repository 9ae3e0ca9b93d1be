#include "triadsq/verify.hpp"

#include <algorithm>
#include <stdexcept>

namespace triadsq {

Triad::Triad(Integer x, Integer y, Integer z)
    : a(std::move(x)), b(std::move(y)), c(std::move(z)) {
  if (a < 1 || b < 1 || c < 1)
    throw std::domain_error("Triad: entries must be positive integers");
  if (a > b) swap(a, b);
  if (b > c) swap(b, c);
  if (a > b) swap(a, b);
}

std::string stage_name(FailStage s) {
  switch (s) {
    case FailStage::kSum: return "sum";
    case FailStage::kSquares: return "squares";
    case FailStage::kCubes: return "cubes";
  }
  return "?";
}

VerifyResult verify_triad(const Triad& t) {
  VerifyResult out;
  Integer s1 = t.a + t.b + t.c;
  auto u = perfect_square(s1);
  if (!u) {
    out.failure = VerifyFailure{FailStage::kSum, s1};
    return out;
  }
  Integer s2 = t.a * t.a + t.b * t.b + t.c * t.c;
  auto v = perfect_square(s2);
  if (!v) {
    out.failure = VerifyFailure{FailStage::kSquares, s2};
    return out;
  }
  Integer s3 = t.a * t.a * t.a + t.b * t.b * t.b + t.c * t.c * t.c;
  auto w = perfect_square(s3);
  if (!w) {
    out.failure = VerifyFailure{FailStage::kCubes, s3};
    return out;
  }
  out.certificate = Certificate{*u, *v, *w};
  return out;
}

VerifyResult verify_triad(const Integer& a, const Integer& b,
                          const Integer& c) {
  return verify_triad(Triad(a, b, c));
}

}  // namespace triadsq
