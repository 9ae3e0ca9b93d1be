/* Ground truth: checks a triad of positive integers directly against the
 * three defining conditions (sum, sum of squares, sum of cubes all perfect
 * squares) and reports either the certificate (u, v, w) or the first
 * failing stage with the offending non-square value.
 */
#pragma once

#include <optional>
#include <string>

#include "triadsq/exactnum.hpp"

namespace triadsq {

/* Unordered triad, stored sorted ascending; entries must be >= 1. */
struct Triad {
  Triad(Integer x, Integer y, Integer z);

  Integer a, b, c;  // a <= b <= c
  Integer sum() const { return a + b + c; }
  bool operator==(const Triad&) const = default;
};

struct Certificate {
  Integer u, v, w;  // nonnegative roots of the three sums
  bool operator==(const Certificate&) const = default;
};

enum class FailStage { kSum, kSquares, kCubes };

/* "sum" / "squares" / "cubes". */
std::string stage_name(FailStage s);

struct VerifyFailure {
  FailStage stage;
  Integer value;  // the quantity that is not a perfect square
};

struct VerifyResult {
  std::optional<Certificate> certificate;
  std::optional<VerifyFailure> failure;
  bool ok() const { return certificate.has_value(); }
};

VerifyResult verify_triad(const Triad& t);
VerifyResult verify_triad(const Integer& a, const Integer& b,
                          const Integer& c);

}  // namespace triadsq
