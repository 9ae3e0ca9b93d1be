/* Randomized exact identity harness.  Every displayed identity of the
 * parametric construction is evaluated at pseudo-random rational points
 * (exact arithmetic, no approximation); the sample counts far exceed the
 * per-variable degrees, so all-zero residuals confirm the identities.
 *
 * The generator is a self-contained splitmix64 so that a fixed seed gives
 * a bit-identical report on every platform (std::uniform_int_distribution
 * is implementation-defined and unusable for that).
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "triadsq/exactnum.hpp"

namespace triadsq {

struct IdentityCaseResult {
  std::string name;
  int samples;
  bool residual_zero;
  /* Serialized sample point (and residual or error) when nonzero. */
  std::optional<std::string> witness;
};

struct IdentityReport {
  int samples;
  std::uint64_t seed;
  std::vector<IdentityCaseResult> cases;  // fixed name order
  bool all_zero() const;
};

/* Runs every case at `samples` points; samples >= 1 or domain error.
 * Samples landing on an excluded locus (p = q, zero denominators) are
 * re-drawn under a retry cap (exceeding it is a runtime error). */
IdentityReport run_identities(int samples, std::uint64_t seed);

}  // namespace triadsq
