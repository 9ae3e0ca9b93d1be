/* Exhaustive search for square-reduced triads a <= b <= c with
 * a+b+c < max_sum whose sum, sum of squares and sum of cubes are all
 * perfect squares.
 *
 * The outer loop runs over perfect-square sums only (the sum condition is
 * free); the inner double loop enumerates (a, b) and checks the other two
 * sums with a residue fast path (mod 64/63/65) before an integer sqrt.
 * Work is sharded by the square root of the sum, so results are merged and
 * sorted by (sum, a, b) and the output is identical for every jobs count.
 * A 128-bit fixed-width kernel covers max_sum up to 4*10^12 (beyond which
 * 3*max_sum^3 would overflow); an arbitrary-precision kernel takes over
 * above that.  Triads with a square factor common to all three entries are
 * dropped (their reduction already appears at a smaller sum).
 */
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "triadsq/exactnum.hpp"
#include "triadsq/verify.hpp"

namespace triadsq {

struct SearchHit {
  Triad triad;
  Certificate certificate;
  bool operator==(const SearchHit&) const = default;
};

/* All hits with a+b+c < max_sum; max_sum >= 3, jobs >= 1. */
std::vector<SearchHit> search(const Integer& max_sum, int jobs = 1);

namespace search_detail {

using u128 = unsigned __int128;

/* False when n cannot be a square by its residue mod 64, 63 or 65. */
bool residue_filter(u128 n);

u128 isqrt_u128(u128 n);

/* Exact square root (residue filter + isqrt + confirm), empty if not. */
std::optional<u128> exact_square_root(u128 n);

/* The arbitrary-precision kernel, exposed so tests can cross-check it
 * against the fixed-width kernel on small ranges. */
std::vector<SearchHit> search_bignum(const Integer& max_sum);

}  // namespace search_detail

}  // namespace triadsq
