/* Independent reference for small searches: a plain triple loop over
 * a <= b <= c with 64-bit arithmetic and a float-seeded integer sqrt,
 * sharing no code with the library under test. */
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

namespace naive {

inline std::uint64_t isqrt64(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

inline bool is_square(std::uint64_t n, std::uint64_t* root) {
  std::uint64_t r = isqrt64(n);
  if (r * r != n) return false;
  *root = r;
  return true;
}

struct Hit {
  std::array<std::uint64_t, 3> triad;
  std::array<std::uint64_t, 3> cert;
  bool operator==(const Hit&) const = default;
};

/* All a <= b <= c with a+b+c < max_sum and all three power sums square;
 * no square-reduction filter.  Sorted by (sum, a, b). */
inline std::vector<Hit> search(std::uint64_t max_sum) {
  std::vector<Hit> out;
  for (std::uint64_t a = 1; 3 * a < max_sum; ++a)
    for (std::uint64_t b = a; a + 2 * b < max_sum; ++b)
      for (std::uint64_t c = b; a + b + c < max_sum; ++c) {
        std::uint64_t u, v, w;
        if (!is_square(a + b + c, &u)) continue;
        if (!is_square(a * a + b * b + c * c, &v)) continue;
        if (!is_square(a * a * a + b * b * b + c * c * c, &w)) continue;
        out.push_back(Hit{{a, b, c}, {u, v, w}});
      }
  std::sort(out.begin(), out.end(), [](const Hit& x, const Hit& y) {
    auto sx = x.triad[0] + x.triad[1] + x.triad[2];
    auto sy = y.triad[0] + y.triad[1] + y.triad[2];
    if (sx != sy) return sx < sy;
    return x.triad < y.triad;
  });
  return out;
}

}  // namespace naive
