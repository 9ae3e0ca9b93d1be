#include "triadsq/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <thread>
#include <utility>

namespace triadsq {
namespace search_detail {

namespace {

template <std::size_t N>
constexpr std::array<bool, N> square_table() {
  std::array<bool, N> t{};
  for (std::size_t r = 0; r < N; ++r) t[r * r % N] = true;
  return t;
}
constexpr auto kMod64 = square_table<64>();
constexpr auto kMod63 = square_table<63>();
constexpr auto kMod65 = square_table<65>();

std::uint64_t isqrt_u64(std::uint64_t n) {
  auto x = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  ++x;  // the double estimate can sit on either side; correct downward
  while (x > 0 && static_cast<u128>(x) * x > n) --x;
  while (static_cast<u128>(x + 1) * (x + 1) <= n) ++x;
  return x;
}

}  // namespace

bool residue_filter(u128 n) {
  const auto hi = static_cast<std::uint64_t>(n >> 64);
  const auto lo = static_cast<std::uint64_t>(n);
  if (!kMod64[lo & 63]) return false;
  // 2^64 is congruent to 16 both mod 63 and mod 65.
  if (!kMod63[(hi % 63 * 16 + lo % 63) % 63]) return false;
  return kMod65[(hi % 65 * 16 + lo % 65) % 65];
}

u128 isqrt_u128(u128 n) {
  if (n <= std::numeric_limits<std::uint64_t>::max())
    return isqrt_u64(static_cast<std::uint64_t>(n));
  // Reduce to a 64-bit estimate: n = m * 4^shift with m < 2^64.
  int shift = 0;
  u128 m = n;
  while (m > std::numeric_limits<std::uint64_t>::max()) {
    m >>= 2;
    ++shift;
  }
  u128 x = (static_cast<u128>(isqrt_u64(static_cast<std::uint64_t>(m))) + 1)
           << shift;
  // Newton steps descend to floor(sqrt(n)) from an estimate >= it.
  while (true) {
    u128 y = (x + n / x) >> 1;
    if (y >= x) break;
    x = y;
  }
  while (x * x > n) --x;
  // cap at 2^64 - 1 = floor(sqrt(2^128 - 1)); (x + 1)^2 would overflow there
  const u128 max_root = ~static_cast<std::uint64_t>(0);
  while (x < max_root && (x + 1) * (x + 1) <= n) ++x;
  return x;
}

std::optional<u128> exact_square_root(u128 n) {
  if (!residue_filter(n)) return std::nullopt;
  u128 r = isqrt_u128(n);
  if (r * r != n) return std::nullopt;
  return r;
}

}  // namespace search_detail

namespace {

using search_detail::u128;

Integer to_integer(u128 v) {
  Integer hi(static_cast<unsigned long>(v >> 64));
  Integer out;
  mpz_mul_2exp(out.get_mpz_t(), hi.get_mpz_t(), 64);
  return out + Integer(static_cast<unsigned long>(v));
}

struct Candidate {
  Integer a, b, c, u, v, w;
};

/* Fixed-width scan of one sum s = su^2; hits appended in (a, b) order. */
void scan_shard_fixed(std::uint64_t su, std::vector<Candidate>& out) {
  const std::uint64_t s = su * su;
  for (std::uint64_t a = 1; 3 * a <= s; ++a) {
    const u128 a2 = static_cast<u128>(a) * a;
    const u128 a3 = a2 * a;
    const std::uint64_t bmax = (s - a) / 2;
    for (std::uint64_t b = a; b <= bmax; ++b) {
      const std::uint64_t c = s - a - b;
      const u128 b2 = static_cast<u128>(b) * b;
      const u128 c2 = static_cast<u128>(c) * c;
      const u128 s2 = a2 + b2 + c2;
      if (!search_detail::residue_filter(s2)) continue;
      const u128 v = search_detail::isqrt_u128(s2);
      if (v * v != s2) continue;
      const auto w = search_detail::exact_square_root(a3 + b2 * b + c2 * c);
      if (!w) continue;
      out.push_back(Candidate{Integer(static_cast<unsigned long>(a)),
                              Integer(static_cast<unsigned long>(b)),
                              Integer(static_cast<unsigned long>(c)),
                              Integer(static_cast<unsigned long>(su)),
                              to_integer(v), to_integer(*w)});
    }
  }
}

/* Arbitrary-precision scan of one sum s = su^2. */
void scan_shard_bignum(const Integer& su, std::vector<Candidate>& out) {
  const Integer s = su * su;
  for (Integer a = 1; 3 * a <= s; ++a) {
    const Integer a3 = a * a * a;
    const Integer bmax = (s - a) / 2;
    for (Integer b = a; b <= bmax; ++b) {
      Integer c = s - a - b;
      auto v = perfect_square(a * a + b * b + c * c);
      if (!v) continue;
      auto w = perfect_square(a3 + b * b * b + c * c * c);
      if (!w) continue;
      out.push_back(Candidate{a, b, std::move(c), su, std::move(*v),
                              std::move(*w)});
    }
  }
}

std::vector<SearchHit> finalize(std::vector<std::vector<Candidate>> shards) {
  std::vector<SearchHit> hits;
  for (auto& shard : shards) {
    for (auto& cand : shard) {
      Integer g = gcd(gcd(cand.a, cand.b), cand.c);
      if (largest_square_divisor(g) != 1) continue;  // reduction seen earlier
      hits.push_back(SearchHit{Triad(cand.a, cand.b, cand.c),
                               Certificate{cand.u, cand.v, cand.w}});
    }
  }
  std::sort(hits.begin(), hits.end(),
            [](const SearchHit& x, const SearchHit& y) {
              Integer sx = x.triad.sum(), sy = y.triad.sum();
              if (sx != sy) return sx < sy;
              if (x.triad.a != y.triad.a) return x.triad.a < y.triad.a;
              return x.triad.b < y.triad.b;
            });
  return hits;
}

constexpr unsigned long kFixedWidthMax = 4'000'000'000'000ul;  // 4e12

std::vector<SearchHit> run_search(const Integer& max_sum, int jobs,
                                  bool force_bignum) {
  if (max_sum < 3)
    throw std::domain_error("search: max_sum must be at least 3");
  if (jobs < 1) throw std::domain_error("search: jobs must be at least 1");
  const bool fixed = !force_bignum && max_sum <= Integer(kFixedWidthMax);
  std::vector<Integer> shards;
  for (Integer su = 2; su * su < max_sum; ++su) shards.push_back(su);
  std::vector<std::vector<Candidate>> results(shards.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    std::size_t i;
    while ((i = next.fetch_add(1)) < shards.size()) {
      if (fixed)
        scan_shard_fixed(shards[i].get_ui(), results[i]);
      else
        scan_shard_bignum(shards[i], results[i]);
    }
  };
  if (jobs == 1 || shards.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    auto n = std::min<std::size_t>(static_cast<std::size_t>(jobs),
                                   shards.size());
    pool.reserve(n);
    for (std::size_t i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return finalize(std::move(results));
}

}  // namespace

std::vector<SearchHit> search(const Integer& max_sum, int jobs) {
  return run_search(max_sum, jobs, false);
}

namespace search_detail {
std::vector<SearchHit> search_bignum(const Integer& max_sum) {
  return run_search(max_sum, 1, true);
}
}  // namespace search_detail

}  // namespace triadsq
