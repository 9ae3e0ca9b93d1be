#include <doctest.h>

#include <stdexcept>

#include "triadsq/identities.hpp"

using namespace triadsq;

TEST_CASE("all identity cases hold at 100 samples") {
  IdentityReport r = run_identities(100, 1);
  CHECK(r.all_zero());
  CHECK_EQ(r.samples, 100);
  CHECK_EQ(r.seed, 1);
  REQUIRE_EQ(r.cases.size(), 5);
  const char* names[] = {"cube-sum-factorization", "pair-sum-split",
                         "parametric-solution", "quartic-rescaling",
                         "sum-of-squares-quartic"};
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK_EQ(r.cases[i].name, names[i]);
    CHECK_EQ(r.cases[i].samples, 100);
    CHECK(r.cases[i].residual_zero);
    CHECK_FALSE(r.cases[i].witness.has_value());
  }
}

TEST_CASE("reports are deterministic for a fixed seed") {
  IdentityReport a = run_identities(25, 424242);
  IdentityReport b = run_identities(25, 424242);
  REQUIRE_EQ(a.cases.size(), b.cases.size());
  for (std::size_t i = 0; i < a.cases.size(); ++i) {
    CHECK_EQ(a.cases[i].name, b.cases[i].name);
    CHECK_EQ(a.cases[i].samples, b.cases[i].samples);
    CHECK_EQ(a.cases[i].residual_zero, b.cases[i].residual_zero);
    CHECK_EQ(a.cases[i].witness.has_value(), b.cases[i].witness.has_value());
  }
}

TEST_CASE("identities hold across seeds") {
  for (std::uint64_t seed : {2ull, 17ull, 987654321987654321ull})
    CHECK(run_identities(10, seed).all_zero());
}

TEST_CASE("sample count validation") {
  CHECK_THROWS_AS(run_identities(0, 1), std::domain_error);
  CHECK_THROWS_AS(run_identities(-5, 1), std::domain_error);
  CHECK(run_identities(1, 7).all_zero());
}
