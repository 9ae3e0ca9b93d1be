#include <doctest.h>

#include <stdexcept>

#include "triadsq/verify.hpp"

#include "naive_search.hpp"

using namespace triadsq;

TEST_CASE("known solutions yield their certificates") {
  auto r1 = verify_triad(Triad(108, 124, 129));
  REQUIRE(r1.ok());
  CHECK_EQ(*r1.certificate, Certificate{19, 209, 2305});

  auto r2 = verify_triad(Triad(34, 2134, 2873));
  REQUIRE(r2.ok());
  CHECK_EQ(*r2.certificate, Certificate{71, 3579, 182845});
  CHECK_FALSE(r2.failure.has_value());
}

TEST_CASE("triad entries are sorted and validated") {
  Triad t(129, 108, 124);
  CHECK_EQ(t.a, 108);
  CHECK_EQ(t.b, 124);
  CHECK_EQ(t.c, 129);
  CHECK_EQ(t.sum(), 361);
  CHECK_EQ(t, Triad(124, 129, 108));
  CHECK_THROWS_AS(Triad(0, 1, 2), std::domain_error);
  CHECK_THROWS_AS(Triad(1, -3, 2), std::domain_error);
}

TEST_CASE("first failing stage is reported") {
  auto sum_fail = verify_triad(Triad(1, 2, 3));
  REQUIRE_FALSE(sum_fail.ok());
  CHECK_EQ(sum_fail.failure->stage, FailStage::kSum);
  CHECK_EQ(sum_fail.failure->value, 6);

  auto sq_fail = verify_triad(Triad(2, 3, 4));  // sum 9 = 3^2, squares 29
  REQUIRE_FALSE(sq_fail.ok());
  CHECK_EQ(sq_fail.failure->stage, FailStage::kSquares);
  CHECK_EQ(sq_fail.failure->value, 29);

  // sum 25 and squares 361 pass; cubes 6049 is not a square
  auto cu_fail = verify_triad(Triad(1, 6, 18));
  REQUIRE_FALSE(cu_fail.ok());
  CHECK_EQ(cu_fail.failure->stage, FailStage::kCubes);
  CHECK_EQ(cu_fail.failure->value, 6049);
}

TEST_CASE("stage names") {
  CHECK_EQ(stage_name(FailStage::kSum), "sum");
  CHECK_EQ(stage_name(FailStage::kSquares), "squares");
  CHECK_EQ(stage_name(FailStage::kCubes), "cubes");
}

TEST_CASE("scaling by a square preserves solutions") {
  // (k^2 a, k^2 b, k^2 c) has certificates (k u, k^2 v, k^3 w)
  for (long k : {2, 3, 5}) {
    Integer k2 = Integer(k) * k;
    auto r = verify_triad(108 * k2, 124 * k2, 129 * k2);
    REQUIRE(r.ok());
    CHECK_EQ(r.certificate->u, 19 * k);
    CHECK_EQ(r.certificate->v, 209 * k2);
    CHECK_EQ(r.certificate->w, 2305 * k2 * k);
  }
}

TEST_CASE("integer overload matches the triad overload") {
  auto a = verify_triad(Integer(34), Integer(2134), Integer(2873));
  auto b = verify_triad(Triad(34, 2134, 2873));
  REQUIRE(a.ok());
  CHECK_EQ(*a.certificate, *b.certificate);
}

TEST_CASE("verification agrees with an independent checker") {
  // exhaustive agreement on a small range (all misses there)
  std::size_t positives = 0;
  for (std::uint64_t a = 1; a < 120; ++a)
    for (std::uint64_t b = a; a + b < 120; ++b)
      for (std::uint64_t c = b; a + b + c < 120; ++c) {
        std::uint64_t u, v, w;
        bool expect = naive::is_square(a + b + c, &u) &&
                      naive::is_square(a * a + b * b + c * c, &v) &&
                      naive::is_square(a * a * a + b * b * b + c * c * c, &w);
        auto r = verify_triad(Integer(static_cast<unsigned long>(a)),
                              Integer(static_cast<unsigned long>(b)),
                              Integer(static_cast<unsigned long>(c)));
        CHECK_EQ(r.ok(), expect);
        if (r.ok()) ++positives;
      }
  CHECK_EQ(positives, 0);  // the smallest solution has sum 361

  // every naive hit further out verifies with the same certificate
  auto hits = naive::search(1500);
  REQUIRE_EQ(hits.size(), 2);  // (108,124,129) and its 4-fold blow-up
  for (const auto& h : hits) {
    auto r = verify_triad(Integer(static_cast<unsigned long>(h.triad[0])),
                          Integer(static_cast<unsigned long>(h.triad[1])),
                          Integer(static_cast<unsigned long>(h.triad[2])));
    REQUIRE(r.ok());
    CHECK_EQ(r.certificate->u, static_cast<unsigned long>(h.cert[0]));
    CHECK_EQ(r.certificate->v, static_cast<unsigned long>(h.cert[1]));
    CHECK_EQ(r.certificate->w, static_cast<unsigned long>(h.cert[2]));
  }
}

TEST_CASE("big-integer solution far beyond 64 bits") {
  Integer a("22104703132724392891974197260485203180817980456068478");
  Integer b("45051218517398331420875516790921404601474342024364969");
  Integer c("273836695120684015976157268469007404280872671207701754");
  auto r = verify_triad(a, b, c);
  REQUIRE(r.ok());
  CHECK_EQ(r.certificate->u, Integer("583945731015140430308906351"));
  CHECK_EQ(r.certificate->v,
           Integer("278396777612648920299533437366255456290556040416277781"));
  CHECK_EQ(r.certificate->w,
           Integer("1436534104927398758507454577739563588847756359315448398988"
                   "74809082746461695850725"));
}
