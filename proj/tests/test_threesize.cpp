#include "cubetile/error.hpp"
#include "cubetile/threesize.hpp"
#include "cubetile/verify.hpp"
#include "support/random_values.hpp"

#include <doctest.h>

#include <map>
#include <random>
#include <string>

using namespace cubetile;
using namespace cubetile::threesize;

namespace {

Int recount(const ThreeSizePlan& plan) {
  const Int two_d = int_pow(2, plan.d);
  return int_pow(plan.a - 1, plan.d) + plan.x1 * (two_d - 1) +
         plan.x2 * (int_pow(two_d - 1, plan.d) - 1);
}

}  // namespace

TEST_CASE("theorem5_threshold") {
  CHECK(theorem5_threshold(3) == 262144);  // 2^18
  CHECK(theorem5_threshold(4) == int_pow(2, 28));
  CHECK(theorem5_threshold(5) == int_pow(2, 40));
  CHECK_THROWS_AS(theorem5_threshold(2), Error);
}

TEST_CASE("theorem5_params worked examples") {
  auto plan = theorem5_params(3, 262145);
  CHECK(plan.d == 3);
  CHECK(plan.a == 64);
  CHECK(plan.k == 12098);
  CHECK(plan.x1 == 1484);
  CHECK(plan.x2 == 5);
  CHECK(recount(plan) == plan.n);

  auto sizes = plan_sizes(plan);
  REQUIRE(sizes.size() == 3);
  CHECK(sizes[0].side == 1);
  CHECK(sizes[0].count == 248558);
  CHECK(sizes[1].side == make_rational(1, 2));
  CHECK(sizes[1].count == 11872);
  CHECK(sizes[2].side == make_rational(1, 7));
  CHECK(sizes[2].count == 1715);
  CHECK(plan_ratio(plan) == 7);

  plan = theorem5_params(3, 262151);
  CHECK(plan.k == 12104);
  CHECK(plan.x1 == 1436);
  CHECK(plan.x2 == 6);
  CHECK(recount(plan) == plan.n);
}

TEST_CASE("theorem5_params threshold boundary") {
  try {
    theorem5_params(3, 262144);
    FAIL("expected below_threshold");
  } catch (const Error& e) {
    CHECK(e.code() == errc::below_threshold);
    CHECK(std::string(e.what()).find("262144") != std::string::npos);
  }
  CHECK_THROWS_AS(theorem5_params(2, 1000000), Error);  // dimension too small
}

TEST_CASE("split-factor contributions are coprime in every dimension") {
  for (unsigned d = 3; d <= 16; ++d) {
    const Int small = int_pow(2, d) - 1;
    const Int large = int_pow(small, d) - 1;
    CHECK(boost::multiprecision::gcd(small, large) == 1);
  }
}

TEST_CASE("theorem5_tiling materializes and verifies") {
  auto plan = theorem5_params(3, 262145);
  auto t = theorem5_tiling(plan, 300000);
  CHECK(t.dim == 3);
  CHECK(t.outer.side == 63);
  REQUIRE(t.pieces.size() == 262145);

  std::map<Rational, Int> hist;
  for (const Box& b : t.pieces) ++hist[b.side];
  REQUIRE(hist.size() == 3);
  CHECK(hist[Rational(1)] == 248558);
  CHECK(hist[make_rational(1, 2)] == 11872);
  CHECK(hist[make_rational(1, 7)] == 1715);

  auto report = verify::verify_tiling(t);
  CHECK(report.valid);
  CHECK(report.distinct_sides.size() == 3);
  CHECK(report.ratio == 7);

  CHECK_THROWS_AS(theorem5_tiling(plan, 262144), Error);
  try {
    theorem5_tiling(plan, 1000);
    FAIL("expected limit_exceeded");
  } catch (const Error& e) {
    CHECK(e.code() == errc::limit_exceeded);
  }
}

TEST_CASE("theorem5_tiling accepts consistent hand plans") {
  // Degenerate: no refined cells at all -> a uniform 3^3 grid.
  ThreeSizePlan plan;
  plan.d = 3;
  plan.a = 4;
  plan.x1 = 0;
  plan.x2 = 0;
  plan.k = 0;
  plan.n = 27;
  auto t = theorem5_tiling(plan, 1000);
  CHECK(t.pieces.size() == 27);
  CHECK(t.outer.side == 3);
  for (const Box& b : t.pieces) CHECK(b.side == 1);
  CHECK(verify::verify_tiling(t).valid);

  // One halved cell, one (2^d - 1)-split cell.
  plan.x1 = 1;
  plan.x2 = 1;
  plan.n = recount(plan);
  plan.k = plan.n - 27;
  REQUIRE(plan.n == 27 + 7 + 342);
  t = theorem5_tiling(plan, 1000);
  CHECK(t.pieces.size() == 376);
  auto report = verify::verify_tiling(t);
  CHECK(report.valid);
  REQUIRE(report.distinct_sides.size() == 3);
  CHECK(report.distinct_sides[0] == make_rational(1, 7));
  CHECK(report.distinct_sides[1] == make_rational(1, 2));
  CHECK(report.distinct_sides[2] == 1);

  // Inconsistent count is rejected.
  plan.n += 1;
  CHECK_THROWS_AS(theorem5_tiling(plan, 1000), Error);
}

TEST_CASE("random parameters in higher dimensions") {
  std::mt19937_64 rng(4001);
  for (unsigned d = 3; d <= 5; ++d) {
    const Int threshold = theorem5_threshold(d);
    for (int trial = 0; trial < 40; ++trial) {
      const Int n = threshold + 1 + testsupport::random_int(rng, 0, threshold);
      CAPTURE(d);
      CAPTURE(n.str());
      auto plan = theorem5_params(d, n);
      CHECK(plan.a == ifloor_root(n, d));
      CHECK(plan.k == n - int_pow(plan.a - 1, d));
      CHECK(plan.x1 >= 0);
      CHECK(plan.x2 >= 0);
      CHECK(plan.x1 + plan.x2 <= int_pow(plan.a - 1, d));
      CHECK(recount(plan) == n);

      auto sizes = plan_sizes(plan);
      CHECK(sizes.size() <= 3);
      Int total = 0;
      Rational volume = 0;
      for (const auto& sc : sizes) {
        CHECK(sc.count > 0);
        total += sc.count;
        volume += rat_pow(sc.side, d) * Rational(sc.count);
      }
      CHECK(total == n);
      CHECK(volume == rat_pow(Rational(plan.a - 1), d));  // fills [0, a-1]^d
    }
  }
}
