#include "cubetile/error.hpp"
#include "cubetile/highdim.hpp"
#include "cubetile/verify.hpp"
#include "support/random_values.hpp"

#include <doctest.h>

#include <map>
#include <random>
#include <string>

using namespace cubetile;
using namespace cubetile::highdim;

namespace {

// Independent restatement of the plan's counting identity:
// n = (a^{2d} - sum(x) - y1) m^d + sum(x[i-1] (m+i)^d) + y1 (m-1)^d.
Int recount(const CubePlan& plan) {
  Int used = plan.y1;
  for (const Int& v : plan.x) used += v;
  Int total = (int_pow(plan.a, 2 * plan.d) - used) * int_pow(plan.m, plan.d);
  for (unsigned i = 1; i <= plan.d; ++i)
    total += plan.x[i - 1] * int_pow(plan.m + i, plan.d);
  total += plan.y1 * int_pow(plan.m - 1, plan.d);
  return total;
}

void check_plan_invariants(const CubePlan& plan) {
  CHECK(plan.m == plan.a + plan.c);
  CHECK(plan.c >= 0);
  CHECK(plan.c <= 3);
  CHECK(plan.k == plan.n - int_pow(plan.a, 2 * plan.d) * int_pow(plan.m, plan.d));
  CHECK(plan.x.size() == plan.d);
  Int used = plan.y1;
  for (const Int& v : plan.x) {
    CHECK(v >= 0);
    used += v;
  }
  CHECK(plan.y1 >= 0);
  CHECK(used <= int_pow(plan.a, 2 * plan.d));  // fits in the cell budget
  CHECK(recount(plan) == plan.n);
}

}  // namespace

TEST_CASE("theorem2_threshold") {
  CHECK(theorem2_threshold(2, make_rational(3, 5)) == 117649);
  CHECK(theorem2_threshold(3, 1) == Int("10604499373"));
  CHECK(theorem2_threshold(2, 1000) == 117649);  // floor kicks in, base case dominates
  CHECK(theorem2_threshold(2, make_rational(1, 2)) == int_pow(8, 6));
  CHECK(theorem2_threshold(3, make_rational(1, 2)) == Int("10604499373"));
  // Tiny epsilon pushes the base up: a_min = floor((d+1)/eps) + 2.
  CHECK(theorem2_threshold(2, make_rational(1, 10)) == int_pow(32, 6));
  CHECK_THROWS_AS(theorem2_threshold(1, 1), Error);
  CHECK_THROWS_AS(theorem2_threshold(2, 0), Error);
  CHECK_THROWS_AS(theorem2_threshold(2, -1), Error);
}

TEST_CASE("theorem2_params worked example d=2") {
  auto plan = theorem2_params(2, 117650);
  CHECK(plan.d == 2);
  CHECK(plan.a == 7);
  CHECK(plan.c == 0);
  CHECK(plan.m == 7);
  CHECK(plan.k == 1);
  CHECK(plan.x == std::vector<Int>{7, 0});
  CHECK(plan.y1 == 8);
  check_plan_invariants(plan);

  auto sizes = plan_sizes(plan);
  REQUIRE(sizes.size() == 3);
  CHECK(sizes[0].side == make_rational(1, 294));
  CHECK(sizes[0].count == 288);
  CHECK(sizes[1].side == make_rational(1, 343));
  CHECK(sizes[1].count == 116914);
  CHECK(sizes[2].side == make_rational(1, 392));
  CHECK(sizes[2].count == 448);
  CHECK(plan_ratio(plan) == make_rational(4, 3));
}

TEST_CASE("theorem2_params perfect power is a uniform grid") {
  auto plan = theorem2_params(2, 117649);  // 7^6
  CHECK(plan.a == 7);
  CHECK(plan.c == 0);
  CHECK(plan.k == 0);
  CHECK(plan.x == std::vector<Int>{0, 0});
  CHECK(plan.y1 == 0);
  check_plan_invariants(plan);
  CHECK(plan_ratio(plan) == 1);
  auto sizes = plan_sizes(plan);
  REQUIRE(sizes.size() == 1);
  CHECK(sizes[0].side == make_rational(1, 343));
  CHECK(sizes[0].count == 117649);

  // Perfect 3d-th powers work even below the general threshold.
  auto small = theorem2_params(2, 4096);  // 4^6
  CHECK(small.a == 4);
  CHECK(small.k == 0);
  check_plan_invariants(small);
}

TEST_CASE("theorem2_params worked example d=3") {
  auto plan = theorem2_params(3, Int("10604499374"));
  CHECK(plan.d == 3);
  CHECK(plan.a == 13);
  CHECK(plan.c == 0);
  CHECK(plan.m == 13);
  CHECK(plan.k == 1);
  CHECK(plan.x == std::vector<Int>{463, 0, 0});
  CHECK(plan.y1 == 540);
  check_plan_invariants(plan);

  auto sizes = plan_sizes(plan);
  REQUIRE(sizes.size() == 3);
  CHECK(sizes[0].side == make_rational(1, 2028));   // (m-1)-split of a cell: 1/(169*12)
  CHECK(sizes[0].count == 933120);                  // 540 * 12^3
  CHECK(sizes[1].side == make_rational(1, 2197));   // default m-split
  CHECK(sizes[1].count == (int_pow(13, 6) - 1003) * 2197);
  CHECK(sizes[2].side == make_rational(1, 2366));   // (m+1)-split: 1/(169*14)
  CHECK(sizes[2].count == 1270472);                 // 463 * 14^3
  CHECK(plan_ratio(plan) == make_rational(7, 6));   // 2366/2028
}

TEST_CASE("theorem2_params below threshold names the bound") {
  try {
    theorem2_params(3, Int("10604499372"));
    FAIL("expected below_threshold");
  } catch (const Error& e) {
    CHECK(e.code() == errc::below_threshold);
    CHECK(std::string(e.what()).find("10604499373") != std::string::npos);
  }
  CHECK_THROWS_AS(theorem2_params(1, 100), Error);
  CHECK_THROWS_AS(theorem2_params(2, 0), Error);
}

TEST_CASE("materialize on the trivial plan") {
  auto plan = theorem2_params(2, 4096);
  auto t = materialize(plan, 100000);
  CHECK(t.dim == 2);
  CHECK(t.outer.side == 1);
  CHECK(t.pieces.size() == 4096);
  for (const Box& b : t.pieces) CHECK(b.side == make_rational(1, 64));
  CHECK(verify::verify_tiling(t).valid);

  CHECK_THROWS_AS(materialize(plan, 4095), Error);
  try {
    materialize(plan, 10);
    FAIL("expected limit_exceeded");
  } catch (const Error& e) {
    CHECK(e.code() == errc::limit_exceeded);
  }
}

TEST_CASE("materialize a mixed plan and verify it exactly") {
  // Hand-built plan small enough to check geometrically: d = 2, a = 3,
  // m = 3, one (m+1)-split cell and no (m-1)-split cells.
  // n = (81 - 1) * 9 + 16 = 736.
  CubePlan plan;
  plan.d = 2;
  plan.a = 3;
  plan.c = 0;
  plan.m = 3;
  plan.x = {Int(1), Int(0)};
  plan.y1 = 0;
  plan.n = recount(plan);
  plan.k = plan.n - int_pow(plan.a, 4) * int_pow(plan.m, 2);
  REQUIRE(plan.n == 736);

  auto t = materialize(plan, 100000);
  CHECK(t.pieces.size() == 736);
  auto report = verify::verify_tiling(t);
  CHECK(report.valid);
  REQUIRE(report.distinct_sides.size() == 2);
  CHECK(report.distinct_sides[0] == make_rational(1, 36));
  CHECK(report.distinct_sides[1] == make_rational(1, 27));
  CHECK(report.ratio == make_rational(4, 3));

  // With a (m-1)-split cell as well: n = (81 - 2) * 9 + 16 + 4 = 731.
  plan.y1 = 1;
  plan.n = recount(plan);
  plan.k = plan.n - int_pow(plan.a, 4) * int_pow(plan.m, 2);
  REQUIRE(plan.n == 731);
  t = materialize(plan, 100000);
  CHECK(t.pieces.size() == 731);
  report = verify::verify_tiling(t);
  CHECK(report.valid);
  REQUIRE(report.distinct_sides.size() == 3);
  CHECK(report.distinct_sides[0] == make_rational(1, 36));
  CHECK(report.distinct_sides[1] == make_rational(1, 27));
  CHECK(report.distinct_sides[2] == make_rational(1, 18));
  CHECK(report.ratio == 2);

  // Piece sizes agree with the materialized histogram.
  std::map<Rational, Int> hist;
  for (const Box& b : t.pieces) ++hist[b.side];
  auto sizes = plan_sizes(plan);
  REQUIRE(sizes.size() == hist.size());
  for (const auto& sc : sizes) {
    REQUIRE(hist.count(sc.side) == 1);
    CHECK(hist[sc.side] == sc.count);
  }
}

TEST_CASE("random plans satisfy the invariants and the ratio bound") {
  std::mt19937_64 rng(3001);
  const Int half_threshold2 = theorem2_threshold(2, make_rational(1, 2));
  const Int half_threshold3 = theorem2_threshold(3, make_rational(1, 2));

  for (int trial = 0; trial < 250; ++trial) {
    const unsigned d = 2 + static_cast<unsigned>(testsupport::random_index(rng, 2));
    const Int base = d == 2 ? half_threshold2 : half_threshold3;
    const Int n = base + testsupport::random_int(rng, 0, base);  // n in [t, 2t]
    CAPTURE(d);
    CAPTURE(n.str());
    auto plan = theorem2_params(d, n);
    check_plan_invariants(plan);

    auto sizes = plan_sizes(plan);
    CHECK(sizes.size() <= plan.d + 2);
    Int total = 0;
    for (const auto& sc : sizes) {
      CHECK(sc.count > 0);
      total += sc.count;
    }
    CHECK(total == n);
    for (std::size_t i = 1; i < sizes.size(); ++i) CHECK(sizes[i - 1].side > sizes[i].side);

    // Above the ratio-3/2 threshold the guarantee must hold.
    CHECK(plan_ratio(plan) <= make_rational(3, 2));
    // And the generic bound (m+d)/(m-1) always does.
    CHECK(plan_ratio(plan) <= make_rational(plan.m + plan.d, plan.m - 1));

    // Exact volume: sum side^d * count == 1.
    Rational volume = 0;
    for (const auto& sc : sizes) volume += rat_pow(sc.side, plan.d) * Rational(sc.count);
    CHECK(volume == 1);
  }
}

TEST_CASE("interval bracketing bounds used by the parameter choice") {
  // The c-scan relies on (1 + d/m)^d < 87/32 and on the largest gain
  // (m+d)^d - m^d staying below (55/32) m^d for m > d(d+1).
  for (unsigned d = 2; d <= 9; ++d) {
    const Int m_min = Int(d) * (Int(d) + 1) + 1;
    for (Int m = m_min; m <= m_min + 50; ++m) {
      const Rational growth = rat_pow(1 + Rational(d) / Rational(m), d);
      CHECK(growth < make_rational(87, 32));
      const Rational gain = Rational(int_pow(m + d, d) - int_pow(m, d));
      CHECK(gain < make_rational(55, 32) * Rational(int_pow(m, d)));
    }
  }
}

TEST_CASE("runs of splits appear at the right cells") {
  // The first sum(x) cells (in canonical order) of the a^2-grid carry the
  // oversize splits, then y1 undersize cells, then plain m-splits. Check the
  // first piece really is an (m+1)-split corner piece for the 736 plan.
  CubePlan plan;
  plan.d = 2;
  plan.a = 3;
  plan.c = 0;
  plan.m = 3;
  plan.x = {Int(1), Int(0)};
  plan.y1 = 0;
  plan.n = 736;
  plan.k = 736 - 81 * 9;

  auto t = materialize(plan, 1000000);
  // Smallest piece side is 1/(a^2 * (m+1)) = 1/36 and it sits at the origin.
  bool found_origin_small = false;
  for (const Box& b : t.pieces) {
    bool at_origin = true;
    for (const Rational& c : b.origin) at_origin = at_origin && c == 0;
    if (at_origin) {
      CHECK(b.side == make_rational(1, 36));
      found_origin_small = true;
    }
  }
  CHECK(found_origin_small);
}
