#include "cubetile/highdim.hpp"

#include "cubetile/error.hpp"

#include <cstdint>
#include <utility>

namespace cubetile::highdim {

Int theorem2_threshold(unsigned d, const Rational& epsilon) {
  if (d < 2) fail(errc::invalid_argument, "theorem2_threshold: dimension must be >= 2");
  if (epsilon <= 0) fail(errc::invalid_argument, "theorem2_threshold: epsilon must be positive");
  // The base a must clear both the interval argument (a > d(d+1)) and the
  // ratio bound ((a+d)/(a-1) < 1 + epsilon, i.e. a > (d+1)/epsilon + 1).
  Int a_min = Int(d) * (d + 1) + 1;
  Int from_ratio = rat_floor(Rational(d + 1) / epsilon) + 2;
  if (from_ratio > a_min) a_min = from_ratio;
  return int_pow(a_min, 3 * d);
}

CubePlan theorem2_params(unsigned d, const Int& n) {
  if (d < 2) fail(errc::invalid_argument, "theorem2_params: dimension must be >= 2");
  if (n < 1) fail(errc::out_of_range, "theorem2_params: n must be >= 1");

  CubePlan plan;
  plan.d = d;
  plan.n = n;
  plan.a = ifloor_root(n, 3 * d);
  plan.x.assign(d, Int(0));

  const Int& a = plan.a;
  if (int_pow(a, 3 * d) == n) {
    // Exact power: the uniform a^2-grid of a-splits needs no adjustment.
    plan.m = a;
    return plan;
  }

  const Int floor_needed = Int(d) * (d + 1);
  if (a <= floor_needed) {
    Int min_n = int_pow(floor_needed + 1, 3 * d);
    fail(errc::below_threshold,
         "piece count " + n.str() + " is too small for dimension " + std::to_string(d) +
             ": guaranteed from " + min_n.str() + " (or any exact " +
             std::to_string(3 * d) + "th power)");
  }

  const Int a2d = int_pow(a, 2 * d);
  // For a > d(d+1) four offsets always span past the next base: the c-scan
  // below cannot fall off the end.
  if (a2d * int_pow(a + 4, d) <= int_pow(a + 1, 3 * d))
    fail(errc::internal_violation, "theorem2_params: offset interval too short");

  int c = -1;
  for (int candidate = 0; candidate <= 3; ++candidate) {
    if (a2d * int_pow(a + candidate, d) <= n && n < a2d * int_pow(a + candidate + 1, d)) {
      c = candidate;
      break;
    }
  }
  if (c < 0) fail(errc::internal_violation, "theorem2_params: no offset bracketed n");

  plan.c = c;
  plan.m = a + c;
  plan.k = n - a2d * int_pow(plan.m, d);

  const Int md = int_pow(plan.m, d);
  std::vector<Int> gains(d);
  for (unsigned i = 1; i <= d; ++i) gains[i - 1] = int_pow(plan.m + i, d) - md;
  const Int loss = md - int_pow(plan.m - 1, d);

  auto rep = numtheory::reduce_representation(
      numtheory::signed_representation(gains, {loss}, plan.k), d);
  plan.x = std::move(rep.x);
  plan.y1 = std::move(rep.y[0]);

  Int check = a2d * md;
  Int used = plan.y1;
  for (unsigned i = 1; i <= d; ++i) {
    check += plan.x[i - 1] * (int_pow(plan.m + i, d) - md);
    used += plan.x[i - 1];
  }
  check -= plan.y1 * loss;
  if (check != n) fail(errc::internal_violation, "theorem2_params: piece-count identity lost");
  if (used > a2d) fail(errc::internal_violation, "theorem2_params: cell budget exceeded");
  return plan;
}

std::vector<SizeCount> plan_sizes(const CubePlan& plan) {
  if (plan.d == 0 || plan.x.size() != plan.d)
    fail(errc::invalid_argument, "plan_sizes: malformed plan");
  const Int a2 = plan.a * plan.a;
  const Int cells = int_pow(plan.a, 2 * plan.d);

  Int plain = cells - plan.y1;
  for (const Int& xi : plan.x) plain -= xi;

  std::vector<SizeCount> sizes;
  // Largest piece first: the (m-1)-split, then the default m-split, then the
  // progressively finer (m+i)-splits.
  if (plan.y1 > 0)
    sizes.push_back({make_rational(1, a2 * (plan.m - 1)), plan.y1 * int_pow(plan.m - 1, plan.d)});
  if (plain > 0) sizes.push_back({make_rational(1, a2 * plan.m), plain * int_pow(plan.m, plan.d)});
  for (unsigned i = 1; i <= plan.d; ++i) {
    const Int& xi = plan.x[i - 1];
    if (xi > 0)
      sizes.push_back({make_rational(1, a2 * (plan.m + i)), xi * int_pow(plan.m + i, plan.d)});
  }
  return sizes;
}

Rational plan_ratio(const CubePlan& plan) {
  std::vector<SizeCount> sizes = plan_sizes(plan);
  if (sizes.empty()) fail(errc::invalid_argument, "plan_ratio: empty plan");
  return sizes.front().side / sizes.back().side;
}

namespace {

std::uint64_t to_count(const Int& v, const char* what) {
  if (v < 0 || (v >> 32) != 0)
    fail(errc::limit_exceeded, std::string(what) + " out of materializable range");
  return v.convert_to<std::uint64_t>();
}

}  // namespace

Tiling materialize(const CubePlan& plan, const Int& limit) {
  if (plan.d == 0 || plan.x.size() != plan.d)
    fail(errc::invalid_argument, "materialize: malformed plan");
  if (plan.n > limit)
    fail(errc::limit_exceeded, "materialization refused: " + plan.n.str() +
                                   " pieces exceed the limit of " + limit.str() +
                                   "; use the certificate instead");

  const std::uint64_t total = to_count(plan.n, "materialize: piece count");
  // Consume the grid cells in canonical order: the x-runs first, then the
  // y-run, then everything else splits m ways.
  std::vector<std::pair<std::uint64_t, Int>> runs;
  std::uint64_t assigned = 0;
  for (unsigned i = 1; i <= plan.d; ++i) {
    std::uint64_t xi = to_count(plan.x[i - 1], "materialize: cell count");
    if (xi > 0) runs.emplace_back(xi, plan.m + i);
    assigned += xi;
  }
  std::uint64_t y1 = to_count(plan.y1, "materialize: cell count");
  if (y1 > 0) runs.emplace_back(y1, plan.m - 1);
  assigned += y1;

  std::vector<Box> cells = subdivide(unit_box(plan.d), plan.d, plan.a * plan.a);
  if (assigned > cells.size())
    fail(errc::invalid_argument, "materialize: cell assignments exceed the grid");
  if (cells.size() > assigned) runs.emplace_back(cells.size() - assigned, plan.m);

  std::vector<Box> pieces;
  pieces.reserve(total);
  std::size_t next_cell = 0;
  for (const auto& [count, parts] : runs) {
    for (std::uint64_t t = 0; t < count; ++t, ++next_cell) {
      if (parts == 1) {
        pieces.push_back(std::move(cells[next_cell]));
        continue;
      }
      for (Box& piece : subdivide(cells[next_cell], plan.d, parts))
        pieces.push_back(std::move(piece));
    }
  }

  if (Int(pieces.size()) != plan.n)
    fail(errc::internal_violation, "materialize: piece count mismatch");
  return Tiling::make(plan.d, unit_box(plan.d), std::move(pieces));
}

}  // namespace cubetile::highdim
