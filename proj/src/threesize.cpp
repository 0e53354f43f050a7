#include "cubetile/threesize.hpp"

#include "cubetile/error.hpp"

#include <cstdint>
#include <utility>

namespace cubetile::threesize {

Int theorem5_threshold(unsigned d) {
  if (d < 3) fail(errc::invalid_argument, "theorem5_threshold: dimension must be >= 3");
  return int_pow(2, (d + 3) * d);
}

ThreeSizePlan theorem5_params(unsigned d, const Int& n) {
  const Int threshold = theorem5_threshold(d);
  if (n <= threshold)
    fail(errc::below_threshold, "piece count " + n.str() + " is too small for dimension " +
                                    std::to_string(d) + ": need more than " + threshold.str());

  ThreeSizePlan plan;
  plan.d = d;
  plan.n = n;
  plan.a = ifloor_root(n, d);
  plan.k = n - int_pow(plan.a - 1, d);

  // n > 2^{(d+3)d} puts the base beyond 2^{d+3} and the deficit beyond the
  // Frobenius bound of the two split gains; both are consequences, so their
  // failure would be a bug, not bad input.
  if (plan.a < int_pow(2, d + 3))
    fail(errc::internal_violation, "theorem5_params: base below 2^(d+3)");
  if (plan.k < int_pow(2, (d + 1) * d))
    fail(errc::internal_violation, "theorem5_params: deficit below 2^((d+1)d)");

  const Int halves_gain = int_pow(2, d) - 1;
  const Int fine_gain = int_pow(halves_gain, d) - 1;
  auto pair = numtheory::sylvester_representation(halves_gain, fine_gain, plan.k);
  plan.x1 = std::move(pair.x1);
  plan.x2 = std::move(pair.x2);

  if (plan.x1 + plan.x2 > int_pow(plan.a - 1, d))
    fail(errc::internal_violation, "theorem5_params: cell budget exceeded");
  return plan;
}

std::vector<highdim::SizeCount> plan_sizes(const ThreeSizePlan& plan) {
  if (plan.d == 0) fail(errc::invalid_argument, "plan_sizes: malformed plan");
  const Int cells = int_pow(plan.a - 1, plan.d);
  const Int splits = int_pow(2, plan.d) - 1;

  std::vector<highdim::SizeCount> sizes;
  Int plain = cells - plan.x1 - plan.x2;
  if (plain > 0) sizes.push_back({Rational(1), plain});
  if (plan.x1 > 0) sizes.push_back({make_rational(1, 2), plan.x1 * int_pow(2, plan.d)});
  if (plan.x2 > 0) sizes.push_back({make_rational(1, splits), plan.x2 * int_pow(splits, plan.d)});
  return sizes;
}

Rational plan_ratio(const ThreeSizePlan& plan) {
  std::vector<highdim::SizeCount> sizes = plan_sizes(plan);
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

Tiling theorem5_tiling(const ThreeSizePlan& plan, const Int& limit) {
  if (plan.d == 0 || plan.a < 2 || plan.x1 < 0 || plan.x2 < 0)
    fail(errc::invalid_argument, "theorem5_tiling: malformed plan");
  if (plan.n > limit)
    fail(errc::limit_exceeded, "materialization refused: " + plan.n.str() +
                                   " pieces exceed the limit of " + limit.str() +
                                   "; use the certificate instead");

  const Int splits = int_pow(2, plan.d) - 1;
  const Int expected = int_pow(plan.a - 1, plan.d) + plan.x1 * (int_pow(2, plan.d) - 1) +
                       plan.x2 * (int_pow(splits, plan.d) - 1);
  if (expected != plan.n)
    fail(errc::invalid_argument, "theorem5_tiling: piece-count identity does not hold");

  std::vector<Box> cells = subdivide(cube_at_zero(plan.d, Rational(plan.a - 1)), plan.d, plan.a - 1);
  const std::uint64_t x1 = to_count(plan.x1, "theorem5_tiling: cell count");
  const std::uint64_t x2 = to_count(plan.x2, "theorem5_tiling: cell count");
  if (x1 + x2 > cells.size())
    fail(errc::invalid_argument, "theorem5_tiling: cell assignments exceed the grid");

  std::vector<Box> pieces;
  pieces.reserve(to_count(plan.n, "theorem5_tiling: piece count"));
  for (std::size_t t = 0; t < cells.size(); ++t) {
    if (t < x1) {
      for (Box& piece : subdivide(cells[t], plan.d, 2)) pieces.push_back(std::move(piece));
    } else if (t < x1 + x2) {
      for (Box& piece : subdivide(cells[t], plan.d, splits)) pieces.push_back(std::move(piece));
    } else {
      pieces.push_back(std::move(cells[t]));
    }
  }

  if (Int(pieces.size()) != plan.n)
    fail(errc::internal_violation, "theorem5_tiling: piece count mismatch");
  return Tiling::make(plan.d, cube_at_zero(plan.d, Rational(plan.a - 1)), std::move(pieces));
}

}  // namespace cubetile::threesize
