#include "cubetile/planar.hpp"

#include "cubetile/error.hpp"

#include <cstdint>
#include <utility>

namespace cubetile::planar {

Claim1Result claim1_decompose(const Int& n) {
  if (n < 36) fail(errc::out_of_range, "claim1_decompose: n must be >= 36");
  Int a = ifloor_root(n, 2);
  if (a * a == n) fail(errc::out_of_range, "claim1_decompose: n must not be a perfect square");
  // Split at the midpoint a^2 + a so the gap b always lands in (a, 2a].
  if (n > a * a + a) return {a, n - a * a, Claim1Case::grow};
  return {a, (a + 1) * (a + 1) - n, Claim1Case::shrink};
}

Claim2Result claim2_decompose(const Int& b) {
  if (b < 7) fail(errc::out_of_range, "claim2_decompose: b must be >= 7");
  if (mod_floor(b, 2) == 1) return {(b - 1) / 2, Claim2Form::odd_gap};
  if (mod_floor(b, 4) == 0) return {b / 4, Claim2Form::quad_gap};
  return {(b - 2) / 4, Claim2Form::twin_gap};
}

PlanarPlan theorem1_params(const Int& n) {
  Claim1Result c1 = claim1_decompose(n);
  Claim2Result c2 = claim2_decompose(c1.b);

  PlanarPlan plan;
  plan.n = n;
  plan.a = c1.a;
  plan.b = c1.b;
  plan.m = c2.m;
  plan.claim1_case = c1.c;
  plan.claim2_form = c2.form;

  const Int& m = c2.m;
  const bool grow = c1.c == Claim1Case::grow;
  plan.p = grow ? c1.a : c1.a + 1;
  // Growing needs r > q (more pieces), shrinking the reverse; the twin form
  // splits the same gap across two blocks on opposite corners.
  switch (c2.form) {
    case Claim2Form::odd_gap:
      plan.q = grow ? m : m + 1;
      plan.r = grow ? m + 1 : m;
      break;
    case Claim2Form::quad_gap:
      plan.q = grow ? Int(m - 1) : Int(m + 1);
      plan.r = grow ? Int(m + 1) : Int(m - 1);
      break;
    case Claim2Form::twin_gap:
      plan.q = grow ? m : m + 1;
      plan.r = grow ? m + 1 : m;
      plan.blocks = 2;
      break;
  }

  const Int gained = plan.blocks * (plan.r * plan.r - plan.q * plan.q);
  if (plan.p * plan.p + gained != n || plan.q < 1 || plan.r < 1 || plan.q == plan.r ||
      plan.blocks * plan.q > plan.p)
    fail(errc::internal_violation, "theorem1_params: inconsistent plan for n = " + n.str());
  return plan;
}

namespace {

std::uint64_t to_count(const Int& v, const char* what) {
  if (v < 0 || (v >> 32) != 0) fail(errc::limit_exceeded, std::string(what) + " out of range");
  return v.convert_to<std::uint64_t>();
}

}  // namespace

Tiling theorem1_tiling(const Int& n) {
  PlanarPlan plan = theorem1_params(n);
  const std::uint64_t p = to_count(plan.p, "theorem1_tiling: grid size");
  const std::uint64_t q = plan.q.convert_to<std::uint64_t>();

  std::vector<Box> pieces;
  pieces.reserve(n.convert_to<std::size_t>());
  for (std::uint64_t i = 0; i < p; ++i) {
    for (std::uint64_t j = 0; j < p; ++j) {
      const bool in_low_block = i < q && j < q;
      const bool in_high_block = plan.blocks == 2 && i >= p - q && j >= p - q;
      if (in_low_block || in_high_block) continue;
      Box cell;
      cell.origin = {Rational(i), Rational(j)};
      cell.side = 1;
      pieces.push_back(std::move(cell));
    }
  }

  Box low_block;
  low_block.origin = {Rational(0), Rational(0)};
  low_block.side = plan.q;
  for (Box& piece : subdivide(low_block, 2, plan.r)) pieces.push_back(std::move(piece));
  if (plan.blocks == 2) {
    Box high_block;
    high_block.origin = {Rational(plan.p - plan.q), Rational(plan.p - plan.q)};
    high_block.side = plan.q;
    for (Box& piece : subdivide(high_block, 2, plan.r)) pieces.push_back(std::move(piece));
  }

  if (Int(pieces.size()) != n)
    fail(errc::internal_violation, "theorem1_tiling: piece count mismatch for n = " + n.str());
  return Tiling::make(2, cube_at_zero(2, Rational(plan.p)), std::move(pieces));
}

Tiling lemma0_tiling(const Int& n) {
  if (n == 5)
    fail(errc::no_decomposition, "a square cannot be cut into exactly 5 squares");
  if (n < 4) fail(errc::out_of_range, "lemma0_tiling: n must be >= 4");
  if (n == 4) return uniform_grid(2);

  const bool odd = mod_floor(n, 2) == 1;
  const Int k_int = odd ? (n - 5) / 2 : (n - 2) / 2;
  const std::uint64_t k = to_count(k_int, "lemma0_tiling: strip length");
  const Rational small = make_rational(1, k_int);

  // A unit square in the corner, an L-shaped frame of 2k+1 squares of side
  // 1/k around it; odd n additionally quarters the unit square.
  std::vector<Box> pieces;
  pieces.reserve(n.convert_to<std::size_t>());
  if (odd) {
    for (Box& quarter : subdivide(unit_box(2), 2, 2)) pieces.push_back(std::move(quarter));
  } else {
    pieces.push_back(unit_box(2));
  }
  for (std::uint64_t i = 0; i <= k; ++i) {  // top strip, full width
    Box piece;
    piece.origin = {Rational(i) * small, Rational(1)};
    piece.side = small;
    pieces.push_back(std::move(piece));
  }
  for (std::uint64_t j = 0; j < k; ++j) {  // right strip, up to the top strip
    Box piece;
    piece.origin = {Rational(1), Rational(j) * small};
    piece.side = small;
    pieces.push_back(std::move(piece));
  }

  if (Int(pieces.size()) != n)
    fail(errc::internal_violation, "lemma0_tiling: piece count mismatch for n = " + n.str());
  return Tiling::make(2, cube_at_zero(2, 1 + small), std::move(pieces));
}

Tiling uniform_grid(const Int& s) {
  if (s < 1) fail(errc::out_of_range, "uniform_grid: side must be >= 1");
  Box outer = cube_at_zero(2, Rational(s));
  std::vector<Box> cells = subdivide(outer, 2, s);
  return Tiling::make(2, std::move(outer), std::move(cells));
}

Tiling plane_tiling(const Int& n) {
  if (n == 5)
    fail(errc::no_decomposition, "a square cannot be cut into exactly 5 squares");
  if (n < 4) fail(errc::out_of_range, "plane_tiling: n must be >= 4");
  Int s = ifloor_root(n, 2);
  if (s * s == n) return uniform_grid(s);
  if (n < 36) return lemma0_tiling(n);
  return theorem1_tiling(n);
}

Rational rho_upper(const Int& n) {
  if (n < 36) fail(errc::out_of_range, "rho_upper: n must be >= 36");
  Int s = ifloor_root(n, 2);
  if (s * s == n) return 1;
  PlanarPlan plan = theorem1_params(n);
  const Int& hi = plan.q > plan.r ? plan.q : plan.r;
  const Int& lo = plan.q > plan.r ? plan.r : plan.q;
  return make_rational(hi, lo);
}

}  // namespace cubetile::planar
