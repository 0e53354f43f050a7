#pragma once

// Planar constructions: every n >= 4 except the impossible n = 5 gets a
// square tiled by exactly n squares of at most two distinct sizes. Large n
// (>= 36) go through the two-parameter family built on n = p^2 -+ (q^2 - r^2)
// with one or two refined q-blocks; small n use the classical frame
// construction; perfect squares use the uniform grid.

#include "cubetile/geometry.hpp"

#include <string>

namespace cubetile::planar {

// n = a^2 + b (grow: b squares gained on top of an a-grid) or
// n = (a+1)^2 - b (shrink: b squares given back from an (a+1)-grid),
// with a = floor(sqrt(n)) and a < b <= 2a either way.
enum class Claim1Case { grow, shrink };

struct Claim1Result {
  Int a, b;
  Claim1Case c;
};

// How the gap b splits into a q/r block refinement: replacing a q-block by
// r^2 equal squares changes the piece count by r^2 - q^2.
//   odd_gap:        b = 2m + 1       -> one block,  (m+1)^2 - m^2
//   quad_gap:       b = 4m           -> one block,  (m+1)^2 - (m-1)^2
//   twin_gap:       b = 4m + 2       -> two blocks, 2((m+1)^2 - m^2)
enum class Claim2Form { odd_gap, quad_gap, twin_gap };

struct Claim2Result {
  Int m;
  Claim2Form form;
};

// Requires n >= 36 and n not a perfect square.
Claim1Result claim1_decompose(const Int& n);

// Requires b >= 7.
Claim2Result claim2_decompose(const Int& b);

// Full parameter set for the two-size construction: a p x p unit grid with
// `blocks` q x q corner blocks each replaced by r^2 squares of side q/r.
struct PlanarPlan {
  Int n;
  Int a, b, m;
  Claim1Case claim1_case;
  Claim2Form claim2_form;
  Int p, q, r;
  int blocks = 1;  // 1, or 2 on opposite corners
};

// Requires n >= 36 and n not a perfect square.
PlanarPlan theorem1_params(const Int& n);

// Materializes the plan for n: exactly n squares, sides {1, q/r} only.
Tiling theorem1_tiling(const Int& n);

// Frame construction for small n: n = 4 and every n >= 6. Yields at most two
// distinct sizes. n = 5 is impossible and reports errc::no_decomposition.
Tiling lemma0_tiling(const Int& n);

// s x s grid of unit squares (the perfect-square case).
Tiling uniform_grid(const Int& s);

// Best available construction for the given n; used by the CLI. Same domain
// as the union of the above: n >= 4, n != 5.
Tiling plane_tiling(const Int& n);

// Size ratio the construction for n achieves: 1 for perfect squares, else
// max(q, r)/min(q, r). Requires n >= 36. Approaches 1 like 1/sqrt(n).
Rational rho_upper(const Int& n);

}  // namespace cubetile::planar
