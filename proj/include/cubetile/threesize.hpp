#pragma once

// Three-size tilings for d >= 3: an (a-1)^d grid of unit cells in which x1
// cells are halved (2^d pieces each) and x2 cells are split (2^d - 1) ways.
// The two split factors contribute 2^d - 1 and (2^d - 1)^d - 1 extra pieces
// per cell — coprime numbers, so a Sylvester representation of the deficit
// k = n - (a-1)^d exists as soon as k clears the Frobenius bound, which the
// threshold on n guarantees. Sides used: 1, 1/2, 1/(2^d - 1).

#include "cubetile/geometry.hpp"
#include "cubetile/highdim.hpp"  // SizeCount

#include <vector>

namespace cubetile::threesize {

struct ThreeSizePlan {
  unsigned d = 0;
  Int n;
  Int a;   // floor(n^{1/d}); the grid has side a - 1
  Int k;   // n - (a-1)^d
  Int x1;  // cells halved
  Int x2;  // cells split 2^d - 1 ways
};

// Smallest n the construction is guaranteed for: n > 2^{(d+3)d}.
Int theorem5_threshold(unsigned d);

// Requires d >= 3 and n > theorem5_threshold(d).
ThreeSizePlan theorem5_params(unsigned d, const Int& n);

// Piece sizes with multiplicities, largest side first; at most 3 entries,
// counts summing to n.
std::vector<highdim::SizeCount> plan_sizes(const ThreeSizePlan& plan);

Rational plan_ratio(const ThreeSizePlan& plan);

// The explicit tiling of [0, a-1]^d. Works for any internally consistent
// plan (the degenerate x1 = x2 = 0 gives a uniform grid). Refuses with
// errc::limit_exceeded when n > limit.
Tiling theorem5_tiling(const ThreeSizePlan& plan, const Int& limit);

}  // namespace cubetile::threesize
