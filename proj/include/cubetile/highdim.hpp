#pragma once

// The any-dimension pipeline. A d-cube is cut into an a^2-grid (a^{2d} cells,
// each side 1/a^2 after normalizing); every cell is subdivided into m^d equal
// cubes for m = a + c, except that x[i-1] chosen cells get (m+i)^d-way splits
// (gaining (m+i)^d - m^d pieces each) and y1 cells get (m-1)^d-way splits
// (giving back m^d - (m-1)^d each). Choosing c in 0..3 and solving a signed
// representation for the remainder k hits the target count n exactly, with
// side ratio at most (m+d)/(m-1) -> 1.

#include "cubetile/geometry.hpp"
#include "cubetile/numtheory.hpp"

#include <vector>

namespace cubetile::highdim {

// A certified recipe: everything needed to reproduce (or verify) the tiling
// without materializing it.
struct CubePlan {
  unsigned d = 0;
  Int n;         // target piece count
  Int a;         // base: a = floor(n^{1/3d})
  int c = 0;     // offset in 0..3 chosen so k below is small enough
  Int m;         // a + c, the default split factor per cell
  Int k;         // n - a^{2d} * m^d, the piece deficit to make up
  std::vector<Int> x;  // x[i-1] cells get the (m+i)-split, i = 1..d
  Int y1 = 0;          // y1 cells get the (m-1)-split
};

struct SizeCount {
  Rational side;
  Int count;
};

// Smallest pipeline threshold for dimension d and ratio bound 1 + epsilon:
// every n at or above it is guaranteed to work with ratio < 1 + epsilon.
// Requires d >= 2, epsilon > 0.
Int theorem2_threshold(unsigned d, const Rational& epsilon);

// Builds the plan for (d, n). Requires d >= 2 and either n a perfect 3d-th
// power (any size) or floor(n^{1/3d}) > d(d+1); below that the interval
// argument breaks down and errc::below_threshold is raised naming the
// smallest guaranteed n.
CubePlan theorem2_params(unsigned d, const Int& n);

// Piece sizes with multiplicities, largest side first. At most d + 2 entries;
// counts sum to n.
std::vector<SizeCount> plan_sizes(const CubePlan& plan);

// Largest side over smallest side.
Rational plan_ratio(const CubePlan& plan);

// The explicit tiling of the unit d-cube, piece count n. Refuses with
// errc::limit_exceeded when n > limit.
Tiling materialize(const CubePlan& plan, const Int& limit);

}  // namespace cubetile::highdim
