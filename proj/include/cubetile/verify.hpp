#pragma once

// Exact certification. A tiling is valid when every piece lies inside the
// outer cube, piece interiors are pairwise disjoint, and the piece volumes
// sum to the outer volume — together these force the pieces to fill the cube
// with no gap. All checks run in integer arithmetic after clearing
// denominators; there is no tolerance anywhere.

#include "cubetile/geometry.hpp"
#include "cubetile/highdim.hpp"
#include "cubetile/threesize.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cubetile::verify {

enum class ViolationKind {
  overlap,         // two pieces share interior volume (or a cell budget is
                   // overdrawn, for certificate checks)
  outside,         // a piece leaves the outer cube / malformed structure
  volume_deficit,  // piece volumes do not sum to the outer volume / a piece
                   // count identity fails
};

struct Violation {
  ViolationKind kind = ViolationKind::outside;
  // Offending piece indices (input order); -1 when the violation is global
  // rather than tied to a piece. For overlaps i < j.
  std::int64_t i = -1;
  std::int64_t j = -1;

  bool operator==(const Violation&) const = default;
};

struct VerifyReport {
  bool valid = false;
  Int piece_count = 0;
  std::vector<Rational> distinct_sides;  // ascending
  Rational ratio = 1;                    // largest side / smallest side
  std::vector<Violation> violations;     // deduplicated, sorted by indices
};

// Full geometric check of an explicit tiling. Interior disjointness runs as
// a sweep along axis 0 with an interval index on axis 1, so shared faces are
// fine and only true interior intersections are reported.
VerifyReport verify_tiling(const Tiling& t);

// Certificate checks: the arithmetic identities that make the corresponding
// materialization a valid tiling, without building it.
VerifyReport verify_cube_plan(const highdim::CubePlan& plan);
VerifyReport verify_threesize_plan(const threesize::ThreeSizePlan& plan);

const char* violation_kind_name(ViolationKind k);

// One line: validity, piece count, sides, ratio, and the first few
// violations if any.
std::string report_summary(const VerifyReport& r);

}  // namespace cubetile::verify
