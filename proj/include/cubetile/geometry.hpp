#pragma once

// Axis-aligned cubes with exact rational coordinates, and the tiling
// container every construction produces and the verifier consumes.

#include "cubetile/rational.hpp"

#include <vector>

namespace cubetile {

// A d-cube given by its minimal corner and edge length. The dimension lives
// on the surrounding Tiling; a box is well-formed there when
// origin.size() == dim and side > 0 (the verifier reports, rather than
// assumes, this).
struct Box {
  std::vector<Rational> origin;
  Rational side = 0;

  bool operator==(const Box&) const = default;
};

// Canonical piece order: origin lexicographically, then side. Total order on
// well-formed boxes of one dimension; used to make every emitted tiling and
// document byte-deterministic.
bool box_less(const Box& a, const Box& b);

Rational box_volume(const Box& b, unsigned dim);

// The grid of parts^dim equal sub-cubes of side b.side/parts filling b, in
// canonical order. parts >= 1.
std::vector<Box> subdivide(const Box& b, unsigned dim, const Int& parts);

// An outer cube and the pieces claimed to fill it exactly. Pieces are kept
// sorted in canonical order.
struct Tiling {
  unsigned dim = 0;
  Box outer;
  std::vector<Box> pieces;

  static Tiling make(unsigned dim, Box outer, std::vector<Box> pieces);

  bool operator==(const Tiling&) const = default;
};

// The cube [0,1]^dim.
Box unit_box(unsigned dim);

// The cube [0,side]^dim.
Box cube_at_zero(unsigned dim, const Rational& side);

}  // namespace cubetile
