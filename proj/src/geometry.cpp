#include "cubetile/geometry.hpp"

#include "cubetile/error.hpp"

#include <algorithm>
#include <cstdint>

namespace cubetile {

bool box_less(const Box& a, const Box& b) {
  const std::size_t common = std::min(a.origin.size(), b.origin.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (a.origin[i] != b.origin[i]) return a.origin[i] < b.origin[i];
  }
  if (a.origin.size() != b.origin.size()) return a.origin.size() < b.origin.size();
  return a.side < b.side;
}

Rational box_volume(const Box& b, unsigned dim) {
  return rat_pow(b.side, dim);
}

std::vector<Box> subdivide(const Box& b, unsigned dim, const Int& parts) {
  if (dim == 0) fail(errc::invalid_argument, "subdivide: dimension must be >= 1");
  if (parts < 1) fail(errc::invalid_argument, "subdivide: parts must be >= 1");
  if (b.origin.size() != dim)
    fail(errc::invalid_argument, "subdivide: origin size does not match dimension");
  // parts^dim boxes get materialized; anything near 2^32 per axis is already
  // far beyond any sane piece limit.
  if (parts >> 32 != 0) fail(errc::limit_exceeded, "subdivide: parts out of range");
  const auto p = parts.convert_to<std::uint64_t>();

  const Rational step = b.side / Rational(parts);
  std::vector<Box> cells;
  std::vector<std::uint64_t> index(dim, 0);
  for (;;) {
    Box cell;
    cell.origin.reserve(dim);
    for (unsigned axis = 0; axis < dim; ++axis)
      cell.origin.push_back(b.origin[axis] + Rational(index[axis]) * step);
    cell.side = step;
    cells.push_back(std::move(cell));

    // Odometer increment on the last axis keeps the output in canonical
    // (origin-lexicographic) order.
    unsigned axis = dim;
    while (axis > 0) {
      --axis;
      if (++index[axis] < p) break;
      index[axis] = 0;
      if (axis == 0) return cells;
    }
  }
}

Tiling Tiling::make(unsigned dim, Box outer, std::vector<Box> pieces) {
  std::sort(pieces.begin(), pieces.end(), box_less);
  return Tiling{dim, std::move(outer), std::move(pieces)};
}

Box unit_box(unsigned dim) {
  return cube_at_zero(dim, Rational(1));
}

Box cube_at_zero(unsigned dim, const Rational& side) {
  Box b;
  b.origin.assign(dim, Rational(0));
  b.side = side;
  return b;
}

}  // namespace cubetile
