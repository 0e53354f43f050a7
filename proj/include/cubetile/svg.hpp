#pragma once

// Deterministic SVG rendering of planar tilings: fixed 1000-unit viewport,
// one fill color per distinct side (largest first), pieces emitted in
// canonical order, coordinates as exact decimal truncations. Rendering the
// same tiling twice yields byte-identical output.

#include "cubetile/geometry.hpp"

#include <string>

namespace cubetile::svg {

// Requires t.dim == 2 (errc::invalid_argument otherwise).
std::string render_svg(const Tiling& t);

}  // namespace cubetile::svg
