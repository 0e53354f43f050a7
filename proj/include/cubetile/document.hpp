#pragma once

// JSON interchange. Two document families share a version field: explicit
// tilings (outer cube plus piece list) and certificates (the parameters of a
// plan, enough to verify or re-materialize it). All numbers that can exceed
// machine range travel as strings — integers in decimal, rationals as "p/q".
// Emission is deterministic: object keys are ordered, pieces stay in
// canonical order.

#include "cubetile/geometry.hpp"
#include "cubetile/highdim.hpp"
#include "cubetile/threesize.hpp"

#include <string>
#include <variant>

namespace cubetile::doc {

inline constexpr int kFormatVersion = 1;

std::string tiling_to_json(const Tiling& t);
Tiling tiling_from_json(const std::string& text);

std::string cube_plan_to_json(const highdim::CubePlan& plan);
std::string threesize_plan_to_json(const threesize::ThreeSizePlan& plan);

using Certificate = std::variant<highdim::CubePlan, threesize::ThreeSizePlan>;
Certificate certificate_from_json(const std::string& text);

enum class DocumentKind { tiling, cube_plan, threesize_plan };

// Inspects a document enough to classify it (version check included).
DocumentKind sniff_kind(const std::string& text);

const char* document_kind_name(DocumentKind kind);

}  // namespace cubetile::doc
