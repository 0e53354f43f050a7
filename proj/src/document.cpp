#include "cubetile/document.hpp"

#include "cubetile/error.hpp"

#include <json.hpp>

#include <utility>

namespace cubetile::doc {

namespace {

using nlohmann::json;

// Keys are emitted in sorted order (nlohmann's default object is a std::map),
// so serialization is byte-deterministic for equal inputs.

json rational_field(const Rational& r) { return rat_to_string(r); }
json int_field(const Int& v) { return v.str(); }

const json& require(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) fail(errc::parse_error, std::string("document: missing field \"") + key + "\"");
  return *it;
}

Int int_of(const json& j, const char* key) {
  const json& field = require(j, key);
  if (!field.is_string()) fail(errc::parse_error, std::string("document: field \"") + key + "\" must be a decimal string");
  return int_from_string(field.get<std::string>());
}

Rational rational_of(const json& field, const char* what) {
  if (!field.is_string()) fail(errc::parse_error, std::string("document: ") + what + " must be a string");
  return rat_from_string(field.get<std::string>());
}

unsigned small_uint_of(const json& j, const char* key) {
  const json& field = require(j, key);
  if (!field.is_number_integer() || field.get<long long>() < 0)
    fail(errc::parse_error, std::string("document: field \"") + key + "\" must be a nonnegative integer");
  return static_cast<unsigned>(field.get<long long>());
}

void check_version(const json& j) {
  const json& field = require(j, "version");
  if (!field.is_number_integer() || field.get<long long>() != kFormatVersion)
    fail(errc::parse_error, "document: unsupported version");
}

json box_to_json(const Box& b) {
  json origin = json::array();
  for (const Rational& c : b.origin) origin.push_back(rational_field(c));
  return json{{"origin", std::move(origin)}, {"side", rational_field(b.side)}};
}

Box box_from_json(const json& j) {
  if (!j.is_object()) fail(errc::parse_error, "document: box must be an object");
  const json& origin = require(j, "origin");
  if (!origin.is_array()) fail(errc::parse_error, "document: box origin must be an array");
  Box b;
  b.origin.reserve(origin.size());
  for (const json& c : origin) b.origin.push_back(rational_of(c, "coordinate"));
  b.side = rational_of(require(j, "side"), "side");
  return b;
}

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(errc::parse_error, "document: not valid JSON");
  if (!j.is_object()) fail(errc::parse_error, "document: top level must be an object");
  return j;
}

highdim::CubePlan cube_plan_from(const json& j) {
  highdim::CubePlan plan;
  plan.d = small_uint_of(j, "d");
  plan.n = int_of(j, "n");
  plan.a = int_of(j, "a");
  plan.c = static_cast<int>(small_uint_of(j, "c"));
  plan.m = int_of(j, "m");
  plan.k = int_of(j, "k");
  plan.y1 = int_of(j, "y1");
  const json& x = require(j, "x");
  if (!x.is_array()) fail(errc::parse_error, "document: field \"x\" must be an array");
  plan.x.clear();
  for (const json& entry : x) {
    if (!entry.is_string()) fail(errc::parse_error, "document: x entries must be decimal strings");
    plan.x.push_back(int_from_string(entry.get<std::string>()));
  }
  return plan;
}

threesize::ThreeSizePlan threesize_plan_from(const json& j) {
  threesize::ThreeSizePlan plan;
  plan.d = small_uint_of(j, "d");
  plan.n = int_of(j, "n");
  plan.a = int_of(j, "a");
  plan.k = int_of(j, "k");
  plan.x1 = int_of(j, "x1");
  plan.x2 = int_of(j, "x2");
  return plan;
}

}  // namespace

std::string tiling_to_json(const Tiling& t) {
  json pieces = json::array();
  for (const Box& piece : t.pieces) pieces.push_back(box_to_json(piece));
  json j{{"version", kFormatVersion},
         {"dim", t.dim},
         {"outer", box_to_json(t.outer)},
         {"pieces", std::move(pieces)}};
  return j.dump();
}

Tiling tiling_from_json(const std::string& text) {
  json j = parse(text);
  check_version(j);
  unsigned dim = small_uint_of(j, "dim");
  Box outer = box_from_json(require(j, "outer"));
  const json& pieces_json = require(j, "pieces");
  if (!pieces_json.is_array()) fail(errc::parse_error, "document: \"pieces\" must be an array");
  std::vector<Box> pieces;
  pieces.reserve(pieces_json.size());
  for (const json& piece : pieces_json) pieces.push_back(box_from_json(piece));
  // Documents store pieces in canonical order already; re-sorting keeps
  // hand-edited files usable.
  return Tiling::make(dim, std::move(outer), std::move(pieces));
}

std::string cube_plan_to_json(const highdim::CubePlan& plan) {
  json x = json::array();
  for (const Int& xi : plan.x) x.push_back(int_field(xi));
  json j{{"version", kFormatVersion},
         {"kind", "theorem2"},
         {"d", plan.d},
         {"n", int_field(plan.n)},
         {"a", int_field(plan.a)},
         {"c", plan.c},
         {"m", int_field(plan.m)},
         {"k", int_field(plan.k)},
         {"x", std::move(x)},
         {"y1", int_field(plan.y1)}};
  return j.dump();
}

std::string threesize_plan_to_json(const threesize::ThreeSizePlan& plan) {
  json j{{"version", kFormatVersion},
         {"kind", "theorem5"},
         {"d", plan.d},
         {"n", int_field(plan.n)},
         {"a", int_field(plan.a)},
         {"k", int_field(plan.k)},
         {"x1", int_field(plan.x1)},
         {"x2", int_field(plan.x2)}};
  return j.dump();
}

Certificate certificate_from_json(const std::string& text) {
  json j = parse(text);
  check_version(j);
  const json& kind = require(j, "kind");
  if (!kind.is_string()) fail(errc::parse_error, "document: \"kind\" must be a string");
  const std::string name = kind.get<std::string>();
  if (name == "theorem2") return cube_plan_from(j);
  if (name == "theorem5") return threesize_plan_from(j);
  fail(errc::parse_error, "document: unknown certificate kind \"" + name + "\"");
}

DocumentKind sniff_kind(const std::string& text) {
  json j = parse(text);
  check_version(j);
  if (j.contains("pieces")) return DocumentKind::tiling;
  const json& kind = require(j, "kind");
  if (kind.is_string() && kind.get<std::string>() == "theorem2") return DocumentKind::cube_plan;
  if (kind.is_string() && kind.get<std::string>() == "theorem5") return DocumentKind::threesize_plan;
  fail(errc::parse_error, "document: unrecognized document kind");
}

const char* document_kind_name(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::tiling: return "tiling";
    case DocumentKind::cube_plan: return "theorem2";
    case DocumentKind::threesize_plan: return "theorem5";
  }
  return "unknown";
}

}  // namespace cubetile::doc
