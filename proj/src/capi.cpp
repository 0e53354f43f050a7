#include "cubetile.h"

#include "cubetile/document.hpp"
#include "cubetile/error.hpp"
#include "cubetile/geometry.hpp"
#include "cubetile/highdim.hpp"
#include "cubetile/planar.hpp"
#include "cubetile/svg.hpp"
#include "cubetile/threesize.hpp"
#include "cubetile/verify.hpp"

#include <cstring>
#include <exception>
#include <string>
#include <utility>

// Thin C shell: every entry point parses its string arguments, calls the C++
// core, and converts exceptions into status codes plus a thread-local
// message. No exception and no C++ type crosses the boundary.

struct cubetile_tiling {
  cubetile::Tiling value;
};

struct cubetile_plan {
  cubetile::doc::Certificate value;
};

struct cubetile_report {
  cubetile::verify::VerifyReport value;
};

namespace {

using cubetile::errc;
using cubetile::Error;

thread_local std::string g_last_error;

cubetile_status status_of(errc code) {
  switch (code) {
    case errc::invalid_argument: return CUBETILE_ERR_INVALID_ARGUMENT;
    case errc::out_of_range: return CUBETILE_ERR_OUT_OF_RANGE;
    case errc::no_decomposition: return CUBETILE_ERR_NO_DECOMPOSITION;
    case errc::below_threshold: return CUBETILE_ERR_BELOW_THRESHOLD;
    case errc::not_representable: return CUBETILE_ERR_NOT_REPRESENTABLE;
    case errc::limit_exceeded: return CUBETILE_ERR_LIMIT_EXCEEDED;
    case errc::parse_error: return CUBETILE_ERR_PARSE;
    case errc::internal_violation: return CUBETILE_ERR_INTERNAL;
  }
  return CUBETILE_ERR_INTERNAL;
}

// Runs the body, routing any exception into the status/last-error channel.
template <typename Fn>
cubetile_status guarded(Fn&& body) {
  try {
    body();
    return CUBETILE_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CUBETILE_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return CUBETILE_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

const char* require_text(const char* text, const char* what) {
  if (text == nullptr) cubetile::fail(errc::invalid_argument, std::string(what) + " is null");
  return text;
}

template <typename T>
const T& require_handle(const T* handle, const char* what) {
  if (handle == nullptr) cubetile::fail(errc::invalid_argument, std::string(what) + " is null");
  return *handle;
}

unsigned require_dim(int d) {
  if (d < 1) cubetile::fail(errc::invalid_argument, "dimension must be positive");
  return static_cast<unsigned>(d);
}

}  // namespace

extern "C" {

const char* cubetile_version(void) { return "1.0.0"; }

const char* cubetile_last_error(void) { return g_last_error.c_str(); }

void cubetile_string_free(char* s) { delete[] s; }
void cubetile_tiling_free(cubetile_tiling* t) { delete t; }
void cubetile_plan_free(cubetile_plan* p) { delete p; }
void cubetile_report_free(cubetile_report* r) { delete r; }

cubetile_status cubetile_plane_tiling(const char* n, cubetile_tiling** out) {
  return guarded([&] {
    require_handle(out, "output pointer");
    cubetile::Int count = cubetile::int_from_string(require_text(n, "n"));
    *out = new cubetile_tiling{cubetile::planar::plane_tiling(count)};
  });
}

cubetile_status cubetile_cube_plan(int d, const char* n, cubetile_plan** out) {
  return guarded([&] {
    require_handle(out, "output pointer");
    cubetile::Int count = cubetile::int_from_string(require_text(n, "n"));
    *out = new cubetile_plan{cubetile::highdim::theorem2_params(require_dim(d), count)};
  });
}

cubetile_status cubetile_threesize_plan(int d, const char* n, cubetile_plan** out) {
  return guarded([&] {
    require_handle(out, "output pointer");
    cubetile::Int count = cubetile::int_from_string(require_text(n, "n"));
    *out = new cubetile_plan{cubetile::threesize::theorem5_params(require_dim(d), count)};
  });
}

cubetile_status cubetile_threshold(int d, const char* epsilon, char** n0_out) {
  return guarded([&] {
    require_handle(n0_out, "output pointer");
    cubetile::Rational eps = cubetile::rat_from_string(require_text(epsilon, "epsilon"));
    *n0_out = copy_string(cubetile::highdim::theorem2_threshold(require_dim(d), eps).str());
  });
}

cubetile_status cubetile_plan_materialize(const cubetile_plan* plan, const char* piece_limit,
                                          cubetile_tiling** out) {
  return guarded([&] {
    require_handle(out, "output pointer");
    const auto& cert = require_handle(plan, "plan").value;
    cubetile::Int limit = cubetile::int_from_string(require_text(piece_limit, "piece limit"));
    if (const auto* cube = std::get_if<cubetile::highdim::CubePlan>(&cert)) {
      *out = new cubetile_tiling{cubetile::highdim::materialize(*cube, limit)};
    } else {
      *out = new cubetile_tiling{
          cubetile::threesize::theorem5_tiling(std::get<cubetile::threesize::ThreeSizePlan>(cert), limit)};
    }
  });
}

int cubetile_tiling_dim(const cubetile_tiling* t) {
  return t == nullptr ? -1 : static_cast<int>(t->value.dim);
}

int64_t cubetile_tiling_piece_count(const cubetile_tiling* t) {
  return t == nullptr ? -1 : static_cast<int64_t>(t->value.pieces.size());
}

cubetile_status cubetile_plan_kind(const cubetile_plan* plan, char** out) {
  return guarded([&] {
    require_handle(out, "output pointer");
    const auto& cert = require_handle(plan, "plan").value;
    *out = copy_string(std::holds_alternative<cubetile::highdim::CubePlan>(cert) ? "theorem2"
                                                                                 : "theorem5");
  });
}

cubetile_status cubetile_plan_piece_total(const cubetile_plan* plan, char** out) {
  return guarded([&] {
    require_handle(out, "output pointer");
    const auto& cert = require_handle(plan, "plan").value;
    const cubetile::Int& n = std::holds_alternative<cubetile::highdim::CubePlan>(cert)
                                 ? std::get<cubetile::highdim::CubePlan>(cert).n
                                 : std::get<cubetile::threesize::ThreeSizePlan>(cert).n;
    *out = copy_string(n.str());
  });
}

cubetile_status cubetile_plan_ratio(const cubetile_plan* plan, char** out) {
  return guarded([&] {
    require_handle(out, "output pointer");
    const auto& cert = require_handle(plan, "plan").value;
    cubetile::Rational ratio = std::holds_alternative<cubetile::highdim::CubePlan>(cert)
                                   ? cubetile::highdim::plan_ratio(std::get<cubetile::highdim::CubePlan>(cert))
                                   : cubetile::threesize::plan_ratio(
                                         std::get<cubetile::threesize::ThreeSizePlan>(cert));
    *out = copy_string(cubetile::rat_to_string(ratio));
  });
}

cubetile_status cubetile_tiling_verify(const cubetile_tiling* t, cubetile_report** out) {
  return guarded([&] {
    require_handle(out, "output pointer");
    *out = new cubetile_report{cubetile::verify::verify_tiling(require_handle(t, "tiling").value)};
  });
}

cubetile_status cubetile_plan_verify(const cubetile_plan* plan, cubetile_report** out) {
  return guarded([&] {
    require_handle(out, "output pointer");
    const auto& cert = require_handle(plan, "plan").value;
    if (const auto* cube = std::get_if<cubetile::highdim::CubePlan>(&cert)) {
      *out = new cubetile_report{cubetile::verify::verify_cube_plan(*cube)};
    } else {
      *out = new cubetile_report{cubetile::verify::verify_threesize_plan(
          std::get<cubetile::threesize::ThreeSizePlan>(cert))};
    }
  });
}

int cubetile_report_valid(const cubetile_report* r) {
  return r != nullptr && r->value.valid ? 1 : 0;
}

cubetile_status cubetile_report_summary(const cubetile_report* r, char** out) {
  return guarded([&] {
    require_handle(out, "output pointer");
    *out = copy_string(cubetile::verify::report_summary(require_handle(r, "report").value));
  });
}

cubetile_status cubetile_report_piece_count(const cubetile_report* r, char** out) {
  return guarded([&] {
    require_handle(out, "output pointer");
    *out = copy_string(require_handle(r, "report").value.piece_count.str());
  });
}

cubetile_status cubetile_report_ratio(const cubetile_report* r, char** out) {
  return guarded([&] {
    require_handle(out, "output pointer");
    *out = copy_string(cubetile::rat_to_string(require_handle(r, "report").value.ratio));
  });
}

size_t cubetile_report_side_count(const cubetile_report* r) {
  return r == nullptr ? 0 : r->value.distinct_sides.size();
}

cubetile_status cubetile_report_side(const cubetile_report* r, size_t index, char** out) {
  return guarded([&] {
    require_handle(out, "output pointer");
    const auto& report = require_handle(r, "report").value;
    if (index >= report.distinct_sides.size())
      cubetile::fail(errc::out_of_range, "side index out of range");
    *out = copy_string(cubetile::rat_to_string(report.distinct_sides[index]));
  });
}

size_t cubetile_report_violation_count(const cubetile_report* r) {
  return r == nullptr ? 0 : r->value.violations.size();
}

cubetile_status cubetile_report_violation(const cubetile_report* r, size_t index,
                                          char** kind_out, int64_t* i_out, int64_t* j_out) {
  return guarded([&] {
    const auto& report = require_handle(r, "report").value;
    if (index >= report.violations.size())
      cubetile::fail(errc::out_of_range, "violation index out of range");
    const auto& v = report.violations[index];
    if (kind_out != nullptr)
      *kind_out = copy_string(cubetile::verify::violation_kind_name(v.kind));
    if (i_out != nullptr) *i_out = v.i;
    if (j_out != nullptr) *j_out = v.j;
  });
}

cubetile_status cubetile_tiling_to_json(const cubetile_tiling* t, char** out) {
  return guarded([&] {
    require_handle(out, "output pointer");
    *out = copy_string(cubetile::doc::tiling_to_json(require_handle(t, "tiling").value));
  });
}

cubetile_status cubetile_tiling_from_json(const char* json_text, cubetile_tiling** out) {
  return guarded([&] {
    require_handle(out, "output pointer");
    *out = new cubetile_tiling{
        cubetile::doc::tiling_from_json(require_text(json_text, "document"))};
  });
}

cubetile_status cubetile_plan_to_json(const cubetile_plan* plan, char** out) {
  return guarded([&] {
    require_handle(out, "output pointer");
    const auto& cert = require_handle(plan, "plan").value;
    if (const auto* cube = std::get_if<cubetile::highdim::CubePlan>(&cert)) {
      *out = copy_string(cubetile::doc::cube_plan_to_json(*cube));
    } else {
      *out = copy_string(cubetile::doc::threesize_plan_to_json(
          std::get<cubetile::threesize::ThreeSizePlan>(cert)));
    }
  });
}

cubetile_status cubetile_plan_from_json(const char* json_text, cubetile_plan** out) {
  return guarded([&] {
    require_handle(out, "output pointer");
    *out = new cubetile_plan{
        cubetile::doc::certificate_from_json(require_text(json_text, "document"))};
  });
}

cubetile_status cubetile_document_kind(const char* json_text, char** out) {
  return guarded([&] {
    require_handle(out, "output pointer");
    *out = copy_string(cubetile::doc::document_kind_name(
        cubetile::doc::sniff_kind(require_text(json_text, "document"))));
  });
}

cubetile_status cubetile_tiling_to_svg(const cubetile_tiling* t, char** out) {
  return guarded([&] {
    require_handle(out, "output pointer");
    *out = copy_string(cubetile::svg::render_svg(require_handle(t, "tiling").value));
  });
}

cubetile_status cubetile_rational_cmp(const char* lhs, const char* rhs, int* out) {
  return guarded([&] {
    require_handle(out, "output pointer");
    cubetile::Rational a = cubetile::rat_from_string(require_text(lhs, "left operand"));
    cubetile::Rational b = cubetile::rat_from_string(require_text(rhs, "right operand"));
    *out = a < b ? -1 : (a == b ? 0 : 1);
  });
}

}  // extern "C"
