// Exercises the shared-library boundary exactly as an external consumer
// would: only the public C header, no internal includes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cubetile.h>

#include <cstring>
#include <memory>
#include <string>

namespace {

struct StringFree {
  void operator()(char* s) const { cubetile_string_free(s); }
};
struct TilingFree {
  void operator()(cubetile_tiling* t) const { cubetile_tiling_free(t); }
};
struct PlanFree {
  void operator()(cubetile_plan* p) const { cubetile_plan_free(p); }
};
struct ReportFree {
  void operator()(cubetile_report* r) const { cubetile_report_free(r); }
};

using CStr = std::unique_ptr<char, StringFree>;
using TilingPtr = std::unique_ptr<cubetile_tiling, TilingFree>;
using PlanPtr = std::unique_ptr<cubetile_plan, PlanFree>;
using ReportPtr = std::unique_ptr<cubetile_report, ReportFree>;

std::string str(const CStr& s) { return s ? std::string(s.get()) : std::string(); }

TilingPtr plane(const char* n) {
  cubetile_tiling* raw = nullptr;
  REQUIRE(cubetile_plane_tiling(n, &raw) == CUBETILE_OK);
  return TilingPtr(raw);
}

ReportPtr verify(const TilingPtr& t) {
  cubetile_report* raw = nullptr;
  REQUIRE(cubetile_tiling_verify(t.get(), &raw) == CUBETILE_OK);
  return ReportPtr(raw);
}

}  // namespace

TEST_CASE("version string") {
  const char* v = cubetile_version();
  REQUIRE(v != nullptr);
  CHECK(std::strlen(v) > 0);
}

TEST_CASE("planar construction through the boundary") {
  auto t = plane("55");
  CHECK(cubetile_tiling_dim(t.get()) == 2);
  CHECK(cubetile_tiling_piece_count(t.get()) == 55);

  auto report = verify(t);
  CHECK(cubetile_report_valid(report.get()) == 1);

  CStr summary;
  {
    char* raw = nullptr;
    REQUIRE(cubetile_report_summary(report.get(), &raw) == CUBETILE_OK);
    summary.reset(raw);
  }
  CHECK(str(summary).find("valid: 55 pieces") == 0);

  CStr count;
  {
    char* raw = nullptr;
    REQUIRE(cubetile_report_piece_count(report.get(), &raw) == CUBETILE_OK);
    count.reset(raw);
  }
  CHECK(str(count) == "55");

  REQUIRE(cubetile_report_side_count(report.get()) == 2);
  char* side0 = nullptr;
  char* side1 = nullptr;
  REQUIRE(cubetile_report_side(report.get(), 0, &side0) == CUBETILE_OK);
  REQUIRE(cubetile_report_side(report.get(), 1, &side1) == CUBETILE_OK);
  CStr s0(side0), s1(side1);
  CHECK(str(s0) == "1");
  CHECK(str(s1) == "5/4");

  char* ratio_raw = nullptr;
  REQUIRE(cubetile_report_ratio(report.get(), &ratio_raw) == CUBETILE_OK);
  CStr ratio(ratio_raw);
  CHECK(str(ratio) == "5/4");

  CHECK(cubetile_report_violation_count(report.get()) == 0);
}

TEST_CASE("impossible and out-of-range planar inputs") {
  cubetile_tiling* raw = nullptr;
  CHECK(cubetile_plane_tiling("5", &raw) == CUBETILE_ERR_NO_DECOMPOSITION);
  CHECK(raw == nullptr);
  CHECK(std::string(cubetile_last_error()).find("5") != std::string::npos);

  CHECK(cubetile_plane_tiling("3", &raw) == CUBETILE_ERR_OUT_OF_RANGE);
  CHECK(cubetile_plane_tiling("abc", &raw) == CUBETILE_ERR_PARSE);
  CHECK(cubetile_plane_tiling(nullptr, &raw) == CUBETILE_ERR_INVALID_ARGUMENT);
  CHECK(cubetile_plane_tiling("55", nullptr) == CUBETILE_ERR_INVALID_ARGUMENT);
}

TEST_CASE("thresholds as strings") {
  char* raw = nullptr;
  REQUIRE(cubetile_threshold(2, "0.6", &raw) == CUBETILE_OK);
  CStr n0(raw);
  CHECK(str(n0) == "117649");

  raw = nullptr;
  REQUIRE(cubetile_threshold(2, "3/5", &raw) == CUBETILE_OK);
  CStr same(raw);
  CHECK(str(same) == "117649");

  raw = nullptr;
  REQUIRE(cubetile_threshold(3, "1", &raw) == CUBETILE_OK);
  CStr big(raw);
  CHECK(str(big) == "10604499373");

  CHECK(cubetile_threshold(1, "1", &raw) == CUBETILE_ERR_INVALID_ARGUMENT);
  CHECK(cubetile_threshold(2, "0", &raw) == CUBETILE_ERR_INVALID_ARGUMENT);
  CHECK(cubetile_threshold(2, "x", &raw) == CUBETILE_ERR_PARSE);
}

TEST_CASE("cube plans through the boundary") {
  cubetile_plan* plan_raw = nullptr;
  REQUIRE(cubetile_cube_plan(2, "117650", &plan_raw) == CUBETILE_OK);
  PlanPtr plan(plan_raw);

  char* raw = nullptr;
  REQUIRE(cubetile_plan_kind(plan.get(), &raw) == CUBETILE_OK);
  CStr kind(raw);
  CHECK(str(kind) == "theorem2");

  raw = nullptr;
  REQUIRE(cubetile_plan_piece_total(plan.get(), &raw) == CUBETILE_OK);
  CStr total(raw);
  CHECK(str(total) == "117650");

  raw = nullptr;
  REQUIRE(cubetile_plan_ratio(plan.get(), &raw) == CUBETILE_OK);
  CStr ratio(raw);
  CHECK(str(ratio) == "4/3");

  cubetile_report* report_raw = nullptr;
  REQUIRE(cubetile_plan_verify(plan.get(), &report_raw) == CUBETILE_OK);
  ReportPtr report(report_raw);
  CHECK(cubetile_report_valid(report.get()) == 1);

  // JSON round trip preserves the certificate.
  raw = nullptr;
  REQUIRE(cubetile_plan_to_json(plan.get(), &raw) == CUBETILE_OK);
  CStr json(raw);
  cubetile_plan* back_raw = nullptr;
  REQUIRE(cubetile_plan_from_json(json.get(), &back_raw) == CUBETILE_OK);
  PlanPtr back(back_raw);
  raw = nullptr;
  REQUIRE(cubetile_plan_to_json(back.get(), &raw) == CUBETILE_OK);
  CStr json2(raw);
  CHECK(str(json) == str(json2));

  // Below-threshold requests fail with the dedicated status.
  cubetile_plan* small = nullptr;
  CHECK(cubetile_cube_plan(3, "1000", &small) == CUBETILE_ERR_BELOW_THRESHOLD);
  CHECK(std::string(cubetile_last_error()).find("10604499373") != std::string::npos);
}

TEST_CASE("materialization with limits") {
  cubetile_plan* plan_raw = nullptr;
  REQUIRE(cubetile_cube_plan(2, "4096", &plan_raw) == CUBETILE_OK);
  PlanPtr plan(plan_raw);

  cubetile_tiling* tiling_raw = nullptr;
  REQUIRE(cubetile_plan_materialize(plan.get(), "5000000", &tiling_raw) == CUBETILE_OK);
  TilingPtr tiling(tiling_raw);
  CHECK(cubetile_tiling_piece_count(tiling.get()) == 4096);

  auto report = verify(tiling);
  CHECK(cubetile_report_valid(report.get()) == 1);

  cubetile_tiling* refused = nullptr;
  CHECK(cubetile_plan_materialize(plan.get(), "100", &refused) == CUBETILE_ERR_LIMIT_EXCEEDED);
  CHECK(refused == nullptr);
}

TEST_CASE("three-size plans through the boundary") {
  cubetile_plan* plan_raw = nullptr;
  REQUIRE(cubetile_threesize_plan(3, "262145", &plan_raw) == CUBETILE_OK);
  PlanPtr plan(plan_raw);

  char* raw = nullptr;
  REQUIRE(cubetile_plan_kind(plan.get(), &raw) == CUBETILE_OK);
  CStr kind(raw);
  CHECK(str(kind) == "theorem5");

  raw = nullptr;
  REQUIRE(cubetile_plan_ratio(plan.get(), &raw) == CUBETILE_OK);
  CStr ratio(raw);
  CHECK(str(ratio) == "7");

  cubetile_report* report_raw = nullptr;
  REQUIRE(cubetile_plan_verify(plan.get(), &report_raw) == CUBETILE_OK);
  ReportPtr report(report_raw);
  CHECK(cubetile_report_valid(report.get()) == 1);
  CHECK(cubetile_report_side_count(report.get()) == 3);

  cubetile_plan* below = nullptr;
  CHECK(cubetile_threesize_plan(3, "262144", &below) == CUBETILE_ERR_BELOW_THRESHOLD);
}

TEST_CASE("tiling JSON and SVG through the boundary") {
  auto t = plane("54");

  char* raw = nullptr;
  REQUIRE(cubetile_tiling_to_json(t.get(), &raw) == CUBETILE_OK);
  CStr json(raw);

  cubetile_tiling* back_raw = nullptr;
  REQUIRE(cubetile_tiling_from_json(json.get(), &back_raw) == CUBETILE_OK);
  TilingPtr back(back_raw);
  CHECK(cubetile_tiling_piece_count(back.get()) == 54);

  raw = nullptr;
  REQUIRE(cubetile_tiling_to_json(back.get(), &raw) == CUBETILE_OK);
  CStr json2(raw);
  CHECK(str(json) == str(json2));

  raw = nullptr;
  REQUIRE(cubetile_document_kind(json.get(), &raw) == CUBETILE_OK);
  CStr kind(raw);
  CHECK(str(kind) == "tiling");

  raw = nullptr;
  REQUIRE(cubetile_tiling_to_svg(t.get(), &raw) == CUBETILE_OK);
  CStr svg(raw);
  CHECK(str(svg).find("<svg") == 0);

  CHECK(cubetile_tiling_from_json("{", &back_raw) == CUBETILE_ERR_PARSE);
}

TEST_CASE("invalid tilings are reported, not rejected") {
  // A unit square "tiled" by one half-size square: wrong volume.
  const char* text =
      R"({"version":1,"dim":2,"outer":{"origin":["0","0"],"side":"1"},)"
      R"("pieces":[{"origin":["0","0"],"side":"1/2"}]})";
  cubetile_tiling* raw = nullptr;
  REQUIRE(cubetile_tiling_from_json(text, &raw) == CUBETILE_OK);
  TilingPtr t(raw);

  auto report = verify(t);
  CHECK(cubetile_report_valid(report.get()) == 0);
  REQUIRE(cubetile_report_violation_count(report.get()) == 1);

  char* kind_raw = nullptr;
  int64_t i = 0, j = 0;
  REQUIRE(cubetile_report_violation(report.get(), 0, &kind_raw, &i, &j) == CUBETILE_OK);
  CStr kind(kind_raw);
  CHECK(str(kind) == "volume-deficit");
  CHECK(i == -1);
  CHECK(j == -1);

  CHECK(cubetile_report_violation(report.get(), 7, &kind_raw, &i, &j) ==
        CUBETILE_ERR_OUT_OF_RANGE);
}

TEST_CASE("rational comparison") {
  int cmp = 42;
  REQUIRE(cubetile_rational_cmp("1/3", "0.5", &cmp) == CUBETILE_OK);
  CHECK(cmp == -1);
  REQUIRE(cubetile_rational_cmp("2/4", "0.5", &cmp) == CUBETILE_OK);
  CHECK(cmp == 0);
  REQUIRE(cubetile_rational_cmp("7", "13/2", &cmp) == CUBETILE_OK);
  CHECK(cmp == 1);
  CHECK(cubetile_rational_cmp("x", "1", &cmp) == CUBETILE_ERR_PARSE);
  CHECK(cubetile_rational_cmp(nullptr, "1", &cmp) == CUBETILE_ERR_INVALID_ARGUMENT);
}

TEST_CASE("null handles fail cleanly") {
  CHECK(cubetile_tiling_dim(nullptr) == -1);
  CHECK(cubetile_tiling_piece_count(nullptr) == -1);
  CHECK(cubetile_report_valid(nullptr) == 0);
  CHECK(cubetile_report_side_count(nullptr) == 0);
  CHECK(cubetile_report_violation_count(nullptr) == 0);

  char* out = nullptr;
  CHECK(cubetile_plan_kind(nullptr, &out) == CUBETILE_ERR_INVALID_ARGUMENT);
  CHECK(cubetile_tiling_to_json(nullptr, &out) == CUBETILE_ERR_INVALID_ARGUMENT);

  cubetile_report* rep = nullptr;
  CHECK(cubetile_tiling_verify(nullptr, &rep) == CUBETILE_ERR_INVALID_ARGUMENT);

  cubetile_string_free(nullptr);
  cubetile_tiling_free(nullptr);
  cubetile_plan_free(nullptr);
  cubetile_report_free(nullptr);
}
