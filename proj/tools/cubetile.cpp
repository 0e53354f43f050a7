// Command-line front end. Links the C API only: all exact arithmetic stays
// behind the library boundary, and numbers travel as strings.
//
// Exit codes: 0 success (and, where applicable, a valid verification);
// 1 a verification reported violations; 2 usage errors, out-of-range or
// unreadable input, and refused materializations.

#include "cubetile.h"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

constexpr int kExitValid = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;

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

using CString = std::unique_ptr<char, StringFree>;
using TilingPtr = std::unique_ptr<cubetile_tiling, TilingFree>;
using PlanPtr = std::unique_ptr<cubetile_plan, PlanFree>;
using ReportPtr = std::unique_ptr<cubetile_report, ReportFree>;

// Failures below the CLI are reported through this and turned into exit 2.
struct CommandError {
  std::string message;
};

void check(cubetile_status status) {
  if (status != CUBETILE_OK) throw CommandError{cubetile_last_error()};
}

std::string take_string(char* s) {
  CString owned(s);
  return std::string(owned.get());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CommandError{"cannot read " + path};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CommandError{"cannot write " + path};
  out << content;
  if (!out.flush()) throw CommandError{"cannot write " + path};
}

std::string effective_limit(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("CUBETILE_MAX_PIECES"); env != nullptr && *env != '\0')
    return env;
  return "5000000";
}

int compare_rationals(const std::string& lhs, const std::string& rhs) {
  int cmp = 0;
  check(cubetile_rational_cmp(lhs.c_str(), rhs.c_str(), &cmp));
  return cmp;
}

// Prints the report summary; returns whether it was valid.
bool print_report(const cubetile_report* report, const char* label) {
  char* summary = nullptr;
  check(cubetile_report_summary(report, &summary));
  std::cout << label << " " << take_string(summary) << "\n";
  return cubetile_report_valid(report) != 0;
}

ReportPtr verify_tiling(const cubetile_tiling* tiling) {
  cubetile_report* report = nullptr;
  check(cubetile_tiling_verify(tiling, &report));
  return ReportPtr(report);
}

ReportPtr verify_plan(const cubetile_plan* plan) {
  cubetile_report* report = nullptr;
  check(cubetile_plan_verify(plan, &report));
  return ReportPtr(report);
}

void write_tiling_outputs(const cubetile_tiling* tiling, const std::string& out_path,
                          const std::string& svg_path) {
  if (!out_path.empty()) {
    char* json = nullptr;
    check(cubetile_tiling_to_json(tiling, &json));
    write_file(out_path, take_string(json));
    std::cout << "wrote tiling " << out_path << "\n";
  }
  if (!svg_path.empty()) {
    char* svg = nullptr;
    check(cubetile_tiling_to_svg(tiling, &svg));
    write_file(svg_path, take_string(svg));
    std::cout << "wrote svg " << svg_path << "\n";
  }
}

int run_plane(const std::string& n, const std::string& out_path, const std::string& svg_path,
              const std::string& limit_flag) {
  const std::string limit = effective_limit(limit_flag);
  if (compare_rationals(n, limit) > 0)
    throw CommandError{"materialization refused: " + n + " pieces exceed the limit of " + limit};

  cubetile_tiling* raw = nullptr;
  check(cubetile_plane_tiling(n.c_str(), &raw));
  TilingPtr tiling(raw);

  ReportPtr report = verify_tiling(tiling.get());
  const bool valid = print_report(report.get(), "plane:");
  write_tiling_outputs(tiling.get(), out_path, svg_path);
  return valid ? kExitValid : kExitInvalid;
}

int run_plan_command(bool threesize, int d, const std::string& n, const std::string& epsilon,
                     bool materialize, const std::string& limit_flag,
                     const std::string& cert_path, const std::string& out_path) {
  if (!epsilon.empty()) {
    // The guarantee regime: from the threshold upward the size ratio stays
    // below 1 + epsilon. Gate before constructing or printing anything.
    char* threshold = nullptr;
    check(cubetile_threshold(d, epsilon.c_str(), &threshold));
    const std::string n0 = take_string(threshold);
    if (compare_rationals(n, n0) < 0)
      throw CommandError{"n = " + n + " is below the guaranteed threshold " + n0 +
                         " for epsilon = " + epsilon};
    std::cout << "epsilon " << epsilon << ": guaranteed from " << n0 << "\n";
  }

  cubetile_plan* raw = nullptr;
  check(threesize ? cubetile_threesize_plan(d, n.c_str(), &raw)
                  : cubetile_cube_plan(d, n.c_str(), &raw));
  PlanPtr plan(raw);

  ReportPtr plan_report = verify_plan(plan.get());
  bool valid = print_report(plan_report.get(), "plan:");

  char* json = nullptr;
  check(cubetile_plan_to_json(plan.get(), &json));
  const std::string cert = take_string(json);
  if (cert_path.empty()) {
    std::cout << cert << "\n";
  } else {
    write_file(cert_path, cert);
    std::cout << "wrote certificate " << cert_path << "\n";
  }

  if (materialize) {
    cubetile_tiling* raw_tiling = nullptr;
    check(cubetile_plan_materialize(plan.get(), effective_limit(limit_flag).c_str(), &raw_tiling));
    TilingPtr tiling(raw_tiling);
    ReportPtr geo_report = verify_tiling(tiling.get());
    valid = print_report(geo_report.get(), "tiling:") && valid;
    write_tiling_outputs(tiling.get(), out_path, "");
  }
  return valid ? kExitValid : kExitInvalid;
}

int run_threshold(int d, const std::string& epsilon) {
  char* n0 = nullptr;
  check(cubetile_threshold(d, epsilon.c_str(), &n0));
  std::cout << take_string(n0) << "\n";
  return kExitValid;
}

int run_verify(const std::string& path) {
  const std::string text = read_file(path);
  char* kind_raw = nullptr;
  check(cubetile_document_kind(text.c_str(), &kind_raw));
  const std::string kind = take_string(kind_raw);
  std::cout << "document kind: " << kind << "\n";

  ReportPtr report;
  if (kind == "tiling") {
    cubetile_tiling* raw = nullptr;
    check(cubetile_tiling_from_json(text.c_str(), &raw));
    TilingPtr tiling(raw);
    report = verify_tiling(tiling.get());
  } else {
    cubetile_plan* raw = nullptr;
    check(cubetile_plan_from_json(text.c_str(), &raw));
    PlanPtr plan(raw);
    report = verify_plan(plan.get());
  }
  return print_report(report.get(), "verify:") ? kExitValid : kExitInvalid;
}

int run_render(const std::string& in_path, const std::string& out_path) {
  const std::string text = read_file(in_path);
  cubetile_tiling* raw = nullptr;
  check(cubetile_tiling_from_json(text.c_str(), &raw));
  TilingPtr tiling(raw);
  char* svg = nullptr;
  check(cubetile_tiling_to_svg(tiling.get(), &svg));
  write_file(out_path, take_string(svg));
  std::cout << "wrote svg " << out_path << "\n";
  return kExitValid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact decompositions of a d-cube into n nearly equal cubes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(cubetile_version()));

  std::string n, epsilon, limit, cert_path, out_path, svg_path, in_path;
  int d = 0;
  bool materialize = false;

  CLI::App* plane = app.add_subcommand("plane", "tile a square with n squares (two sizes)");
  plane->add_option("n", n, "number of squares (>= 4, n != 5)")->required();
  plane->add_option("--out", out_path, "write the tiling document here");
  plane->add_option("--svg", svg_path, "write an SVG rendering here");
  plane->add_option("--limit", limit, "piece limit (default 5000000, env CUBETILE_MAX_PIECES)");

  CLI::App* cube = app.add_subcommand("cube", "plan a d-cube into n nearly equal cubes");
  cube->add_option("d", d, "dimension (>= 2)")->required();
  cube->add_option("n", n, "number of cubes")->required();
  cube->add_option("--epsilon", epsilon, "require the regime where ratio < 1 + epsilon");
  cube->add_flag("--materialize", materialize, "also build and verify the explicit tiling");
  cube->add_option("--cert", cert_path, "write the certificate here (default: stdout)");
  cube->add_option("--out", out_path, "write the materialized tiling document here");
  cube->add_option("--limit", limit, "piece limit (default 5000000, env CUBETILE_MAX_PIECES)");

  CLI::App* three = app.add_subcommand("threesize", "plan a d-cube into n cubes of <= 3 sizes");
  three->add_option("d", d, "dimension (>= 3)")->required();
  three->add_option("n", n, "number of cubes")->required();
  three->add_flag("--materialize", materialize, "also build and verify the explicit tiling");
  three->add_option("--cert", cert_path, "write the certificate here (default: stdout)");
  three->add_option("--out", out_path, "write the materialized tiling document here");
  three->add_option("--limit", limit, "piece limit (default 5000000, env CUBETILE_MAX_PIECES)");

  CLI::App* threshold = app.add_subcommand("threshold", "print the guaranteed piece-count threshold");
  threshold->add_option("d", d, "dimension (>= 2)")->required();
  threshold->add_option("epsilon", epsilon, "size-ratio slack (rational or decimal)")->required();

  CLI::App* verify = app.add_subcommand("verify", "verify a tiling or certificate document");
  verify->add_option("file", in_path, "JSON document")->required();

  CLI::App* render = app.add_subcommand("render", "render a planar tiling document to SVG");
  render->add_option("file", in_path, "tiling document (dim 2)")->required();
  render->add_option("svg", out_path, "output SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (plane->parsed()) return run_plane(n, out_path, svg_path, limit);
    if (cube->parsed())
      return run_plan_command(false, d, n, epsilon, materialize, limit, cert_path, out_path);
    if (three->parsed())
      return run_plan_command(true, d, n, epsilon, materialize, limit, cert_path, out_path);
    if (threshold->parsed()) return run_threshold(d, epsilon);
    if (verify->parsed()) return run_verify(in_path);
    if (render->parsed()) return run_render(in_path, out_path);
  } catch (const CommandError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
