#include "cubetile/svg.hpp"

#include "cubetile/error.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

namespace cubetile::svg {

namespace {

constexpr int kViewport = 1000;

const char* const kPalette[] = {
    "#4e79a7", "#f2b24c", "#59a14f", "#e15759",
    "#b07aa1", "#76b7b2", "#edc948", "#9c755f",
};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

// Exact truncation of a rational to 6 decimal places, trailing zeros
// trimmed — deterministic, no float formatting involved.
std::string decimal(const Rational& v) {
  static const Int kScale = int_pow(10, 6);
  Int scaled = rat_floor(v * Rational(kScale));
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  Int whole = scaled / kScale;
  Int frac = scaled % kScale;
  std::string out = negative ? "-" + whole.str() : whole.str();
  if (frac != 0) {
    std::string digits = frac.str();
    digits.insert(digits.begin(), 6 - digits.size(), '0');
    while (!digits.empty() && digits.back() == '0') digits.pop_back();
    out += "." + digits;
  }
  return out;
}

}  // namespace

std::string render_svg(const Tiling& t) {
  if (t.dim != 2) fail(errc::invalid_argument, "render_svg: only planar tilings can be rendered");
  if (t.outer.origin.size() != 2 || t.outer.side <= 0)
    fail(errc::invalid_argument, "render_svg: malformed outer square");
  for (const Box& piece : t.pieces)
    if (piece.origin.size() != 2 || piece.side <= 0)
      fail(errc::invalid_argument, "render_svg: malformed piece");

  // One fill per distinct side, largest side first.
  std::vector<Rational> sides;
  for (const Box& piece : t.pieces) sides.push_back(piece.side);
  std::sort(sides.begin(), sides.end(), std::greater<>());
  sides.erase(std::unique(sides.begin(), sides.end()), sides.end());
  std::map<Rational, const char*> fill;
  for (std::size_t i = 0; i < sides.size(); ++i) fill[sides[i]] = kPalette[i % kPaletteSize];

  const Rational scale = Rational(kViewport) / t.outer.side;
  const auto to_x = [&](const Rational& x) { return decimal((x - t.outer.origin[0]) * scale); };
  // SVG's y axis points down; flip so the tiling keeps its orientation.
  const auto to_y = [&](const Rational& y_top) {
    return decimal(Rational(kViewport) - (y_top - t.outer.origin[1]) * scale);
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kViewport << "\" height=\""
      << kViewport << "\" viewBox=\"0 0 " << kViewport << " " << kViewport << "\">\n";
  out << "<g stroke=\"#1c2128\" stroke-width=\"0.8\">\n";
  for (const Box& piece : t.pieces) {
    const std::string size = decimal(piece.side * scale);
    out << "<rect x=\"" << to_x(piece.origin[0]) << "\" y=\"" << to_y(piece.origin[1] + piece.side)
        << "\" width=\"" << size << "\" height=\"" << size << "\" fill=\"" << fill[piece.side]
        << "\"/>\n";
  }
  out << "</g>\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << kViewport << "\" height=\"" << kViewport
      << "\" fill=\"none\" stroke=\"#1c2128\" stroke-width=\"2\"/>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace cubetile::svg
