#include "cubetile/verify.hpp"

#include "cubetile/error.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

namespace cubetile::verify {

namespace {

using boost::multiprecision::lcm;

// Reported violations are capped: one is enough to invalidate, and a
// thoroughly broken input could otherwise produce quadratically many.
constexpr std::size_t kMaxViolations = 1000;

struct ReportBuilder {
  VerifyReport rep;

  bool saturated() const { return rep.violations.size() >= kMaxViolations; }

  void add(ViolationKind kind, std::int64_t i, std::int64_t j) {
    if (!saturated()) rep.violations.push_back({kind, i, j});
  }

  VerifyReport finish() {
    auto& v = rep.violations;
    std::sort(v.begin(), v.end(), [](const Violation& a, const Violation& b) {
      if (a.i != b.i) return a.i < b.i;
      if (a.j != b.j) return a.j < b.j;
      return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    });
    v.erase(std::unique(v.begin(), v.end()), v.end());
    rep.valid = v.empty();
    return std::move(rep);
  }

  void set_sides(std::vector<Rational> ascending_sides) {
    rep.distinct_sides = std::move(ascending_sides);
    if (!rep.distinct_sides.empty())
      rep.ratio = rep.distinct_sides.back() / rep.distinct_sides.front();
  }
};

// ---------------------------------------------------------------------------
// Interval index on the compressed axis-1 coordinates of the active pieces:
// a segment tree holding each active piece at its canonical nodes (for
// stabbing queries) plus per-start-coordinate buckets (for enumerating the
// actives that begin strictly inside a query interval). Every candidate the
// two queries return genuinely overlaps the query interval, so lookups stay
// output-sensitive.

class IntervalIndex {
 public:
  IntervalIndex(std::size_t slots, std::size_t pieces, std::size_t coords)
      : bucket_(coords), bucket_pos_(pieces, -1), piece_nodes_(pieces) {
    base_ = 1;
    while (base_ < slots) base_ <<= 1;
    nodes_.resize(2 * base_);
  }

  void insert(std::int32_t p, std::int32_t s, std::int32_t e) {
    place(p, s, e, 1, 0, static_cast<std::int32_t>(base_));
    bucket_pos_[p] = static_cast<std::int32_t>(bucket_[s].size());
    bucket_[s].push_back(p);
    if (bucket_[s].size() == 1) nonempty_.insert(s);
  }

  void remove(std::int32_t p, std::int32_t s) {
    for (auto [node, pos] : piece_nodes_[p]) {
      auto& vec = nodes_[node];
      std::int32_t moved = vec.back();
      vec[pos] = moved;
      vec.pop_back();
      if (moved != p) {
        for (auto& entry : piece_nodes_[moved]) {
          if (entry.first == node) {
            entry.second = pos;
            break;
          }
        }
      }
    }
    piece_nodes_[p].clear();

    auto& bucket = bucket_[s];
    std::int32_t pos = bucket_pos_[p];
    std::int32_t moved = bucket.back();
    bucket[pos] = moved;
    bucket.pop_back();
    bucket_pos_[moved] = pos;
    bucket_pos_[p] = -1;
    if (bucket.empty()) nonempty_.erase(s);
  }

  // Active pieces whose interval [s, e) contains the coordinate with index
  // `slot` — i.e. s <= slot < e.
  void stab(std::int32_t slot, std::vector<std::int32_t>& out) const {
    std::size_t node = base_ + static_cast<std::size_t>(slot);
    while (node >= 1) {
      out.insert(out.end(), nodes_[node].begin(), nodes_[node].end());
      node >>= 1;
    }
  }

  // Active pieces whose start coordinate index lies strictly between lo and
  // hi.
  void starts_between(std::int32_t lo, std::int32_t hi, std::vector<std::int32_t>& out) const {
    for (auto it = nonempty_.upper_bound(lo); it != nonempty_.end() && *it < hi; ++it)
      out.insert(out.end(), bucket_[*it].begin(), bucket_[*it].end());
  }

 private:
  void place(std::int32_t p, std::int32_t s, std::int32_t e, std::size_t node,
             std::int32_t node_lo, std::int32_t node_hi) {
    if (s <= node_lo && node_hi <= e) {
      piece_nodes_[p].emplace_back(static_cast<std::int32_t>(node),
                                   static_cast<std::int32_t>(nodes_[node].size()));
      nodes_[node].push_back(p);
      return;
    }
    std::int32_t mid = node_lo + (node_hi - node_lo) / 2;
    if (s < mid) place(p, s, e, 2 * node, node_lo, mid);
    if (e > mid) place(p, s, e, 2 * node + 1, mid, node_hi);
  }

  std::size_t base_ = 1;
  std::vector<std::vector<std::int32_t>> nodes_;
  std::vector<std::vector<std::int32_t>> bucket_;
  std::vector<std::int32_t> bucket_pos_;
  std::vector<std::vector<std::pair<std::int32_t, std::int32_t>>> piece_nodes_;
  std::set<std::int32_t> nonempty_;
};

// Integer corner coordinates of one piece after denominators are cleared.
struct ScaledPiece {
  std::vector<Int> lo;
  std::vector<Int> hi;
  std::int64_t id = 0;  // original index in the tiling
};

}  // namespace

VerifyReport verify_tiling(const Tiling& t) {
  ReportBuilder builder;
  builder.rep.piece_count = t.pieces.size();

  const unsigned dim = t.dim;
  const bool outer_ok = dim >= 1 && t.outer.origin.size() == dim && t.outer.side > 0;
  if (!outer_ok) builder.add(ViolationKind::outside, -1, -1);

  std::vector<std::int64_t> good;
  good.reserve(t.pieces.size());
  std::set<Rational> side_set;
  for (std::size_t i = 0; i < t.pieces.size(); ++i) {
    const Box& piece = t.pieces[i];
    if (piece.origin.size() != dim || piece.side <= 0) {
      builder.add(ViolationKind::outside, static_cast<std::int64_t>(i), -1);
      continue;
    }
    good.push_back(static_cast<std::int64_t>(i));
    side_set.insert(piece.side);
  }
  builder.set_sides({side_set.begin(), side_set.end()});

  if (!outer_ok) return builder.finish();

  // Clear denominators: with L = lcm of every denominator in sight, all
  // corners become exact integers and every comparison below is integral.
  Int L = rat_den(t.outer.side);
  for (const Rational& c : t.outer.origin) L = lcm(L, rat_den(c));
  for (std::int64_t i : good) {
    const Box& piece = t.pieces[i];
    L = lcm(L, rat_den(piece.side));
    for (const Rational& c : piece.origin) L = lcm(L, rat_den(c));
  }
  const auto scaled = [&L](const Rational& r) { return rat_num(r) * (L / rat_den(r)); };

  std::vector<Int> outer_lo(dim), outer_hi(dim);
  for (unsigned axis = 0; axis < dim; ++axis) {
    outer_lo[axis] = scaled(t.outer.origin[axis]);
    outer_hi[axis] = outer_lo[axis] + scaled(t.outer.side);
  }

  std::vector<ScaledPiece> pieces(good.size());
  Int volume = 0;
  for (std::size_t p = 0; p < good.size(); ++p) {
    const Box& piece = t.pieces[good[p]];
    ScaledPiece& sp = pieces[p];
    sp.id = good[p];
    sp.lo.resize(dim);
    sp.hi.resize(dim);
    const Int side = scaled(piece.side);
    bool inside = true;
    for (unsigned axis = 0; axis < dim; ++axis) {
      sp.lo[axis] = scaled(piece.origin[axis]);
      sp.hi[axis] = sp.lo[axis] + side;
      inside = inside && sp.lo[axis] >= outer_lo[axis] && sp.hi[axis] <= outer_hi[axis];
    }
    if (!inside) builder.add(ViolationKind::outside, sp.id, -1);
    volume += int_pow(side, dim);
  }
  if (volume != int_pow(outer_hi[0] - outer_lo[0], dim))
    builder.add(ViolationKind::volume_deficit, -1, -1);

  if (pieces.empty()) return builder.finish();

  // Interior disjointness: sweep along axis 0; the interval index covers
  // axis 1 (a dummy common interval in dimension 1); any further axes are
  // checked directly on the few candidates that overlap in both.
  std::vector<Int> ycoords;
  ycoords.reserve(2 * pieces.size());
  if (dim == 1) {
    ycoords = {Int(0), Int(1)};
  } else {
    for (const ScaledPiece& sp : pieces) {
      ycoords.push_back(sp.lo[1]);
      ycoords.push_back(sp.hi[1]);
    }
    std::sort(ycoords.begin(), ycoords.end());
    ycoords.erase(std::unique(ycoords.begin(), ycoords.end()), ycoords.end());
  }
  const auto yindex_of = [&ycoords](const Int& v) {
    return static_cast<std::int32_t>(
        std::lower_bound(ycoords.begin(), ycoords.end(), v) - ycoords.begin());
  };

  std::vector<std::int32_t> ys(pieces.size()), ye(pieces.size());
  for (std::size_t p = 0; p < pieces.size(); ++p) {
    ys[p] = dim == 1 ? 0 : yindex_of(pieces[p].lo[1]);
    ye[p] = dim == 1 ? 1 : yindex_of(pieces[p].hi[1]);
  }

  std::vector<std::int32_t> order(pieces.size()), removal(pieces.size());
  for (std::size_t p = 0; p < pieces.size(); ++p) order[p] = removal[p] = static_cast<std::int32_t>(p);
  std::sort(order.begin(), order.end(), [&pieces](std::int32_t a, std::int32_t b) {
    if (pieces[a].lo[0] != pieces[b].lo[0]) return pieces[a].lo[0] < pieces[b].lo[0];
    return a < b;
  });
  std::sort(removal.begin(), removal.end(), [&pieces](std::int32_t a, std::int32_t b) {
    if (pieces[a].hi[0] != pieces[b].hi[0]) return pieces[a].hi[0] < pieces[b].hi[0];
    return a < b;
  });

  IntervalIndex index(ycoords.size() - 1, pieces.size(), ycoords.size());
  std::vector<std::int32_t> candidates;
  std::size_t next_removal = 0;
  for (std::int32_t p : order) {
    if (builder.saturated()) break;
    while (next_removal < removal.size() &&
           pieces[removal[next_removal]].hi[0] <= pieces[p].lo[0]) {
      index.remove(removal[next_removal], ys[removal[next_removal]]);
      ++next_removal;
    }

    candidates.clear();
    index.stab(ys[p], candidates);
    index.starts_between(ys[p], ye[p], candidates);
    for (std::int32_t q : candidates) {
      bool overlapping = true;
      for (unsigned axis = 2; axis < dim && overlapping; ++axis) {
        overlapping = pieces[q].lo[axis] < pieces[p].hi[axis] &&
                      pieces[p].lo[axis] < pieces[q].hi[axis];
      }
      if (overlapping)
        builder.add(ViolationKind::overlap, std::min(pieces[p].id, pieces[q].id),
                    std::max(pieces[p].id, pieces[q].id));
    }
    index.insert(p, ys[p], ye[p]);
  }

  return builder.finish();
}

VerifyReport verify_cube_plan(const highdim::CubePlan& plan) {
  ReportBuilder builder;
  builder.rep.piece_count = plan.n;

  bool structural = plan.d >= 2 && plan.x.size() == plan.d && plan.a >= 1 && plan.c >= 0 &&
                    plan.c <= 3 && plan.m == plan.a + plan.c && plan.y1 >= 0 && plan.n >= 1;
  for (const Int& xi : plan.x) structural = structural && xi >= 0;
  structural = structural && !(plan.m == 1 && plan.y1 > 0);
  if (!structural) {
    builder.add(ViolationKind::outside, -1, -1);
    return builder.finish();
  }

  const unsigned d = plan.d;
  const Int a2d = int_pow(plan.a, 2 * d);
  const Int md = int_pow(plan.m, d);

  // The offset must bracket n, or the side bounds below mean nothing.
  if (!(a2d * md <= plan.n && plan.n < a2d * int_pow(plan.m + 1, d)))
    builder.add(ViolationKind::outside, -1, -1);

  // Piece-count identity: the adjusted splits must hit n exactly.
  Int count = a2d * md;
  Int used_cells = plan.y1;
  for (unsigned i = 1; i <= d; ++i) {
    count += plan.x[i - 1] * (int_pow(plan.m + i, d) - md);
    used_cells += plan.x[i - 1];
  }
  count -= plan.y1 * (md - int_pow(plan.m - 1, d));
  if (count != plan.n) builder.add(ViolationKind::volume_deficit, -1, -1);

  // Cell budget: the adjusted cells must all exist in the a^2-grid.
  if (used_cells > a2d) builder.add(ViolationKind::overlap, -1, -1);

  std::vector<highdim::SizeCount> sizes = highdim::plan_sizes(plan);
  if (sizes.size() > d + 2) builder.add(ViolationKind::outside, -1, -1);

  Int total = 0;
  Rational volume = 0;
  std::vector<Rational> ascending;
  for (const auto& entry : sizes) {
    total += entry.count;
    volume += Rational(entry.count) * rat_pow(entry.side, d);
    ascending.push_back(entry.side);
  }
  std::sort(ascending.begin(), ascending.end());
  builder.set_sides(std::move(ascending));
  if (total != plan.n || volume != 1) builder.add(ViolationKind::volume_deficit, -1, -1);

  return builder.finish();
}

VerifyReport verify_threesize_plan(const threesize::ThreeSizePlan& plan) {
  ReportBuilder builder;
  builder.rep.piece_count = plan.n;

  if (!(plan.d >= 3 && plan.a >= 2 && plan.x1 >= 0 && plan.x2 >= 0 && plan.n >= 1)) {
    builder.add(ViolationKind::outside, -1, -1);
    return builder.finish();
  }

  const unsigned d = plan.d;
  const Int cells = int_pow(plan.a - 1, d);
  const Int halves_gain = int_pow(2, d) - 1;
  const Int fine_gain = int_pow(halves_gain, d) - 1;

  if (plan.k != plan.n - cells) builder.add(ViolationKind::volume_deficit, -1, -1);
  if (cells + plan.x1 * halves_gain + plan.x2 * fine_gain != plan.n)
    builder.add(ViolationKind::volume_deficit, -1, -1);
  if (plan.x1 + plan.x2 > cells) builder.add(ViolationKind::overlap, -1, -1);

  std::vector<highdim::SizeCount> sizes = threesize::plan_sizes(plan);
  Int total = 0;
  Rational volume = 0;
  std::vector<Rational> ascending;
  for (const auto& entry : sizes) {
    total += entry.count;
    volume += Rational(entry.count) * rat_pow(entry.side, d);
    ascending.push_back(entry.side);
  }
  std::sort(ascending.begin(), ascending.end());
  builder.set_sides(std::move(ascending));
  if (total != plan.n || volume != Rational(cells)) builder.add(ViolationKind::volume_deficit, -1, -1);

  return builder.finish();
}

const char* violation_kind_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::overlap: return "overlap";
    case ViolationKind::outside: return "outside";
    case ViolationKind::volume_deficit: return "volume-deficit";
  }
  return "unknown";
}

std::string report_summary(const VerifyReport& r) {
  std::ostringstream out;
  out << (r.valid ? "valid" : "INVALID") << ": " << r.piece_count << " piece"
      << (r.piece_count == 1 ? "" : "s") << ", " << r.distinct_sides.size() << " distinct side"
      << (r.distinct_sides.size() == 1 ? "" : "s");
  if (!r.distinct_sides.empty()) {
    out << " {";
    for (std::size_t i = 0; i < r.distinct_sides.size() && i < 6; ++i) {
      if (i) out << ", ";
      out << rat_to_string(r.distinct_sides[i]);
    }
    if (r.distinct_sides.size() > 6) out << ", ...";
    out << "}";
  }
  out << ", ratio " << rat_to_string(r.ratio);
  if (!r.violations.empty()) {
    out << "; violations:";
    for (std::size_t i = 0; i < r.violations.size() && i < 8; ++i) {
      const Violation& v = r.violations[i];
      out << " " << violation_kind_name(v.kind);
      if (v.i >= 0 && v.j >= 0) {
        out << "(" << v.i << "," << v.j << ")";
      } else if (v.i >= 0) {
        out << "(" << v.i << ")";
      }
    }
    if (r.violations.size() > 8) out << " ...";
  }
  return out.str();
}

}  // namespace cubetile::verify
