#pragma once

// The Diophantine layer: representations k = sum(x*a) - sum(y*b) with
// nonnegative coefficients, the two-step reduction that shrinks them to fit
// a cell budget, two-coefficient (Sylvester) representations above the
// Frobenius bound, and the gcd fact that makes the pipeline's coefficient
// families usable.

#include "cubetile/rational.hpp"

#include <vector>

namespace cubetile::numtheory {

// Witnesses sum(x[i]*a[i]) - sum(y[j]*b[j]) == k with every x[i], y[j] >= 0.
struct SignedRepresentation {
  std::vector<Int> a;
  std::vector<Int> b;
  std::vector<Int> x;
  std::vector<Int> y;
  Int k;

  Int lhs() const;  // sum(x*a) - sum(y*b)
  bool holds() const { return lhs() == k; }
};

// gcd of a nonempty list of integers.
Int gcd_list(const std::vector<Int>& values);

// A nonnegative representation of k over positive coefficient lists a and b
// with gcd(a ∪ b) == 1. k may have either sign. Deterministic: for a single
// b the x[i] are the least residues produced by peeling the gcd chain
// gcd(a[0..i], b[0]) from the back, so x[i] < b[0] before the final y-fixing
// step (which can raise only the last x).
SignedRepresentation signed_representation(std::vector<Int> a, std::vector<Int> b, Int k);

// One rewrite of the two-step reduction; returns false when neither guard
// holds (fixpoint). Requires rep to be over strictly increasing a with a
// single b, d == a.size(). Step 1 (preferred): some x[i] >= b[0] while
// y[0] >= a.back(); then x[i] -= b[0], y[0] -= a[i] — note the pairing with
// a[i], which keeps the represented value unchanged. Step 2: some x[i] with
// i < d-1 has x[i] >= a.back(); then x[i] -= a.back(), x.back() += a[i].
// Both use the smallest qualifying i. Each step lowers y[0] + sum(x), so
// iteration terminates.
bool reduce_step(SignedRepresentation& rep, unsigned d);

// reduce_step to fixpoint. Afterwards either y[0] < a.back() or every
// x[i] < b[0], and all x[i] with i < d-1 are < a.back().
SignedRepresentation reduce_representation(SignedRepresentation rep, unsigned d);

struct SylvesterPair {
  Int x1, x2;
};

// k = x1*a1 + x2*a2 with x1, x2 >= 0, for coprime a1, a2 >= 1. x2 is the
// least residue of k/a2 mod a1, which makes the pair unique and makes
// failure (x1 < 0) an exact certificate that no nonnegative representation
// exists — guaranteed not to happen once k >= (a1-1)*(a2-1).
SylvesterPair sylvester_representation(const Int& a1, const Int& a2, const Int& k);

// True when gcd{(m+i)^d - m^d : i = 1..d} == 1, i.e. the subdivision gains
// for base m in dimension d can combine to any integer. Holds for every
// m >= 1 once d >= 2.
bool gcd_family_check(unsigned d, const Int& m);

}  // namespace cubetile::numtheory
