#include "cubetile/numtheory.hpp"

#include "cubetile/error.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cstddef>

namespace cubetile::numtheory {

using boost::multiprecision::gcd;

Int SignedRepresentation::lhs() const {
  Int total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += x[i] * a[i];
  for (std::size_t j = 0; j < b.size(); ++j) total -= y[j] * b[j];
  return total;
}

Int gcd_list(const std::vector<Int>& values) {
  if (values.empty()) fail(errc::invalid_argument, "gcd_list: empty list");
  Int g = 0;
  for (const Int& v : values) g = gcd(g, v);
  return g;
}

namespace {

// g = gcd(a, b) together with u, v such that u*a + v*b == g.
struct Egcd {
  Int g, u, v;
};

Egcd egcd(const Int& a, const Int& b) {
  Int r0 = a, r1 = b;
  Int u0 = 1, u1 = 0;
  Int v0 = 0, v1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    r0 = r1; r1 = r2;
    Int u2 = u0 - q * u1;
    u0 = u1; u1 = u2;
    Int v2 = v0 - q * v1;
    v0 = v1; v1 = v2;
  }
  return {r0, u0, v0};
}

void check_representation_inputs(const std::vector<Int>& a, const std::vector<Int>& b) {
  if (a.empty() || b.empty())
    fail(errc::invalid_argument, "signed_representation: coefficient lists must be nonempty");
  for (const Int& v : a)
    if (v < 1) fail(errc::invalid_argument, "signed_representation: coefficients must be positive");
  for (const Int& v : b)
    if (v < 1) fail(errc::invalid_argument, "signed_representation: coefficients must be positive");
  Int g = gcd_list(a);
  for (const Int& v : b) g = gcd(g, v);
  if (g != 1)
    fail(errc::invalid_argument, "signed_representation: coefficients must be coprime overall");
}

// Single-b case: peel the gcd chain G_i = gcd(a[0..i], M) from the back.
// Each x[i] is the least nonnegative solution of a[i]*x == k_i (mod G_{i-1}),
// so x[i] < M; the running k stays divisible by the next gcd down the chain.
void solve_single_b(SignedRepresentation& rep) {
  const Int& M = rep.b[0];
  const std::size_t r = rep.a.size();
  std::vector<Int> G(r + 1);
  G[0] = M;
  for (std::size_t i = 0; i < r; ++i) G[i + 1] = gcd(G[i], rep.a[i]);

  Int k_cur = rep.k;
  for (std::size_t i = r; i-- > 0;) {
    const Int& g = G[i + 1];
    Int modulus = G[i] / g;
    Int xi = 0;
    if (modulus != 1) {
      Int inv = mod_inverse(rep.a[i] / g, modulus);
      xi = mod_floor((k_cur / g) * inv, modulus);
    }
    rep.x[i] = xi;
    k_cur -= rep.a[i] * xi;
  }

  Int reached = rep.k - k_cur;  // = sum(x*a)
  if (reached < rep.k) {
    // Raise the last x in whole multiples of M so the identity can close
    // with a nonnegative y.
    Int t = ceil_div(rep.k - reached, rep.a[r - 1] * M);
    rep.x[r - 1] += t * M;
    reached += t * rep.a[r - 1] * M;
  }
  rep.y[0] = (reached - rep.k) / M;
}

// General case: fold extended gcd across a ∪ b, scale by k, then shift the
// negative entries. Both shift passes add equal amounts to the two sides of
// the identity, so it holds throughout.
void solve_general(SignedRepresentation& rep) {
  const std::size_t r = rep.a.size(), s = rep.b.size();
  std::vector<Int> coef(r + s, 0);
  Int g = rep.a[0];
  coef[0] = 1;
  for (std::size_t i = 1; i < r + s; ++i) {
    const Int& next = i < r ? rep.a[i] : rep.b[i - r];
    Egcd e = egcd(g, next);
    for (std::size_t j = 0; j < i; ++j) coef[j] *= e.u;
    coef[i] = e.v;
    g = e.g;
  }

  for (std::size_t i = 0; i < r; ++i) rep.x[i] = coef[i] * rep.k;
  for (std::size_t j = 0; j < s; ++j) rep.y[j] = -coef[r + j] * rep.k;

  for (std::size_t i = 0; i < r; ++i) {
    if (rep.x[i] < 0) {
      Int t = ceil_div(-rep.x[i], rep.b[0]);
      rep.x[i] += t * rep.b[0];
      rep.y[0] += t * rep.a[i];
    }
  }
  for (std::size_t j = 0; j < s; ++j) {
    if (rep.y[j] < 0) {
      Int t = ceil_div(-rep.y[j], rep.a[0]);
      rep.y[j] += t * rep.a[0];
      rep.x[0] += t * rep.b[j];
    }
  }
}

}  // namespace

SignedRepresentation signed_representation(std::vector<Int> a, std::vector<Int> b, Int k) {
  check_representation_inputs(a, b);
  SignedRepresentation rep;
  rep.x.assign(a.size(), Int(0));
  rep.y.assign(b.size(), Int(0));
  rep.a = std::move(a);
  rep.b = std::move(b);
  rep.k = std::move(k);

  if (rep.b.size() == 1)
    solve_single_b(rep);
  else
    solve_general(rep);

  if (!rep.holds()) fail(errc::internal_violation, "signed_representation: identity lost");
  for (const Int& v : rep.x)
    if (v < 0) fail(errc::internal_violation, "signed_representation: negative coefficient");
  for (const Int& v : rep.y)
    if (v < 0) fail(errc::internal_violation, "signed_representation: negative coefficient");
  return rep;
}

namespace {

void check_reducible(const SignedRepresentation& rep, unsigned d) {
  if (rep.b.size() != 1 || rep.y.size() != 1)
    fail(errc::invalid_argument, "reduce: needs exactly one subtracted coefficient");
  if (rep.a.size() != d || rep.x.size() != d || d == 0)
    fail(errc::invalid_argument, "reduce: coefficient count does not match d");
  for (std::size_t i = 1; i < d; ++i)
    if (rep.a[i - 1] >= rep.a[i])
      fail(errc::invalid_argument, "reduce: coefficients must be strictly increasing");
}

}  // namespace

bool reduce_step(SignedRepresentation& rep, unsigned d) {
  check_reducible(rep, d);
  const Int& b1 = rep.b[0];
  const Int& a_last = rep.a[d - 1];

  if (rep.y[0] >= a_last) {
    for (std::size_t i = 0; i < d; ++i) {
      if (rep.x[i] >= b1) {
        rep.x[i] -= b1;
        rep.y[0] -= rep.a[i];  // paired with a[i]: the identity is unchanged
        return true;
      }
    }
  }
  for (std::size_t i = 0; i + 1 < d; ++i) {
    if (rep.x[i] >= a_last) {
      rep.x[i] -= a_last;
      rep.x[d - 1] += rep.a[i];
      return true;
    }
  }
  return false;
}

SignedRepresentation reduce_representation(SignedRepresentation rep, unsigned d) {
  while (reduce_step(rep, d)) {
  }
  return rep;
}

SylvesterPair sylvester_representation(const Int& a1, const Int& a2, const Int& k) {
  if (a1 < 1 || a2 < 1)
    fail(errc::invalid_argument, "sylvester_representation: coefficients must be positive");
  if (gcd(a1, a2) != 1)
    fail(errc::invalid_argument, "sylvester_representation: coefficients must be coprime");

  SylvesterPair p;
  p.x2 = a1 == 1 ? Int(0) : mod_floor(k * mod_inverse(a2, a1), a1);
  p.x1 = (k - p.x2 * a2) / a1;
  if (p.x1 < 0) {
    Int bound = (a1 - 1) * (a2 - 1);
    fail(errc::not_representable,
         "no nonnegative representation of " + k.str() + " over " + a1.str() + " and " +
             a2.str() + " (always possible from " + bound.str() + " up)");
  }
  return p;
}

bool gcd_family_check(unsigned d, const Int& m) {
  if (d < 1) fail(errc::invalid_argument, "gcd_family_check: d must be >= 1");
  if (m < 1) fail(errc::invalid_argument, "gcd_family_check: m must be >= 1");
  const Int md = int_pow(m, d);
  Int g = 0;
  for (unsigned i = 1; i <= d; ++i) {
    g = gcd(g, int_pow(m + i, d) - md);
    if (g == 1) return true;
  }
  return g == 1;
}

}  // namespace cubetile::numtheory
