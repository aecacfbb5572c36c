#pragma once

// Independent reference computations used to derive expected values in the
// tests. None of these call into the code paths they are used to check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include <doctest.h>

#include "ostar/cyclotomic.hpp"
#include "ostar/finite_group.hpp"
#include "ostar/perm_rep.hpp"
#include "ostar/symclass.hpp"

namespace oracle {

using cplx = std::complex<long double>;
inline constexpr long double kPi = 3.141592653589793238462643383279502884L;

inline cplx zeta(unsigned N, long long e) {
  const long double t = 2 * kPi * static_cast<long double>(((e % N) + N) % N) / N;
  return {std::cos(t), std::sin(t)};
}

// Value of the power-basis coefficient vector, summed directly.
inline cplx eval(const ostar::CycloNum& x) {
  cplx s = 0;
  for (unsigned i = 0; i < x.coeffs().size(); ++i) s += static_cast<long double>(x.coeffs()[i].get_d()) * zeta(x.conductor(), i);
  return s;
}

inline cplx widen(std::complex<double> z) { return {z.real(), z.imag()}; }

inline bool near(cplx a, cplx b, long double tol = 1e-9L) { return std::abs(a - b) < tol; }

// k in N0<primes> by exhaustive search over the first prime's multiplicity.
inline bool semigroup_member(std::uint64_t k, const std::vector<std::uint64_t>& primes, std::size_t from = 0) {
  if (k == 0) return true;
  if (from == primes.size()) return false;
  for (std::uint64_t used = 0; used <= k; used += primes[from])
    if (semigroup_member(k - used, primes, from + 1)) return true;
  return false;
}

// Subgroup lattice by testing every subset containing the identity
// (|G| <= 16).
inline std::vector<ostar::ElemSet> subgroups_by_subsets(const ostar::FiniteGroup& G) {
  const std::size_t n = G.order();
  std::vector<ostar::ElemSet> out;
  for (std::uint32_t mask = 1; mask < (1u << n); mask += 2) {
    ostar::ElemSet s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) s.push_back(static_cast<ostar::Elem>(i));
    bool closed = true;
    for (auto x : s)
      for (auto y : s)
        if (!(mask >> G.mul(x, y) & 1u)) closed = false;
    if (closed) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

// Number of alpha in Gamma_{m,n} fixed by pi(g), by enumerating every alpha.
inline std::uint64_t fixed_indices(const ostar::Perm& p, int n) {
  const std::size_t m = p.size();
  std::vector<int> a(m, 0);
  std::uint64_t count = 0;
  while (true) {
    bool fixed = true;
    for (std::size_t i = 0; i < m && fixed; ++i) fixed = a[p[i]] == a[i];
    count += fixed;
    std::size_t pos = m;
    while (pos > 0 && a[pos - 1] == n - 1) a[--pos] = 0;
    if (pos == 0) break;
    ++a[pos - 1];
  }
  return count;
}

// dim V_chi(G) as the trace of the symmetrizer, trace(P_sigma) counted by
// brute force. Evaluated in floating point.
inline long double dimension_by_trace(const ostar::FiniteGroup& G, const ostar::PermRep& rep,
                                      const ostar::Character& chi, int n) {
  cplx s = 0;
  for (ostar::Elem g = 0; g < G.order(); ++g)
    s += eval(chi(g)) * static_cast<long double>(fixed_indices(rep(g), n));
  return (s * static_cast<long double>(chi.degree) / static_cast<long double>(G.order())).real();
}

// Z[x]/(x^L - 1) with int64 coefficients: a fast exact model for sums of
// L-th roots of unity.
struct Cyclic {
  unsigned L;
  std::vector<long long> c;

  explicit Cyclic(unsigned l) : L(l), c(l, 0) {}

  Cyclic conj() const {
    Cyclic r(L);
    for (unsigned i = 0; i < L; ++i) r.c[(L - i) % L] = c[i];
    return r;
  }
  Cyclic operator*(const Cyclic& o) const {
    Cyclic r(L);
    for (unsigned i = 0; i < L; ++i)
      if (c[i])
        for (unsigned j = 0; j < L; ++j) r.c[(i + j) % L] += c[i] * o.c[j];
    return r;
  }
  Cyclic& operator+=(const Cyclic& o) {
    for (unsigned i = 0; i < L; ++i) c[i] += o.c[i];
    return *this;
  }
};

// Lift x (conductor dividing L) to Z[x]/(x^L - 1) after scaling by `den`,
// which must clear every denominator of x.
inline Cyclic lift(const ostar::CycloNum& x, unsigned L, const mpz_class& den) {
  Cyclic r(L);
  const unsigned step = L / x.conductor();
  for (unsigned i = 0; i < x.coeffs().size(); ++i) {
    mpq_class v = x.coeffs()[i] * den;
    r.c[i * step] = v.get_num().get_si();
  }
  return r;
}

inline ostar::CycloNum lower(const Cyclic& x, const mpz_class& den) {
  return ostar::CycloNum::from_exponent_counts(x.L, x.c) / mpq_class(den);
}

// Permanent / determinant and friends: sum over all of S_m.
inline ostar::CycloNum sum_over_sm(const std::vector<std::vector<ostar::CycloNum>>& M, bool signed_sum) {
  const std::size_t m = M.size();
  std::vector<std::size_t> p(m);
  std::iota(p.begin(), p.end(), std::size_t{0});
  ostar::CycloNum total;
  do {
    ostar::CycloNum term(1L);
    for (std::size_t i = 0; i < m; ++i) term *= M[i][p[i]];
    int inversions = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) inversions += p[i] > p[j];
    if (signed_sum && inversions % 2) term = -term;
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

}  // namespace oracle

namespace doctest {
template <>
struct StringMaker<ostar::CycloNum> {
  static String convert(const ostar::CycloNum& x) { return x.to_string().c_str(); }
};
}  // namespace doctest
