#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ostar/characters.hpp"
#include "ostar/cyclotomic.hpp"
#include "ostar/finite_group.hpp"
#include "ostar/perm_rep.hpp"

namespace ostar {

inline constexpr std::uint64_t kDefaultIndexBudget = 10'000'000;

// alpha = (alpha_1, ..., alpha_m) with 1 <= alpha_i <= n.
struct MultiIndex {
  std::vector<int> entries;
  int n = 1;

  std::size_t m() const noexcept { return entries.size(); }
  std::string to_string() const;

  auto operator<=>(const MultiIndex&) const = default;
};

// Gamma_{m,n} encoded in mixed radix n with the first position most
// significant, so code order is lexicographic order.
class IndexSpace {
 public:
  // Throws BudgetError when n^m exceeds `budget`.
  IndexSpace(std::size_t m, int n, std::uint64_t budget = kDefaultIndexBudget);

  std::size_t m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return size_; }

  std::uint64_t encode(const MultiIndex& alpha) const;
  MultiIndex decode(std::uint64_t code) const;

 private:
  std::size_t m_;
  int n_;
  std::uint64_t size_;
};

// (alpha.sigma)_i = alpha_{sigma^-1(i)}.
MultiIndex act(const MultiIndex& alpha, const Perm& sigma);
MultiIndex act(const MultiIndex& alpha, Elem g, const PermRep& rep);

// Cycles of pi(g) on {1..m}, fixed points included.
std::size_t cycle_count(Elem g, const PermRep& rep);

ElemSet stabilizer(const MultiIndex& alpha, const FiniteGroup& G, const PermRep& rep);

struct ScanOptions {
  std::uint64_t index_budget = kDefaultIndexBudget;
  unsigned threads = 1;
  // Re-derive every s_alpha as the exact rank of its Gram matrix.
  bool verify_rank = false;
};

struct Orbit {
  MultiIndex rep;  // lex-min
  std::uint64_t size = 0;
  ElemSet stabilizer;
};

// Every orbit of G on Gamma_{m,n}, m = rep.degree(), sorted by
// representative. The result does not depend on the thread count.
std::vector<Orbit> enumerate_orbits(const FiniteGroup& G, const PermRep& rep, int n, const ScanOptions& opts = {});

struct OrbitRecord {
  MultiIndex rep;
  std::uint64_t orbit_size = 0;
  ElemSet stabilizer;
  CycloNum stab_char_sum;
  bool in_delta_bar = false;
  long s_alpha = 0;
};

// Adds the character data: sum_{h in G_alpha} chi(h), Delta-bar membership
// and s_alpha = chi(e)/|G_alpha| sum_{h in G_alpha} chi(h).
OrbitRecord annotate_orbit(const Orbit& orbit, const Character& chi);

std::vector<OrbitRecord> orbit_scan(const FiniteGroup& G, const PermRep& rep, const Character& chi, int n,
                                    const ScanOptions& opts = {});

// dim V_chi(G) = chi(e)/|G| sum_g chi(g) n^c(g). Throws ConsistencyError when
// the exact value is not a nonnegative integer.
mpz_class dim_symmetry_class(const FiniteGroup& G, const PermRep& rep, const Character& chi, int n);

// f(g) = sum_{h in stab} chi(g h) for every g in G.
std::vector<CycloNum> stabilizer_sums(const FiniteGroup& G, const ElemSet& stab, const Character& chi);

// <e*_alpha, e*_{alpha.g}> = chi(e)/|G| sum_{h in G_alpha} chi(g h).
CycloNum inner_product(const MultiIndex& alpha, Elem g, const Character& chi, const FiniteGroup& G,
                       const PermRep& rep);

// <e*_beta, e*_gamma> for arbitrary multi-indices; zero across orbits.
CycloNum inner_product(const MultiIndex& beta, const MultiIndex& gamma, const Character& chi, const FiniteGroup& G,
                       const PermRep& rep);

struct GramMatrix {
  MultiIndex alpha;
  std::vector<Elem> coset_reps;  // smallest element of each right coset G_alpha sigma
  std::vector<std::vector<CycloNum>> entries;
};

// Gram matrix of {e*_{alpha.sigma_i}} over right cosets of G_alpha. Rejects
// alpha outside Delta-bar.
GramMatrix gram(const MultiIndex& alpha, const Character& chi, const FiniteGroup& G, const PermRep& rep);

// Coordinates of e*_alpha in the basis {e_beta}, sorted by code, zeros dropped.
struct SparseTensor {
  std::vector<std::pair<std::uint64_t, CycloNum>> coords;
};

// e*_alpha = chi(e)/|G| sum_sigma chi(sigma) e_{alpha.sigma}.
SparseTensor explicit_symmetrized_tensor(const MultiIndex& alpha, const Character& chi, const FiniteGroup& G,
                                         const PermRep& rep, std::uint64_t budget = kDefaultIndexBudget);

// sum_beta u_beta conj(v_beta); linear in the first argument.
CycloNum tensor_inner_product(const SparseTensor& u, const SparseTensor& v);

// d_chi^G(M) = sum_sigma chi(sigma) prod_i M[i][sigma(i)].
CycloNum generalized_matrix_function(const std::vector<std::vector<CycloNum>>& M, const Character& chi,
                                     const FiniteGroup& G, const PermRep& rep);

}  // namespace ostar
