#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ostar/characters.hpp"
#include "ostar/perm_rep.hpp"
#include "ostar/semidirect.hpp"
#include "ostar/symclass.hpp"

namespace ostar {

enum class Status { Admits, NotAdmits, Inconclusive };
enum class Justification { LinearCharacter, MainTheorem, WreathCorollary, NamedFamilyCorollary, SubgroupCriterion, BruteForce };

std::string to_string(Status s);
std::string to_string(Justification j);

// Outcome of the search for alpha with trivial stabilizer. "Proven none"
// and "not searched to completion" are different answers.
struct StabilizerSearch {
  enum class Outcome { Found, ProvenNone, BudgetExceeded };
  Outcome outcome = Outcome::ProvenNone;
  std::optional<MultiIndex> alpha;
  bool fast_path = false;
};
std::string to_string(StabilizerSearch::Outcome o);

// |H| against N0<Prime(|A|)>.
struct SemigroupFact {
  std::uint64_t k = 0;
  std::vector<std::uint64_t> primes;
  bool member = false;
};

struct SubgroupWitness {
  ElemSet subgroup;
  std::size_t index = 0;
};

struct OrbitClique {
  MultiIndex rep;
  long s_alpha = 0;
  // Group elements sigma with {e*_{alpha.sigma}} pairwise orthogonal, or
  // nullopt when no clique of size s_alpha exists.
  std::optional<std::vector<Elem>> clique;
};

struct Verdict {
  Status status = Status::Inconclusive;
  Justification justification = Justification::MainTheorem;
  std::size_t char_index = 0;
  std::optional<StabilizerSearch> stabilizer_search;
  std::optional<SemigroupFact> semigroup;
  std::optional<long> witness_s_alpha;
  std::optional<SubgroupWitness> subgroup;
  std::optional<MultiIndex> failing_orbit;
  std::vector<OrbitClique> per_orbit;
  bool zero_dimension = false;
  std::vector<std::string> notes;
};

struct DecideOptions {
  std::uint64_t index_budget = kDefaultIndexBudget;
  std::size_t subgroup_bound = kDefaultSubgroupBound;
  unsigned threads = 1;
  bool brute_force = false;
};

// Smallest alpha in Gamma_{m,n} (m = rep.degree()) with G_alpha = {e}. Under
// a regular representation with n >= 2 the answer is immediate: the index
// with a single 2 at the identity's position.
StabilizerSearch find_trivial_stabilizer_alpha(const FiniteGroup& G, const PermRep& rep, int n,
                                               std::uint64_t budget = kDefaultIndexBudget);

// Main theorem: with G_alpha = {e} for some alpha and |H| outside
// N0<Prime(|A|)>, V_chi(G) has an o*-basis iff chi is linear.
Verdict decide_main_theorem(const SemidirectGroup& G, const PermRep& rep, const CharacterTable& table,
                            std::size_t chi_index, int n, const DecideOptions& opts = {});

enum class Family { DihedralOddS, PQ, ZGroup };
std::string to_string(Family f);

struct FamilyParams {
  Family family = Family::DihedralOddS;
  int s = 0;  // dihedral s, z_group s
  int t = 0;  // z_group t
  int p = 0;
  int q = 0;
  int r = 0;  // pq and z_group
};

SemidirectGroup build_family(const FamilyParams& params);

// Builds the family member, re-verifies both hypotheses of the main theorem
// computationally and returns one verdict per irreducible character.
// `use_regular` selects the regular instead of the bundled natural rep;
// `m` > rep degree pads with fixed points.
std::vector<Verdict> decide_named_family(const FamilyParams& params, bool use_regular, int n,
                                         std::optional<std::size_t> m = std::nullopt,
                                         const DecideOptions& opts = {});

// If some alpha has trivial stabilizer and a subgroup K avoids Z_chi with
// [G:K] < chi(e)^2, then V_chi(G) has no o*-basis. Works for any finite group.
Verdict decide_subgroup_criterion(const FiniteGroup& G, const PermRep& rep, const Character& chi, int n,
                                  const DecideOptions& opts = {});

// Definition-level oracle: for every alpha in Delta-bar look for s_alpha
// pairwise orthogonal e*_{alpha.sigma} by clique search on the
// orthogonality graph of the cosets of G_alpha.
Verdict brute_force_verify(const FiniteGroup& G, const PermRep& rep, const Character& chi, int n,
                           const DecideOptions& opts = {});

// Clique of the requested size in a graph given by an adjacency matrix, by
// backtracking over vertices in decreasing-degree order; empty if none.
std::optional<std::vector<std::size_t>> find_clique(const std::vector<std::vector<char>>& adj, std::size_t size);
std::size_t max_clique_size(const std::vector<std::vector<char>>& adj);

// Orthogonality graph on the right cosets of G_alpha: an edge joins two
// cosets iff the corresponding e*'s are orthogonal.
struct OrthogonalityGraph {
  std::vector<Elem> coset_reps;
  std::vector<std::vector<char>> adj;
};
OrthogonalityGraph orthogonality_graph(const FiniteGroup& G, const ElemSet& stab, const Character& chi);

// Full pipeline: zero-dimension check, linear shortcut, main theorem,
// subgroup criterion, then (if requested) brute force.
Verdict decide(const SemidirectGroup& G, const PermRep& rep, const CharacterTable& table, std::size_t chi_index, int n,
               const DecideOptions& opts = {});

}  // namespace ostar
