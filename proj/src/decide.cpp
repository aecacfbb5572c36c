#include "ostar/decide.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "ostar/errors.hpp"
#include "ostar/semigroup.hpp"

namespace ostar {

namespace {

// g fixes alpha iff alpha is constant along every cycle of pi(g).
bool fixes(const Perm& p, const std::vector<int>& entries) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (entries[p[i]] != entries[i]) return false;
  return true;
}

SemigroupFact semigroup_fact(const SemidirectGroup& G) {
  SemigroupFact fact;
  fact.k = G.H().order();
  fact.primes = prime_factors(G.A().order());
  fact.member = fact.primes.empty() ? fact.k == 0 : semigroup_member(SemigroupQuery{fact.k, fact.primes});
  return fact;
}

std::string primes_string(const std::vector<std::uint64_t>& primes) {
  std::string s = "{";
  for (std::size_t i = 0; i < primes.size(); ++i) s += (i ? "," : "") + std::to_string(primes[i]);
  return s + "}";
}

void extend_clique(const std::vector<std::vector<char>>& adj, std::vector<std::size_t>& clique,
                   const std::vector<std::size_t>& candidates, std::size_t target, bool& done) {
  if (clique.size() == target) {
    done = true;
    return;
  }
  if (clique.size() + candidates.size() < target) return;
  for (std::size_t i = 0; i < candidates.size() && !done; ++i) {
    if (clique.size() + (candidates.size() - i) < target) return;
    const std::size_t v = candidates[i];
    std::vector<std::size_t> next;
    for (std::size_t j = i + 1; j < candidates.size(); ++j)
      if (adj[v][candidates[j]]) next.push_back(candidates[j]);
    clique.push_back(v);
    extend_clique(adj, clique, next, target, done);
    if (!done) clique.pop_back();
  }
}

void grow_max(const std::vector<std::vector<char>>& adj, std::size_t size, const std::vector<std::size_t>& candidates,
              std::size_t& best) {
  best = std::max(best, size);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (size + (candidates.size() - i) <= best) return;
    std::vector<std::size_t> next;
    for (std::size_t j = i + 1; j < candidates.size(); ++j)
      if (adj[candidates[i]][candidates[j]]) next.push_back(candidates[j]);
    grow_max(adj, size + 1, next, best);
  }
}

std::vector<std::size_t> degree_order(const std::vector<std::vector<char>>& adj) {
  std::vector<std::size_t> order(adj.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<std::size_t> deg(adj.size(), 0);
  for (std::size_t i = 0; i < adj.size(); ++i)
    for (char e : adj[i]) deg[i] += e ? 1 : 0;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });
  return order;
}

PermRep pick_rep(const SemidirectGroup& G, bool use_regular, std::optional<std::size_t> m, std::vector<std::string>& notes) {
  PermRep rep;
  if (!use_regular && G.natural_rep()) {
    rep = *G.natural_rep();
  } else {
    if (!use_regular) notes.push_back("no faithful natural representation bundled; using the regular representation");
    rep = PermRep::regular(G.group());
  }
  if (m) rep = rep.padded(*m);
  return rep;
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::Admits: return "Admits";
    case Status::NotAdmits: return "NotAdmits";
    case Status::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string to_string(Justification j) {
  switch (j) {
    case Justification::LinearCharacter: return "LinearCharacter";
    case Justification::MainTheorem: return "MainTheorem";
    case Justification::WreathCorollary: return "WreathCorollary";
    case Justification::NamedFamilyCorollary: return "NamedFamilyCorollary";
    case Justification::SubgroupCriterion: return "SubgroupCriterion";
    case Justification::BruteForce: return "BruteForce";
  }
  return "?";
}

std::string to_string(StabilizerSearch::Outcome o) {
  switch (o) {
    case StabilizerSearch::Outcome::Found: return "found";
    case StabilizerSearch::Outcome::ProvenNone: return "proven_none";
    case StabilizerSearch::Outcome::BudgetExceeded: return "budget_exceeded";
  }
  return "?";
}

std::string to_string(Family f) {
  switch (f) {
    case Family::DihedralOddS: return "dihedral_odd_s";
    case Family::PQ: return "pq";
    case Family::ZGroup: return "z_group";
  }
  return "?";
}

StabilizerSearch find_trivial_stabilizer_alpha(const FiniteGroup& G, const PermRep& rep, int n, std::uint64_t budget) {
  StabilizerSearch out;
  if (n < 1) throw std::invalid_argument("alphabet size n must be >= 1");
  if (rep.kind() == RepKind::Regular && rep.degree() == G.order() && n >= 2 && G.order() > 1) {
    MultiIndex alpha{std::vector<int>(rep.degree(), 1), n};
    alpha.entries[0] = 2;
    out.outcome = StabilizerSearch::Outcome::Found;
    out.alpha = alpha;
    out.fast_path = true;
    return out;
  }
  std::optional<IndexSpace> space;
  try {
    space.emplace(rep.degree(), n, budget);
  } catch (const BudgetError&) {
    out.outcome = StabilizerSearch::Outcome::BudgetExceeded;
    return out;
  }
  for (std::uint64_t code = 0; code < space->size(); ++code) {
    const MultiIndex alpha = space->decode(code);
    bool trivial = true;
    for (Elem g = 1; g < G.order() && trivial; ++g)
      if (fixes(rep(g), alpha.entries)) trivial = false;
    if (trivial) {
      out.outcome = StabilizerSearch::Outcome::Found;
      out.alpha = alpha;
      return out;
    }
  }
  out.outcome = StabilizerSearch::Outcome::ProvenNone;
  return out;
}

Verdict decide_main_theorem(const SemidirectGroup& G, const PermRep& rep, const CharacterTable& table,
                            std::size_t chi_index, int n, const DecideOptions& opts) {
  if (!table.validated()) throw ConsistencyError("character table failed validation; refusing to decide");
  const IrredChar& chi = table[chi_index];
  Verdict v;
  v.char_index = chi_index;
  v.justification = chi.is_linear() ? Justification::LinearCharacter : Justification::MainTheorem;
  if (dim_symmetry_class(G.group(), rep, chi, n) == 0) {
    v.status = Status::Inconclusive;
    v.zero_dimension = true;
    v.notes.push_back("dim V_chi(G) = 0 for n = " + std::to_string(n) + "; no basis question to decide");
    return v;
  }
  if (chi.is_linear()) {
    v.status = Status::Admits;
    v.notes.push_back("linear character: {e*_alpha : alpha in Delta-bar} is an orthogonal basis");
    return v;
  }

  v.stabilizer_search = find_trivial_stabilizer_alpha(G.group(), rep, n, opts.index_budget);
  v.semigroup = semigroup_fact(G);
  const auto& search = *v.stabilizer_search;
  const auto& fact = *v.semigroup;
  if (search.outcome == StabilizerSearch::Outcome::ProvenNone)
    v.notes.push_back("hypothesis failed: no alpha in Gamma_{m,n} has trivial stabilizer (exhaustive scan)");
  else if (search.outcome == StabilizerSearch::Outcome::BudgetExceeded)
    v.notes.push_back("hypothesis undetermined: trivial-stabilizer search exceeded the index budget");
  if (fact.member)
    v.notes.push_back("hypothesis failed: |H| = " + std::to_string(fact.k) + " lies in N0<" +
                      primes_string(fact.primes) + ">");
  if (search.outcome != StabilizerSearch::Outcome::Found || fact.member) {
    v.status = Status::Inconclusive;
    return v;
  }

  // With G_alpha = {e}: s_alpha = chi(e)^2 = (|H|/|H_x|)^2.
  Orbit orbit{*search.alpha, G.order(), ElemSet{0}};
  const long s_alpha = annotate_orbit(orbit, chi).s_alpha;
  const long ratio = static_cast<long>(G.H().order() / chi.stabilizer.size());
  if (s_alpha != ratio * ratio)
    throw ConsistencyError("s_alpha = " + std::to_string(s_alpha) + " at a trivial-stabilizer alpha differs from (|H|/|H_x|)^2 = " +
                           std::to_string(ratio * ratio));
  v.witness_s_alpha = s_alpha;
  v.status = Status::NotAdmits;
  v.justification = G.origin() == GroupOrigin::Wreath ? Justification::WreathCorollary : Justification::MainTheorem;
  return v;
}

SemidirectGroup build_family(const FamilyParams& params) {
  switch (params.family) {
    case Family::DihedralOddS: return dihedral(params.s);
    case Family::PQ: return group_pq(params.p, params.q, params.r);
    case Family::ZGroup: return z_group(params.s, params.t, params.r);
  }
  throw std::invalid_argument("unknown family");
}

std::vector<Verdict> decide_named_family(const FamilyParams& params, bool use_regular, int n,
                                         std::optional<std::size_t> m, const DecideOptions& opts) {
  const SemidirectGroup G = build_family(params);
  std::vector<std::string> rep_notes;
  const PermRep rep = pick_rep(G, use_regular, m, rep_notes);
  const CharacterTable table(G);
  std::vector<Verdict> out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    Verdict v = decide_main_theorem(G, rep, table, i, n, opts);
    v.notes.insert(v.notes.begin(), rep_notes.begin(), rep_notes.end());
    if (v.status == Status::NotAdmits) v.justification = Justification::NamedFamilyCorollary;
    if (v.status == Status::Inconclusive && !v.zero_dimension)
      v.notes.push_back("corollary for family " + to_string(params.family) +
                        " not applied: its hypotheses did not re-verify");
    out.push_back(std::move(v));
  }
  return out;
}

Verdict decide_subgroup_criterion(const FiniteGroup& G, const PermRep& rep, const Character& chi, int n,
                                  const DecideOptions& opts) {
  Verdict v;
  v.justification = Justification::SubgroupCriterion;
  v.status = Status::Inconclusive;
  const std::size_t bound = chi.degree * chi.degree;
  if (bound <= 1) {
    v.notes.push_back("linear character: no subgroup has index < chi(e)^2 = 1");
    return v;
  }
  v.stabilizer_search = find_trivial_stabilizer_alpha(G, rep, n, opts.index_budget);
  if (v.stabilizer_search->outcome != StabilizerSearch::Outcome::Found) {
    v.notes.push_back("subgroup criterion needs alpha with trivial stabilizer; search outcome: " +
                      to_string(v.stabilizer_search->outcome));
    return v;
  }
  std::vector<ElemSet> subgroups;
  try {
    subgroups = enumerate_subgroups(G, opts.subgroup_bound);
  } catch (const BudgetError& e) {
    v.notes.push_back(e.what());
    return v;
  }
  const ElemSet zeros = zero_set(chi);
  // Largest subgroups first: the smallest index is the strongest witness.
  for (auto it = subgroups.rbegin(); it != subgroups.rend(); ++it) {
    const std::size_t index = G.order() / it->size();
    if (index >= bound) break;
    bool disjoint = true;
    for (Elem g : *it)
      if (std::binary_search(zeros.begin(), zeros.end(), g)) disjoint = false;
    if (!disjoint) continue;
    // Among subgroups of equal order prefer the lexicographically smallest.
    auto best = it;
    for (auto jt = std::next(it); jt != subgroups.rend() && jt->size() == it->size(); ++jt) {
      bool ok = true;
      for (Elem g : *jt)
        if (std::binary_search(zeros.begin(), zeros.end(), g)) ok = false;
      if (ok && *jt < *best) best = jt;
    }
    v.subgroup = SubgroupWitness{*best, G.order() / best->size()};
    v.status = Status::NotAdmits;
    return v;
  }
  v.notes.push_back("no subgroup avoiding Z_chi has index < chi(e)^2 = " + std::to_string(bound));
  return v;
}

std::optional<std::vector<std::size_t>> find_clique(const std::vector<std::vector<char>>& adj, std::size_t size) {
  if (size == 0) return std::vector<std::size_t>{};
  std::vector<std::size_t> clique;
  bool done = false;
  extend_clique(adj, clique, degree_order(adj), size, done);
  if (!done) return std::nullopt;
  return clique;
}

std::size_t max_clique_size(const std::vector<std::vector<char>>& adj) {
  std::size_t best = 0;
  grow_max(adj, 0, degree_order(adj), best);
  return best;
}

OrthogonalityGraph orthogonality_graph(const FiniteGroup& G, const ElemSet& stab, const Character& chi) {
  OrthogonalityGraph graph;
  const auto f = stabilizer_sums(G, stab, chi);
  std::vector<char> orthogonal(G.order());
  for (Elem g = 0; g < G.order(); ++g) orthogonal[g] = f[g].is_zero() ? 1 : 0;
  graph.coset_reps = right_coset_reps(G, stab);
  const std::size_t k = graph.coset_reps.size();
  graph.adj.assign(k, std::vector<char>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    const Elem inv_i = G.inv(graph.coset_reps[i]);
    for (std::size_t j = 0; j < k; ++j)
      if (i != j) graph.adj[i][j] = orthogonal[G.mul(graph.coset_reps[j], inv_i)];
  }
  return graph;
}

Verdict brute_force_verify(const FiniteGroup& G, const PermRep& rep, const Character& chi, int n,
                           const DecideOptions& opts) {
  Verdict v;
  v.justification = Justification::BruteForce;
  v.status = Status::Inconclusive;
  std::vector<Orbit> orbits;
  try {
    ScanOptions scan;
    scan.index_budget = opts.index_budget;
    scan.threads = opts.threads;
    orbits = enumerate_orbits(G, rep, n, scan);
  } catch (const BudgetError& e) {
    v.notes.push_back(e.what());
    return v;
  }

  std::vector<OrbitRecord> delta_bar;
  for (const auto& orbit : orbits) {
    OrbitRecord rec = annotate_orbit(orbit, chi);
    if (rec.in_delta_bar) delta_bar.push_back(std::move(rec));
  }
  if (delta_bar.empty()) {
    v.zero_dimension = true;
    v.notes.push_back("dim V_chi(G) = 0 for n = " + std::to_string(n) + "; no basis question to decide");
    return v;
  }

  // The orthogonality graph depends only on (G_alpha, chi), so each distinct
  // stabilizer is searched once.
  std::map<ElemSet, std::size_t> slot_of;
  std::vector<const OrbitRecord*> jobs;
  for (const auto& rec : delta_bar)
    if (slot_of.emplace(rec.stabilizer, jobs.size()).second) jobs.push_back(&rec);
  std::vector<std::optional<std::vector<Elem>>> results(jobs.size());
  auto solve = [&](std::size_t i) {
    const OrbitRecord& rec = *jobs[i];
    const OrthogonalityGraph graph = orthogonality_graph(G, rec.stabilizer, chi);
    auto clique = find_clique(graph.adj, static_cast<std::size_t>(rec.s_alpha));
    if (!clique) return;
    std::vector<Elem> elems;
    for (std::size_t c : *clique) elems.push_back(graph.coset_reps[c]);
    std::sort(elems.begin(), elems.end());
    results[i] = std::move(elems);
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(jobs.size())));
  if (threads == 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) solve(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t)
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) solve(i);
      });
  }

  v.status = Status::Admits;
  for (const auto& rec : delta_bar) {
    const auto& clique = results[slot_of.at(rec.stabilizer)];
    v.per_orbit.push_back(OrbitClique{rec.rep, rec.s_alpha, clique});
    if (!clique && v.status == Status::Admits) {
      v.status = Status::NotAdmits;
      v.failing_orbit = rec.rep;
    }
  }
  return v;
}

Verdict decide(const SemidirectGroup& G, const PermRep& rep, const CharacterTable& table, std::size_t chi_index, int n,
               const DecideOptions& opts) {
  Verdict main = decide_main_theorem(G, rep, table, chi_index, n, opts);
  if (main.status != Status::Inconclusive || main.zero_dimension) return main;

  Verdict sub = decide_subgroup_criterion(G.group(), rep, table[chi_index], n, opts);
  sub.char_index = chi_index;
  if (sub.status != Status::Inconclusive) {
    sub.notes.insert(sub.notes.begin(), main.notes.begin(), main.notes.end());
    sub.semigroup = main.semigroup;
    return sub;
  }
  main.notes.insert(main.notes.end(), sub.notes.begin(), sub.notes.end());
  if (opts.brute_force) {
    Verdict brute = brute_force_verify(G.group(), rep, table[chi_index], n, opts);
    brute.char_index = chi_index;
    brute.notes.insert(brute.notes.begin(), main.notes.begin(), main.notes.end());
    brute.stabilizer_search = main.stabilizer_search;
    brute.semigroup = main.semigroup;
    return brute;
  }
  return main;
}

}  // namespace ostar
