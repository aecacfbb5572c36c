// One PASS/FAIL line per acceptance criterion. Expected values come from
// oracles in tests/unit/oracles.hpp or from direct recomputation here.

#define DOCTEST_CONFIG_DISABLE

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "ostar/decide.hpp"
#include "ostar/job.hpp"
#include "ostar/linalg.hpp"
#include "ostar/semigroup.hpp"

using namespace ostar;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << "first failure: " << what << "; ";
    ok = ok && cond;
  }
};

struct Named {
  std::string name;
  SemidirectGroup G;
};

std::vector<Named> table_suite() {
  std::vector<Named> out;
  for (int s = 3; s <= 9; ++s) out.push_back({"D" + std::to_string(2 * s), dihedral(s)});
  out.push_back({"C7:C3", group_pq(3, 7, 2)});
  out.push_back({"C11:C5", group_pq(5, 11, 3)});
  out.push_back({"C5:C4", z_group(5, 4, 2)});
  out.push_back({"C2wrC2", build_wreath(WreathSpec::regular(AbelianGroup({2}), AbelianGroup({2})))});
  out.push_back({"C3wrC2", build_wreath(WreathSpec::regular(AbelianGroup({3}), AbelianGroup({2})))});
  return out;
}

std::vector<std::uint64_t> primes_by_trial_division(std::uint64_t N) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= N; ++p)
    if (N % p == 0) {
      out.push_back(p);
      while (N % p == 0) N /= p;
    }
  if (N > 1) out.push_back(N);
  return out;
}

Outcome criterion1() {
  Outcome r;
  const auto start = std::chrono::steady_clock::now();
  for (int s : {3, 5, 7}) {
    const SemidirectGroup G = dihedral(s);
    const PermRep& rep = *G.natural_rep();
    const CharacterTable table(G);
    r.require(table.validated(), "table D" + std::to_string(2 * s));
    std::size_t nonlinear = 0;
    for (std::size_t i = 0; i < table.size(); ++i) {
      const Verdict v = decide_main_theorem(G, rep, table, i, 3);
      const std::string tag = "D" + std::to_string(2 * s) + " " + table[i].label;
      if (table[i].is_linear()) {
        r.require(v.status == Status::Admits, tag + " linear should admit");
      } else {
        ++nonlinear;
        r.require(v.status == Status::NotAdmits && v.justification == Justification::MainTheorem,
                  tag + " nonlinear should be NotAdmits by the main theorem");
      }
      if (s <= 5) {
        const Verdict b = brute_force_verify(G.group(), rep, table[i], 3);
        r.require(b.status == v.status, tag + " brute force disagrees");
      }
    }
    r.detail << "D" << 2 * s << ": " << nonlinear << " nonlinear NotAdmits; ";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.require(secs < 120.0, "runtime over 2 minutes");
  r.detail << "brute force agrees for s = 3, 5; " << secs << " s";
  return r;
}

Outcome criterion2() {
  Outcome r;
  const auto start = std::chrono::steady_clock::now();
  const SemidirectGroup G = group_pq(3, 7, 2);
  const PermRep& rep = *G.natural_rep();
  const CharacterTable table(G);
  int linear = 0, degree3 = 0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const Verdict v = decide_main_theorem(G, rep, table, i, 3);
    if (table[i].is_linear()) {
      ++linear;
      r.require(v.status == Status::Admits, table[i].label + " linear should admit");
      continue;
    }
    ++degree3;
    r.require(table[i].degree == 3, "nonlinear degree should be 3");
    r.require(v.status == Status::NotAdmits && v.justification == Justification::MainTheorem, table[i].label);
    r.require(v.stabilizer_search && v.stabilizer_search->alpha.has_value(), "witness alpha missing");
    if (v.stabilizer_search && v.stabilizer_search->alpha)
      r.require(stabilizer(*v.stabilizer_search->alpha, G.group(), rep).size() == 1, "witness stabilizer not trivial");
    r.require(v.semigroup && !v.semigroup->member && v.semigroup->k == 3, "semigroup fact");
    r.require(!oracle::semigroup_member(3, {7}), "oracle: 3 in N0<7>");
  }
  r.require(linear == 3 && degree3 == 2, "character counts");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.require(secs < 120.0, "runtime over 2 minutes");
  r.detail << linear << " linear Admits, " << degree3 << " degree-3 NotAdmits; " << secs << " s";
  return r;
}

Outcome criterion3() {
  Outcome r;
  std::size_t groups = 0;
  for (const auto& [name, G] : table_suite()) {
    const CharacterTable table(G);
    const auto& classes = G.group().classes();
    std::size_t sum = 0;
    for (const auto& chi : table.chars()) sum += chi.degree * chi.degree;
    r.require(sum == G.order(), name + " degree sum");
    r.require(table.size() == classes.size(), name + " class count");
    for (std::size_t i = 0; i < table.size(); ++i)
      for (std::size_t j = 0; j < table.size(); ++j) {
        CycloNum acc;
        for (Elem g = 0; g < G.order(); ++g) acc += table[i](g) * table[j](g).conj();
        r.require(acc == CycloNum(static_cast<long>(i == j ? G.order() : 0)), name + " first orthogonality");
      }
    r.require(table.validated(), name + " validation report");
    ++groups;
  }
  r.detail << groups << " groups, exact";
  return r;
}

Outcome criterion4() {
  Outcome r;
  std::size_t checked = 0;
  for (const auto& [name, G] : table_suite()) {
    if (!G.natural_rep() || G.natural_rep()->degree() > 7) continue;
    const PermRep& rep = *G.natural_rep();
    const CharacterTable table(G);
    for (int n : {2, 3}) {
      const auto orbits = enumerate_orbits(G.group(), rep, n);
      for (const auto& chi : table.chars()) {
        long sum = 0;
        for (const auto& o : orbits) {
          const OrbitRecord rec = annotate_orbit(o, chi);
          if (rec.in_delta_bar) sum += rec.s_alpha;
        }
        const mpz_class dim = dim_symmetry_class(G.group(), rep, chi, n);
        r.require(dim == sum, name + " " + chi.label + " n=" + std::to_string(n));
        r.require(std::abs(oracle::dimension_by_trace(G.group(), rep, chi, n) - dim.get_d()) < 1e-6,
                  name + " trace oracle");
        ++checked;
      }
    }
  }
  r.detail << checked << " (group, n, chi) cases";
  return r;
}

Outcome criterion5() {
  Outcome r;
  std::size_t entries = 0, orbits_checked = 0;
  const std::vector<Named> groups = [] {
    std::vector<Named> g;
    g.push_back({"D6", dihedral(3)});
    g.push_back({"C7:C3", group_pq(3, 7, 2)});
    return g;
  }();
  for (const auto& [name, G] : groups) {
    const PermRep& rep = *G.natural_rep();
    const CharacterTable table(G);
    const unsigned L = table.conductor();
    const mpz_class den = static_cast<unsigned long>(G.order());
    for (int n : {2, 3})
      for (const auto& chi : table.chars()) {
        std::map<ElemSet, std::size_t> rank_by_stabilizer;
        for (const auto& rec : orbit_scan(G.group(), rep, chi, n)) {
          if (!rec.in_delta_bar) continue;
          const GramMatrix M = gram(rec.rep, chi, G.group(), rep);
          // Explicit tensors in Z[x]/(x^L - 1), scaled by |G|.
          std::vector<std::map<std::uint64_t, oracle::Cyclic>> tensors;
          for (Elem s : M.coset_reps) {
            std::map<std::uint64_t, oracle::Cyclic> t;
            for (const auto& [code, v] : explicit_symmetrized_tensor(act(rec.rep, s, rep), chi, G.group(), rep).coords)
              t.emplace(code, oracle::lift(v, L, den));
            tensors.push_back(std::move(t));
          }
          for (std::size_t i = 0; i < tensors.size(); ++i)
            for (std::size_t j = 0; j < tensors.size(); ++j) {
              oracle::Cyclic acc(L);
              for (const auto& [code, u] : tensors[i]) {
                auto it = tensors[j].find(code);
                if (it != tensors[j].end()) acc += u * it->second.conj();
              }
              r.require(M.entries[i][j] == oracle::lower(acc, den * den), name + " Gram entry at " + rec.rep.to_string());
              ++entries;
            }
          auto it = rank_by_stabilizer.find(rec.stabilizer);
          if (it == rank_by_stabilizer.end()) it = rank_by_stabilizer.emplace(rec.stabilizer, exact_rank(M.entries)).first;
          r.require(it->second == static_cast<std::size_t>(rec.s_alpha), name + " rank vs s_alpha");
          ++orbits_checked;
        }
      }
  }
  r.detail << entries << " Gram entries over " << orbits_checked << " Delta-bar orbits";
  return r;
}

Outcome criterion6() {
  Outcome r;
  std::size_t checked = 0;
  std::vector<Named> groups;
  for (int s : {3, 5, 7}) groups.push_back({"D" + std::to_string(2 * s), dihedral(s)});
  groups.push_back({"C7:C3", group_pq(3, 7, 2)});
  for (const auto& [name, G] : groups) {
    const PermRep& rep = *G.natural_rep();
    const CharacterTable table(G);
    const auto orbits = enumerate_orbits(G.group(), rep, 3);
    for (const auto& chi : table.chars()) {
      const long index = static_cast<long>(G.H().order() / chi.stabilizer.size());
      const long predicted = index * index;
      r.require(static_cast<long>(chi.degree) == index, name + " degree = [H:H_x]");
      for (const auto& o : orbits) {
        if (o.stabilizer.size() != 1) continue;
        r.require(annotate_orbit(o, chi).s_alpha == predicted, name + " " + chi.label + " at " + o.rep.to_string());
        ++checked;
      }
    }
  }
  r.require(checked > 0, "no trivial-stabilizer orbits encountered");
  r.detail << checked << " (orbit, chi) pairs";
  return r;
}

Outcome criterion7() {
  Outcome r;
  std::mt19937_64 rng(20240611);
  std::size_t zeros = 0, samples = 0;
  for (unsigned N = 1; N <= 24; ++N) {
    const auto primes = primes_by_trial_division(N);
    std::uniform_int_distribution<unsigned> exponent(0, N - 1);
    std::uniform_int_distribution<int> size_dist(1, 3 * static_cast<int>(N));
    for (int t = 0; t < 10000; ++t) {
      std::vector<long long> counts(N, 0);
      const int size = size_dist(rng);
      for (int i = 0; i < size; ++i) ++counts[exponent(rng)];
      ++samples;
      if (!CycloNum::from_exponent_counts(N, counts).is_zero()) continue;
      ++zeros;
      r.require(oracle::semigroup_member(static_cast<std::uint64_t>(size), primes),
                "N=" + std::to_string(N) + " size " + std::to_string(size) + " vanishes");
      r.require(!lam_leung_certifies_nonzero(static_cast<std::uint64_t>(size), N), "library certifies a vanishing sum");
    }
  }
  r.detail << samples << " multisets, " << zeros << " vanishing, 0 violations required";
  return r;
}

Outcome criterion8() {
  Outcome r;
  const SemidirectGroup G = dihedral(3);
  const PermRep& rep = *G.natural_rep();
  const CharacterTable table(G);
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i].degree != 2) continue;
    const Verdict v = decide_subgroup_criterion(G.group(), rep, table[i], 3);
    r.require(v.status == Status::NotAdmits && v.justification == Justification::SubgroupCriterion, "status");
    r.require(v.subgroup.has_value(), "witness subgroup");
    if (!v.subgroup) continue;
    r.require(v.subgroup->subgroup.size() == 3 && v.subgroup->index == 2 && v.subgroup->index < 4, "order 3, index 2");
    for (Elem g : v.subgroup->subgroup) r.require(!table[i](g).is_zero(), "witness meets Z_chi");
    const Verdict main = decide_main_theorem(G, rep, table, i, 3);
    r.require(main.status == v.status, "disagrees with criterion 1");
    r.detail << "K of order 3, index 2 < 4";
  }
  return r;
}

Outcome criterion9() {
  Outcome r;
  const SemidirectGroup G = dihedral(3);
  const PermRep& rep = *G.natural_rep();
  const CharacterTable table(G);
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i].degree != 2) continue;
    const Verdict m = decide_main_theorem(G, rep, table, i, 2);
    r.require(m.status == Status::Inconclusive, "main theorem should be inconclusive");
    r.require(m.stabilizer_search && m.stabilizer_search->outcome == StabilizerSearch::Outcome::ProvenNone,
              "exhaustive proof of no trivial stabilizer");
    const Verdict b = brute_force_verify(G.group(), rep, table[i], 2);
    r.require(b.status == Status::NotAdmits && b.justification == Justification::BruteForce, "brute force NotAdmits");
  }
  const Json report =
      run_job(parse_config(R"({"family":{"dihedral":{"s":3}},"n":2,"tasks":["decide","verify"]})"));
  bool distinguished = false;
  for (const auto& v : report.at("verify"))
    if (v.at("brute_force").at("status") == "NotAdmits")
      distinguished = v.at("decision") == "Inconclusive" && v.at("brute_force").at("justification") == "BruteForce";
  r.require(distinguished, "report does not separate the two justifications");
  r.detail << "main theorem Inconclusive (proven none), brute force NotAdmits";
  return r;
}

Outcome criterion10() {
  Outcome r;
  std::size_t bytes = 0;
  for (int s : {3, 5, 7}) {
    const std::string tasks = s <= 5 ? R"(["decide","verify"])" : R"(["decide"])";
    const std::string base = R"({"family":{"dihedral":{"s":)" + std::to_string(s) +
                             R"(}},"rep":"natural","n":3,"tasks":)" + tasks + R"(,"threads":)";
    const std::string one = run_job(parse_config(base + "1}")).dump(2);
    const std::string four = run_job(parse_config(base + "4}")).dump(2);
    r.require(one == four, "D" + std::to_string(2 * s) + " reports differ");
    bytes += one.size();
  }
  r.detail << "3 reports, " << bytes << " bytes, identical at 1 and 4 threads";
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"dihedral family verdicts", criterion1},
      {"order-21 pq family verdicts", criterion2},
      {"character table validity", criterion3},
      {"dimension equals orbital sum", criterion4},
      {"Gram matrix oracle equivalence", criterion5},
      {"trivial-stabilizer s_alpha", criterion6},
      {"vanishing sums soundness", criterion7},
      {"subgroup criterion on D6", criterion8},
      {"negative control n = 2", criterion9},
      {"determinism across threads", criterion10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << "exception: " << e.what();
    }
    failures += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << i + 1 << ". " << criteria[i].first << " (" << o.detail.str()
              << ")" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
