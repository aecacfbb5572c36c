#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ostar/errors.hpp"
#include "ostar/linalg.hpp"
#include "ostar/symclass.hpp"

using namespace ostar;

namespace {

Elem element_with_perm(const FiniteGroup& G, const PermRep& rep, const Perm& p) {
  for (Elem g = 0; g < G.order(); ++g)
    if (rep(g) == p) return g;
  FAIL("no element with the requested permutation");
  return 0;
}

const IrredChar& char_of_degree(const CharacterTable& t, std::size_t d, std::size_t skip = 0) {
  for (const auto& c : t.chars())
    if (c.degree == d && skip-- == 0) return c;
  throw std::logic_error("no such character");
}

// The sign character of S_3 = D_6 under its natural rep.
const IrredChar& sign_char(const CharacterTable& t, const SemidirectGroup& D6) {
  for (const auto& c : t.chars())
    if (c.is_linear() && c(D6.encode(0, 1)) == CycloNum(-1L)) return c;
  throw std::logic_error("no sign character");
}

MultiIndex mi(std::vector<int> e, int n) { return MultiIndex{std::move(e), n}; }

}  // namespace

TEST_SUITE("symclass") {

TEST_CASE("index space encoding is lexicographic") {
  IndexSpace space(3, 2);
  CHECK(space.size() == 8);
  CHECK(space.decode(0) == mi({1, 1, 1}, 2));
  CHECK(space.decode(1) == mi({1, 1, 2}, 2));
  CHECK(space.decode(7) == mi({2, 2, 2}, 2));
  for (std::uint64_t c = 0; c + 1 < space.size(); ++c) CHECK(space.decode(c) < space.decode(c + 1));
  CHECK_THROWS_AS(IndexSpace(30, 3), BudgetError);
  CHECK_THROWS_AS(IndexSpace(4, 3, 80), BudgetError);
}

TEST_CASE("act examples") {
  auto D6 = dihedral(3);
  const auto& rep = *D6.natural_rep();
  for (Elem g = 0; g < 6; ++g) CHECK(act(mi({2, 2, 2}, 2), g, rep) == mi({2, 2, 2}, 2));
  CHECK(act(mi({1, 2, 1}, 2), Perm{1, 2, 0}) == mi({1, 1, 2}, 2));
  CHECK(act(mi({1, 2, 1}, 2), 0, rep) == mi({1, 2, 1}, 2));
  CHECK_THROWS_AS(act(mi({1, 2}, 2), Perm{1, 2, 0}), std::invalid_argument);
}

TEST_CASE("right action law") {
  std::mt19937 rng(9);
  auto G = group_pq(3, 7, 2);
  const auto& rep = *G.natural_rep();
  std::uniform_int_distribution<Elem> pick(0, 20);
  std::uniform_int_distribution<int> letter(1, 3);
  for (int t = 0; t < 200; ++t) {
    MultiIndex a{std::vector<int>(7), 3};
    for (auto& e : a.entries) e = letter(rng);
    const Elem g = pick(rng), h = pick(rng);
    CHECK(act(act(a, g, rep), h, rep) == act(a, G.group().mul(g, h), rep));
  }
}

TEST_CASE("cycle counts") {
  FiniteGroup trivial(1, [](Elem, Elem) { return Elem{0}; });
  CHECK(cycle_count(0, PermRep::regular(trivial).padded(5)) == 5);
  auto D6 = dihedral(3);
  const auto& rep = *D6.natural_rep();
  CHECK(cycle_count(D6.encode(1, 0), rep) == 1);
  CHECK(cycle_count(D6.encode(0, 1), rep) == 2);
}

TEST_CASE("orbit scan examples") {
  FiniteGroup trivial(1, [](Elem, Elem) { return Elem{0}; });
  CHECK(enumerate_orbits(trivial, PermRep::regular(trivial).padded(3), 2).size() == 8);

  auto D6 = dihedral(3);
  const auto& rep = *D6.natural_rep();
  auto orbits = enumerate_orbits(D6.group(), rep, 2);
  REQUIRE(orbits.size() == 4);
  CHECK(orbits[0].rep == mi({1, 1, 1}, 2));
  CHECK(orbits[1].rep == mi({1, 1, 2}, 2));
  CHECK(orbits[2].rep == mi({1, 2, 2}, 2));
  CHECK(orbits[3].rep == mi({2, 2, 2}, 2));

  CharacterTable t(D6);
  const auto& two = char_of_degree(t, 2);
  auto records = orbit_scan(D6.group(), rep, two, 2);
  REQUIRE(records.size() == 4);
  CHECK(records[0].stab_char_sum.is_zero());
  CHECK_FALSE(records[0].in_delta_bar);
  CHECK(records[1].in_delta_bar);
  CHECK(records[1].s_alpha == 2);
  CHECK(records[2].in_delta_bar);
  CHECK(records[2].s_alpha == 2);
  CHECK_FALSE(records[3].in_delta_bar);
}

TEST_CASE("orbit scan partitions Gamma and does not depend on threads") {
  auto G = group_pq(3, 7, 2);
  const auto& rep = *G.natural_rep();
  auto seq = enumerate_orbits(G.group(), rep, 3);
  std::uint64_t total = 0;
  for (const auto& o : seq) {
    total += o.size;
    CHECK(o.size * o.stabilizer.size() == G.order());
    CHECK(o.stabilizer == stabilizer(o.rep, G.group(), rep));
    // Lex-min: no image is smaller.
    for (Elem g = 0; g < G.order(); ++g) CHECK_FALSE(act(o.rep, g, rep) < o.rep);
  }
  CHECK(total == 2187);
  for (unsigned k : {2u, 4u, 7u}) {
    ScanOptions opts;
    opts.threads = k;
    auto par = enumerate_orbits(G.group(), rep, 3, opts);
    REQUIRE(par.size() == seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
      CHECK(par[i].rep == seq[i].rep);
      CHECK(par[i].size == seq[i].size);
      CHECK(par[i].stabilizer == seq[i].stabilizer);
    }
  }
  ScanOptions tight;
  tight.index_budget = 1000;
  CHECK_THROWS_AS(enumerate_orbits(G.group(), rep, 3, tight), BudgetError);
}

TEST_CASE("dimension examples") {
  auto D6 = dihedral(3);
  const auto& rep = *D6.natural_rep();
  CharacterTable t(D6);
  CHECK(dim_symmetry_class(D6.group(), rep, char_of_degree(t, 2), 2) == 4);
  CHECK(dim_symmetry_class(D6.group(), rep, sign_char(t, D6), 2) == 0);
  // D_6 is all of S_3, so the trivial character gives Sym^3.
  for (const auto& c : t.chars())
    if (c.is_linear() && !(c(D6.encode(0, 1)) == CycloNum(-1L))) {
      CHECK(dim_symmetry_class(D6.group(), rep, c, 2) == 4);
      CHECK(dim_symmetry_class(D6.group(), rep, c, 4) == 20);
    }
  // Sign character of S_3 gives Lambda^3: C(n, 3).
  CHECK(dim_symmetry_class(D6.group(), rep, sign_char(t, D6), 5) == 10);
}

TEST_CASE("dimension formula vs trace oracle and orbital sums") {
  std::vector<SemidirectGroup> gs;
  gs.push_back(dihedral(3));
  gs.push_back(dihedral(4));
  gs.push_back(dihedral(5));
  gs.push_back(group_pq(3, 7, 2));
  gs.push_back(build_wreath(WreathSpec::regular(AbelianGroup({2}), AbelianGroup({2}))));
  for (const auto& G : gs) {
    const auto& rep = *G.natural_rep();
    CharacterTable t(G);
    for (int n : {1, 2, 3}) {
      mpz_class total = 0;
      for (const auto& chi : t.chars()) {
        const mpz_class dim = dim_symmetry_class(G.group(), rep, chi, n);
        CHECK(std::abs(oracle::dimension_by_trace(G.group(), rep, chi, n) - dim.get_d()) < 1e-6L);
        long sum = 0;
        for (const auto& r : orbit_scan(G.group(), rep, chi, n)) {
          CHECK(r.in_delta_bar == !r.stab_char_sum.is_zero());
          CHECK(r.s_alpha >= 0);
          if (chi.is_linear()) CHECK(r.s_alpha <= 1);
          sum += r.s_alpha;
        }
        CHECK(dim == sum);
        total += dim;
      }
      // The symmetry classes decompose the full tensor power.
      mpz_class nm;
      mpz_ui_pow_ui(nm.get_mpz_t(), n, rep.degree());
      CHECK(total == nm);
    }
  }
}

TEST_CASE("inner product examples") {
  auto D6 = dihedral(3);
  const auto& rep = *D6.natural_rep();
  CharacterTable t(D6);
  const auto& two = char_of_degree(t, 2);
  const MultiIndex a = mi({1, 1, 2}, 2);
  const Elem s13 = element_with_perm(D6.group(), rep, Perm{2, 1, 0});
  CHECK(inner_product(a, s13, two, D6.group(), rep) == CycloNum(mpq_class(-1, 3)));
  CHECK_FALSE(inner_product(a, 0, two, D6.group(), rep).is_zero());
  CHECK(inner_product(mi({1, 1, 1}, 2), 0, two, D6.group(), rep).is_zero());
  // Different orbits are orthogonal.
  CHECK(inner_product(a, mi({1, 2, 2}, 2), two, D6.group(), rep).is_zero());
  CHECK(inner_product(a, act(a, s13, rep), two, D6.group(), rep) == CycloNum(mpq_class(-1, 3)));
}

TEST_CASE("gram matrix examples") {
  auto D6 = dihedral(3);
  const auto& rep = *D6.natural_rep();
  CharacterTable t(D6);
  const auto& two = char_of_degree(t, 2);
  auto M = gram(mi({1, 1, 2}, 2), two, D6.group(), rep);
  REQUIRE(M.entries.size() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(M.entries[i][j] == CycloNum(i == j ? mpq_class(2, 3) : mpq_class(-1, 3)));
  CHECK(exact_rank(M.entries) == 2);
  CHECK(is_hermitian(M.entries));
  CHECK_THROWS_AS(gram(mi({1, 1, 1}, 2), two, D6.group(), rep), std::invalid_argument);

  // Linear character: rank 1 however many cosets.
  for (const auto& c : t.chars()) {
    if (!c.is_linear()) continue;
    for (const auto& r : orbit_scan(D6.group(), rep, c, 3))
      if (r.in_delta_bar) CHECK(exact_rank(gram(r.rep, c, D6.group(), rep).entries) == 1);
  }

  // Trivial stabilizer: |G| cosets and rank chi(e)^2.
  auto M123 = gram(mi({1, 2, 3}, 3), two, D6.group(), rep);
  CHECK(M123.entries.size() == 6);
  CHECK(exact_rank(M123.entries) == 4);
}

TEST_CASE("gram entries equal explicit tensor inner products") {
  std::vector<SemidirectGroup> gs;
  gs.push_back(dihedral(3));
  gs.push_back(dihedral(4));
  gs.push_back(build_wreath(WreathSpec::regular(AbelianGroup({2}), AbelianGroup({2}))));
  for (const auto& G : gs) {
    const auto& rep = *G.natural_rep();
    CharacterTable t(G);
    for (const auto& chi : t.chars())
      for (int n : {2, 3})
        for (const auto& r : orbit_scan(G.group(), rep, chi, n)) {
          if (!r.in_delta_bar) {
            CHECK(explicit_symmetrized_tensor(r.rep, chi, G.group(), rep).coords.empty());
            continue;
          }
          const auto M = gram(r.rep, chi, G.group(), rep);
          CHECK(is_hermitian(M.entries));
          std::vector<SparseTensor> tensors;
          for (Elem s : M.coset_reps) tensors.push_back(explicit_symmetrized_tensor(act(r.rep, s, rep), chi, G.group(), rep));
          for (std::size_t i = 0; i < tensors.size(); ++i) {
            CHECK(M.entries[i][i] == M.entries[0][0]);
            for (std::size_t j = 0; j < tensors.size(); ++j)
              CHECK(M.entries[i][j] == tensor_inner_product(tensors[i], tensors[j]));
          }
          CHECK(exact_rank(M.entries) == static_cast<std::size_t>(r.s_alpha));
        }
  }
}

TEST_CASE("explicit tensor examples") {
  // S_2 acting on two positions through C_2 = D-style semidirect with trivial A.
  auto S2 = build_semidirect(AbelianGroup({1}), AbelianGroup({2}), ActionHom::trivial(AbelianGroup({1}), AbelianGroup({2})));
  auto rep = S2.make_rep({Perm{0, 1}}, {Perm{1, 0}}, RepKind::Explicit);
  CharacterTable t(S2);
  const IrredChar* triv = nullptr;
  for (const auto& c : t.chars())
    if (c(1) == CycloNum(1L)) triv = &c;
  REQUIRE(triv);
  auto e = explicit_symmetrized_tensor(mi({1, 2}, 2), *triv, S2.group(), rep);
  REQUIRE(e.coords.size() == 2);
  CHECK(e.coords[0].first == 1);  // (1,2)
  CHECK(e.coords[1].first == 2);  // (2,1)
  CHECK(e.coords[0].second == CycloNum(mpq_class(1, 2)));
  CHECK(e.coords[1].second == CycloNum(mpq_class(1, 2)));
}

TEST_CASE("generalized matrix function") {
  auto D6 = dihedral(3);
  const auto& rep = *D6.natural_rep();
  CharacterTable t(D6);
  std::vector<std::vector<CycloNum>> I(3, std::vector<CycloNum>(3)), J(3, std::vector<CycloNum>(3, CycloNum(1L)));
  for (int i = 0; i < 3; ++i) I[i][i] = CycloNum(1L);
  for (const auto& c : t.chars()) {
    CHECK(generalized_matrix_function(I, c, D6.group(), rep) == CycloNum(static_cast<long>(c.degree)));
    const bool trivial = c.is_linear() && c(D6.encode(0, 1)) == CycloNum(1L);
    CHECK(generalized_matrix_function(J, c, D6.group(), rep) == CycloNum(trivial ? 6L : 0L));
  }
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> d(-5, 5);
  std::vector<std::vector<CycloNum>> M(3, std::vector<CycloNum>(3));
  for (auto& row : M)
    for (auto& v : row) v = CycloNum(static_cast<long>(d(rng))) + root_of_unity(4, d(rng));
  for (const auto& c : t.chars()) {
    if (!c.is_linear()) continue;
    const bool trivial = c(D6.encode(0, 1)) == CycloNum(1L);
    CHECK(generalized_matrix_function(M, c, D6.group(), rep) == oracle::sum_over_sm(M, !trivial));
  }
  CHECK_THROWS_AS(generalized_matrix_function(I, t[0], D6.group(), rep.padded(4)), std::invalid_argument);
}

}  // TEST_SUITE
