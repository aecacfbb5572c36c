#include "ostar/symclass.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ostar/errors.hpp"
#include "ostar/linalg.hpp"

namespace ostar {

namespace {

mpq_class prefactor(const Character& chi, const FiniteGroup& G) {
  return mpq_class(static_cast<long>(chi.degree), static_cast<long>(G.order()));
}

void check_degree(const MultiIndex& alpha, const PermRep& rep) {
  if (alpha.m() != rep.degree())
    throw std::invalid_argument("multi-index length " + std::to_string(alpha.m()) +
                                " does not match representation degree " + std::to_string(rep.degree()));
}

Orbit orbit_from_rep(const MultiIndex& alpha, const IndexSpace& space, const FiniteGroup& G, const PermRep& rep) {
  Orbit orbit;
  orbit.rep = alpha;
  std::vector<std::uint64_t> images;
  images.reserve(G.order());
  for (Elem g = 0; g < G.order(); ++g) {
    const MultiIndex beta = act(alpha, rep(g));
    if (beta == alpha) orbit.stabilizer.push_back(g);
    images.push_back(space.encode(beta));
  }
  std::sort(images.begin(), images.end());
  orbit.size = static_cast<std::uint64_t>(std::unique(images.begin(), images.end()) - images.begin());
  return orbit;
}

std::vector<Orbit> scan_sequential(const FiniteGroup& G, const PermRep& rep, const IndexSpace& space) {
  std::vector<bool> visited(space.size(), false);
  std::vector<Orbit> out;
  for (std::uint64_t code = 0; code < space.size(); ++code) {
    if (visited[code]) continue;
    const MultiIndex alpha = space.decode(code);
    Orbit orbit;
    orbit.rep = alpha;
    for (Elem g = 0; g < G.order(); ++g) {
      const MultiIndex beta = act(alpha, rep(g));
      const std::uint64_t c = space.encode(beta);
      if (c == code) orbit.stabilizer.push_back(g);
      if (!visited[c]) {
        visited[c] = true;
        ++orbit.size;
      }
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

// Each worker keeps the codes in its block that are the smallest in their
// orbit; concatenating blocks in order reproduces the sequential result.
std::vector<Orbit> scan_parallel(const FiniteGroup& G, const PermRep& rep, const IndexSpace& space,
                                 unsigned threads) {
  const std::uint64_t total = space.size();
  const std::uint64_t block = (total + threads - 1) / threads;
  std::vector<std::vector<Orbit>> parts(threads);
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        const std::uint64_t lo = t * block;
        const std::uint64_t hi = std::min(total, lo + block);
        for (std::uint64_t code = lo; code < hi; ++code) {
          const MultiIndex alpha = space.decode(code);
          bool minimal = true;
          for (Elem g = 1; g < G.order() && minimal; ++g)
            if (space.encode(act(alpha, rep(g))) < code) minimal = false;
          if (minimal) parts[t].push_back(orbit_from_rep(alpha, space, G, rep));
        }
      });
    }
  }
  std::vector<Orbit> out;
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::string MultiIndex::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < entries.size(); ++i) out << (i ? "," : "") << entries[i];
  out << ")";
  return out.str();
}

IndexSpace::IndexSpace(std::size_t m, int n, std::uint64_t budget) : m_(m), n_(n), size_(1) {
  if (n < 1) throw std::invalid_argument("alphabet size n must be >= 1");
  if (m < 1) throw std::invalid_argument("tensor order m must be >= 1");
  for (std::size_t i = 0; i < m; ++i) {
    if (__builtin_mul_overflow(size_, static_cast<std::uint64_t>(n), &size_) || size_ > budget)
      throw BudgetError("|Gamma_{m,n}| = " + std::to_string(n) + "^" + std::to_string(m) + " exceeds index budget " +
                        std::to_string(budget));
  }
}

std::uint64_t IndexSpace::encode(const MultiIndex& alpha) const {
  std::uint64_t code = 0;
  for (int e : alpha.entries) code = code * static_cast<std::uint64_t>(n_) + static_cast<std::uint64_t>(e - 1);
  return code;
}

MultiIndex IndexSpace::decode(std::uint64_t code) const {
  MultiIndex alpha;
  alpha.n = n_;
  alpha.entries.assign(m_, 1);
  for (std::size_t i = m_; i-- > 0;) {
    alpha.entries[i] = static_cast<int>(code % static_cast<std::uint64_t>(n_)) + 1;
    code /= static_cast<std::uint64_t>(n_);
  }
  return alpha;
}

MultiIndex act(const MultiIndex& alpha, const Perm& sigma) {
  if (sigma.size() != alpha.m())
    throw std::invalid_argument("permutation degree " + std::to_string(sigma.size()) + " does not match m = " +
                                std::to_string(alpha.m()));
  MultiIndex out = alpha;
  // (alpha.sigma)_{sigma(j)} = alpha_j
  for (std::size_t j = 0; j < sigma.size(); ++j) out.entries[sigma[j]] = alpha.entries[j];
  return out;
}

MultiIndex act(const MultiIndex& alpha, Elem g, const PermRep& rep) { return act(alpha, rep(g)); }

std::size_t cycle_count(Elem g, const PermRep& rep) {
  const Perm& p = rep(g);
  std::vector<char> seen(p.size(), 0);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = p[j]) seen[j] = 1;
  }
  return cycles;
}

ElemSet stabilizer(const MultiIndex& alpha, const FiniteGroup& G, const PermRep& rep) {
  check_degree(alpha, rep);
  ElemSet out;
  for (Elem g = 0; g < G.order(); ++g)
    if (act(alpha, rep(g)) == alpha) out.push_back(g);
  return out;
}

std::vector<Orbit> enumerate_orbits(const FiniteGroup& G, const PermRep& rep, int n, const ScanOptions& opts) {
  const IndexSpace space(rep.degree(), n, opts.index_budget);
  const unsigned threads = std::max(1u, opts.threads);
  if (threads == 1 || space.size() < 2 * threads) return scan_sequential(G, rep, space);
  return scan_parallel(G, rep, space, threads);
}

OrbitRecord annotate_orbit(const Orbit& orbit, const Character& chi) {
  OrbitRecord rec;
  rec.rep = orbit.rep;
  rec.orbit_size = orbit.size;
  rec.stabilizer = orbit.stabilizer;
  for (Elem h : orbit.stabilizer) rec.stab_char_sum += chi(h);
  rec.in_delta_bar = !rec.stab_char_sum.is_zero();
  const CycloNum s = rec.stab_char_sum * mpq_class(static_cast<long>(chi.degree), static_cast<long>(orbit.stabilizer.size()));
  const auto q = s.as_rational();
  if (!q || q->get_den() != 1 || *q < 0 || !q->get_num().fits_slong_p())
    throw ConsistencyError("orbital dimension at " + orbit.rep.to_string() + " is not a nonnegative integer: " +
                           s.to_string());
  rec.s_alpha = q->get_num().get_si();
  return rec;
}

std::vector<OrbitRecord> orbit_scan(const FiniteGroup& G, const PermRep& rep, const Character& chi, int n,
                                    const ScanOptions& opts) {
  const auto orbits = enumerate_orbits(G, rep, n, opts);
  std::vector<OrbitRecord> out;
  out.reserve(orbits.size());
  std::map<ElemSet, std::size_t> rank_by_stabilizer;
  for (const auto& orbit : orbits) {
    out.push_back(annotate_orbit(orbit, chi));
    const OrbitRecord& rec = out.back();
    if (!opts.verify_rank || !rec.in_delta_bar) continue;
    auto it = rank_by_stabilizer.find(rec.stabilizer);
    if (it == rank_by_stabilizer.end())
      it = rank_by_stabilizer.emplace(rec.stabilizer, exact_rank(gram(rec.rep, chi, G, rep).entries)).first;
    if (static_cast<long>(it->second) != rec.s_alpha)
      throw ConsistencyError("Gram rank " + std::to_string(it->second) + " differs from s_alpha = " +
                             std::to_string(rec.s_alpha) + " at " + rec.rep.to_string());
  }
  return out;
}

mpz_class dim_symmetry_class(const FiniteGroup& G, const PermRep& rep, const Character& chi, int n) {
  if (n < 1) throw std::invalid_argument("alphabet size n must be >= 1");
  CycloNum acc;
  for (Elem g = 0; g < G.order(); ++g) {
    mpz_class weight;
    mpz_ui_pow_ui(weight.get_mpz_t(), static_cast<unsigned long>(n), cycle_count(g, rep));
    acc += chi(g) * mpq_class(weight);
  }
  acc *= prefactor(chi, G);
  const auto q = acc.as_rational();
  if (!q || q->get_den() != 1 || *q < 0)
    throw ConsistencyError("dimension formula gave a non-integral value " + acc.to_string());
  return q->get_num();
}

std::vector<CycloNum> stabilizer_sums(const FiniteGroup& G, const ElemSet& stab, const Character& chi) {
  std::vector<CycloNum> f(G.order());
  for (Elem g = 0; g < G.order(); ++g) {
    CycloNum acc;
    for (Elem h : stab) acc += chi(G.mul(g, h));
    f[g] = std::move(acc);
  }
  return f;
}

CycloNum inner_product(const MultiIndex& alpha, Elem g, const Character& chi, const FiniteGroup& G,
                       const PermRep& rep) {
  const ElemSet stab = stabilizer(alpha, G, rep);
  CycloNum acc;
  for (Elem h : stab) acc += chi(G.mul(g, h));
  return acc * prefactor(chi, G);
}

CycloNum inner_product(const MultiIndex& beta, const MultiIndex& gamma, const Character& chi, const FiniteGroup& G,
                       const PermRep& rep) {
  check_degree(beta, rep);
  check_degree(gamma, rep);
  for (Elem g = 0; g < G.order(); ++g)
    if (act(beta, rep(g)) == gamma) return inner_product(beta, g, chi, G, rep);
  return CycloNum();
}

GramMatrix gram(const MultiIndex& alpha, const Character& chi, const FiniteGroup& G, const PermRep& rep) {
  const ElemSet stab = stabilizer(alpha, G, rep);
  CycloNum norm;
  for (Elem h : stab) norm += chi(h);
  if (norm.is_zero())
    throw std::invalid_argument("gram: " + alpha.to_string() + " is not in Delta-bar (e*_alpha = 0)");
  const auto f = stabilizer_sums(G, stab, chi);
  const mpq_class c = prefactor(chi, G);
  GramMatrix out;
  out.alpha = alpha;
  out.coset_reps = right_coset_reps(G, stab);
  const std::size_t k = out.coset_reps.size();
  out.entries.assign(k, std::vector<CycloNum>(k));
  for (std::size_t i = 0; i < k; ++i) {
    const Elem inv_i = G.inv(out.coset_reps[i]);
    for (std::size_t j = 0; j < k; ++j) out.entries[i][j] = f[G.mul(out.coset_reps[j], inv_i)] * c;
  }
  return out;
}

SparseTensor explicit_symmetrized_tensor(const MultiIndex& alpha, const Character& chi, const FiniteGroup& G,
                                         const PermRep& rep, std::uint64_t budget) {
  check_degree(alpha, rep);
  const IndexSpace space(alpha.m(), alpha.n, budget);
  std::map<std::uint64_t, CycloNum> acc;
  for (Elem g = 0; g < G.order(); ++g) acc[space.encode(act(alpha, rep(g)))] += chi(g);
  SparseTensor out;
  const mpq_class c = prefactor(chi, G);
  for (auto& [code, v] : acc) {
    if (v.is_zero()) continue;
    out.coords.emplace_back(code, v * c);
  }
  return out;
}

CycloNum tensor_inner_product(const SparseTensor& u, const SparseTensor& v) {
  CycloNum acc;
  auto i = u.coords.begin();
  auto j = v.coords.begin();
  while (i != u.coords.end() && j != v.coords.end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      acc += i->second * j->second.conj();
      ++i;
      ++j;
    }
  }
  return acc;
}

CycloNum generalized_matrix_function(const std::vector<std::vector<CycloNum>>& M, const Character& chi,
                                     const FiniteGroup& G, const PermRep& rep) {
  const std::size_t m = rep.degree();
  if (M.size() != m) throw std::invalid_argument("generalized matrix function needs an m x m matrix");
  for (const auto& row : M)
    if (row.size() != m) throw std::invalid_argument("generalized matrix function needs an m x m matrix");
  CycloNum acc;
  for (Elem g = 0; g < G.order(); ++g) {
    const Perm& p = rep(g);
    CycloNum term = chi(g);
    for (std::size_t i = 0; i < m && !term.is_zero(); ++i) term *= M[i][p[i]];
    acc += term;
  }
  return acc;
}

}  // namespace ostar
