#include "ostar/finite_group.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ostar/errors.hpp"

namespace ostar {

FiniteGroup::FiniteGroup(std::size_t order, const std::function<Elem(Elem, Elem)>& mul) : order_(order) {
  if (order == 0) throw std::invalid_argument("group order must be positive");
  if (order > kMaxGroupOrder)
    throw BudgetError("group order " + std::to_string(order) + " exceeds element cap " +
                      std::to_string(kMaxGroupOrder));
  table_.resize(order * order);
  for (Elem x = 0; x < order; ++x) {
    for (Elem y = 0; y < order; ++y) {
      const Elem z = mul(x, y);
      if (z >= order) throw std::logic_error("product out of range");
      table_[static_cast<std::size_t>(x) * order + y] = z;
    }
  }
  for (Elem x = 0; x < order; ++x) {
    if (this->mul(0, x) != x || this->mul(x, 0) != x) throw std::invalid_argument("element 0 is not the identity");
  }
  inverse_.assign(order, 0);
  for (Elem x = 0; x < order; ++x) {
    bool found = false;
    for (Elem y = 0; y < order && !found; ++y) {
      if (this->mul(x, y) == 0) {
        if (this->mul(y, x) != 0) throw std::invalid_argument("left and right inverses differ");
        inverse_[x] = y;
        found = true;
      }
    }
    if (!found) throw std::invalid_argument("element without inverse");
  }

  class_of_.assign(order, order);
  for (Elem x = 0; x < order; ++x) {
    if (class_of_[x] != order) continue;
    ElemSet cls;
    for (Elem g = 0; g < order; ++g) cls.push_back(conjugate(x, g));
    std::sort(cls.begin(), cls.end());
    cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
    for (Elem y : cls) class_of_[y] = classes_.size();
    classes_.push_back(std::move(cls));
  }
}

Elem FiniteGroup::power(Elem x, long k) const {
  if (k < 0) return power(inv(x), -k);
  Elem acc = 0;
  for (long i = 0; i < k; ++i) acc = mul(acc, x);
  return acc;
}

std::size_t FiniteGroup::element_order(Elem x) const {
  std::size_t k = 1;
  for (Elem y = x; y != 0; y = mul(y, x)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (Elem x = 0; x < order_; ++x)
    for (Elem y = 0; y < x; ++y)
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

bool FiniteGroup::is_subgroup(const ElemSet& s) const {
  if (s.empty() || !std::binary_search(s.begin(), s.end(), Elem{0})) return false;
  for (Elem x : s) {
    if (!std::binary_search(s.begin(), s.end(), inv(x))) return false;
    for (Elem y : s)
      if (!std::binary_search(s.begin(), s.end(), mul(x, y))) return false;
  }
  return true;
}

bool FiniteGroup::is_normal(const ElemSet& s) const {
  if (!is_subgroup(s)) return false;
  for (Elem x : s)
    for (Elem g = 0; g < order_; ++g)
      if (!std::binary_search(s.begin(), s.end(), conjugate(x, g))) return false;
  return true;
}

ElemSet FiniteGroup::closure(const ElemSet& gens) const {
  std::vector<char> in(order_, 0);
  ElemSet members{0};
  in[0] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Elem g : gens) {
      const Elem y = mul(members[i], g);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<Elem> FiniteGroup::generating_set() const {
  std::vector<Elem> gens;
  ElemSet span{0};
  for (Elem x = 1; x < order_ && span.size() < order_; ++x) {
    if (std::binary_search(span.begin(), span.end(), x)) continue;
    gens.push_back(x);
    span = closure(gens);
  }
  return gens;
}

std::vector<ElemSet> enumerate_subgroups(const FiniteGroup& G, std::size_t bound) {
  if (G.order() > bound)
    throw BudgetError("subgroup enumeration refused: |G| = " + std::to_string(G.order()) + " exceeds bound " +
                      std::to_string(bound));
  std::set<ElemSet> found;
  for (Elem x = 0; x < G.order(); ++x) found.insert(G.closure({x}));
  std::vector<ElemSet> frontier(found.begin(), found.end());
  const std::vector<ElemSet> cyclic = frontier;
  while (!frontier.empty()) {
    std::vector<ElemSet> next;
    for (const auto& s : frontier) {
      for (const auto& c : cyclic) {
        if (std::includes(s.begin(), s.end(), c.begin(), c.end())) continue;
        ElemSet gens = s;
        gens.insert(gens.end(), c.begin(), c.end());
        ElemSet joined = G.closure(gens);
        if (found.insert(joined).second) next.push_back(std::move(joined));
      }
    }
    frontier = std::move(next);
  }
  std::vector<ElemSet> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const ElemSet& a, const ElemSet& b) { return a.size() < b.size(); });
  for (const auto& s : out)
    if (!G.is_subgroup(s)) throw ConsistencyError("subgroup closure produced a non-subgroup");
  return out;
}

std::vector<Elem> right_coset_reps(const FiniteGroup& G, const ElemSet& H) {
  std::vector<char> seen(G.order(), 0);
  std::vector<Elem> reps;
  for (Elem g = 0; g < G.order(); ++g) {
    if (seen[g]) continue;
    reps.push_back(g);
    for (Elem h : H) seen[G.mul(h, g)] = 1;
  }
  return reps;
}

}  // namespace ostar
