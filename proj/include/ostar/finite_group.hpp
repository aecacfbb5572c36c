#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ostar {

// Element cap for materialized groups and the default subgroup-lattice bound.
inline constexpr std::size_t kMaxGroupOrder = 2000;
inline constexpr std::size_t kDefaultSubgroupBound = 200;

// Group elements are addressed by index; index 0 is always the identity.
using Elem = std::uint32_t;

// A set of elements, kept sorted ascending.
using ElemSet = std::vector<Elem>;

/**
 * A finite group given by its full multiplication table. All structure
 * needed downstream (inverses, conjugacy classes) is computed once at
 * construction; afterwards the object is immutable.
 */
class FiniteGroup {
 public:
  FiniteGroup() = default;

  // `mul(i, j)` is the index of the product of elements i and j. Identity
  // and inverse laws are checked; associativity is left to the caller.
  FiniteGroup(std::size_t order, const std::function<Elem(Elem, Elem)>& mul);

  std::size_t order() const noexcept { return order_; }
  Elem mul(Elem x, Elem y) const { return table_[static_cast<std::size_t>(x) * order_ + y]; }
  Elem inv(Elem x) const { return inverse_[x]; }
  static constexpr Elem identity() noexcept { return 0; }

  Elem power(Elem x, long k) const;
  std::size_t element_order(Elem x) const;
  Elem conjugate(Elem x, Elem by) const { return mul(mul(by, x), inv(by)); }

  // Classes ordered by their smallest element; each class sorted.
  const std::vector<ElemSet>& classes() const noexcept { return classes_; }
  std::size_t class_of(Elem x) const { return class_of_[x]; }

  bool is_abelian() const;
  bool is_subgroup(const ElemSet& s) const;
  bool is_normal(const ElemSet& s) const;

  // Smallest subgroup containing the given elements.
  ElemSet closure(const ElemSet& gens) const;

  // A small generating set, picked greedily in index order.
  std::vector<Elem> generating_set() const;

 private:
  std::size_t order_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<ElemSet> classes_;
  std::vector<std::size_t> class_of_;
};

// Complete subgroup lattice, computed by closing the cyclic subgroups under
// pairwise joins until nothing new appears. Sorted by (order, elements).
// Throws BudgetError when |G| exceeds `bound`.
std::vector<ElemSet> enumerate_subgroups(const FiniteGroup& G, std::size_t bound = kDefaultSubgroupBound);

// Right cosets H g, each represented by its smallest element; returned
// sorted by representative.
std::vector<Elem> right_coset_reps(const FiniteGroup& G, const ElemSet& H);

}  // namespace ostar
