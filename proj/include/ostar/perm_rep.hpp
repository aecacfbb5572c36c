#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ostar/finite_group.hpp"

namespace ostar {

// A permutation of {0, ..., m-1} as its image list: p[i] is the image of i.
using Perm = std::vector<std::uint16_t>;

// Composition in left-to-right order: apply p first, then q.
Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);
Perm identity_perm(std::size_t m);
bool is_permutation(const Perm& p);

enum class RepKind { Natural, Regular, Explicit };
std::string to_string(RepKind k);

/**
 * Permutation representation pi: G -> S_m.
 *
 * Products are read left to right (pi(gh) = pi(g) then pi(h)), which is the
 * convention under which alpha.g with (alpha.g)_i = alpha_{g^-1(i)} is a
 * right action: (alpha.g).h = alpha.(gh).
 */
class PermRep {
 public:
  PermRep() = default;

  // `images[g]` for every element g. Verified to be a homomorphism by
  // checking pi(g s) = pi(g) pi(s) for every g and every s in `generators`,
  // which must generate G.
  PermRep(const FiniteGroup& G, std::vector<Perm> images, const std::vector<Elem>& generators, RepKind kind);

  // Right-regular representation: g acts on positions (elements) by x -> x g.
  static PermRep regular(const FiniteGroup& G);

  std::size_t degree() const noexcept { return degree_; }
  RepKind kind() const noexcept { return kind_; }
  const Perm& operator()(Elem g) const { return images_[g]; }
  const std::vector<Perm>& images() const noexcept { return images_; }

  bool is_faithful() const;

  // Every pair check pi(gh) = pi(g) pi(h).
  bool check_homomorphism_exhaustive(const FiniteGroup& G) const;

  // The same action on m >= degree() points, fixing the extra points.
  PermRep padded(std::size_t m) const;

 private:
  std::size_t degree_ = 0;
  RepKind kind_ = RepKind::Explicit;
  std::vector<Perm> images_;
};

}  // namespace ostar
