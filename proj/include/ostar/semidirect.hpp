#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ostar/abelian.hpp"
#include "ostar/finite_group.hpp"
#include "ostar/perm_rep.hpp"

namespace ostar {

// A group element (a, h) of A x| H in coordinates.
struct GElem {
  AbElement a;
  AbElement h;

  auto operator<=>(const GElem&) const = default;
};

enum class GroupOrigin { Semidirect, Wreath, Dihedral, PQ, ZGroup };
std::string to_string(GroupOrigin o);

/**
 * G = A x|_phi H for finite abelian A and H, with product
 * (a1, h1)(a2, h2) = (a1 + phi_{h1}(a2), h1 + h2).
 *
 * Element index = index_A(a) * |H| + index_H(h): the mixed-radix encoding of
 * the coordinate tuple (a_1..a_k, h_1..h_l), so "smallest index" is the
 * lexicographically smallest tuple. (e_A, e_H) has index 0.
 */
class SemidirectGroup {
 public:
  SemidirectGroup(AbelianGroup A, AbelianGroup H, ActionHom phi, GroupOrigin origin = GroupOrigin::Semidirect);

  const AbelianGroup& A() const noexcept { return A_; }
  const AbelianGroup& H() const noexcept { return H_; }
  const ActionHom& phi() const noexcept { return phi_; }
  const FiniteGroup& group() const noexcept { return group_; }
  std::size_t order() const noexcept { return group_.order(); }
  GroupOrigin origin() const noexcept { return origin_; }

  Elem encode(std::size_t a, std::size_t h) const { return static_cast<Elem>(a * H_.order() + h); }
  Elem encode(const GElem& g) const { return encode(A_.encode(g.a), H_.encode(g.h)); }
  std::size_t a_part(Elem g) const { return g / H_.order(); }
  std::size_t h_part(Elem g) const { return g % H_.order(); }
  GElem decode(Elem g) const { return {A_.decode(a_part(g)), H_.decode(h_part(g))}; }
  std::string label(Elem g) const;

  // Images of the standard generators (g_i, e_H) followed by (e_A, h_j).
  std::vector<Elem> standard_generators() const;

  // Builds the representation from permutations of the standard generators
  // of A and of H (same order as the factor lists).
  PermRep make_rep(const std::vector<Perm>& a_gens, const std::vector<Perm>& h_gens, RepKind kind) const;

  // Representation bundled by the builder, if the family has one.
  const std::optional<PermRep>& natural_rep() const noexcept { return natural_; }
  void set_natural_rep(PermRep rep) { natural_ = std::move(rep); }

  std::string description() const { return description_; }
  void set_description(std::string d) { description_ = std::move(d); }

 private:
  AbelianGroup A_;
  AbelianGroup H_;
  ActionHom phi_;
  FiniteGroup group_;
  GroupOrigin origin_;
  std::optional<PermRep> natural_;
  std::string description_;
};

SemidirectGroup build_semidirect(const AbelianGroup& A, const AbelianGroup& H, const ActionHom& phi);

// H acting on Omega = {0, ..., omega_size - 1}; one permutation per
// standard generator of H, applied as omega -> perm[omega].
struct WreathSpec {
  AbelianGroup A;
  AbelianGroup H;
  std::size_t omega_size = 1;
  std::vector<Perm> h_action_on_omega;

  // Omega = H with h acting by translation.
  static WreathSpec regular(const AbelianGroup& A, const AbelianGroup& H);
};

// K x|_{phi_Omega} H with K = A^|Omega| and phi_Omega(h)(a_w) = (a_{h^-1 w}).
// The bundled natural representation is the imprimitive action on
// Omega x A (degree |Omega| |A|).
SemidirectGroup build_wreath(const WreathSpec& w);

// D_{2s} = C_s x| C_2 with phi_b(a) = a^-1; natural rep on the s vertices.
SemidirectGroup dihedral(int s);

// C_q x| C_p with phi_b(a) = a^r, r of multiplicative order exactly p mod q;
// natural rep is the affine action on Z_q.
SemidirectGroup group_pq(int p, int q, int r);

// C_s x| C_t with phi_b(a) = a^r, gcd(s, t) = 1 and r^t = 1 mod s. The affine
// rep on Z_s is bundled only when it is faithful.
SemidirectGroup z_group(int s, int t, int r);

// Multiplicative order of r modulo q, or 0 when gcd(r, q) != 1.
int multiplicative_order(long r, long q);

}  // namespace ostar
