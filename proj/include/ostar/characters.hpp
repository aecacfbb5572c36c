#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "ostar/cyclotomic.hpp"
#include "ostar/finite_group.hpp"
#include "ostar/semidirect.hpp"

namespace ostar {

// A class function on a finite group, tabulated on every element.
struct Character {
  std::size_t degree = 1;
  std::vector<CycloNum> values;
  std::string label;

  const CycloNum& operator()(Elem g) const { return values[g]; }
  bool is_linear() const noexcept { return degree == 1; }
};

// Linear character of an abelian group Z_{n_1} x ... x Z_{n_k}:
// a -> prod_i zeta_{n_i}^{c_i a_i}.
struct DualChar {
  std::vector<int> exponents;

  auto operator<=>(const DualChar&) const = default;
};

// x(a) as an exponent of zeta_E, E = exponent(A).
int dual_value_exponent(const AbelianGroup& A, const DualChar& x, std::size_t a);
CycloNum dual_value(const AbelianGroup& A, const DualChar& x, std::size_t a);

// All |A| characters in lexicographic order of exponent tuples.
std::vector<DualChar> dual_group(const AbelianGroup& A);

// h.x := x o phi_h.
DualChar act_on_dual(const AbelianGroup& A, const Automorphism& phi_h, const DualChar& x);

struct DualOrbit {
  DualChar representative;           // lex-min member
  std::vector<DualChar> members;     // sorted
  std::vector<std::size_t> stabilizer;  // H_x as sorted H indices
};

// Partition of A^v into H-orbits, ordered by representative.
std::vector<DualOrbit> dual_orbits(const AbelianGroup& A, const AbelianGroup& H, const ActionHom& phi);

// Linear characters of the subgroup S of H, each named by the lex-min
// character of H restricting to it. Sorted.
std::vector<DualChar> subgroup_dual(const AbelianGroup& H, const std::vector<std::size_t>& S);

/**
 * Irreducible character chi_([x], U) of A x| H: induced from the linear
 * character x.U of A x| H_x. U is stored as a character of H (any extension
 * of the character of H_x); only its restriction to H_x matters.
 */
struct IrredChar : Character {
  std::size_t orbit_index = 0;
  DualChar x;
  DualChar u;
  std::vector<std::size_t> stabilizer;
};

// Value at g = (a, k) via the abelian reduction of the Mackey formula:
// (chi_U(k) / |H_x|) sum_{h in H} x(phi_h(a)) if k in H_x, else 0.
CycloNum mackey_value(const SemidirectGroup& G, const DualChar& x, const std::vector<std::size_t>& stabilizer,
                      const DualChar& u, Elem g);

// The general Mackey-type sum (1/|H_x|) sum_{h : h k h^-1 in H_x} x(phi_h(a)) chi_U(h k h^-1),
// with the conjugation computed in H rather than assumed trivial.
CycloNum mackey_value_general(const SemidirectGroup& G, const DualChar& x, const std::vector<std::size_t>& stabilizer,
                              const DualChar& u, Elem g);

// Conductor shared by every character value of G: lcm(exp A, exp H).
unsigned character_conductor(const SemidirectGroup& G);

// Complete list of irreducible characters, ordered by dual orbit and then
// by U. Values are computed once per conjugacy class.
std::vector<IrredChar> irred_chars(const SemidirectGroup& G);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;

  bool ok() const;
};

// Exact completeness and orthogonality checks on a table.
ValidationReport validate_table(const std::vector<IrredChar>& chars, const FiniteGroup& G);

// Z_chi = {g : chi(g) = 0}, sorted.
ElemSet zero_set(const Character& chi);

// Character table bundled with its validation status. Deciders refuse
// tables that have not passed validation.
class CharacterTable {
 public:
  explicit CharacterTable(const SemidirectGroup& G);
  // Wraps an externally supplied list; it is validated like a computed one.
  CharacterTable(const SemidirectGroup& G, std::vector<IrredChar> chars);

  const std::vector<IrredChar>& chars() const noexcept { return chars_; }
  const IrredChar& operator[](std::size_t i) const { return chars_.at(i); }
  std::size_t size() const noexcept { return chars_.size(); }
  unsigned conductor() const noexcept { return conductor_; }

  const ValidationReport& report() const noexcept { return report_; }
  bool validated() const noexcept { return report_.ok(); }

 private:
  std::vector<IrredChar> chars_;
  ValidationReport report_;
  unsigned conductor_ = 1;
};

}  // namespace ostar
