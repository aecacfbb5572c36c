#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ostar {

// Coordinates of an element of Z_{n_1} x ... x Z_{n_k}.
struct AbElement {
  std::vector<int> coords;

  auto operator<=>(const AbElement&) const = default;
};

/**
 * Finite abelian group presented as an explicit product of cyclic factors
 * Z_{n_1} x ... x Z_{n_k}. Elements are also addressed by their mixed-radix
 * index with the first coordinate most significant, so index order is the
 * lexicographic order of coordinate tuples. Index 0 is the identity.
 */
class AbelianGroup {
 public:
  AbelianGroup() = default;
  explicit AbelianGroup(std::vector<int> factors);

  const std::vector<int>& factors() const noexcept { return factors_; }
  std::size_t rank() const noexcept { return factors_.size(); }
  std::size_t order() const noexcept { return order_; }
  int exponent() const noexcept { return exponent_; }

  std::size_t encode(const AbElement& e) const;
  AbElement decode(std::size_t index) const;

  // Normalizes every coordinate into [0, n_i).
  AbElement reduce(AbElement e) const;

  std::size_t add(std::size_t x, std::size_t y) const;
  std::size_t neg(std::size_t x) const;
  std::size_t scale(std::size_t x, long k) const;

  // Standard generator g_i: 1 in coordinate i, 0 elsewhere.
  AbElement generator(std::size_t i) const;

  std::size_t element_order(std::size_t x) const;

  std::string describe() const;

 private:
  std::vector<int> factors_;
  std::size_t order_ = 1;
  int exponent_ = 1;
};

/**
 * Automorphism of an abelian group given by the images of its standard
 * generators. Construction checks that the images define a homomorphism
 * (ord(image_i) divides n_i) and that the induced map is bijective; the
 * full index map is materialized.
 */
class Automorphism {
 public:
  static Automorphism identity(const AbelianGroup& A);
  static Automorphism from_generator_images(const AbelianGroup& A, std::vector<AbElement> images);

  const std::vector<AbElement>& gen_images() const noexcept { return gen_images_; }
  std::size_t apply(std::size_t x) const { return map_[x]; }
  const std::vector<std::uint32_t>& map() const noexcept { return map_; }

  // (f.then(g))(x) = g(f(x)).
  Automorphism then(const Automorphism& g, const AbelianGroup& A) const;
  Automorphism power(long k, const AbelianGroup& A) const;
  Automorphism inverse(const AbelianGroup& A) const;

  bool operator==(const Automorphism& o) const { return map_ == o.map_; }

 private:
  std::vector<AbElement> gen_images_;
  std::vector<std::uint32_t> map_;
};

/**
 * Homomorphism phi: H -> Aut(A), given by the automorphism assigned to each
 * standard generator of H. Validation: the d_j-th power of the image of a
 * generator of order d_j is the identity and the images commute. The table
 * of phi_h for every h in H is materialized.
 */
class ActionHom {
 public:
  ActionHom() = default;
  ActionHom(const AbelianGroup& A, const AbelianGroup& H, std::vector<Automorphism> gen_images);

  static ActionHom trivial(const AbelianGroup& A, const AbelianGroup& H);

  const std::vector<Automorphism>& gen_images() const noexcept { return gen_images_; }
  const Automorphism& at(std::size_t h) const { return table_[h]; }
  bool is_trivial() const;

 private:
  std::vector<Automorphism> gen_images_;
  std::vector<Automorphism> table_;
};

}  // namespace ostar
