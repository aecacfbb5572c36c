#include "ostar/abelian.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ostar/errors.hpp"
#include "ostar/finite_group.hpp"

namespace ostar {

AbelianGroup::AbelianGroup(std::vector<int> factors) : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 1)
      throw std::invalid_argument("cyclic factor " + std::to_string(i) + " must be >= 1, got " +
                                  std::to_string(factors_[i]));
    order_ *= static_cast<std::size_t>(factors_[i]);
    if (order_ > kMaxGroupOrder)
      throw BudgetError("abelian group order exceeds element cap " + std::to_string(kMaxGroupOrder));
    exponent_ = std::lcm(exponent_, factors_[i]);
  }
}

std::size_t AbelianGroup::encode(const AbElement& e) const {
  if (e.coords.size() != factors_.size())
    throw std::invalid_argument("element has " + std::to_string(e.coords.size()) + " coordinates, group has " +
                                std::to_string(factors_.size()) + " factors");
  std::size_t index = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    int c = e.coords[i] % factors_[i];
    if (c < 0) c += factors_[i];
    index = index * static_cast<std::size_t>(factors_[i]) + static_cast<std::size_t>(c);
  }
  return index;
}

AbElement AbelianGroup::decode(std::size_t index) const {
  AbElement e;
  e.coords.assign(factors_.size(), 0);
  for (std::size_t i = factors_.size(); i-- > 0;) {
    e.coords[i] = static_cast<int>(index % static_cast<std::size_t>(factors_[i]));
    index /= static_cast<std::size_t>(factors_[i]);
  }
  return e;
}

AbElement AbelianGroup::reduce(AbElement e) const { return decode(encode(e)); }

std::size_t AbelianGroup::add(std::size_t x, std::size_t y) const {
  std::size_t out = 0;
  std::size_t place = 1;
  for (std::size_t i = factors_.size(); i-- > 0;) {
    const auto n = static_cast<std::size_t>(factors_[i]);
    out += ((x % n + y % n) % n) * place;
    place *= n;
    x /= n;
    y /= n;
  }
  return out;
}

std::size_t AbelianGroup::neg(std::size_t x) const { return scale(x, -1); }

std::size_t AbelianGroup::scale(std::size_t x, long k) const {
  AbElement e = decode(x);
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    long v = (static_cast<long>(e.coords[i]) * (k % factors_[i])) % factors_[i];
    if (v < 0) v += factors_[i];
    e.coords[i] = static_cast<int>(v);
  }
  return encode(e);
}

AbElement AbelianGroup::generator(std::size_t i) const {
  AbElement e;
  e.coords.assign(factors_.size(), 0);
  e.coords.at(i) = factors_[i] == 1 ? 0 : 1;
  return e;
}

std::size_t AbelianGroup::element_order(std::size_t x) const {
  const AbElement e = decode(x);
  std::size_t ord = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto n = static_cast<std::size_t>(factors_[i]);
    ord = std::lcm(ord, n / std::gcd(n, static_cast<std::size_t>(e.coords[i])));
  }
  return ord;
}

std::string AbelianGroup::describe() const {
  if (factors_.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < factors_.size(); ++i) out << (i ? "xC" : "C") << factors_[i];
  return out.str();
}

Automorphism Automorphism::identity(const AbelianGroup& A) {
  std::vector<AbElement> images;
  for (std::size_t i = 0; i < A.rank(); ++i) images.push_back(A.generator(i));
  return from_generator_images(A, std::move(images));
}

Automorphism Automorphism::from_generator_images(const AbelianGroup& A, std::vector<AbElement> images) {
  if (images.size() != A.rank())
    throw std::invalid_argument("automorphism needs " + std::to_string(A.rank()) + " generator images, got " +
                                std::to_string(images.size()));
  Automorphism f;
  std::vector<std::size_t> image_index(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i].coords.size() != A.rank())
      throw std::invalid_argument("image of generator " + std::to_string(i) + " has wrong arity");
    images[i] = A.reduce(images[i]);
    image_index[i] = A.encode(images[i]);
    const auto n = static_cast<std::size_t>(A.factors()[i]);
    if (n % A.element_order(image_index[i]) != 0)
      throw std::invalid_argument("image of generator " + std::to_string(i) + " has order " +
                                  std::to_string(A.element_order(image_index[i])) + " not dividing " +
                                  std::to_string(n) + "; not a homomorphism");
  }
  f.gen_images_ = std::move(images);
  f.map_.resize(A.order());
  std::vector<char> hit(A.order(), 0);
  for (std::size_t x = 0; x < A.order(); ++x) {
    const AbElement e = A.decode(x);
    std::size_t y = 0;
    for (std::size_t i = 0; i < A.rank(); ++i) y = A.add(y, A.scale(image_index[i], e.coords[i]));
    f.map_[x] = static_cast<std::uint32_t>(y);
    if (hit[y]) throw std::invalid_argument("generator images do not define a bijection");
    hit[y] = 1;
  }
  return f;
}

Automorphism Automorphism::then(const Automorphism& g, const AbelianGroup& A) const {
  std::vector<AbElement> images;
  for (const auto& img : gen_images_) images.push_back(A.decode(g.apply(A.encode(img))));
  return from_generator_images(A, std::move(images));
}

Automorphism Automorphism::power(long k, const AbelianGroup& A) const {
  Automorphism base = k < 0 ? inverse(A) : *this;
  Automorphism acc = identity(A);
  for (long i = 0; i < (k < 0 ? -k : k); ++i) acc = acc.then(base, A);
  return acc;
}

Automorphism Automorphism::inverse(const AbelianGroup& A) const {
  std::vector<std::uint32_t> inv(map_.size());
  for (std::size_t x = 0; x < map_.size(); ++x) inv[map_[x]] = static_cast<std::uint32_t>(x);
  std::vector<AbElement> images;
  for (std::size_t i = 0; i < A.rank(); ++i) images.push_back(A.decode(inv[A.encode(A.generator(i))]));
  return from_generator_images(A, std::move(images));
}

ActionHom::ActionHom(const AbelianGroup& A, const AbelianGroup& H, std::vector<Automorphism> gen_images)
    : gen_images_(std::move(gen_images)) {
  if (gen_images_.size() != H.rank())
    throw std::invalid_argument("action needs one automorphism per generator of H (" + std::to_string(H.rank()) +
                                "), got " + std::to_string(gen_images_.size()));
  const Automorphism id = Automorphism::identity(A);
  for (std::size_t j = 0; j < gen_images_.size(); ++j) {
    if (!(gen_images_[j].power(H.factors()[j], A) == id))
      throw std::invalid_argument("phi[" + std::to_string(j) + "]^" + std::to_string(H.factors()[j]) +
                                  " is not the identity; not a homomorphism from H");
    for (std::size_t k = 0; k < j; ++k) {
      if (!(gen_images_[j].then(gen_images_[k], A) == gen_images_[k].then(gen_images_[j], A)))
        throw std::invalid_argument("phi[" + std::to_string(k) + "] and phi[" + std::to_string(j) +
                                    "] do not commute; H is abelian");
    }
  }
  table_.reserve(H.order());
  for (std::size_t h = 0; h < H.order(); ++h) {
    const AbElement e = H.decode(h);
    Automorphism acc = id;
    for (std::size_t j = 0; j < H.rank(); ++j) acc = acc.then(gen_images_[j].power(e.coords[j], A), A);
    table_.push_back(std::move(acc));
  }
}

ActionHom ActionHom::trivial(const AbelianGroup& A, const AbelianGroup& H) {
  return ActionHom(A, H, std::vector<Automorphism>(H.rank(), Automorphism::identity(A)));
}

bool ActionHom::is_trivial() const {
  for (const auto& f : table_) {
    for (std::size_t x = 0; x < f.map().size(); ++x)
      if (f.apply(x) != x) return false;
  }
  return true;
}

}  // namespace ostar
