#include "ostar/perm_rep.hpp"

#include <numeric>
#include <stdexcept>

namespace ostar {

Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint16_t>(i);
  return r;
}

Perm identity_perm(std::size_t m) {
  Perm p(m);
  std::iota(p.begin(), p.end(), std::uint16_t{0});
  return p;
}

bool is_permutation(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (auto x : p) {
    if (x >= p.size() || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

std::string to_string(RepKind k) {
  switch (k) {
    case RepKind::Natural: return "natural";
    case RepKind::Regular: return "regular";
    case RepKind::Explicit: return "explicit";
  }
  return "?";
}

PermRep::PermRep(const FiniteGroup& G, std::vector<Perm> images, const std::vector<Elem>& generators, RepKind kind)
    : kind_(kind), images_(std::move(images)) {
  if (images_.size() != G.order()) throw std::invalid_argument("permutation representation needs one image per element");
  degree_ = images_.front().size();
  if (degree_ == 0 || degree_ > 0xFFFF) throw std::invalid_argument("permutation degree out of range");
  for (const auto& p : images_) {
    if (p.size() != degree_ || !is_permutation(p))
      throw std::invalid_argument("representation image is not a permutation of the stated degree");
  }
  if (images_[0] != identity_perm(degree_)) throw std::invalid_argument("identity must map to the identity permutation");
  if (G.closure(generators).size() != G.order())
    throw std::invalid_argument("homomorphism check needs a generating set");
  for (Elem g = 0; g < G.order(); ++g) {
    for (Elem s : generators) {
      if (images_[G.mul(g, s)] != compose(images_[g], images_[s]))
        throw std::invalid_argument("permutation images do not define a homomorphism (element " + std::to_string(g) +
                                    ", generator " + std::to_string(s) + ")");
    }
  }
}

PermRep PermRep::regular(const FiniteGroup& G) {
  std::vector<Perm> images(G.order(), Perm(G.order()));
  for (Elem g = 0; g < G.order(); ++g)
    for (Elem x = 0; x < G.order(); ++x) images[g][x] = static_cast<std::uint16_t>(G.mul(x, g));
  return PermRep(G, std::move(images), G.generating_set(), RepKind::Regular);
}

bool PermRep::is_faithful() const {
  const Perm id = identity_perm(degree_);
  for (std::size_t g = 1; g < images_.size(); ++g)
    if (images_[g] == id) return false;
  return true;
}

bool PermRep::check_homomorphism_exhaustive(const FiniteGroup& G) const {
  for (Elem g = 0; g < G.order(); ++g)
    for (Elem h = 0; h < G.order(); ++h)
      if (images_[G.mul(g, h)] != compose(images_[g], images_[h])) return false;
  return true;
}

PermRep PermRep::padded(std::size_t m) const {
  if (m < degree_) throw std::invalid_argument("cannot pad a degree-" + std::to_string(degree_) + " representation to " +
                                               std::to_string(m) + " points");
  PermRep out = *this;
  out.degree_ = m;
  for (auto& p : out.images_)
    for (std::size_t i = degree_; i < m; ++i) p.push_back(static_cast<std::uint16_t>(i));
  return out;
}

}  // namespace ostar
