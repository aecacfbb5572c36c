#include "ostar/semidirect.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ostar/semigroup.hpp"

namespace ostar {

namespace {

std::string coords_string(const AbElement& e) {
  std::ostringstream out;
  for (std::size_t i = 0; i < e.coords.size(); ++i) out << (i ? "," : "") << e.coords[i];
  return out.str();
}

FiniteGroup make_table(const AbelianGroup& A, const AbelianGroup& H, const ActionHom& phi) {
  const std::size_t nh = H.order();
  return FiniteGroup(A.order() * nh, [&](Elem x, Elem y) -> Elem {
    const std::size_t a1 = x / nh, h1 = x % nh;
    const std::size_t a2 = y / nh, h2 = y % nh;
    const std::size_t a = A.add(a1, phi.at(h1).apply(a2));
    return static_cast<Elem>(a * nh + H.add(h1, h2));
  });
}

Perm perm_power(const Perm& p, int k) {
  Perm acc = identity_perm(p.size());
  for (int i = 0; i < k; ++i) acc = compose(acc, p);
  return acc;
}

long inverse_mod(long r, long q) {
  for (long x = 1; x < q; ++x)
    if ((r * x) % q == 1) return x;
  return 1;
}

// x -> x + 1 and x -> r^-1 x on Z_s.
std::pair<Perm, Perm> affine_generators(int s, long r) {
  Perm shift(s);
  Perm mult(s);
  const long rinv = s == 1 ? 1 : inverse_mod(((r % s) + s) % s, s);
  for (int x = 0; x < s; ++x) {
    shift[x] = static_cast<std::uint16_t>((x + 1) % s);
    mult[x] = static_cast<std::uint16_t>((rinv * x) % s);
  }
  return {shift, mult};
}

ActionHom power_action(const AbelianGroup& A, const AbelianGroup& H, long r) {
  AbElement img{{static_cast<int>(((r % A.factors()[0]) + A.factors()[0]) % A.factors()[0])}};
  return ActionHom(A, H, {Automorphism::from_generator_images(A, {img})});
}

}  // namespace

std::string to_string(GroupOrigin o) {
  switch (o) {
    case GroupOrigin::Semidirect: return "semidirect";
    case GroupOrigin::Wreath: return "wreath";
    case GroupOrigin::Dihedral: return "dihedral";
    case GroupOrigin::PQ: return "pq";
    case GroupOrigin::ZGroup: return "z_group";
  }
  return "?";
}

SemidirectGroup::SemidirectGroup(AbelianGroup A, AbelianGroup H, ActionHom phi, GroupOrigin origin)
    : A_(std::move(A)), H_(std::move(H)), phi_(std::move(phi)), group_(make_table(A_, H_, phi_)), origin_(origin) {
  ElemSet a_sub;
  ElemSet h_sub;
  for (std::size_t a = 0; a < A_.order(); ++a) a_sub.push_back(encode(a, 0));
  for (std::size_t h = 0; h < H_.order(); ++h) h_sub.push_back(encode(0, h));
  if (!group_.is_normal(a_sub)) throw std::logic_error("A is not a normal subgroup of the semidirect product");
  if (!group_.is_subgroup(h_sub)) throw std::logic_error("H is not a subgroup of the semidirect product");
  description_ = A_.describe() + " x| " + H_.describe();
}

std::string SemidirectGroup::label(Elem g) const {
  const GElem e = decode(g);
  return "(" + coords_string(e.a) + ";" + coords_string(e.h) + ")";
}

std::vector<Elem> SemidirectGroup::standard_generators() const {
  std::vector<Elem> gens;
  for (std::size_t i = 0; i < A_.rank(); ++i) gens.push_back(encode(A_.encode(A_.generator(i)), 0));
  for (std::size_t j = 0; j < H_.rank(); ++j) gens.push_back(encode(0, H_.encode(H_.generator(j))));
  return gens;
}

PermRep SemidirectGroup::make_rep(const std::vector<Perm>& a_gens, const std::vector<Perm>& h_gens,
                                  RepKind kind) const {
  if (a_gens.size() != A_.rank() || h_gens.size() != H_.rank())
    throw std::invalid_argument("representation needs one permutation per generator of A and of H");
  std::size_t m = 0;
  for (const auto* list : {&a_gens, &h_gens})
    for (const auto& p : *list) {
      if (m == 0) m = p.size();
      if (p.size() != m || !is_permutation(p))
        throw std::invalid_argument("generator images must be permutations of a common degree");
    }
  if (m == 0) m = 1;
  std::vector<Perm> images(order());
  for (std::size_t a = 0; a < A_.order(); ++a) {
    const AbElement ea = A_.decode(a);
    Perm pa = identity_perm(m);
    for (std::size_t i = 0; i < A_.rank(); ++i) pa = compose(pa, perm_power(a_gens[i], ea.coords[i]));
    for (std::size_t h = 0; h < H_.order(); ++h) {
      const AbElement eh = H_.decode(h);
      Perm p = pa;
      for (std::size_t j = 0; j < H_.rank(); ++j) p = compose(p, perm_power(h_gens[j], eh.coords[j]));
      images[encode(a, h)] = std::move(p);
    }
  }
  return PermRep(group_, std::move(images), standard_generators(), kind);
}

SemidirectGroup build_semidirect(const AbelianGroup& A, const AbelianGroup& H, const ActionHom& phi) {
  return SemidirectGroup(A, H, phi, GroupOrigin::Semidirect);
}

WreathSpec WreathSpec::regular(const AbelianGroup& A, const AbelianGroup& H) {
  WreathSpec w{A, H, H.order(), {}};
  for (std::size_t j = 0; j < H.rank(); ++j) {
    const std::size_t gen = H.encode(H.generator(j));
    Perm p(H.order());
    for (std::size_t w0 = 0; w0 < H.order(); ++w0) p[w0] = static_cast<std::uint16_t>(H.add(w0, gen));
    w.h_action_on_omega.push_back(std::move(p));
  }
  return w;
}

SemidirectGroup build_wreath(const WreathSpec& w) {
  if (w.omega_size == 0) throw std::invalid_argument("wreath: Omega must be nonempty");
  if (w.h_action_on_omega.size() != w.H.rank())
    throw std::invalid_argument("wreath: need one Omega permutation per generator of H");
  for (std::size_t j = 0; j < w.h_action_on_omega.size(); ++j) {
    const Perm& p = w.h_action_on_omega[j];
    if (p.size() != w.omega_size || !is_permutation(p))
      throw std::invalid_argument("wreath: action[" + std::to_string(j) + "] is not a permutation of Omega");
    if (perm_power(p, w.H.factors()[j]) != identity_perm(w.omega_size))
      throw std::invalid_argument("wreath: action[" + std::to_string(j) + "] has order not dividing " +
                                  std::to_string(w.H.factors()[j]));
    for (std::size_t k = 0; k < j; ++k)
      if (compose(p, w.h_action_on_omega[k]) != compose(w.h_action_on_omega[k], p))
        throw std::invalid_argument("wreath: action[" + std::to_string(k) + "] and action[" + std::to_string(j) +
                                    "] do not commute");
  }
  const std::size_t r = w.A.rank();
  std::vector<int> kf;
  for (std::size_t om = 0; om < w.omega_size; ++om) kf.insert(kf.end(), w.A.factors().begin(), w.A.factors().end());
  AbelianGroup K(kf);

  // phi_Omega(h) moves the block at omega to h.omega.
  std::vector<Automorphism> auts;
  for (const auto& p : w.h_action_on_omega) {
    std::vector<AbElement> images;
    for (std::size_t om = 0; om < w.omega_size; ++om) {
      for (std::size_t i = 0; i < r; ++i) {
        AbElement img;
        img.coords.assign(K.rank(), 0);
        img.coords[p[om] * r + i] = w.A.factors()[i] == 1 ? 0 : 1;
        images.push_back(std::move(img));
      }
    }
    auts.push_back(Automorphism::from_generator_images(K, std::move(images)));
  }
  SemidirectGroup G(K, w.H, ActionHom(K, w.H, std::move(auts)), GroupOrigin::Wreath);
  G.set_description(w.A.describe() + " wr_" + std::to_string(w.omega_size) + " " + w.H.describe());

  // Imprimitive action on Omega x A: point (omega, x) has index omega |A| + x.
  const std::size_t na = w.A.order();
  const std::size_t m = w.omega_size * na;
  if (m <= 0xFFFF) {
    std::vector<Perm> a_gens;
    for (std::size_t om = 0; om < w.omega_size; ++om) {
      for (std::size_t i = 0; i < r; ++i) {
        const std::size_t gi = w.A.encode(w.A.generator(i));
        Perm p = identity_perm(m);
        for (std::size_t x = 0; x < na; ++x) p[om * na + x] = static_cast<std::uint16_t>(om * na + w.A.add(x, gi));
        a_gens.push_back(std::move(p));
      }
    }
    std::vector<Perm> h_gens;
    for (const auto& sigma : w.h_action_on_omega) {
      const Perm sinv = inverse(sigma);
      Perm p(m);
      for (std::size_t om = 0; om < w.omega_size; ++om)
        for (std::size_t x = 0; x < na; ++x) p[om * na + x] = static_cast<std::uint16_t>(sinv[om] * na + x);
      h_gens.push_back(std::move(p));
    }
    PermRep rep = G.make_rep(a_gens, h_gens, RepKind::Natural);
    if (rep.is_faithful()) G.set_natural_rep(std::move(rep));
  }
  return G;
}

int multiplicative_order(long r, long q) {
  if (q <= 0) return 0;
  if (q == 1) return 1;
  r %= q;
  if (r < 0) r += q;
  if (std::gcd(r, q) != 1) return 0;
  long x = r;
  int k = 1;
  while (x != 1) {
    x = (x * r) % q;
    ++k;
  }
  return k;
}

SemidirectGroup dihedral(int s) {
  if (s < 3) throw std::invalid_argument("dihedral: s must be >= 3, got " + std::to_string(s));
  AbelianGroup A({s});
  AbelianGroup H({2});
  SemidirectGroup G(A, H, power_action(A, H, -1), GroupOrigin::Dihedral);
  G.set_description("D" + std::to_string(2 * s));
  auto [shift, mult] = affine_generators(s, -1);
  G.set_natural_rep(G.make_rep({shift}, {mult}, RepKind::Natural));
  return G;
}

SemidirectGroup group_pq(int p, int q, int r) {
  if (!is_prime(static_cast<std::uint64_t>(q > 0 ? q : 0)))
    throw std::invalid_argument("group_pq: q = " + std::to_string(q) + " is not prime");
  if (!is_prime(static_cast<std::uint64_t>(p > 0 ? p : 0)))
    throw std::invalid_argument("group_pq: p = " + std::to_string(p) + " is not prime");
  if ((q - 1) % p != 0)
    throw std::invalid_argument("group_pq: p = " + std::to_string(p) + " does not divide q - 1 = " +
                                std::to_string(q - 1));
  const int ord = multiplicative_order(r, q);
  if (ord != p)
    throw std::invalid_argument("group_pq: r = " + std::to_string(r) + " fails r^" + std::to_string(p) +
                                " = 1 (mod " + std::to_string(q) + ") with exact order " + std::to_string(p) +
                                "; its multiplicative order is " + std::to_string(ord));
  AbelianGroup A({q});
  AbelianGroup H({p});
  SemidirectGroup G(A, H, power_action(A, H, r), GroupOrigin::PQ);
  G.set_description("C" + std::to_string(q) + " x| C" + std::to_string(p) + " (r=" + std::to_string(r) + ")");
  auto [shift, mult] = affine_generators(q, r);
  G.set_natural_rep(G.make_rep({shift}, {mult}, RepKind::Natural));
  return G;
}

SemidirectGroup z_group(int s, int t, int r) {
  if (s < 1 || t < 1) throw std::invalid_argument("z_group: s and t must be positive");
  if (std::gcd(s, t) != 1)
    throw std::invalid_argument("z_group: gcd(s, t) = " + std::to_string(std::gcd(s, t)) + " != 1");
  long rt = 1;
  for (int i = 0; i < t; ++i) rt = (rt * (((r % s) + s) % s)) % s;
  if (rt % s != 1 % s)
    throw std::invalid_argument("z_group: r = " + std::to_string(r) + " fails r^" + std::to_string(t) +
                                " = 1 (mod " + std::to_string(s) + ")");
  AbelianGroup A({s});
  AbelianGroup H({t});
  SemidirectGroup G(A, H, power_action(A, H, r), GroupOrigin::ZGroup);
  G.set_description("C" + std::to_string(s) + " x| C" + std::to_string(t) + " (r=" + std::to_string(r) + ")");
  auto [shift, mult] = affine_generators(s, r);
  PermRep rep = G.make_rep({shift}, {mult}, RepKind::Natural);
  if (rep.is_faithful()) G.set_natural_rep(std::move(rep));
  return G;
}

}  // namespace ostar
