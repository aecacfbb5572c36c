#include "ostar/characters.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ostar {

namespace {

bool contains(const std::vector<std::size_t>& sorted, std::size_t v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

AbElement as_element(const DualChar& x) { return AbElement{x.exponents}; }

}  // namespace

int dual_value_exponent(const AbelianGroup& A, const DualChar& x, std::size_t a) {
  const int E = A.exponent();
  const AbElement e = A.decode(a);
  long acc = 0;
  for (std::size_t i = 0; i < A.rank(); ++i) {
    acc += static_cast<long>(x.exponents[i]) * e.coords[i] * (E / A.factors()[i]);
    acc %= E;
  }
  return static_cast<int>(acc);
}

CycloNum dual_value(const AbelianGroup& A, const DualChar& x, std::size_t a) {
  return root_of_unity(static_cast<unsigned>(A.exponent()), dual_value_exponent(A, x, a));
}

std::vector<DualChar> dual_group(const AbelianGroup& A) {
  std::vector<DualChar> out;
  out.reserve(A.order());
  for (std::size_t i = 0; i < A.order(); ++i) out.push_back(DualChar{A.decode(i).coords});
  return out;
}

DualChar act_on_dual(const AbelianGroup& A, const Automorphism& phi_h, const DualChar& x) {
  const int E = A.exponent();
  DualChar y;
  y.exponents.assign(A.rank(), 0);
  for (std::size_t i = 0; i < A.rank(); ++i) {
    const int n = A.factors()[i];
    if (n == 1) continue;
    const int e = dual_value_exponent(A, x, phi_h.apply(A.encode(A.generator(i))));
    y.exponents[i] = e / (E / n);
  }
  return y;
}

std::vector<DualOrbit> dual_orbits(const AbelianGroup& A, const AbelianGroup& H, const ActionHom& phi) {
  std::vector<char> seen(A.order(), 0);
  std::vector<DualOrbit> out;
  for (const DualChar& x : dual_group(A)) {
    const std::size_t key = A.encode(as_element(x));
    if (seen[key]) continue;
    DualOrbit orbit;
    orbit.representative = x;
    for (std::size_t h = 0; h < H.order(); ++h) {
      DualChar y = act_on_dual(A, phi.at(h), x);
      if (y == x) orbit.stabilizer.push_back(h);
      const std::size_t ky = A.encode(as_element(y));
      if (!seen[ky]) {
        seen[ky] = 1;
        orbit.members.push_back(std::move(y));
      }
    }
    std::sort(orbit.members.begin(), orbit.members.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<DualChar> subgroup_dual(const AbelianGroup& H, const std::vector<std::size_t>& S) {
  std::map<std::vector<int>, DualChar> by_restriction;
  std::vector<DualChar> out;
  for (const DualChar& y : dual_group(H)) {
    std::vector<int> key;
    key.reserve(S.size());
    for (std::size_t s : S) key.push_back(dual_value_exponent(H, y, s));
    if (by_restriction.emplace(key, y).second) out.push_back(y);
  }
  if (out.size() != S.size()) throw std::logic_error("subgroup dual has the wrong size");
  return out;
}

unsigned character_conductor(const SemidirectGroup& G) {
  return lcm_conductor(static_cast<unsigned>(G.A().exponent()), static_cast<unsigned>(G.H().exponent()));
}

CycloNum mackey_value(const SemidirectGroup& G, const DualChar& x, const std::vector<std::size_t>& stabilizer,
                      const DualChar& u, Elem g) {
  const unsigned L = character_conductor(G);
  std::vector<long long> counts(L, 0);
  const std::size_t a = G.a_part(g);
  const std::size_t k = G.h_part(g);
  if (!contains(stabilizer, k)) return CycloNum::from_exponent_counts(L, counts);
  const unsigned sa = L / static_cast<unsigned>(G.A().exponent());
  const unsigned sh = L / static_cast<unsigned>(G.H().exponent());
  const unsigned u_exp = static_cast<unsigned>(dual_value_exponent(G.H(), u, k)) * sh;
  for (std::size_t h = 0; h < G.H().order(); ++h) {
    const unsigned e = static_cast<unsigned>(dual_value_exponent(G.A(), x, G.phi().at(h).apply(a))) * sa;
    counts[(e + u_exp) % L] += 1;
  }
  return CycloNum::from_exponent_counts(L, counts) / mpq_class(static_cast<long>(stabilizer.size()));
}

CycloNum mackey_value_general(const SemidirectGroup& G, const DualChar& x, const std::vector<std::size_t>& stabilizer,
                              const DualChar& u, Elem g) {
  const unsigned L = character_conductor(G);
  const AbelianGroup& H = G.H();
  const unsigned sa = L / static_cast<unsigned>(G.A().exponent());
  const unsigned sh = L / static_cast<unsigned>(H.exponent());
  std::vector<long long> counts(L, 0);
  const std::size_t a = G.a_part(g);
  const std::size_t k = G.h_part(g);
  for (std::size_t h = 0; h < H.order(); ++h) {
    const std::size_t conj = H.add(H.add(h, k), H.neg(h));
    if (!contains(stabilizer, conj)) continue;
    const unsigned e = static_cast<unsigned>(dual_value_exponent(G.A(), x, G.phi().at(h).apply(a))) * sa;
    const unsigned ue = static_cast<unsigned>(dual_value_exponent(H, u, conj)) * sh;
    counts[(e + ue) % L] += 1;
  }
  return CycloNum::from_exponent_counts(L, counts) / mpq_class(static_cast<long>(stabilizer.size()));
}

std::vector<IrredChar> irred_chars(const SemidirectGroup& G) {
  const FiniteGroup& fg = G.group();
  std::vector<IrredChar> out;
  const auto orbits = dual_orbits(G.A(), G.H(), G.phi());
  for (std::size_t oi = 0; oi < orbits.size(); ++oi) {
    const DualOrbit& orbit = orbits[oi];
    for (const DualChar& u : subgroup_dual(G.H(), orbit.stabilizer)) {
      IrredChar chi;
      chi.orbit_index = oi;
      chi.x = orbit.representative;
      chi.u = u;
      chi.stabilizer = orbit.stabilizer;
      chi.degree = G.H().order() / orbit.stabilizer.size();
      chi.label = "chi" + std::to_string(out.size());
      chi.values.resize(fg.order());
      for (const ElemSet& cls : fg.classes()) {
        const CycloNum v = mackey_value(G, chi.x, chi.stabilizer, chi.u, cls.front());
        for (Elem g : cls) chi.values[g] = v;
      }
      out.push_back(std::move(chi));
    }
  }
  return out;
}

bool ValidationReport::ok() const {
  if (checks.empty()) return false;
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

ValidationReport validate_table(const std::vector<IrredChar>& chars, const FiniteGroup& G) {
  ValidationReport report;
  const auto& classes = G.classes();

  {
    std::size_t sum = 0;
    for (const auto& chi : chars) sum += chi.degree * chi.degree;
    report.checks.push_back({"degree_sum", sum == G.order(),
                             "sum chi(e)^2 = " + std::to_string(sum) + ", |G| = " + std::to_string(G.order())});
  }
  report.checks.push_back({"class_count", chars.size() == classes.size(),
                           std::to_string(chars.size()) + " characters, " + std::to_string(classes.size()) +
                               " conjugacy classes"});
  {
    bool ok = true;
    std::string detail;
    for (const auto& chi : chars) {
      if (chi.values.size() != G.order() || !(chi(0) == CycloNum(static_cast<long>(chi.degree)))) {
        ok = false;
        detail = chi.label + "(e) differs from its degree";
        break;
      }
    }
    report.checks.push_back({"identity_value", ok, detail});
  }
  if (!report.ok()) return report;

  {
    bool ok = true;
    std::string detail;
    for (const auto& chi : chars) {
      for (const auto& cls : classes) {
        for (Elem g : cls) {
          if (!(chi(g) == chi(cls.front()))) {
            ok = false;
            detail = chi.label + " is not constant on the class of element " + std::to_string(cls.front());
          }
        }
      }
    }
    report.checks.push_back({"class_function", ok, detail});
  }
  {
    bool ok = true;
    std::string detail;
    for (const auto& chi : chars) {
      for (const auto& cls : classes) {
        const Elem g = cls.front();
        if (!(chi(G.inv(g)) == chi(g).conj())) {
          ok = false;
          detail = chi.label + "(g^-1) != conj(" + chi.label + "(g)) at element " + std::to_string(g);
        }
      }
    }
    report.checks.push_back({"inverse_conjugate", ok, detail});
  }
  {
    // sum over classes |C| chi_i(c) conj(chi_j(c)) = |G| delta_ij
    std::vector<std::vector<CycloNum>> conj_values(chars.size());
    for (std::size_t j = 0; j < chars.size(); ++j)
      for (const auto& cls : classes) conj_values[j].push_back(chars[j](cls.front()).conj());
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < chars.size() && ok; ++i) {
      for (std::size_t j = i; j < chars.size() && ok; ++j) {
        CycloNum acc;
        for (std::size_t c = 0; c < classes.size(); ++c)
          acc += chars[i](classes[c].front()) * conj_values[j][c] * mpq_class(static_cast<long>(classes[c].size()));
        const CycloNum expected(static_cast<long>(i == j ? G.order() : 0));
        if (!(acc == expected)) {
          ok = false;
          detail = "<" + chars[i].label + ", " + chars[j].label + "> = " + (acc / mpq_class(static_cast<long>(G.order()))).to_string();
        }
      }
    }
    report.checks.push_back({"first_orthogonality", ok, detail});
  }
  return report;
}

ElemSet zero_set(const Character& chi) {
  ElemSet out;
  for (Elem g = 0; g < chi.values.size(); ++g)
    if (chi.values[g].is_zero()) out.push_back(g);
  return out;
}

CharacterTable::CharacterTable(const SemidirectGroup& G)
    : CharacterTable(G, irred_chars(G)) {}

CharacterTable::CharacterTable(const SemidirectGroup& G, std::vector<IrredChar> chars)
    : chars_(std::move(chars)), report_(validate_table(chars_, G.group())), conductor_(character_conductor(G)) {}

}  // namespace ostar
