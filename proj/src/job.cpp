#include "ostar/job.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "ostar/errors.hpp"
#include "ostar/linalg.hpp"

namespace ostar {

namespace {

std::string at(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const Json& require_object(const Json& j, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path, "expected an object");
  return j;
}

void allow_keys(const Json& j, const std::string& path, std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : j.items()) {
    bool known = false;
    for (const char* allowed : keys) known |= k == allowed;
    if (!known) throw ConfigError(at(path, k), "unknown key");
  }
}

const Json& require_key(const Json& j, const std::string& path, const char* key) {
  if (!j.contains(key)) throw ConfigError(at(path, key), "missing required key");
  return j.at(key);
}

long get_int(const Json& j, const std::string& path, long min, long max = 1'000'000'000L) {
  if (!j.is_number_integer()) throw ConfigError(path, "expected an integer");
  const long v = j.get<long>();
  if (v < min || v > max)
    throw ConfigError(path, "value " + std::to_string(v) + " outside [" + std::to_string(min) + ", " +
                                std::to_string(max) + "]");
  return v;
}

std::vector<int> get_factors(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) throw ConfigError(path, "expected a nonempty list of cyclic factor orders");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(static_cast<int>(get_int(j[i], at(path, i), 1, 2000)));
  return out;
}

// 1-based image list on {1..degree}.
Perm get_perm(const Json& j, const std::string& path, std::optional<std::size_t> degree = std::nullopt) {
  if (!j.is_array() || j.empty()) throw ConfigError(path, "expected a permutation as a list of 1-based images");
  if (degree && j.size() != *degree)
    throw ConfigError(path, "expected " + std::to_string(*degree) + " images, got " + std::to_string(j.size()));
  Perm p;
  for (std::size_t i = 0; i < j.size(); ++i)
    p.push_back(static_cast<std::uint16_t>(get_int(j[i], at(path, i), 1, static_cast<long>(j.size())) - 1));
  if (!is_permutation(p)) throw ConfigError(path, "images do not form a permutation");
  return p;
}

std::vector<Perm> get_perms(const Json& j, const std::string& path, std::size_t count) {
  if (!j.is_array()) throw ConfigError(path, "expected a list of permutations");
  if (j.size() != count)
    throw ConfigError(path, "expected " + std::to_string(count) + " permutations (one per generator), got " +
                                std::to_string(j.size()));
  std::vector<Perm> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(get_perm(j[i], at(path, i)));
  return out;
}

SemidirectSpec parse_semidirect(const Json& root) {
  SemidirectSpec s;
  s.A = get_factors(require_key(root, "", "A"), "A");
  s.H = get_factors(require_key(root, "", "H"), "H");
  const Json& phi = require_key(root, "", "phi");
  if (!phi.is_array()) throw ConfigError("phi", "expected one entry per generator of H");
  if (phi.size() != s.H.size())
    throw ConfigError("phi", "expected " + std::to_string(s.H.size()) + " entries (one per generator of H), got " +
                                 std::to_string(phi.size()));
  for (std::size_t j = 0; j < phi.size(); ++j) {
    const std::string pj = at("phi", j);
    if (!phi[j].is_array() || phi[j].size() != s.A.size())
      throw ConfigError(pj, "expected " + std::to_string(s.A.size()) + " generator images (one per generator of A), got " +
                                (phi[j].is_array() ? std::to_string(phi[j].size()) : std::string("a non-list")));
    std::vector<std::vector<int>> images;
    for (std::size_t i = 0; i < phi[j].size(); ++i) {
      const std::string pji = at(pj, i);
      const Json& img = phi[j][i];
      std::vector<int> coords;
      if (img.is_number_integer() && s.A.size() == 1) {
        coords.push_back(static_cast<int>(get_int(img, pji, 0, s.A[0] - 1)));
      } else if (img.is_array() && img.size() == s.A.size()) {
        for (std::size_t c = 0; c < img.size(); ++c)
          coords.push_back(static_cast<int>(get_int(img[c], at(pji, c), 0, s.A[c] - 1)));
      } else {
        throw ConfigError(pji, "expected an element of A as " + std::to_string(s.A.size()) + " coordinates");
      }
      images.push_back(std::move(coords));
    }
    s.phi.push_back(std::move(images));
  }
  return s;
}

WreathConfig parse_wreath(const Json& j) {
  const std::string path = "wreath";
  require_object(j, path);
  allow_keys(j, path, {"A", "H", "omega", "action"});
  WreathConfig w;
  w.A = get_factors(require_key(j, path, "A"), at(path, "A"));
  w.H = get_factors(require_key(j, path, "H"), at(path, "H"));
  w.omega = static_cast<std::size_t>(get_int(require_key(j, path, "omega"), at(path, "omega"), 1, 64));
  const Json& action = require_key(j, path, "action");
  if (action.is_string()) {
    if (action.get<std::string>() != "regular") throw ConfigError(at(path, "action"), "expected \"regular\" or a list of permutations");
    std::size_t order = 1;
    for (int f : w.H) order *= static_cast<std::size_t>(f);
    if (order != w.omega)
      throw ConfigError(at(path, "omega"), "regular action needs omega = |H| = " + std::to_string(order));
    w.regular = true;
  } else {
    w.action = get_perms(action, at(path, "action"), w.H.size());
    for (std::size_t i = 0; i < w.action.size(); ++i)
      if (w.action[i].size() != w.omega)
        throw ConfigError(at(at(path, "action"), i), "expected a permutation of " + std::to_string(w.omega) + " points");
  }
  return w;
}

FamilyParams parse_family(const Json& j) {
  const std::string path = "family";
  require_object(j, path);
  if (j.size() != 1) throw ConfigError(path, "expected exactly one of dihedral, pq, z_group");
  const std::string name = j.begin().key();
  const Json& body = j.begin().value();
  const std::string p = at(path, name);
  require_object(body, p);
  FamilyParams f;
  if (name == "dihedral") {
    allow_keys(body, p, {"s"});
    f.family = Family::DihedralOddS;
    f.s = static_cast<int>(get_int(require_key(body, p, "s"), at(p, "s"), 3, 1000));
  } else if (name == "pq") {
    allow_keys(body, p, {"p", "q", "r"});
    f.family = Family::PQ;
    f.p = static_cast<int>(get_int(require_key(body, p, "p"), at(p, "p"), 2, 1000));
    f.q = static_cast<int>(get_int(require_key(body, p, "q"), at(p, "q"), 2, 1000));
    f.r = static_cast<int>(get_int(require_key(body, p, "r"), at(p, "r"), 1, 1000));
  } else if (name == "z_group") {
    allow_keys(body, p, {"s", "t", "r"});
    f.family = Family::ZGroup;
    f.s = static_cast<int>(get_int(require_key(body, p, "s"), at(p, "s"), 1, 1000));
    f.t = static_cast<int>(get_int(require_key(body, p, "t"), at(p, "t"), 1, 1000));
    f.r = static_cast<int>(get_int(require_key(body, p, "r"), at(p, "r"), 1, 1000));
  } else {
    throw ConfigError(p, "unknown family; expected dihedral, pq or z_group");
  }
  return f;
}

RepSpec parse_rep(const Json& j) {
  RepSpec r;
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "natural") {
      r.kind = RepKind::Natural;
    } else if (s == "regular") {
      r.kind = RepKind::Regular;
    } else {
      throw ConfigError("rep", "expected \"natural\", \"regular\" or {\"generators\": ...}");
    }
    return r;
  }
  require_object(j, "rep");
  allow_keys(j, "rep", {"generators"});
  const Json& g = require_key(j, "rep", "generators");
  require_object(g, "rep.generators");
  allow_keys(g, "rep.generators", {"A", "H"});
  r.kind = RepKind::Explicit;
  const Json& a = require_key(g, "rep.generators", "A");
  const Json& h = require_key(g, "rep.generators", "H");
  if (!a.is_array()) throw ConfigError("rep.generators.A", "expected a list of permutations");
  if (!h.is_array()) throw ConfigError("rep.generators.H", "expected a list of permutations");
  r.a_gens = get_perms(a, "rep.generators.A", a.size());
  r.h_gens = get_perms(h, "rep.generators.H", h.size());
  std::optional<std::size_t> degree;
  auto check = [&](const std::vector<Perm>& ps, const std::string& path) {
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (degree && ps[i].size() != *degree)
        throw ConfigError(at(path, i), "all generators must act on the same " + std::to_string(*degree) + " points");
      degree = ps[i].size();
    }
  };
  check(r.a_gens, "rep.generators.A");
  check(r.h_gens, "rep.generators.H");
  return r;
}

std::string group_path(const GroupSpec& g) {
  if (std::holds_alternative<SemidirectSpec>(g)) return "phi";
  if (std::holds_alternative<WreathConfig>(g)) return "wreath";
  return "family";
}

Json factors_json(const AbelianGroup& A) { return Json(A.factors()); }

Json mpz_json(const mpz_class& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

std::string approx_string(const CycloNum& x) {
  const auto z = x.to_complex();
  std::ostringstream out;
  out << std::setprecision(12);
  const double re = std::abs(z.real()) < 5e-13 ? 0.0 : z.real();
  const double im = std::abs(z.imag()) < 5e-13 ? 0.0 : z.imag();
  out << re;
  if (im != 0.0) out << (im < 0 ? "-" : "+") << std::abs(im) << "i";
  return out.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

Json labels(const SemidirectGroup& G, const std::vector<Elem>& elems) {
  Json out = Json::array();
  for (Elem e : elems) out.push_back(G.label(e));
  return out;
}

ScanOptions scan_options(const JobConfig& cfg) {
  ScanOptions s;
  s.index_budget = cfg.index_budget;
  s.threads = cfg.threads;
  return s;
}

DecideOptions decide_options(const JobConfig& cfg) {
  DecideOptions d;
  d.index_budget = cfg.index_budget;
  d.subgroup_bound = cfg.subgroup_bound;
  d.threads = cfg.threads;
  d.brute_force = cfg.brute_force;
  return d;
}

Json chartable_json(const SemidirectGroup& G, const CharacterTable& table) {
  Json out;
  out["conductor"] = table.conductor();
  Json classes = Json::array();
  for (const auto& cls : G.group().classes())
    classes.push_back({{"rep", G.label(cls.front())},
                       {"size", cls.size()},
                       {"element_order", G.group().element_order(cls.front())}});
  out["classes"] = classes;
  Json chars = Json::array();
  for (const auto& chi : table.chars()) {
    Json c;
    c["label"] = chi.label;
    c["degree"] = chi.degree;
    c["x"] = chi.x.exponents;
    c["u"] = chi.u.exponents;
    c["stabilizer_order"] = chi.stabilizer.size();
    Json values = Json::array();
    for (const auto& cls : G.group().classes()) values.push_back(to_json(chi(cls.front())));
    c["values"] = values;
    chars.push_back(c);
  }
  out["characters"] = chars;
  return out;
}

Json validation_json(const ValidationReport& report) {
  Json out = Json::array();
  for (const auto& c : report.checks) out.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return out;
}

// Affine action on A: generators of A translate, generators of H act through phi.
void attach_affine_rep(SemidirectGroup& G) {
  const AbelianGroup& A = G.A();
  const AbelianGroup& H = G.H();
  std::vector<Perm> a_gens, h_gens;
  for (std::size_t i = 0; i < A.rank(); ++i) {
    const std::size_t gi = A.encode(A.generator(i));
    Perm p(A.order());
    for (std::size_t x = 0; x < A.order(); ++x) p[x] = static_cast<std::uint16_t>(A.add(x, gi));
    a_gens.push_back(std::move(p));
  }
  for (std::size_t j = 0; j < H.rank(); ++j) {
    const Automorphism& phi = G.phi().at(H.neg(H.encode(H.generator(j))));
    Perm p(A.order());
    for (std::size_t x = 0; x < A.order(); ++x) p[x] = static_cast<std::uint16_t>(phi.apply(x));
    h_gens.push_back(std::move(p));
  }
  try {
    PermRep rep = G.make_rep(a_gens, h_gens, RepKind::Natural);
    if (rep.is_faithful()) G.set_natural_rep(std::move(rep));
  } catch (const std::invalid_argument&) {
  }
}

}  // namespace

Json to_json(const CycloNum& x) {
  Json coeffs = Json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(Json::array({mpz_json(c.get_num()), mpz_json(c.get_den())}));
  return {{"conductor", x.conductor()}, {"coeffs", coeffs}, {"approx", approx_string(x)}};
}

Json to_json(const MultiIndex& alpha) { return Json(alpha.entries); }

Json to_json(const Verdict& v, const SemidirectGroup& G, const CharacterTable& table) {
  Json out;
  out["char"] = table[v.char_index].label;
  out["degree"] = table[v.char_index].degree;
  out["status"] = to_string(v.status);
  out["justification"] = to_string(v.justification);
  Json witness = Json::object();
  if (v.stabilizer_search) {
    Json s;
    s["outcome"] = to_string(v.stabilizer_search->outcome);
    s["alpha"] = v.stabilizer_search->alpha ? to_json(*v.stabilizer_search->alpha) : Json(nullptr);
    s["fast_path"] = v.stabilizer_search->fast_path;
    witness["trivial_stabilizer"] = s;
  }
  if (v.semigroup)
    witness["semigroup"] = {{"k", v.semigroup->k}, {"primes", v.semigroup->primes}, {"member", v.semigroup->member}};
  if (v.witness_s_alpha) witness["s_alpha"] = *v.witness_s_alpha;
  if (v.subgroup)
    witness["subgroup"] = {{"order", v.subgroup->subgroup.size()},
                           {"index", v.subgroup->index},
                           {"elements", labels(G, v.subgroup->subgroup)}};
  if (v.failing_orbit) witness["failing_orbit"] = to_json(*v.failing_orbit);
  out["witness"] = witness;
  if (v.justification == Justification::BruteForce) {
    Json per = Json::array();
    for (const auto& oc : v.per_orbit)
      per.push_back({{"rep", to_json(oc.rep)},
                     {"s_alpha", oc.s_alpha},
                     {"clique", oc.clique ? labels(G, *oc.clique) : Json(nullptr)}});
    out["per_orbit"] = per;
  }
  out["zero_dimension"] = v.zero_dimension;
  out["notes"] = v.notes;
  return out;
}

JobConfig parse_config(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ConfigError("", std::string("malformed JSON: ") + e.what());
  }
  require_object(root, "");
  allow_keys(root, "", {"A", "H", "phi", "wreath", "family", "rep", "n", "m", "tasks", "budgets", "threads", "verify",
                        "brute_force", "output"});

  JobConfig cfg;
  const bool semidirect = root.contains("A") || root.contains("H") || root.contains("phi");
  const int kinds = int(semidirect) + int(root.contains("wreath")) + int(root.contains("family"));
  if (kinds != 1) throw ConfigError("", "expected exactly one group definition: A/H/phi, wreath or family");
  if (semidirect) {
    cfg.group = parse_semidirect(root);
  } else if (root.contains("wreath")) {
    cfg.group = parse_wreath(root.at("wreath"));
  } else {
    cfg.group = parse_family(root.at("family"));
  }

  if (root.contains("rep")) cfg.rep = parse_rep(root.at("rep"));
  if (root.contains("n")) cfg.n = static_cast<int>(get_int(root.at("n"), "n", 1, 64));
  if (root.contains("m")) cfg.m = static_cast<std::size_t>(get_int(root.at("m"), "m", 1, 64));

  std::set<std::string> tasks;
  if (root.contains("tasks")) {
    const Json& t = root.at("tasks");
    if (!t.is_array()) throw ConfigError("tasks", "expected a list of task names");
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (!t[i].is_string()) throw ConfigError(at("tasks", i), "expected a task name");
      const auto name = t[i].get<std::string>();
      if (std::find(kTaskOrder.begin(), kTaskOrder.end(), name) == kTaskOrder.end())
        throw ConfigError(at("tasks", i), "unknown task \"" + name + "\"; expected chartable, orbits, dims, decide or verify");
      tasks.insert(name);
    }
  }
  if (root.contains("verify")) {
    if (!root.at("verify").is_boolean()) throw ConfigError("verify", "expected a boolean");
    if (root.at("verify").get<bool>()) tasks.insert("verify");
  }
  if (root.contains("brute_force")) {
    if (!root.at("brute_force").is_boolean()) throw ConfigError("brute_force", "expected a boolean");
    cfg.brute_force = root.at("brute_force").get<bool>();
  }
  for (const auto& name : kTaskOrder)
    if (tasks.count(name)) cfg.tasks.push_back(name);

  if (root.contains("budgets")) {
    const Json& b = require_object(root.at("budgets"), "budgets");
    allow_keys(b, "budgets", {"index", "subgroups"});
    if (b.contains("index"))
      cfg.index_budget = static_cast<std::uint64_t>(get_int(b.at("index"), "budgets.index", 1, 4'000'000'000'000L));
    if (b.contains("subgroups"))
      cfg.subgroup_bound = static_cast<std::size_t>(get_int(b.at("subgroups"), "budgets.subgroups", 1, kMaxGroupOrder));
  }
  if (root.contains("threads")) cfg.threads = static_cast<unsigned>(get_int(root.at("threads"), "threads", 1, 256));

  if (root.contains("output")) {
    const Json& o = require_object(root.at("output"), "output");
    allow_keys(o, "output", {"path", "format", "gram"});
    if (o.contains("path")) {
      if (!o.at("path").is_string()) throw ConfigError("output.path", "expected a string");
      cfg.out_path = o.at("path").get<std::string>();
    }
    if (o.contains("format")) {
      if (!o.at("format").is_string() || (o.at("format") != "json" && o.at("format") != "csv"))
        throw ConfigError("output.format", "expected \"json\" or \"csv\"");
      cfg.format = o.at("format").get<std::string>();
    }
    if (o.contains("gram")) {
      const Json& g = require_object(o.at("gram"), "output.gram");
      allow_keys(g, "output.gram", {"char", "alpha"});
      GramRequest req;
      req.char_index = static_cast<std::size_t>(get_int(require_key(g, "output.gram", "char"), "output.gram.char", 0, 100000));
      const Json& a = require_key(g, "output.gram", "alpha");
      if (!a.is_array() || a.empty()) throw ConfigError("output.gram.alpha", "expected a multi-index");
      if (!cfg.n) throw ConfigError("n", "required by output.gram");
      req.alpha.n = *cfg.n;
      for (std::size_t i = 0; i < a.size(); ++i)
        req.alpha.entries.push_back(static_cast<int>(get_int(a[i], at("output.gram.alpha", i), 1, *cfg.n)));
      cfg.gram = req;
    }
  }

  for (const auto& t : cfg.tasks)
    if (t != "chartable" && !cfg.n) throw ConfigError("n", "required by task \"" + t + "\"");
  return cfg;
}

BuiltJob build_job(const JobConfig& cfg) {
  std::optional<SemidirectGroup> G;
  try {
    if (const auto* s = std::get_if<SemidirectSpec>(&cfg.group)) {
      AbelianGroup A(s->A), H(s->H);
      std::vector<Automorphism> images;
      for (std::size_t j = 0; j < s->phi.size(); ++j) {
        std::vector<AbElement> gens;
        for (const auto& c : s->phi[j]) gens.push_back(AbElement{c});
        try {
          images.push_back(Automorphism::from_generator_images(A, gens));
        } catch (const std::invalid_argument& e) {
          throw ConfigError(at("phi", j), e.what());
        }
      }
      G.emplace(build_semidirect(A, H, ActionHom(A, H, images)));
      attach_affine_rep(*G);
    } else if (const auto* w = std::get_if<WreathConfig>(&cfg.group)) {
      WreathSpec spec = w->regular ? WreathSpec::regular(AbelianGroup(w->A), AbelianGroup(w->H))
                                   : WreathSpec{AbelianGroup(w->A), AbelianGroup(w->H), w->omega, w->action};
      G.emplace(build_wreath(spec));
    } else {
      G.emplace(build_family(std::get<FamilyParams>(cfg.group)));
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(group_path(cfg.group), e.what());
  }

  PermRep rep;
  switch (cfg.rep.kind) {
    case RepKind::Natural:
      if (!G->natural_rep())
        throw ConfigError("rep", "this group has no faithful natural representation; use \"regular\" or explicit generators");
      rep = *G->natural_rep();
      break;
    case RepKind::Regular:
      rep = PermRep::regular(G->group());
      break;
    case RepKind::Explicit:
      if (cfg.rep.a_gens.size() != G->A().rank())
        throw ConfigError("rep.generators.A", "expected " + std::to_string(G->A().rank()) + " permutations (one per generator of A), got " +
                                                  std::to_string(cfg.rep.a_gens.size()));
      if (cfg.rep.h_gens.size() != G->H().rank())
        throw ConfigError("rep.generators.H", "expected " + std::to_string(G->H().rank()) + " permutations (one per generator of H), got " +
                                                  std::to_string(cfg.rep.h_gens.size()));
      try {
        rep = G->make_rep(cfg.rep.a_gens, cfg.rep.h_gens, RepKind::Explicit);
      } catch (const std::invalid_argument& e) {
        throw ConfigError("rep.generators", e.what());
      }
      break;
  }
  if (cfg.m) {
    if (*cfg.m < rep.degree())
      throw ConfigError("m", "m = " + std::to_string(*cfg.m) + " is below the representation degree " + std::to_string(rep.degree()));
    rep = rep.padded(*cfg.m);
  }
  if (cfg.gram && cfg.gram->alpha.m() != rep.degree())
    throw ConfigError("output.gram.alpha", "expected " + std::to_string(rep.degree()) + " entries");
  return BuiltJob{std::move(*G), std::move(rep)};
}

Json run_job(const JobConfig& cfg) {
  const BuiltJob job = build_job(cfg);
  const SemidirectGroup& G = job.G;
  const PermRep& rep = job.rep;
  const CharacterTable table(G);

  Json report;
  report["group"] = {{"description", G.description()},
                     {"origin", to_string(G.origin())},
                     {"order", G.order()},
                     {"A", factors_json(G.A())},
                     {"H", factors_json(G.H())},
                     {"abelian", G.group().is_abelian()}};
  report["rep"] = {{"kind", to_string(rep.kind())}, {"degree", rep.degree()}, {"faithful", rep.is_faithful()}};
  if (cfg.n) report["n"] = *cfg.n;
  report["tasks"] = cfg.tasks;
  report["validation"] = validation_json(table.report());
  if (!table.validated()) throw ConsistencyError("character table failed validation");
  if (cfg.gram && cfg.gram->char_index >= table.size())
    throw ConfigError("output.gram.char", "character index out of range (" + std::to_string(table.size()) + " characters)");

  auto has = [&](const char* t) { return std::find(cfg.tasks.begin(), cfg.tasks.end(), t) != cfg.tasks.end(); };
  const ScanOptions scan = scan_options(cfg);
  const DecideOptions dopts = decide_options(cfg);

  if (has("chartable")) report["chartable"] = chartable_json(G, table);

  std::vector<Orbit> orbits;
  if (has("orbits") || has("dims")) orbits = enumerate_orbits(G.group(), rep, *cfg.n, scan);
  if (has("orbits")) {
    Json o;
    o["count"] = orbits.size();
    Json records = Json::array();
    for (const auto& orb : orbits)
      records.push_back({{"rep", to_json(orb.rep)}, {"size", orb.size}, {"stabilizer_order", orb.stabilizer.size()}});
    o["records"] = records;
    report["orbits"] = o;
  }

  if (has("dims")) {
    Json dims = Json::array();
    mpz_class total = 0;
    for (const auto& chi : table.chars()) {
      const mpz_class dim = dim_symmetry_class(G.group(), rep, chi, *cfg.n);
      long sum = 0;
      Json delta = Json::array();
      std::map<ElemSet, std::size_t> rank_memo;
      for (const auto& orb : orbits) {
        const OrbitRecord r = annotate_orbit(orb, chi);
        if (!r.in_delta_bar) continue;
        sum += r.s_alpha;
        Json entry = {{"rep", to_json(r.rep)}, {"stabilizer_order", r.stabilizer.size()}, {"s_alpha", r.s_alpha}};
        if (has("verify")) {
          auto it = rank_memo.find(r.stabilizer);
          if (it == rank_memo.end())
            it = rank_memo.emplace(r.stabilizer, exact_rank(gram(r.rep, chi, G.group(), rep).entries)).first;
          if (it->second != static_cast<std::size_t>(r.s_alpha))
            throw ConsistencyError("Gram rank " + std::to_string(it->second) + " differs from s_alpha " +
                                   std::to_string(r.s_alpha) + " at " + r.rep.to_string());
          entry["gram_rank"] = it->second;
        }
        delta.push_back(entry);
      }
      if (dim != sum)
        throw ConsistencyError("dim V_chi = " + dim.get_str() + " but the orbital dimensions sum to " + std::to_string(sum) +
                               " for " + chi.label);
      total += dim;
      dims.push_back({{"char", chi.label}, {"degree", chi.degree}, {"dim", mpz_json(dim)}, {"sum_s_alpha", sum},
                      {"consistent", true}, {"delta_bar", delta}});
    }
    report["dims"] = {{"per_char", dims}, {"total", mpz_json(total)}};
  }

  std::vector<Verdict> verdicts;
  if (has("decide") || has("verify"))
    for (std::size_t i = 0; i < table.size(); ++i) verdicts.push_back(decide(G, rep, table, i, *cfg.n, dopts));
  if (has("decide")) {
    Json out = Json::array();
    for (const auto& v : verdicts) out.push_back(to_json(v, G, table));
    report["decide"] = out;
  }
  if (has("verify")) {
    Json out = Json::array();
    for (std::size_t i = 0; i < table.size(); ++i) {
      Verdict b = brute_force_verify(G.group(), rep, table[i], *cfg.n, dopts);
      b.char_index = i;
      const Verdict& t = verdicts[i];
      Json entry;
      entry["char"] = table[i].label;
      entry["decision"] = to_string(t.status);
      entry["decision_justification"] = to_string(t.justification);
      entry["brute_force"] = to_json(b, G, table);
      if (t.status != Status::Inconclusive && b.status != Status::Inconclusive) {
        if (t.status != b.status)
          throw ConsistencyError(table[i].label + ": " + to_string(t.justification) + " says " + to_string(t.status) +
                                 " but brute force says " + to_string(b.status));
        entry["agrees"] = true;
      } else {
        entry["agrees"] = nullptr;
      }
      out.push_back(entry);
    }
    report["verify"] = out;
  }

  if (cfg.gram) {
    const auto& chi = table[cfg.gram->char_index];
    GramMatrix M;
    try {
      M = gram(cfg.gram->alpha, chi, G.group(), rep);
    } catch (const std::invalid_argument& e) {
      throw ConfigError("output.gram.alpha", e.what());
    }
    Json entries = Json::array();
    for (const auto& row : M.entries) {
      Json r = Json::array();
      for (const auto& v : row) r.push_back(to_json(v));
      entries.push_back(r);
    }
    report["gram"] = {{"char", chi.label},
                      {"alpha", to_json(M.alpha)},
                      {"coset_reps", labels(G, M.coset_reps)},
                      {"entries", entries},
                      {"rank", exact_rank(M.entries)}};
  }
  return report;
}

std::string chartable_csv(const SemidirectGroup& G, const CharacterTable& table) {
  std::ostringstream out;
  out << "character,degree";
  for (const auto& cls : G.group().classes()) {
    const std::string l = G.label(cls.front());
    out << "," << csv_field(l) << "," << csv_field(l + " approx");
  }
  out << "\n";
  for (const auto& chi : table.chars()) {
    out << chi.label << "," << chi.degree;
    for (const auto& cls : G.group().classes()) {
      const CycloNum& v = chi(cls.front());
      Json exact = to_json(v);
      exact.erase("approx");
      out << "," << csv_field(exact.dump()) << "," << csv_field(approx_string(v));
    }
    out << "\n";
  }
  return out.str();
}

std::string orbits_csv(const SemidirectGroup& G, const PermRep& rep, const CharacterTable& table, int n,
                       const ScanOptions& opts) {
  std::ostringstream out;
  out << "rep,orbit_size,stabilizer_order,character,s_alpha,in_delta_bar\n";
  for (const auto& orb : enumerate_orbits(G.group(), rep, n, opts))
    for (const auto& chi : table.chars()) {
      const OrbitRecord r = annotate_orbit(orb, chi);
      out << csv_field(r.rep.to_string()) << "," << r.orbit_size << "," << r.stabilizer.size() << "," << chi.label << ","
          << r.s_alpha << "," << (r.in_delta_bar ? "true" : "false") << "\n";
    }
  return out.str();
}

}  // namespace ostar
