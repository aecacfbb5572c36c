#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ostar/decide.hpp"

namespace ostar {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitConfig = 2, kExitBudget = 3, kExitConsistency = 4 };

struct SemidirectSpec {
  std::vector<int> A;
  std::vector<int> H;
  // phi[j][i] = image of the i-th generator of A under the j-th generator of H.
  std::vector<std::vector<std::vector<int>>> phi;
};

struct WreathConfig {
  std::vector<int> A;
  std::vector<int> H;
  std::size_t omega = 1;
  bool regular = false;
  std::vector<Perm> action;  // 0-based, one per generator of H
};

using GroupSpec = std::variant<SemidirectSpec, WreathConfig, FamilyParams>;

struct RepSpec {
  RepKind kind = RepKind::Natural;
  std::vector<Perm> a_gens;  // 0-based
  std::vector<Perm> h_gens;
};

struct GramRequest {
  std::size_t char_index = 0;
  MultiIndex alpha;
};

inline const std::vector<std::string> kTaskOrder = {"chartable", "orbits", "dims", "decide", "verify"};

struct JobConfig {
  GroupSpec group;
  RepSpec rep;
  std::optional<int> n;
  std::optional<std::size_t> m;
  std::vector<std::string> tasks;  // normalized into kTaskOrder order
  std::uint64_t index_budget = kDefaultIndexBudget;
  std::size_t subgroup_bound = kDefaultSubgroupBound;
  unsigned threads = 1;
  bool brute_force = false;  // let decide fall through to the brute-force oracle
  std::optional<std::string> out_path;
  std::string format = "json";
  std::optional<GramRequest> gram;
};

// Strict parse: unknown keys, wrong types and dimension mismatches raise
// ConfigError with a path into the document.
JobConfig parse_config(std::string_view text);

struct BuiltJob {
  SemidirectGroup G;
  PermRep rep;
};

// Builds the group and representation; builder rejections become
// ConfigError pointing at the group or rep section.
BuiltJob build_job(const JobConfig& cfg);

// Runs the requested tasks in dependency order. Throws BudgetError or
// ConsistencyError; the report never depends on the thread count.
Json run_job(const JobConfig& cfg);

Json to_json(const CycloNum& x);
Json to_json(const MultiIndex& alpha);
Json to_json(const Verdict& v, const SemidirectGroup& G, const CharacterTable& table);

// Rows = characters, columns = conjugacy-class representatives; each class
// contributes an exact column ({conductor, coeffs} as JSON) and a float
// approximation column.
std::string chartable_csv(const SemidirectGroup& G, const CharacterTable& table);

// One row per (orbit, character): rep, orbit size, |G_alpha|, s_alpha, in Delta-bar.
std::string orbits_csv(const SemidirectGroup& G, const PermRep& rep, const CharacterTable& table, int n,
                       const ScanOptions& opts);

}  // namespace ostar
