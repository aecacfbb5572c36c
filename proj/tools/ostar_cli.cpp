#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ostar/errors.hpp"
#include "ostar/job.hpp"

using namespace ostar;

namespace {

struct Flags {
  std::string config_path;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::optional<std::uint64_t> budget;
  std::optional<unsigned> threads;
  bool verify = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("", "cannot read config file " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_output(const std::optional<std::string>& path, const std::string& text) {
  if (!path) {
    std::cout << text;
    return;
  }
  std::ofstream out(*path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + *path);
  out << text;
}

void summarize(const Json& report) {
  std::cerr << report["group"]["description"].get<std::string>() << ", |G| = " << report["group"]["order"]
            << ", rep degree " << report["rep"]["degree"] << "\n";
  if (report.contains("decide"))
    for (const auto& v : report["decide"])
      std::cerr << "  " << v["char"].get<std::string>() << " (degree " << v["degree"] << "): "
                << v["status"].get<std::string>() << " [" << v["justification"].get<std::string>() << "]\n";
  if (report.contains("verify"))
    for (const auto& v : report["verify"])
      std::cerr << "  verify " << v["char"].get<std::string>() << ": brute force "
                << v["brute_force"]["status"].get<std::string>() << "\n";
}

JobConfig load(const Flags& f) {
  JobConfig cfg = parse_config(read_file(f.config_path));
  if (f.budget) cfg.index_budget = *f.budget;
  if (f.threads) cfg.threads = *f.threads;
  if (f.out) cfg.out_path = f.out;
  if (f.format) cfg.format = *f.format;
  return cfg;
}

void add_task(JobConfig& cfg, const std::string& task) {
  std::vector<std::string> tasks;
  for (const auto& t : kTaskOrder)
    if (t == task || std::find(cfg.tasks.begin(), cfg.tasks.end(), t) != cfg.tasks.end()) tasks.push_back(t);
  cfg.tasks = tasks;
  if (task != "chartable" && !cfg.n) throw ConfigError("n", "required by task \"" + task + "\"");
}

int execute(const std::string& command, const Flags& flags) {
  JobConfig cfg = load(flags);
  if (flags.verify) add_task(cfg, "verify");

  if (command == "validate") {
    cfg.tasks.clear();
    cfg.gram.reset();
    if (cfg.format != "json") throw ConfigError("output.format", "validate only emits JSON");
    const Json report = run_job(cfg);
    write_output(cfg.out_path, report.dump(2) + "\n");
    std::cerr << "config valid; character table passed " << report["validation"].size() << " checks\n";
    return kExitOk;
  }

  if (command == "chartable") {
    cfg.tasks = {"chartable"};
    if (flags.verify) add_task(cfg, "verify");
    if (cfg.format == "csv") {
      const BuiltJob job = build_job(cfg);
      const CharacterTable table(job.G);
      if (!table.validated()) throw ConsistencyError("character table failed validation");
      write_output(cfg.out_path, chartable_csv(job.G, table));
      return kExitOk;
    }
  } else if (command == "decide") {
    add_task(cfg, "decide");
  }

  if (cfg.format == "csv") {
    if (std::find(cfg.tasks.begin(), cfg.tasks.end(), "orbits") == cfg.tasks.end())
      throw ConfigError("output.format", "CSV output covers tables only: use the chartable command or the orbits task");
    const BuiltJob job = build_job(cfg);
    const CharacterTable table(job.G);
    if (!table.validated()) throw ConsistencyError("character table failed validation");
    ScanOptions scan;
    scan.index_budget = cfg.index_budget;
    scan.threads = cfg.threads;
    write_output(cfg.out_path, orbits_csv(job.G, job.rep, table, *cfg.n, scan));
    return kExitOk;
  }

  const Json report = run_job(cfg);
  write_output(cfg.out_path, report.dump(2) + "\n");
  summarize(report);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orthogonal bases of decomposable symmetrized tensors for abelian-by-abelian groups"};
  app.require_subcommand(1);
  Flags flags;
  std::string command;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"validate", "Parse the config, build the group and validate its character table"},
      {"run", "Run the tasks listed in the config"},
      {"chartable", "Emit the exact character table"},
      {"decide", "Decide o*-basis existence for every irreducible character"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("config", flags.config_path, "JSON job description")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", flags.out, "Write the report here instead of stdout");
    sub->add_option("--format", flags.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--budget", flags.budget, "Index budget: largest n^m to enumerate")->check(CLI::PositiveNumber);
    sub->add_option("--threads", flags.threads, "Worker threads")->check(CLI::Range(1u, 256u));
    sub->add_flag("--verify", flags.verify, "Append an independent brute-force pass");
    sub->callback([&command, name = name] { command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    return execute(command, flags);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const BudgetError& e) {
    std::cerr << "budget refused: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return kExitConsistency;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}
