#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ostar/errors.hpp"
#include "ostar/job.hpp"
#include "ostar/semigroup.hpp"

namespace py = pybind11;
using namespace ostar;

namespace {

std::string report(const std::string& config) {
  const JobConfig cfg = parse_config(config);
  py::gil_scoped_release release;
  return run_job(cfg).dump();
}

std::string chartable_csv_for(const std::string& config) {
  const BuiltJob job = build_job(parse_config(config));
  const CharacterTable table(job.G);
  if (!table.validated()) throw ConsistencyError("character table failed validation");
  return chartable_csv(job.G, table);
}

bool sum_vanishes(unsigned N, const std::vector<long long>& counts) {
  if (counts.size() != N) throw std::invalid_argument("expected one count per N-th root of unity");
  return CycloNum::from_exponent_counts(N, counts).is_zero();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact o*-basis decisions for symmetry classes of tensors";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<BudgetError>(m, "BudgetError");
  py::register_exception<ConsistencyError>(m, "ConsistencyError");

  m.def("run_job", &report, py::arg("config"), "Run a JSON job description and return the JSON report");
  m.def("validate_config", [](const std::string& config) { build_job(parse_config(config)); }, py::arg("config"),
        "Raise ConfigError unless the job description is valid");
  m.def("chartable_csv", &chartable_csv_for, py::arg("config"), "Character table of the configured group as CSV");
  m.def("sum_vanishes", &sum_vanishes, py::arg("N"), py::arg("counts"),
        "Whether sum_k counts[k] * zeta_N^k is exactly zero");
  m.def("lam_leung_certifies_nonzero", &lam_leung_certifies_nonzero, py::arg("k"), py::arg("N"),
        "True iff k lies outside N0<Prime(N)>");
  m.def("semigroup_member",
        [](std::uint64_t k, std::vector<std::uint64_t> primes) { return semigroup_member(SemigroupQuery{k, std::move(primes)}); },
        py::arg("k"), py::arg("primes"));
  m.attr("EXIT_OK") = static_cast<int>(kExitOk);
  m.attr("EXIT_CONFIG") = static_cast<int>(kExitConfig);
  m.attr("EXIT_BUDGET") = static_cast<int>(kExitBudget);
  m.attr("EXIT_CONSISTENCY") = static_cast<int>(kExitConsistency);
}
