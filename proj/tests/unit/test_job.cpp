#include <doctest.h>

#include "ostar/errors.hpp"
#include "ostar/job.hpp"

using namespace ostar;

namespace {

std::string config_error_path(const std::string& text) {
  try {
    const JobConfig cfg = parse_config(text);
    build_job(cfg);
  } catch (const ConfigError& e) {
    return e.path();
  }
  return "<accepted>";
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("parse_config examples") {
  const JobConfig d = parse_config(R"({"family":{"dihedral":{"s":3}},"rep":"natural","n":3,"tasks":["decide"]})");
  CHECK(std::holds_alternative<FamilyParams>(d.group));
  CHECK(d.n == 3);
  CHECK(d.tasks == std::vector<std::string>{"decide"});
  CHECK(build_job(d).G.order() == 6);

  const JobConfig w = parse_config(R"({"wreath":{"A":[2],"H":[2],"omega":2,"action":"regular"}})");
  const BuiltJob wj = build_job(w);
  CHECK(wj.G.order() == 8);
  CHECK(wj.rep.degree() == 4);

  const JobConfig s = parse_config(R"({"A":[7],"H":[3],"phi":[[2]],"n":2,"tasks":["verify","dims"]})");
  CHECK(s.tasks == std::vector<std::string>{"dims", "verify"});
  const BuiltJob sj = build_job(s);
  CHECK(sj.G.order() == 21);
  CHECK(sj.rep.degree() == 7);
  CHECK(sj.rep.is_faithful());
}

TEST_CASE("config errors name a path") {
  CHECK(config_error_path(R"({"A":[7],"H":[3],"phi":[[2,1]]})") == "phi[0]");
  CHECK(config_error_path(R"({"A":[7],"H":[3],"phi":[[2],[2]]})") == "phi");
  CHECK(config_error_path(R"({"A":[7],"H":[3],"phi":[[3]]})") == "phi");
  CHECK(config_error_path(R"({"A":[7,7],"H":[3],"phi":[[[2,0],[0,9]]]})") == "phi[0][1][1]");
  CHECK(config_error_path(R"({"family":{"dihedral":{"s":3}},"bogus":1})") == "bogus");
  CHECK(config_error_path(R"({"family":{"dihedral":{"s":3,"t":1}}})") == "family.dihedral.t");
  CHECK(config_error_path(R"({"family":{"cyclic":{"s":3}}})") == "family.cyclic");
  CHECK(config_error_path(R"({"family":{"dihedral":{"s":3}},"tasks":["decide"]})") == "n");
  CHECK(config_error_path(R"({"family":{"dihedral":{"s":3}},"tasks":["nope"]})") == "tasks[0]");
  CHECK(config_error_path(R"({"family":{"dihedral":{"s":3}},"m":2})") == "m");
  CHECK(config_error_path(R"({"wreath":{"A":[2],"H":[2],"omega":3,"action":"regular"}})") == "wreath.omega");
  CHECK(config_error_path(R"({"wreath":{"A":[2],"H":[2],"omega":2,"action":[[1,1]]}})") == "wreath.action[0]");
  CHECK(config_error_path(R"({"family":{"dihedral":{"s":3}},"A":[2]})") == "");
  CHECK(config_error_path("{not json") == "");
  CHECK(config_error_path(R"({"family":{"dihedral":{"s":3}},"rep":{"generators":{"A":[[2,3,1]],"H":[]}}})") ==
        "rep.generators.H");
  CHECK(config_error_path(R"({"family":{"dihedral":{"s":3}},"rep":{"generators":{"A":[[2,3,1]],"H":[[1,3,2]]}}})") ==
        "<accepted>");
}

TEST_CASE("run_job dihedral decide") {
  const Json r = run_job(parse_config(R"({"family":{"dihedral":{"s":3}},"rep":"natural","n":3,"tasks":["decide"]})"));
  const Json& verdicts = r.at("decide");
  REQUIRE(verdicts.size() == 3);
  int admits = 0, main_theorem = 0;
  for (const auto& v : verdicts) {
    if (v.at("status") == "Admits") ++admits;
    if (v.at("status") == "NotAdmits" && v.at("justification") == "MainTheorem") ++main_theorem;
  }
  CHECK(admits == 2);
  CHECK(main_theorem == 1);
}

TEST_CASE("run_job order-21 dims") {
  const Json r = run_job(parse_config(R"({"family":{"pq":{"p":3,"q":7,"r":2}},"n":2,"m":7,"tasks":["dims"]})"));
  const Json& per = r.at("dims").at("per_char");
  CHECK(per.size() == 5);
  long total = 0;
  for (const auto& c : per) {
    CHECK(c.at("dim") == c.at("sum_s_alpha"));
    total += c.at("dim").get<long>();
  }
  CHECK(r.at("dims").at("total").get<long>() == total);
}

TEST_CASE("empty task list validates only") {
  const Json r = run_job(parse_config(R"({"family":{"dihedral":{"s":5}}})"));
  CHECK(r.contains("validation"));
  CHECK_FALSE(r.contains("decide"));
  for (const auto& c : r.at("validation")) CHECK(c.at("passed") == true);
}

TEST_CASE("verify pass and gram output") {
  const Json r = run_job(parse_config(
      R"({"family":{"dihedral":{"s":3}},"n":2,"tasks":["decide","verify"],"output":{"gram":{"char":2,"alpha":[1,1,2]}}})"));
  for (const auto& v : r.at("verify")) {
    const Json& b = v.at("brute_force");
    CHECK((b.at("status") != "Inconclusive" || b.at("zero_dimension") == true));
  }
  const Json& g = r.at("gram");
  CHECK(g.at("entries").size() == 3);
  CHECK(g.at("rank").get<std::size_t>() <= 3);
  const Json& x = g.at("entries")[0][0];
  CHECK(x.contains("conductor"));
  CHECK(x.at("coeffs").is_array());
}

TEST_CASE("reports do not depend on thread count") {
  const std::string base = R"({"family":{"dihedral":{"s":5}},"n":3,"tasks":["orbits","dims","decide"],"threads":)";
  const std::string one = run_job(parse_config(base + "1}")).dump(2);
  const std::string four = run_job(parse_config(base + "4}")).dump(2);
  CHECK(one == four);
}

TEST_CASE("budget refusal") {
  CHECK_THROWS_AS(run_job(parse_config(R"({"family":{"dihedral":{"s":7}},"n":3,"tasks":["orbits"],"budgets":{"index":100}})")),
                  BudgetError);
}

TEST_CASE("cyclotomic JSON encoding") {
  const Json j = to_json(root_of_unity(3, 1));
  CHECK(j.at("conductor") == 3);
  CHECK(j.at("coeffs").dump() == "[[0,1],[1,1]]");
  CHECK(to_json(CycloNum(mpq_class(-1, 3))).at("coeffs").dump() == "[[-1,3]]");
}

TEST_CASE("character table CSV") {
  const BuiltJob j = build_job(parse_config(R"({"family":{"dihedral":{"s":3}}})"));
  const CharacterTable t(j.G);
  const std::string csv = chartable_csv(j.G, t);
  std::size_t lines = 0;
  for (char c : csv) lines += c == '\n';
  CHECK(lines == 4);
  CHECK(csv.rfind("character,degree", 0) == 0);
}

}
