#include <catch2/catch_amalgamated.hpp>

#include "commands.hpp"
#include "hocoh/errors.hpp"

using namespace hocoh;
using namespace hocoh::cli;
using nlohmann::json;

namespace {

ProblemSpec c2_f2() {
  return parse_problem(R"({"field": "F2", "group": {"generators": [[1, 0]]},
                           "modules": [{"name": "trivial", "kind": "trivial"},
                                       {"name": "zero", "kind": "trivial", "dim": 0}],
                           "budgets": {"q_max": 2, "p_max": 2}})");
}

std::string location_of(const std::string& document) {
  try {
    const ProblemSpec spec = parse_problem(document);
    run_command("info", spec, {});
  } catch (const InputError& e) {
    return e.where();
  }
  return "accepted";
}

}  // namespace

TEST_CASE("problem parsing errors are located", "[cli]") {
  CHECK(location_of("{\"field\": ").rfind("byte", 0) == 0);
  CHECK(location_of(R"({"group": {"generators": []}})") == "/");
  CHECK(location_of(R"({"field": "F4", "group": {"generators": []}})") == "/field");
  CHECK(location_of(R"({"field": "Q", "group": {"generators": [[0, 0]]}})") == "/group/generators/0");
  CHECK(location_of(R"({"field": "Q", "group": {"generators": [[1, 0], [0, 2, 1]]}})") == "/group/generators/1");
  CHECK(location_of(R"({"field": "Q", "group": {"generators": [[1, 0]]}, "sigma": {"generators": [3]}})") ==
        "/sigma/generators/0");
  CHECK(location_of(R"({"field": "Q", "group": {"generators": [[1, 0]]},
                        "modules": [{"name": "m", "kind": "explicit", "dim": 1, "action": [[[0.5]]]}]})") ==
        "/modules/0/action/0/0/0");
  CHECK(location_of(R"({"field": "Q", "group": {"generators": [[1, 0]]},
                        "modules": [{"name": "m", "kind": "explicit", "dim": 1, "action": [[["x"]]]}]})") ==
        "/modules/0/action/0/0/0");
  CHECK(location_of(R"({"field": "Q", "group": {"generators": [[1, 0]]},
                        "modules": [{"name": "m", "kind": "explicit", "dim": 1, "action": [[["2"]]]}]})") ==
        "/modules/0/action");
  CHECK(location_of(R"({"field": "Q", "group": {"generators": [[1, 0]]},
                        "modules": [{"name": "m", "kind": "weird"}]})") == "/modules/0/kind");
  CHECK(location_of(R"({"field": "Q", "group": {"generators": [[1, 0]]},
                        "modules": [{"name": "m", "kind": "trivial"}, {"name": "m", "kind": "sign"}]})") ==
        "/modules/1/name");
  CHECK(location_of(R"({"field": "Q", "group": {"generators": [[1, 0]]}, "budgets": {"p_max": 9}})") ==
        "/budgets/p_max");
  CHECK(location_of(R"({"field": "Q", "group": {"generators": [[1, 0]]}})") == "accepted");
}

TEST_CASE("non-normal sigma reports its witness", "[cli]") {
  const ProblemSpec spec =
      parse_problem(R"({"field": "Q", "group": {"generators": [[1, 2, 0], [1, 0, 2]]}, "sigma": {"generators": [1]}})");
  CHECK_THROWS_AS(run_command("info", spec, {}), NotNormal);
}

TEST_CASE("info", "[cli]") {
  const auto trivial = run_command("info", parse_problem(R"({"field": "Q", "group": {"degree": 1, "generators": []}})"), {});
  CHECK(trivial.report["setup"]["group_order"] == 1);
  const auto s3a3 = run_command(
      "info",
      parse_problem(R"({"field": "F2", "group": {"generators": [[1, 2, 0], [1, 0, 2]]}, "sigma": {"generators": [0]}})"),
      {});
  CHECK(s3a3.report["setup"]["group_order"] == 6);
  CHECK(s3a3.report["setup"]["sigma_order"] == 3);
  CHECK(s3a3.report["setup"]["sigma_normal"] == true);
}

TEST_CASE("ideals", "[cli]") {
  const auto r = run_command("ideals", c2_f2(), {.recheck = true});
  const json& rows = r.report["filtration"]["rows"];
  CHECK(rows[0]["dim_J"] == 1);
  CHECK(rows[0]["N"] == 1);
  CHECK(rows[1]["dim_J"] == 0);
  CHECK(rows[1]["N"] == 0);
  CHECK(r.report["filtration"]["stabilization_q"] == 2);
  CHECK(r.pass);

  const auto whole = run_command(
      "ideals",
      parse_problem(R"({"field": "F3", "group": {"generators": [[1, 2, 0], [1, 0, 2]]}, "sigma": "whole",
                        "budgets": {"q_max": 3}})"),
      {.recheck = true});
  for (const auto& row : whole.report["filtration"]["rows"]) {
    CHECK(row["dim_J"] == 5);
    CHECK(row["N"] == 0);
  }
  CHECK(whole.pass);
}

TEST_CASE("cohom", "[cli]") {
  const auto r = run_command("cohom", c2_f2(), {.recheck = true});
  CHECK(r.pass);
  CHECK(r.report["modules"][0]["grid"] == json::parse("[[1,1,1],[1,0,0]]"));
  CHECK(r.report["modules"][1]["grid"] == json::parse("[[0,0,0],[0,0,0]]"));

  const auto q = run_command(
      "cohom", parse_problem(R"({"field": "Q", "group": {"generators": [[1, 2, 0], [1, 0, 2]]}, "budgets": {"q_max": 3}})"),
      {});
  CHECK(q.report["modules"][0]["grid"] == json::parse("[[1,0,0],[1,0,0],[1,0,0]]"));

  CHECK_THROWS_AS(run_command("cohom", c2_f2(), {.module = "missing"}), InputError);
  CHECK_THROWS_AS(run_command("cohom", c2_f2(), {.p_max = 7}), InputError);
}

TEST_CASE("h1, les-check and verify", "[cli]") {
  const ProblemSpec spec = c2_f2();
  const auto h1 = run_command("h1", spec, {.recheck = true});
  CHECK(h1.pass);
  CHECK(h1.report["modules"][0]["rows"][0]["h1_cocycle"] == 1);

  const auto les = run_command("les-check", spec, {.module = "trivial"});
  CHECK(les.pass);
  CHECK(les.report["modules"].size() == 1);

  const auto verify = run_command("verify", spec, {});
  CHECK(verify.pass);
  CHECK(verify.report["vanishing"]["pass"] == true);

  const auto whole = run_command(
      "verify",
      parse_problem(R"({"field": "Q", "group": {"generators": [[1, 2, 0], [1, 0, 2]]}, "sigma": "whole",
                        "modules": [{"name": "sign", "kind": "sign"}]})"),
      {});
  CHECK(whole.pass);
  const json& seq = whole.report["modules"][0]["les"]["sequences"][0];
  CHECK(seq["degenerate"] == true);
  CHECK(seq["isomorphisms"] == true);

  const auto trivial = run_command("verify", parse_problem(R"({"field": "F2", "group": {"degree": 2, "generators": []}})"), {});
  CHECK(trivial.pass);
}

TEST_CASE("reports are deterministic", "[cli]") {
  const ProblemSpec spec = c2_f2();
  CHECK(run_command("verify", spec, {}).report.dump() == run_command("verify", spec, {}).report.dump());
}

TEST_CASE("selftest", "[cli]") { CHECK(run_selftest().pass); }
