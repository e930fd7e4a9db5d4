// Batch front end: `hocoh <verb> --spec problem.json [flags]`.
// Exit codes: 0 all verdicts pass, 1 verification failure, 2 input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <utility>

#include <CLI11.hpp>

#include "commands.hpp"
#include "hocoh/errors.hpp"

namespace {

int emit(const hocoh::cli::CommandResult& result, const std::string& out_path, bool text, bool omit_timing,
         double elapsed_ms) {
  nlohmann::json report = result.report;
  if (!omit_timing) report["timing"] = {{"elapsed_ms", elapsed_ms}};
  const std::string body = report.dump(2) + "\n";
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 2;
    }
    out << body;
  }
  if (text) {
    std::cout << result.text;
  } else if (out_path.empty()) {
    std::cout << body;
  }
  return result.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Higher-order group cohomology of finite permutation groups"};
  app.require_subcommand(1);

  std::string spec_path, out_path, module;
  int q_max = 0, p_max = -1;
  bool recheck = false, text = false, omit_timing = false;
  app.add_option("--spec", spec_path, "problem JSON file")->check(CLI::ExistingFile);
  app.add_option("--q-max", q_max, "largest filtration index q");
  app.add_option("--p-max", p_max, "largest cohomological degree p (at most 3)");
  app.add_option("--module", module, "restrict to one named module");
  app.add_option("--out", out_path, "write the JSON report here");
  app.add_flag("--recheck", recheck, "route numbers through alternate oracles");
  app.add_flag("--text", text, "print plain-text tables instead of JSON");
  app.add_flag("--omit-timing", omit_timing, "leave the timing block out of the report");

  const std::pair<const char*, const char*> verbs[] = {
      {"info", "group, normal subgroup and module summary"},
      {"ideals", "dimensions of J_q and N(q)"},
      {"cohom", "grid of dim H_q^p"},
      {"h1", "H_q^1 from cocycles against Ext^1"},
      {"les-check", "exactness of the long exact sequence"},
      {"verify", "every structural check on the problem"},
  };
  for (const auto& [verb, help] : verbs) app.add_subcommand(verb, help)->fallthrough();
  app.add_subcommand("selftest", "run built-in fixtures")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  };

  try {
    if (verb == "selftest") return emit(hocoh::cli::run_selftest(), out_path, text, omit_timing, elapsed());
    if (spec_path.empty()) throw hocoh::InputError("this verb needs --spec <path>", "--spec");
    hocoh::cli::CommandOptions options;
    if (q_max != 0) options.q_max = q_max;
    if (p_max >= 0) options.p_max = p_max;
    if (!module.empty()) options.module = module;
    options.recheck = recheck;
    const hocoh::cli::ProblemSpec spec = hocoh::cli::load_problem(spec_path);
    return emit(hocoh::cli::run_command(verb, spec, options), out_path, text, omit_timing, elapsed());
  } catch (const hocoh::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const hocoh::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const hocoh::Error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  }
}
