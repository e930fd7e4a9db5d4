#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "problem.hpp"

namespace hocoh::cli {

inline constexpr const char* tool_version = "1.0.0";

struct CommandOptions {
  std::optional<int> q_max;
  std::optional<int> p_max;
  std::optional<std::string> module;  // restrict to one named module
  bool recheck = false;
};

struct CommandResult {
  nlohmann::json report;  // deterministic; no timing
  std::string text;       // plain-text table rendering
  bool pass = true;
};

/// Verbs that take a problem spec: info, ideals, cohom, h1, les-check, verify.
/// Throws InputError for bad input; other hocoh::Error types propagate.
CommandResult run_command(const std::string& verb, const ProblemSpec& spec, const CommandOptions& options);

/// Built-in fixtures with known answers.
CommandResult run_selftest();

}  // namespace hocoh::cli
