#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hocoh/finite_group.hpp"
#include "hocoh/scalar.hpp"

namespace hocoh::cli {

struct ModuleSpec {
  enum class Kind { trivial, regular, coinduced, sign, explicit_action };
  std::string name;
  Kind kind = Kind::trivial;
  long long dim = 1;        // trivial, explicit
  long long base_dim = 1;   // coinduced
  /// explicit: one row-major matrix of scalar strings per group generator
  std::vector<std::vector<std::vector<std::string>>> action;
  std::string where;  // JSON pointer of the module entry
};

struct Budgets {
  std::optional<int> q_max;  // default: stabilization_q + 1
  int p_max = 2;
  std::size_t order_cap = FiniteGroup::default_order_cap;
  long long bar_budget = 20000;
};

/// A parsed problem document. Field, group, Σ and module shapes are
/// validated here; module actions are validated once the scalar type is fixed.
struct ProblemSpec {
  std::string name;
  FieldSpec field;
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<std::size_t> sigma_generator_positions;  // into `generators`
  std::vector<Permutation> sigma_permutations;
  enum class SigmaMode { trivial, whole, positions, permutations } sigma_mode = SigmaMode::trivial;
  std::vector<ModuleSpec> modules;
  Budgets budgets;
  nlohmann::json source;  // the document as read, echoed in reports
};

/// Throws InputError with a location ("line:column" for syntax errors, a JSON
/// pointer for validation errors).
ProblemSpec parse_problem(const std::string& text);
ProblemSpec load_problem(const std::string& path);

struct GroupSetup {
  std::shared_ptr<const FiniteGroup> group;
  NormalSubgroup sigma;
};

/// Closes the generators and Σ; throws InputError / NotNormal.
GroupSetup build_group(const ProblemSpec& spec);

std::string to_string(ModuleSpec::Kind kind);

}  // namespace hocoh::cli
