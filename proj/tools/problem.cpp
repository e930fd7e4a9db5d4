#include "problem.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "hocoh/errors.hpp"

namespace hocoh::cli {

using nlohmann::json;

namespace {

const json& require(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw InputError("missing key '" + key + "'", where);
  return obj.at(key);
}

long long as_integer(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw InputError("expected an integer", where);
  return v.get<long long>();
}

std::string as_scalar_text(const json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw InputError("matrix entries must be strings or integers (no floating point)", where);
}

Permutation as_permutation(const json& v, const std::string& where) {
  if (!v.is_array()) throw InputError("permutation must be an array of images", where);
  std::vector<int> images;
  for (std::size_t i = 0; i < v.size(); ++i) images.push_back(static_cast<int>(as_integer(v[i], where + "/" + std::to_string(i))));
  try {
    return Permutation(std::move(images));
  } catch (const InputError& e) {
    throw InputError(e.what(), where);
  }
}

ModuleSpec::Kind parse_kind(const std::string& s, const std::string& where) {
  if (s == "trivial") return ModuleSpec::Kind::trivial;
  if (s == "regular") return ModuleSpec::Kind::regular;
  if (s == "coinduced") return ModuleSpec::Kind::coinduced;
  if (s == "sign") return ModuleSpec::Kind::sign;
  if (s == "explicit") return ModuleSpec::Kind::explicit_action;
  throw InputError("unknown module kind '" + s + "'", where);
}

}  // namespace

std::string to_string(ModuleSpec::Kind kind) {
  switch (kind) {
    case ModuleSpec::Kind::trivial: return "trivial";
    case ModuleSpec::Kind::regular: return "regular";
    case ModuleSpec::Kind::coinduced: return "coinduced";
    case ModuleSpec::Kind::sign: return "sign";
    case ModuleSpec::Kind::explicit_action: return "explicit";
  }
  return "?";
}

ProblemSpec parse_problem(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann reports "line L, column C" inside the message
    throw InputError(e.what(), "byte " + std::to_string(e.byte));
  }
  if (!doc.is_object()) throw InputError("problem must be a JSON object", "/");

  ProblemSpec spec;
  spec.source = doc;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw InputError("expected a string", "/name");
    spec.name = doc["name"].get<std::string>();
  }

  const json& field = require(doc, "field", "/");
  if (!field.is_string()) throw InputError("expected a string such as \"Q\" or \"F3\"", "/field");
  try {
    spec.field = FieldSpec::parse(field.get<std::string>());
  } catch (const InputError& e) {
    throw InputError(e.what(), "/field");
  }

  const json& group = require(doc, "group", "/");
  if (group.contains("degree")) spec.degree = static_cast<std::size_t>(as_integer(group["degree"], "/group/degree"));
  const json& gens = require(group, "generators", "/group");
  if (!gens.is_array()) throw InputError("expected an array of permutations", "/group/generators");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string where = "/group/generators/" + std::to_string(i);
    spec.generators.push_back(as_permutation(gens[i], where));
    if (spec.generators.back().degree() != spec.generators.front().degree()) {
      throw InputError("generator degree differs from generator 0", where);
    }
  }
  if (!spec.generators.empty()) spec.degree = spec.generators.front().degree();

  if (doc.contains("budgets")) {
    const json& b = doc["budgets"];
    if (!b.is_object()) throw InputError("expected an object", "/budgets");
    if (b.contains("q_max")) {
      const long long q = as_integer(b["q_max"], "/budgets/q_max");
      if (q < 1) throw InputError("q_max must be at least 1", "/budgets/q_max");
      spec.budgets.q_max = static_cast<int>(q);
    }
    if (b.contains("p_max")) {
      const long long p = as_integer(b["p_max"], "/budgets/p_max");
      if (p < 0 || p > 3) throw InputError("p_max must lie in [0, 3]", "/budgets/p_max");
      spec.budgets.p_max = static_cast<int>(p);
    }
    if (b.contains("order_cap")) {
      const long long c = as_integer(b["order_cap"], "/budgets/order_cap");
      if (c < 1) throw InputError("order_cap must be positive", "/budgets/order_cap");
      spec.budgets.order_cap = static_cast<std::size_t>(c);
    }
    if (b.contains("bar_budget")) spec.budgets.bar_budget = as_integer(b["bar_budget"], "/budgets/bar_budget");
  }

  if (doc.contains("sigma")) {
    const json& s = doc["sigma"];
    if (s.is_string()) {
      const std::string mode = s.get<std::string>();
      if (mode == "trivial") {
        spec.sigma_mode = ProblemSpec::SigmaMode::trivial;
      } else if (mode == "whole") {
        spec.sigma_mode = ProblemSpec::SigmaMode::whole;
      } else {
        throw InputError("expected \"trivial\", \"whole\" or an object", "/sigma");
      }
    } else if (s.is_object() && s.contains("generators")) {
      spec.sigma_mode = ProblemSpec::SigmaMode::positions;
      const json& idx = s["generators"];
      if (!idx.is_array()) throw InputError("expected an array of generator positions", "/sigma/generators");
      for (std::size_t i = 0; i < idx.size(); ++i) {
        const std::string where = "/sigma/generators/" + std::to_string(i);
        const long long k = as_integer(idx[i], where);
        if (k < 0 || static_cast<std::size_t>(k) >= spec.generators.size()) {
          throw InputError("generator position out of range", where);
        }
        spec.sigma_generator_positions.push_back(static_cast<std::size_t>(k));
      }
    } else if (s.is_object() && s.contains("permutations")) {
      spec.sigma_mode = ProblemSpec::SigmaMode::permutations;
      const json& perms = s["permutations"];
      if (!perms.is_array()) throw InputError("expected an array of permutations", "/sigma/permutations");
      for (std::size_t i = 0; i < perms.size(); ++i) {
        spec.sigma_permutations.push_back(as_permutation(perms[i], "/sigma/permutations/" + std::to_string(i)));
      }
    } else {
      throw InputError("expected \"trivial\", \"whole\", {\"generators\": [...]} or {\"permutations\": [...]}",
                       "/sigma");
    }
  }

  if (doc.contains("modules")) {
    const json& mods = doc["modules"];
    if (!mods.is_array()) throw InputError("expected an array", "/modules");
    std::set<std::string> names;
    for (std::size_t i = 0; i < mods.size(); ++i) {
      const std::string where = "/modules/" + std::to_string(i);
      const json& m = mods[i];
      ModuleSpec ms;
      ms.where = where;
      const json& name = require(m, "name", where);
      if (!name.is_string()) throw InputError("expected a string", where + "/name");
      ms.name = name.get<std::string>();
      if (!names.insert(ms.name).second) throw InputError("duplicate module name '" + ms.name + "'", where + "/name");
      const json& kind = require(m, "kind", where);
      if (!kind.is_string()) throw InputError("expected a string", where + "/kind");
      ms.kind = parse_kind(kind.get<std::string>(), where + "/kind");
      if (m.contains("dim")) ms.dim = as_integer(m["dim"], where + "/dim");
      if (m.contains("base_dim")) ms.base_dim = as_integer(m["base_dim"], where + "/base_dim");
      if (ms.dim < 0) throw InputError("dim must be non-negative", where + "/dim");
      if (ms.kind == ModuleSpec::Kind::coinduced && ms.base_dim < 1) {
        throw InputError("base_dim must be at least 1", where + "/base_dim");
      }
      if (ms.kind == ModuleSpec::Kind::explicit_action) {
        const json& action = require(m, "action", where);
        if (!action.is_array() || action.size() != spec.generators.size()) {
          throw InputError("expected one matrix per group generator", where + "/action");
        }
        for (std::size_t g = 0; g < action.size(); ++g) {
          const std::string mw = where + "/action/" + std::to_string(g);
          const json& mat = action[g];
          if (!mat.is_array() || static_cast<long long>(mat.size()) != ms.dim) {
            throw InputError("expected " + std::to_string(ms.dim) + " rows", mw);
          }
          std::vector<std::vector<std::string>> rows;
          for (std::size_t r = 0; r < mat.size(); ++r) {
            const std::string rw = mw + "/" + std::to_string(r);
            if (!mat[r].is_array() || static_cast<long long>(mat[r].size()) != ms.dim) {
              throw InputError("expected " + std::to_string(ms.dim) + " entries", rw);
            }
            std::vector<std::string> row;
            for (std::size_t c = 0; c < mat[r].size(); ++c) row.push_back(as_scalar_text(mat[r][c], rw + "/" + std::to_string(c)));
            rows.push_back(std::move(row));
          }
          ms.action.push_back(std::move(rows));
        }
      }
      spec.modules.push_back(std::move(ms));
    }
  }
  return spec;
}

ProblemSpec load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open problem file", path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_problem(buffer.str());
  } catch (const NotNormal&) {
    throw;
  } catch (const InputError& e) {
    throw InputError(e.what(), path);
  }
}

GroupSetup build_group(const ProblemSpec& spec) {
  GroupSetup setup;
  try {
    setup.group = std::make_shared<const FiniteGroup>(close_generators(spec.generators, spec.budgets.order_cap, spec.degree));
  } catch (const InputError& e) {
    throw InputError(e.what(), "/group");
  }
  const FiniteGroup& g = *setup.group;
  std::vector<std::size_t> sigma_gens;
  switch (spec.sigma_mode) {
    case ProblemSpec::SigmaMode::trivial:
      break;
    case ProblemSpec::SigmaMode::whole:
      sigma_gens = g.generators();
      break;
    case ProblemSpec::SigmaMode::positions:
      for (std::size_t pos : spec.sigma_generator_positions) sigma_gens.push_back(g.generators()[pos]);
      break;
    case ProblemSpec::SigmaMode::permutations:
      for (std::size_t i = 0; i < spec.sigma_permutations.size(); ++i) {
        const std::size_t k = g.find(spec.sigma_permutations[i]);
        if (k == g.order()) throw InputError("permutation is not an element of the group", "/sigma/permutations/" + std::to_string(i));
        sigma_gens.push_back(k);
      }
      break;
  }
  setup.sigma = subgroup_closure(g, sigma_gens);
  return setup;
}

}  // namespace hocoh::cli
