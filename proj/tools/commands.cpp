#include "commands.hpp"

#include <algorithm>
#include <iomanip>
#include <memory>
#include <sstream>

#include "hocoh/cocycle.hpp"
#include "hocoh/errors.hpp"
#include "hocoh/les.hpp"

namespace hocoh::cli {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------- rendering

class Table {
 public:
  explicit Table(std::vector<std::string> header) : rows_{std::move(header)} {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string render() const {
    std::vector<std::size_t> width;
    for (const auto& row : rows_) {
      width.resize(std::max(width.size(), row.size()), 0);
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    std::ostringstream out;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (std::size_t i = 0; i < rows_[r].size(); ++i) {
        out << (i ? "  " : "") << (i ? std::right : std::left) << std::setw(static_cast<int>(width[i])) << rows_[r][i];
      }
      out << "\n";
      if (r == 0) {
        std::size_t total = 0;
        for (std::size_t w : width) total += w + 2;
        out << std::string(total > 2 ? total - 2 : 0, '-') << "\n";
      }
    }
    return out.str();
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }
std::string pass_fail(bool b) { return b ? "PASS" : "FAIL"; }

template <class S>
json matrix_json(const FieldSpec& field, const Matrix<S>& m) {
  json rows = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(to_string(field, m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---------------------------------------------------------------- instance

template <class S>
struct Instance {
  FieldSpec field;
  GroupSetup setup;
  std::shared_ptr<const GroupAlgebra<S>> algebra;
  std::unique_ptr<CohomologyEngine<S>> engine;
  std::vector<std::pair<std::string, GammaModule<S>>> modules;
  int q_max = 1;
  int p_max = 2;
  Index bar_budget = default_bar_budget;

  const IdealFiltration<S>& filtration() const { return engine->filtration(); }
  Index n_of(int q) const { return filtration().J(q).dim() - filtration().J(q + 1).dim(); }
};

template <class S>
GammaModule<S> build_module(const ModuleSpec& ms, const Instance<S>& in) {
  const auto& group = in.setup.group;
  switch (ms.kind) {
    case ModuleSpec::Kind::trivial: return trivial_module<S>(group, in.field, ms.dim);
    case ModuleSpec::Kind::regular: return regular_module(*in.algebra);
    case ModuleSpec::Kind::coinduced: return coinduced_module<S>(group, in.field, ms.base_dim);
    case ModuleSpec::Kind::sign: return sign_module<S>(group, in.field);
    case ModuleSpec::Kind::explicit_action: break;
  }
  std::vector<Matrix<S>> on_generators;
  for (std::size_t g = 0; g < ms.action.size(); ++g) {
    Matrix<S> m(ms.dim, ms.dim);
    for (Index r = 0; r < ms.dim; ++r) {
      for (Index c = 0; c < ms.dim; ++c) {
        const std::string where = ms.where + "/action/" + std::to_string(g) + "/" + std::to_string(r) + "/" + std::to_string(c);
        try {
          m(r, c) = parse_scalar<S>(in.field, ms.action[g][static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
        } catch (const InputError& e) {
          throw InputError(e.what(), where);
        }
      }
    }
    on_generators.push_back(std::move(m));
  }
  try {
    return make_module<S>(group, in.field, ms.dim, on_generators);
  } catch (const InputError& e) {
    throw InputError(e.what(), ms.where + "/action");
  }
}

template <class S>
Instance<S> build_instance(const ProblemSpec& spec, const CommandOptions& options) {
  Instance<S> in;
  in.field = spec.field;
  in.setup = build_group(spec);
  in.algebra = std::make_shared<const GroupAlgebra<S>>(in.setup.group, spec.field);
  const std::optional<int> q_req = options.q_max ? options.q_max : spec.budgets.q_max;
  if (q_req && *q_req < 1) throw InputError("must be at least 1", "--q-max");
  in.p_max = options.p_max.value_or(spec.budgets.p_max);
  if (in.p_max < 0 || in.p_max > 3) throw InputError("must lie in [0, 3]", "--p-max");
  in.bar_budget = spec.budgets.bar_budget;
  in.engine = std::make_unique<CohomologyEngine<S>>(in.algebra, in.setup.sigma, q_req.value_or(1) + 1);
  in.q_max = q_req.value_or(in.engine->filtration().stabilization_q() + 1);

  bool found = !options.module.has_value();
  for (const auto& ms : spec.modules) {
    if (options.module && *options.module != ms.name) continue;
    found = true;
    in.modules.emplace_back(ms.name, build_module(ms, in));
  }
  if (!found) throw InputError("no module named '" + *options.module + "'", "--module");
  if (spec.modules.empty()) in.modules.emplace_back("trivial", trivial_module<S>(in.setup.group, in.field, 1));
  return in;
}

// ---------------------------------------------------------------- sections

template <class S>
json setup_json(const Instance<S>& in) {
  const FiniteGroup& g = *in.setup.group;
  json members = json::array();
  for (std::size_t s : in.setup.sigma.members) members.push_back(s);
  return {{"field", in.field.name()},
          {"group_order", g.order()},
          {"degree", g.degree()},
          {"generator_count", g.generators().size()},
          {"sigma_order", in.setup.sigma.order()},
          {"sigma_members", members},
          {"sigma_normal", true}};
}

template <class S>
std::string setup_text(const Instance<S>& in) {
  std::ostringstream out;
  out << "field " << in.field.name() << ", |Γ| = " << in.setup.group->order() << " (degree " << in.setup.group->degree()
      << "), |Σ| = " << in.setup.sigma.order() << ", Σ normal: yes\n";
  return out.str();
}

/// Rechecks the filtration against independently built ideals. Σ = {e} and
/// Σ = Γ use I^q and I directly; otherwise I^q plus the ideal generated by all
/// of Σ (not only its generators).
template <class S>
json filtration_recheck(const Instance<S>& in, bool& pass) {
  const GroupAlgebra<S>& a = *in.algebra;
  const std::size_t sigma_order = in.setup.sigma.order();
  std::string route;
  Subspace<S> sigma_all(a.dim());
  if (sigma_order == 1) {
    route = "J_q = I^q (products of augmentation generators)";
  } else if (sigma_order == in.setup.group->order()) {
    route = "J_q = I";
  } else {
    route = "J_q = I^q + span{γ(σ - e) : γ in Γ, σ in Σ}";
    Matrix<S> rows(a.dim() * static_cast<Index>(sigma_order), a.dim());
    Index r = 0;
    for (std::size_t s : in.setup.sigma.members) {
      const Vector<S> base = a.augmentation_generator(s);
      for (std::size_t g = 0; g < in.setup.group->order(); ++g) rows.row(r++) = (a.left_mult(g) * base).transpose();
    }
    sigma_all = Subspace<S>::span(rows);
  }
  json rows = json::array();
  pass = true;
  for (int q = 1; q <= in.q_max + 1; ++q) {
    Subspace<S> expected = sigma_order == in.setup.group->order()
                               ? augmentation_ideal(a)
                               : sum(augmentation_power_by_products(a, q), sigma_all);
    const bool ok = expected == in.filtration().J(q);
    pass = pass && ok;
    rows.push_back({{"q", q}, {"equal", ok}});
  }
  return {{"route", route}, {"rows", rows}, {"pass", pass}};
}

template <class S>
json filtration_json(const Instance<S>& in, std::string& text) {
  json rows = json::array();
  Table t({"q", "dim J_q", "N(q)"});
  for (int q = 1; q <= in.q_max; ++q) {
    rows.push_back({{"q", q}, {"dim_J", in.filtration().J(q).dim()}, {"N", in.n_of(q)}});
    t.add({std::to_string(q), std::to_string(in.filtration().J(q).dim()), std::to_string(in.n_of(q))});
  }
  const int stab = in.filtration().stabilization_q();
  text += t.render() + "stabilized at q = " + std::to_string(stab) + "\n";
  return {{"rows", rows}, {"stabilization_q", stab}, {"q_max", in.q_max}, {"dim_I", in.filtration().augmentation().dim()}};
}

template <class S>
std::vector<std::vector<Index>> cohomology_grid(const Instance<S>& in, const GammaModule<S>& v, CoverOrder order) {
  std::vector<std::vector<Index>> grid;
  for (int q = 1; q <= in.q_max; ++q) {
    in.engine->resolution(q, in.p_max + 1, order);
    std::vector<Index> row;
    for (int p = 0; p <= in.p_max; ++p) row.push_back(in.engine->higher_cohomology(v, q, p, order).dim);
    grid.push_back(std::move(row));
  }
  return grid;
}

template <class S>
Table grid_table(const std::vector<std::vector<Index>>& grid, int p_max) {
  std::vector<std::string> header{"q \\ p"};
  for (int p = 0; p <= p_max; ++p) header.push_back(std::to_string(p));
  Table t(header);
  for (std::size_t q = 0; q < grid.size(); ++q) {
    std::vector<std::string> row{std::to_string(q + 1)};
    for (Index d : grid[q]) row.push_back(std::to_string(d));
    t.add(row);
  }
  return t;
}

// ---------------------------------------------------------------- verbs

template <class S>
CommandResult cmd_info(const Instance<S>& in) {
  CommandResult r;
  r.report["setup"] = setup_json(in);
  json mods = json::array();
  for (const auto& [name, v] : in.modules) mods.push_back({{"name", name}, {"dim", v.dim()}});
  r.report["modules"] = mods;
  r.text = setup_text(in);
  for (const auto& [name, v] : in.modules) r.text += "module " + name + ": dim " + std::to_string(v.dim()) + "\n";
  return r;
}

template <class S>
CommandResult cmd_ideals(const Instance<S>& in, bool recheck) {
  CommandResult r;
  r.text = setup_text(in);
  r.report["setup"] = setup_json(in);
  r.report["filtration"] = filtration_json(in, r.text);
  // basis of J_q/J_{q+1}: RREF rows of J_q complementary to the pivots of J_{q+1}
  json bases = json::array();
  for (int q = 1; q <= in.q_max; ++q) {
    const Quotient<S> quotient(in.filtration().J(q), in.filtration().J(q + 1));
    bases.push_back({{"q", q}, {"basis", matrix_json(in.field, Matrix<S>(quotient.lift().transpose()))}});
  }
  r.report["filtration"]["quotient_bases"] = bases;
  if (recheck) {
    bool ok = true;
    r.report["recheck"] = filtration_recheck(in, ok);
    r.pass = ok;
    r.text += "recheck against independent ideals: " + pass_fail(ok) + "\n";
  }
  return r;
}

template <class S>
CommandResult cmd_cohom(const Instance<S>& in, bool recheck) {
  CommandResult r;
  r.text = setup_text(in);
  r.report["setup"] = setup_json(in);
  r.report["filtration"] = filtration_json(in, r.text);
  json modules = json::array();
  for (const auto& [name, v] : in.modules) {
    const auto grid = cohomology_grid(in, v, CoverOrder::forward);
    json m{{"name", name}, {"dim", v.dim()}, {"grid", grid}};
    bool ok = true;

    json bar = json::array();
    for (int p = 0; p <= in.p_max; ++p) {
      try {
        const Index expected = bar_oracle(v, p, in.bar_budget);
        const bool agree = expected == grid[0][static_cast<std::size_t>(p)];
        ok = ok && agree;
        bar.push_back({{"p", p}, {"bar", expected}, {"agree", agree}});
      } catch (const BudgetExceeded& e) {
        bar.push_back({{"p", p}, {"skipped", e.what()}});
      }
    }
    m["q1_vs_bar"] = bar;

    if (in.p_max >= 1) {
      json cocycle = json::array();
      for (int q = 1; q <= in.q_max; ++q) {
        const Index h1 = h_q1_cocycle(*in.algebra, in.filtration(), q, v);
        const bool agree = h1 == grid[static_cast<std::size_t>(q - 1)][1];
        ok = ok && agree;
        cocycle.push_back({{"q", q}, {"cocycle", h1}, {"agree", agree}});
      }
      m["p1_vs_cocycle"] = cocycle;
    }

    if (recheck) {
      const bool same = cohomology_grid(in, v, CoverOrder::reversed) == grid;
      ok = ok && same;
      m["recheck_reversed_resolution"] = same;
    }
    m["pass"] = ok;
    r.pass = r.pass && ok;
    r.text += "\nmodule " + name + " (dim " + std::to_string(v.dim()) + "): dim H_q^p\n" +
              grid_table<S>(grid, in.p_max).render() + "cross-checks: " + pass_fail(ok) + "\n";
    modules.push_back(std::move(m));
  }
  r.report["modules"] = modules;
  return r;
}

template <class S>
CommandResult cmd_h1(const Instance<S>& in, bool recheck) {
  CommandResult r;
  r.text = setup_text(in);
  r.report["setup"] = setup_json(in);
  json modules = json::array();
  for (const auto& [name, v] : in.modules) {
    json rows = json::array();
    bool ok = true;
    Table t({"q", "dim Hom_A(J_q,V)", "rank α", "H^1 cocycle", "Ext^1", "agree"});
    for (int q = 1; q <= in.q_max; ++q) {
      const HomSpace<S> hom = hom_a_space(*in.algebra, in.filtration(), q, v);
      const Index rank_alpha = hom.dim() == 0 ? 0 : rank(alpha_map(hom, in.filtration(), q, v));
      const Index h1 = hom.dim() - rank_alpha;
      in.engine->resolution(q, 2);
      const Index ext1 = in.engine->higher_cohomology(v, q, 1).dim;
      bool agree = h1 == ext1;
      json row{{"q", q}, {"dim_hom", hom.dim()}, {"rank_alpha", rank_alpha}, {"h1_cocycle", h1}, {"ext1", ext1}};
      if (recheck) {
        const bool same = hom_a_space(*in.algebra, in.filtration(), q, v, LinearityConstraints::all_elements).maps == hom.maps;
        row["recheck_all_elements"] = same;
        agree = agree && same;
      }
      row["agree"] = agree;
      ok = ok && agree;
      rows.push_back(std::move(row));
      t.add({std::to_string(q), std::to_string(hom.dim()), std::to_string(rank_alpha), std::to_string(h1),
             std::to_string(ext1), yes_no(agree)});
    }
    modules.push_back({{"name", name}, {"rows", rows}, {"pass", ok}});
    r.pass = r.pass && ok;
    r.text += "\nmodule " + name + "\n" + t.render();
  }
  r.report["modules"] = modules;
  return r;
}

template <class S>
json les_json(const Instance<S>& in, const LongExactSequenceReport<S>& les, bool with_maps) {
  json degrees = json::array();
  for (const auto& d : les.degrees) {
    json item{{"p", d.p},
              {"dim_H_q", d.dim_q},
              {"dim_H_q1", d.dim_q1},
              {"dim_ext_quotient", d.dim_left},
              {"exact_at_H_q", d.exact_at_q},
              {"exact_at_H_q1", d.exact_at_q1},
              {"exact_at_ext_quotient", d.exact_at_left}};
    if (with_maps) {
      item["map_H_q_to_H_q1"] = matrix_json(in.field, d.to_q1);
      item["map_H_q1_to_ext_quotient"] = matrix_json(in.field, d.to_left);
      item["connecting"] = matrix_json(in.field, d.connecting);
    }
    degrees.push_back(std::move(item));
  }
  json out{{"q", les.q},
           {"N", les.n},
           {"ranks_quotient", les.ranks_left},
           {"ranks_middle", les.ranks_middle},
           {"ranks_A_mod_J_q", les.ranks_right},
           {"degrees", degrees},
           {"dim_H_q_next", les.dim_q_next},
           {"alternating_sum_zero", les.alternating_sum_zero},
           {"matches_direct", les.matches_direct},
           {"exact", les.all_exact()}};
  if (les.n == 0) {
    // J_q = J_{q+1}: the sequence degenerates to isomorphisms H_q^p ≅ H_{q+1}^p
    bool iso = true;
    for (const auto& d : les.degrees) iso = iso && d.to_q1.rows() == d.to_q1.cols() && rank(d.to_q1) == d.to_q1.rows();
    out["degenerate"] = true;
    out["isomorphisms"] = iso;
  }
  return out;
}

template <class S>
CommandResult cmd_les(const Instance<S>& in) {
  CommandResult r;
  r.text = setup_text(in);
  r.report["setup"] = setup_json(in);
  json modules = json::array();
  for (const auto& [name, v] : in.modules) {
    json rows = json::array();
    bool ok = true;
    Table t({"q", "p", "H_q^p", "H_{q+1}^p", "Ext^p(J_q/J_{q+1},V)", "exact"});
    for (int q = 1; q <= in.q_max; ++q) {
      const auto les = long_exact_sequence(*in.engine, v, q, in.p_max);
      ok = ok && les.all_exact();
      rows.push_back(les_json(in, les, true));
      for (const auto& d : les.degrees) {
        t.add({std::to_string(q), std::to_string(d.p), std::to_string(d.dim_q), std::to_string(d.dim_q1),
               std::to_string(d.dim_left), yes_no(d.exact_at_q && d.exact_at_q1 && d.exact_at_left)});
      }
    }
    modules.push_back({{"name", name}, {"sequences", rows}, {"pass", ok}});
    r.pass = r.pass && ok;
    r.text += "\nmodule " + name + "\n" + t.render() + "all nodes exact: " + pass_fail(ok) + "\n";
  }
  r.report["modules"] = modules;
  return r;
}

template <class S>
CommandResult cmd_verify(const Instance<S>& in, bool recheck) {
  CommandResult r;
  r.text = setup_text(in);
  r.report["setup"] = setup_json(in);
  r.report["filtration"] = filtration_json(in, r.text);
  Table summary({"check", "module", "verdict"});
  auto record = [&](const std::string& check, const std::string& module, bool ok) {
    summary.add({check, module, pass_fail(ok)});
    r.pass = r.pass && ok;
  };

  bool filt_ok = true;
  r.report["filtration_special_cases"] = filtration_recheck(in, filt_ok);
  record("filtration", "-", filt_ok);

  const bool collapse_applies = in.field.kind == FieldSpec::Kind::rationals || in.filtration().stabilization_q() == 1;
  json modules = json::array();
  for (const auto& [name, v] : in.modules) {
    json m{{"name", name}, {"dim", v.dim()}};
    const auto grid = cohomology_grid(in, v, CoverOrder::forward);
    m["grid"] = grid;
    if (recheck) {
      const bool same = cohomology_grid(in, v, CoverOrder::reversed) == grid;
      m["recheck_reversed_resolution"] = same;
      record("resolution independence", name, same);
    }

    // long exact sequences
    json les_rows = json::array();
    bool les_ok = true;
    for (int q = 1; q <= in.q_max; ++q) {
      const auto les = long_exact_sequence(*in.engine, v, q, in.p_max);
      les_ok = les_ok && les.all_exact();
      les_rows.push_back(les_json(in, les, false));
    }
    m["les"] = {{"sequences", les_rows}, {"pass", les_ok}};
    record("LES exactness", name, les_ok);

    // H^0: annihilator against the inductive description
    bool h0_ok = true;
    json h0 = json::array();
    for (int q = 1; q <= in.q_max; ++q) {
      const Subspace<S> a = h_q0_annihilator(v, in.filtration(), q);
      const Subspace<S> b = h_q0_inductive(v, in.setup.sigma, q);
      const bool eq = a == b;
      h0_ok = h0_ok && eq;
      h0.push_back({{"q", q}, {"dim", a.dim()}, {"agree", eq}});
    }
    m["h0"] = {{"rows", h0}, {"pass", h0_ok}};
    record("H^0 annihilator = inductive", name, h0_ok);

    // cocycle description of H^1
    if (in.p_max >= 1) {
      bool c_ok = true;
      json rows = json::array();
      for (int q = 1; q <= in.q_max; ++q) {
        const Index h1 = h_q1_cocycle(*in.algebra, in.filtration(), q, v);
        const bool agree = h1 == grid[static_cast<std::size_t>(q - 1)][1];
        c_ok = c_ok && agree;
        rows.push_back({{"q", q}, {"cocycle", h1}, {"agree", agree}});
      }
      m["cocycle"] = {{"rows", rows}, {"pass", c_ok}};
      record("H^1 cocycle = Ext^1", name, c_ok);
    }

    // Ext^p(J_q/J_{q+1}, V) = N(q) · dim H^p(Γ, V)
    bool pi_ok = true;
    json pi = json::array();
    for (int q = 1; q <= in.q_max; ++q) {
      for (int p = 0; p <= in.p_max; ++p) {
        try {
          const auto [lhs, rhs] = power_identification(*in.engine, v, q, p, in.bar_budget);
          pi_ok = pi_ok && lhs == rhs;
          pi.push_back({{"q", q}, {"p", p}, {"ext_quotient", lhs}, {"N_times_H", rhs}, {"agree", lhs == rhs}});
        } catch (const BudgetExceeded& e) {
          pi.push_back({{"q", q}, {"p", p}, {"skipped", e.what()}});
        }
      }
    }
    m["power_identification"] = {{"rows", pi}, {"pass", pi_ok}};
    record("power identification", name, pi_ok);

    // collapse: constant grid in q
    json collapse{{"applies", collapse_applies}};
    if (collapse_applies) {
      bool constant = true;
      for (const auto& row : grid) constant = constant && row == grid.front();
      collapse["constant_in_q"] = constant;
      collapse["pass"] = constant;
      record("collapse law", name, constant);
    }
    m["collapse"] = collapse;
    modules.push_back(std::move(m));
  }
  r.report["modules"] = modules;

  // vanishing on the coinduced module with one-dimensional base
  const GammaModule<S> coind = coinduced_module<S>(in.setup.group, in.field, 1);
  const int p_van = std::max(1, in.p_max);
  const VanishingVerdict van = vanishing_check(*in.engine, coind, in.q_max, p_van, in.bar_budget);
  json nonzero = json::array();
  for (const auto& [q, p, dim] : van.nonzero) nonzero.push_back({{"q", q}, {"p", p}, {"dim", dim}});
  r.report["vanishing"] = {{"module", "coinduced(base_dim 1)"},
                           {"q_max", in.q_max},
                           {"p_max", p_van},
                           {"acyclicity_certificate", van.certificate},
                           {"certified_acyclic", van.certified_acyclic},
                           {"nonzero", nonzero},
                           {"pass", van.pass}};
  record("vanishing on coinduced", "-", van.pass);

  r.text += "\n" + summary.render();
  return r;
}

template <class S>
CommandResult dispatch_verb(const std::string& verb, const ProblemSpec& spec, const CommandOptions& options) {
  const Instance<S> in = build_instance<S>(spec, options);
  if (verb == "info") return cmd_info(in);
  if (verb == "ideals") return cmd_ideals(in, options.recheck);
  if (verb == "cohom") return cmd_cohom(in, options.recheck);
  if (verb == "h1") return cmd_h1(in, options.recheck);
  if (verb == "les-check") return cmd_les(in);
  if (verb == "verify") return cmd_verify(in, options.recheck);
  throw InputError("unknown verb '" + verb + "'");
}

// ---------------------------------------------------------------- selftest

struct Fixture {
  std::string name;
  std::string document;
};

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> list{
      {"c2_f2", R"({"field":"F2","group":{"generators":[[1,0]]},"modules":[{"name":"trivial","kind":"trivial"}],
                  "budgets":{"q_max":2,"p_max":2}})"},
      {"c3_f3", R"({"field":"F3","group":{"generators":[[1,2,0]]},"modules":[{"name":"regular","kind":"regular"}],
                  "budgets":{"q_max":4,"p_max":1}})"},
      {"s3_a3_f2", R"({"field":"F2","group":{"generators":[[1,2,0],[1,0,2]]},"sigma":{"generators":[0]},
                     "modules":[{"name":"trivial","kind":"trivial"}],"budgets":{"q_max":3,"p_max":1}})"},
      {"s3_q", R"({"field":"Q","group":{"generators":[[1,2,0],[1,0,2]]},"modules":[{"name":"trivial","kind":"trivial"}],
                 "budgets":{"q_max":2,"p_max":2}})"},
      {"s3_not_normal", R"({"field":"Q","group":{"generators":[[1,2,0],[1,0,2]]},"sigma":{"generators":[1]}})"},
      {"c2_bad_action", R"({"field":"Q","group":{"generators":[[1,0]]},
                          "modules":[{"name":"bad","kind":"explicit","dim":1,"action":[[["2"]]]}]})"},
  };
  return list;
}

std::vector<std::vector<Index>> grid_of(const json& report, std::size_t module = 0) {
  return report.at("modules").at(module).at("grid").get<std::vector<std::vector<Index>>>();
}

std::vector<Index> j_dims(const json& report) {
  std::vector<Index> out;
  for (const auto& row : report.at("filtration").at("rows")) out.push_back(row.at("dim_J").get<Index>());
  return out;
}

}  // namespace

CommandResult run_command(const std::string& verb, const ProblemSpec& spec, const CommandOptions& options) {
  CommandResult r =
      dispatch_scalar(spec.field, [&](auto tag) { return dispatch_verb<decltype(tag)>(verb, spec, options); });
  r.report["command"] = verb;
  r.report["spec"] = spec.source;
  r.report["tool"] = {{"name", "hocoh"}, {"version", tool_version}};
  r.report["recheck_requested"] = options.recheck;
  r.report["pass"] = r.pass;
  return r;
}

CommandResult run_selftest() {
  CommandResult r;
  json checks = json::array();
  Table t({"check", "verdict"});
  auto check = [&](const std::string& name, bool ok, const std::string& detail = {}) {
    json c{{"name", name}, {"pass", ok}};
    if (!detail.empty()) c["detail"] = detail;
    checks.push_back(std::move(c));
    t.add({name, pass_fail(ok)});
    r.pass = r.pass && ok;
  };
  auto spec_of = [](const std::string& name) {
    for (const auto& f : fixtures()) {
      if (f.name == name) return parse_problem(f.document);
    }
    throw InputError("unknown fixture " + name);
  };
  auto guarded = [&](const std::string& name, auto&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(name, false, e.what());
    }
  };

  guarded("C2/F2 cohomology grid", [&] {
    const auto rep = run_command("cohom", spec_of("c2_f2"), {}).report;
    check("C2/F2 cohomology grid", grid_of(rep) == std::vector<std::vector<Index>>{{1, 1, 1}, {1, 0, 0}});
  });
  guarded("C3/F3 filtration and H^0 of the regular module", [&] {
    const auto spec = spec_of("c3_f3");
    const auto ideals = run_command("ideals", spec, {}).report;
    const auto cohom = run_command("cohom", spec, {}).report;
    std::vector<Index> h0;
    for (const auto& row : grid_of(cohom)) h0.push_back(row[0]);
    check("C3/F3 filtration and H^0 of the regular module",
          j_dims(ideals) == std::vector<Index>{2, 1, 0, 0} && h0 == std::vector<Index>{1, 2, 3, 3});
  });
  guarded("S3/A3/F2 filtration", [&] {
    const auto rep = run_command("ideals", spec_of("s3_a3_f2"), {}).report;
    check("S3/A3/F2 filtration", j_dims(rep) == std::vector<Index>{5, 4, 4} &&
                                     rep.at("filtration").at("rows").at(0).at("N") == 1 &&
                                     rep.at("filtration").at("rows").at(1).at("N") == 0);
  });
  guarded("S3/Q semisimple grid", [&] {
    const auto rep = run_command("cohom", spec_of("s3_q"), {}).report;
    check("S3/Q semisimple grid", grid_of(rep) == std::vector<std::vector<Index>>{{1, 0, 0}, {1, 0, 0}});
  });
  guarded("S3/A3/F2 verify", [&] { check("S3/A3/F2 verify", run_command("verify", spec_of("s3_a3_f2"), {}).pass); });
  {
    bool rejected = false;
    try {
      run_command("info", spec_of("s3_not_normal"), {});
    } catch (const NotNormal&) {
      rejected = true;
    }
    check("non-normal Σ rejected", rejected);
  }
  {
    bool rejected = false;
    try {
      run_command("info", spec_of("c2_bad_action"), {});
    } catch (const InputError& e) {
      rejected = e.where() == "/modules/0/action";
    }
    check("non-representation rejected", rejected);
  }

  r.report = {{"command", "selftest"}, {"checks", checks}, {"pass", r.pass}, {"tool", {{"name", "hocoh"}, {"version", tool_version}}}};
  r.text = t.render();
  return r;
}

}  // namespace hocoh::cli
