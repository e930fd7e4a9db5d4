#pragma once

#include <memory>
#include <vector>

#include "hocoh/group_algebra.hpp"

namespace hocoh {

/// Finite-dimensional left R[Γ]-module given by one action matrix per group element.
template <class S>
class GammaModule {
 public:
  GammaModule() = default;
  /// Takes the full action table; the caller is responsible for its validity
  /// (see `is_representation`).
  GammaModule(std::shared_ptr<const FiniteGroup> group, FieldSpec field, Index dim, std::vector<Matrix<S>> action)
      : group_(std::move(group)), field_(field), dim_(dim), action_(std::move(action)) {}

  const FiniteGroup& group() const { return *group_; }
  const std::shared_ptr<const FiniteGroup>& group_ptr() const { return group_; }
  const FieldSpec& field() const { return field_; }
  Index dim() const { return dim_; }
  const Matrix<S>& action(std::size_t g) const { return action_[g]; }
  const std::vector<Matrix<S>>& actions() const { return action_; }

  /// Matrix of a = Σ c_γ γ acting on the module.
  template <class D>
  Matrix<S> act(const Eigen::MatrixBase<D>& a) const {
    Matrix<S> out = Matrix<S>::Constant(dim_, dim_, from_int<S>(field_, 0));
    for (Index g = 0; g < a.size(); ++g) {
      if (!is_zero(a(g))) out += a(g) * action_[static_cast<std::size_t>(g)];
    }
    return out;
  }

  Matrix<S> identity() const {
    Matrix<S> id = Matrix<S>::Constant(dim_, dim_, from_int<S>(field_, 0));
    for (Index i = 0; i < dim_; ++i) id(i, i) = from_int<S>(field_, 1);
    return id;
  }

  /// Exhaustive check: ρ(e) = 1 and ρ(g)ρ(h) = ρ(gh) for every pair.
  bool is_representation() const {
    if (action_.size() != group_->order()) return false;
    if (action_[0] != identity()) return false;
    for (std::size_t g = 0; g < group_->order(); ++g) {
      for (std::size_t h = 0; h < group_->order(); ++h) {
        if (Matrix<S>(action_[g] * action_[h]) != action_[group_->mult(g, h)]) return false;
      }
    }
    return true;
  }

 private:
  std::shared_ptr<const FiniteGroup> group_;
  FieldSpec field_;
  Index dim_ = 0;
  std::vector<Matrix<S>> action_;
};

/// matrix · ρ_src(g) = ρ_tgt(g) · matrix for every g.
template <class S>
bool is_equivariant(const GammaModule<S>& source, const GammaModule<S>& target, const Matrix<S>& matrix) {
  if (matrix.rows() != target.dim() || matrix.cols() != source.dim()) return false;
  for (std::size_t g = 0; g < source.group().order(); ++g) {
    if (Matrix<S>(matrix * source.action(g)) != Matrix<S>(target.action(g) * matrix)) return false;
  }
  return true;
}

/// Morphism of modules; `matrix` is target.dim × source.dim.
template <class S>
struct ModuleMap {
  GammaModule<S> source;
  GammaModule<S> target;
  Matrix<S> matrix;

  bool is_equivariant() const { return hocoh::is_equivariant(source, target, matrix); }
};

/// Extends an action on generators along the enumeration tree of the group
/// and verifies ρ(x)ρ(s) = ρ(xs) for every element x and generator s. That
/// relation set determines a homomorphism, so no further check is needed.
template <class S>
GammaModule<S> make_module(std::shared_ptr<const FiniteGroup> group, FieldSpec field, Index dim,
                           const std::vector<Matrix<S>>& on_generators) {
  const FiniteGroup& g = *group;
  if (on_generators.size() != g.generators().size()) {
    throw InputError("expected one action matrix per group generator");
  }
  for (const auto& m : on_generators) {
    if (m.rows() != dim || m.cols() != dim) throw InputError("action matrix has the wrong shape");
  }
  std::vector<Matrix<S>> action(g.order());
  action[0] = Matrix<S>::Constant(dim, dim, from_int<S>(field, 0));
  for (Index i = 0; i < dim; ++i) action[0](i, i) = from_int<S>(field, 1);
  for (std::size_t k = 1; k < g.order(); ++k) {
    action[k] = action[g.parent(k)] * on_generators[g.parent_generator(k)];
  }
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (std::size_t s = 0; s < on_generators.size(); ++s) {
      if (Matrix<S>(action[x] * on_generators[s]) != action[g.mult(x, g.generators()[s])]) {
        throw NotARepresentation(x, s);
      }
    }
  }
  return GammaModule<S>(std::move(group), field, dim, std::move(action));
}

template <class S>
GammaModule<S> trivial_module(std::shared_ptr<const FiniteGroup> group, FieldSpec field, Index dim) {
  const std::size_t n = group->order();
  Matrix<S> id = Matrix<S>::Constant(dim, dim, from_int<S>(field, 0));
  for (Index i = 0; i < dim; ++i) id(i, i) = from_int<S>(field, 1);
  return GammaModule<S>(std::move(group), field, dim, std::vector<Matrix<S>>(n, id));
}

/// A acting on itself by left multiplication.
template <class S>
GammaModule<S> regular_module(const GroupAlgebra<S>& algebra) {
  std::vector<Matrix<S>> action;
  for (std::size_t g = 0; g < algebra.group().order(); ++g) action.push_back(algebra.left_mult(g));
  return GammaModule<S>(algebra.group_ptr(), algebra.field(), algebra.dim(), std::move(action));
}

/// Functions f: Γ → R^b with (γ·f)(x) = f(xγ); coordinate x·b + i holds f(x)_i.
template <class S>
GammaModule<S> coinduced_module(std::shared_ptr<const FiniteGroup> group, FieldSpec field, Index base_dim) {
  if (base_dim < 1) throw InputError("coinduced module needs base_dim >= 1");
  const std::size_t n = group->order();
  const Index dim = static_cast<Index>(n) * base_dim;
  std::vector<Matrix<S>> action;
  for (std::size_t gamma = 0; gamma < n; ++gamma) {
    Matrix<S> m = Matrix<S>::Constant(dim, dim, from_int<S>(field, 0));
    for (std::size_t x = 0; x < n; ++x) {
      const Index src = static_cast<Index>(group->mult(x, gamma)) * base_dim;
      for (Index i = 0; i < base_dim; ++i) m(static_cast<Index>(x) * base_dim + i, src + i) = from_int<S>(field, 1);
    }
    action.push_back(std::move(m));
  }
  return GammaModule<S>(std::move(group), field, dim, std::move(action));
}

/// One-dimensional module through the sign of the permutation.
template <class S>
GammaModule<S> sign_module(std::shared_ptr<const FiniteGroup> group, FieldSpec field) {
  std::vector<Matrix<S>> action;
  for (const auto& p : group->elements()) action.push_back(Matrix<S>::Constant(1, 1, from_int<S>(field, p.sign())));
  return GammaModule<S>(std::move(group), field, 1, std::move(action));
}

/// Stack of the matrices ρ(a) for a over the rows of `ideal`.
template <class S>
Matrix<S> stacked_action(const GammaModule<S>& v, const Subspace<S>& ideal) {
  Matrix<S> out(ideal.dim() * v.dim(), v.dim());
  for (Index k = 0; k < ideal.dim(); ++k) out.middleRows(k * v.dim(), v.dim()) = v.act(ideal.basis().row(k));
  return out;
}

/// H_q^0 = Hom_A(A/J_q, V) = {v : J_q v = 0}.
template <class S>
Subspace<S> h_q0_annihilator(const GammaModule<S>& v, const IdealFiltration<S>& filtration, int q) {
  const Subspace<S>& j = filtration.J(q);
  if (j.dim() == 0) return Subspace<S>::whole(v.dim());
  return kernel(stacked_action(v, j));
}

/// The inductive description: H_1^0 = V^Γ and H_{q+1}^0 is the set of v
/// fixed by Σ with (γ − 1)v in H_q^0. Generators of Γ and Σ suffice.
template <class S>
Subspace<S> h_q0_inductive(const GammaModule<S>& v, const NormalSubgroup& sigma, int q) {
  if (q < 1) throw OutOfRange("H_q^0 needs q >= 1");
  const FiniteGroup& g = v.group();
  const Matrix<S> id = v.identity();
  Subspace<S> current = Subspace<S>::whole(v.dim());
  for (std::size_t s : g.generators()) current = intersection(current, kernel(Matrix<S>(v.action(s) - id)));
  for (int step = 1; step < q; ++step) {
    Subspace<S> next = Subspace<S>::whole(v.dim());
    for (std::size_t s : sigma.generators) next = intersection(next, kernel(Matrix<S>(v.action(s) - id)));
    for (std::size_t s : g.generators()) next = intersection(next, preimage(Matrix<S>(v.action(s) - id), current));
    current = std::move(next);
  }
  return current;
}

}  // namespace hocoh
