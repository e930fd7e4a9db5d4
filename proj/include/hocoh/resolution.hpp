#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "hocoh/gamma_module.hpp"

namespace hocoh {

/// A module over A together with a label describing where it came from
/// ("A/J_2", "J_1/J_2", "ker d_1", ...).
template <class S>
struct AModule {
  GammaModule<S> module;
  std::string label;

  Index dim() const { return module.dim(); }
};

/// Throws NotStable with the first (element, basis vector) leaving `x`.
template <class S>
void require_left_stable(const GroupAlgebra<S>& algebra, const Subspace<S>& x) {
  for (std::size_t g = 0; g < algebra.group().order(); ++g) {
    for (Index i = 0; i < x.dim(); ++i) {
      if (!x.contains(algebra.left_mult(g) * x.basis().row(i).transpose())) {
        throw NotStable(g, static_cast<std::size_t>(i));
      }
    }
  }
}

/// The A-module sup/sub for left-stable subspaces sub ⊆ sup of A, in the
/// canonical complement coordinates of `Quotient`.
template <class S>
AModule<S> quotient_amodule(const GroupAlgebra<S>& algebra, const Subspace<S>& sub, const Subspace<S>& sup,
                            std::string label = {}) {
  require_left_stable(algebra, sup);
  require_left_stable(algebra, sub);
  const Quotient<S> quotient(sup, sub);
  std::vector<Matrix<S>> action;
  for (std::size_t g = 0; g < algebra.group().order(); ++g) {
    action.push_back(quotient.projection() * algebra.left_mult(g) * quotient.lift());
  }
  return {GammaModule<S>(algebra.group_ptr(), algebra.field(), quotient.dim(), std::move(action)), std::move(label)};
}

// --- free modules --------------------------------------------------------
//
// The free module F(n) = A^n has coordinates b·|Γ| + h for the coefficient of
// element h in the b-th summand, and Γ acts on each summand by left
// multiplication. An A-linear map out of F(m) is determined by the images of
// its m free generators.

/// The free module A^n.
template <class S>
GammaModule<S> free_module(const GroupAlgebra<S>& algebra, Index n) {
  const Index d = algebra.dim();
  std::vector<Matrix<S>> action;
  for (std::size_t g = 0; g < algebra.group().order(); ++g) {
    Matrix<S> m = Matrix<S>::Constant(n * d, n * d, algebra.zero());
    for (Index b = 0; b < n; ++b) m.block(b * d, b * d, d, d) = algebra.left_mult(g);
    action.push_back(std::move(m));
  }
  return GammaModule<S>(algebra.group_ptr(), algebra.field(), n * d, std::move(action));
}

/// γ·x for x in A^n.
template <class S, class D>
Vector<S> free_translate(const FiniteGroup& group, std::size_t gamma, const Eigen::MatrixBase<D>& x) {
  const Index d = static_cast<Index>(group.order());
  Vector<S> out(x.size());
  for (Index b = 0; b < x.size() / d; ++b) {
    for (Index h = 0; h < d; ++h) out(b * d + static_cast<Index>(group.mult(gamma, static_cast<std::size_t>(h)))) = x(b * d + h);
  }
  return out;
}

/// The A-linear map F(m) → A^n sending generator j to column j of `images`
/// (which is n|Γ| × m). Column j|Γ| + g of the result is g·images_j.
template <class S>
Matrix<S> free_extend(const FiniteGroup& group, const Matrix<S>& images) {
  const Index d = static_cast<Index>(group.order());
  Matrix<S> out(images.rows(), images.cols() * d);
  for (Index j = 0; j < images.cols(); ++j) {
    for (Index g = 0; g < d; ++g) out.col(j * d + g) = free_translate<S>(group, static_cast<std::size_t>(g), images.col(j));
  }
  return out;
}

/// The A-linear map F(m) → M sending generator j to column j of `images`.
template <class S>
Matrix<S> module_extend(const GammaModule<S>& target, const Matrix<S>& images) {
  const Index d = static_cast<Index>(target.group().order());
  Matrix<S> out(target.dim(), images.cols() * d);
  for (Index j = 0; j < images.cols(); ++j) {
    for (Index g = 0; g < d; ++g) out.col(j * d + g) = target.action(static_cast<std::size_t>(g)) * images.col(j);
  }
  return out;
}

/// A submodule K ⊆ A^n repackaged as a module in its RREF coordinates.
template <class S>
GammaModule<S> submodule_of_free(const GroupAlgebra<S>& algebra, const Subspace<S>& k) {
  const FiniteGroup& group = algebra.group();
  const Matrix<S> coords = k.coordinate_matrix();
  std::vector<Matrix<S>> action;
  for (std::size_t g = 0; g < group.order(); ++g) {
    Matrix<S> moved(k.ambient_dim(), k.dim());
    for (Index i = 0; i < k.dim(); ++i) {
      moved.col(i) = free_translate<S>(group, g, k.basis().row(i).transpose());
      if (!k.contains(moved.col(i))) throw NotStable(g, static_cast<std::size_t>(i));
    }
    action.push_back(coords * moved);
  }
  return GammaModule<S>(algebra.group_ptr(), algebra.field(), k.dim(), std::move(action));
}

enum class CoverOrder { forward, reversed };

template <class S>
struct FreeCover {
  Index rank = 0;
  std::vector<Index> generators;  // chosen standard basis indices of the module
  Matrix<S> surjection;           // module.dim × rank·|Γ|
};

/// Greedy generators: walk the standard basis (forward or backward) and keep
/// each vector not already in the R-span of the Γ-translates chosen so far.
template <class S>
FreeCover<S> free_cover(const GammaModule<S>& m, CoverOrder order = CoverOrder::forward) {
  FreeCover<S> out;
  Subspace<S> spanned(m.dim());
  const std::size_t n = m.group().order();
  for (Index step = 0; step < m.dim() && spanned.dim() < m.dim(); ++step) {
    const Index k = order == CoverOrder::forward ? step : m.dim() - 1 - step;
    Vector<S> e = Vector<S>::Constant(m.dim(), from_int<S>(m.field(), 0));
    e(k) = from_int<S>(m.field(), 1);
    if (spanned.contains(e)) continue;
    Matrix<S> translates(static_cast<Index>(n), m.dim());
    for (std::size_t g = 0; g < n; ++g) translates.row(static_cast<Index>(g)) = m.action(g).col(k).transpose();
    spanned = sum(spanned, Subspace<S>::span(translates));
    out.generators.push_back(k);
  }
  out.rank = static_cast<Index>(out.generators.size());
  Matrix<S> images = Matrix<S>::Constant(m.dim(), out.rank, from_int<S>(m.field(), 0));
  for (Index j = 0; j < out.rank; ++j) images(out.generators[j], j) = from_int<S>(m.field(), 1);
  out.surjection = module_extend(m, images);
  return out;
}

/// ⋯ → F(n_2) → F(n_1) → F(n_0) → target, with boundaries[i] : F(n_{i+1}) → F(n_i).
template <class S>
struct FreeResolution {
  AModule<S> target;
  std::vector<Index> ranks;
  Matrix<S> augmentation;
  std::vector<Matrix<S>> boundaries;
  CoverOrder order = CoverOrder::forward;

  int length() const { return static_cast<int>(boundaries.size()); }
  /// The map out of F(n_i): the augmentation for i = 0, else boundaries[i-1].
  const Matrix<S>& differential(int i) const { return i == 0 ? augmentation : boundaries[static_cast<std::size_t>(i - 1)]; }
};

/// Iterated-kernel free resolution of length `length`. Every stage is
/// certified: the new boundary's image equals the previous kernel.
template <class S>
FreeResolution<S> build_resolution(const GroupAlgebra<S>& algebra, const AModule<S>& target, int length,
                                   CoverOrder order = CoverOrder::forward) {
  if (length < 0) throw OutOfRange("resolution length must be non-negative");
  FreeResolution<S> res;
  res.target = target;
  res.order = order;
  const FreeCover<S> cover = free_cover(target.module, order);
  res.ranks.push_back(cover.rank);
  res.augmentation = cover.surjection;
  if (rank(res.augmentation) != target.dim()) throw CertificationFailure("free cover is not surjective");
  Subspace<S> k = kernel(res.augmentation);
  for (int i = 1; i <= length; ++i) {
    const GammaModule<S> km = submodule_of_free(algebra, k);
    const FreeCover<S> c = free_cover(km, order);
    Matrix<S> images(k.ambient_dim(), c.rank);
    for (Index j = 0; j < c.rank; ++j) images.col(j) = k.basis().row(c.generators[j]).transpose();
    Matrix<S> d = free_extend(algebra.group(), images);
    if (image(d) != k) throw CertificationFailure("resolution is not exact at stage " + std::to_string(i));
    k = kernel(d);
    res.ranks.push_back(c.rank);
    res.boundaries.push_back(std::move(d));
  }
  return res;
}

/// Pullback along an A-linear map D : F(m) → F(n) on Hom_A(−, V), written in
/// generator-image coordinates Hom_A(F(n), V) ≅ V^n. Block (j, i) of the
/// result is the action on V of the i-th component of D(generator j).
template <class S>
Matrix<S> hom_pullback(const GroupAlgebra<S>& algebra, const GammaModule<S>& v, const Matrix<S>& d) {
  const Index g = algebra.dim();
  const Index n = d.rows() / g, m = d.cols() / g, dv = v.dim();
  Matrix<S> out = Matrix<S>::Constant(m * dv, n * dv, algebra.zero());
  for (Index j = 0; j < m; ++j) {
    for (Index i = 0; i < n; ++i) {
      const auto component = d.col(j * g).segment(i * g, g);
      if (is_zero_matrix(component)) continue;
      out.block(j * dv, i * dv, dv, dv) = v.act(component);
    }
  }
  return out;
}

/// Coboundary δ^p : Hom_A(F_p, V) → Hom_A(F_{p+1}, V).
template <class S>
Matrix<S> cochain_differential(const GroupAlgebra<S>& algebra, const FreeResolution<S>& res, const GammaModule<S>& v,
                               int p) {
  if (p < 0 || p >= res.length()) throw OutOfRange("resolution too short for the requested degree");
  return hom_pullback(algebra, v, res.boundaries[static_cast<std::size_t>(p)]);
}

/// Ext^p as cocycles modulo coboundaries in the cochain space V^{n_p}.
template <class S>
struct ExtResult {
  int p = 0;
  Index dim = 0;
  Subspace<S> cocycles;
  Subspace<S> coboundaries;
  Quotient<S> classes;
  Matrix<S> representatives;  // columns: canonical cocycle per class
};

/// Cohomology of a cochain complex at a node with incoming/outgoing maps.
template <class S>
ExtResult<S> cohomology_at(int p, const Matrix<S>& incoming, const Matrix<S>& outgoing) {
  ExtResult<S> out;
  out.p = p;
  out.cocycles = kernel(outgoing);
  out.coboundaries = image(incoming);
  out.classes = Quotient<S>(out.cocycles, out.coboundaries);
  out.dim = out.classes.dim();
  out.representatives = out.classes.lift();
  return out;
}

/// Ext_A^p(target, V) from a resolution of length at least p + 1.
template <class S>
ExtResult<S> ext(const GroupAlgebra<S>& algebra, const FreeResolution<S>& res, const GammaModule<S>& v, int p) {
  if (p < 0) throw OutOfRange("negative degree");
  if (res.length() < p + 1) throw OutOfRange("resolution too short: need length " + std::to_string(p + 1));
  const Matrix<S> outgoing = cochain_differential(algebra, res, v, p);
  const Matrix<S> incoming =
      p == 0 ? Matrix<S>(outgoing.cols(), 0) : cochain_differential(algebra, res, v, p - 1);
  return cohomology_at(p, incoming, outgoing);
}

/// Lifts f : source → target (matrix target.dim × source.dim) to a chain map
/// between the resolutions; entry i is F_i(source) → F_i(target). Every
/// square is verified.
template <class S>
std::vector<Matrix<S>> lift_chain_map(const GroupAlgebra<S>& algebra, const Matrix<S>& f,
                                      const FreeResolution<S>& source, const FreeResolution<S>& target) {
  const FiniteGroup& group = algebra.group();
  const Index g = algebra.dim();
  const int length = std::min(source.length(), target.length());
  std::vector<Matrix<S>> maps;
  for (int i = 0; i <= length; ++i) {
    const Matrix<S>& d_src = source.differential(i);
    const Matrix<S>& d_tgt = target.differential(i);
    const Matrix<S>& below = i == 0 ? f : maps.back();
    const Index gens = source.ranks[static_cast<std::size_t>(i)];
    Matrix<S> rhs(d_tgt.rows(), gens);
    for (Index j = 0; j < gens; ++j) rhs.col(j) = below * d_src.col(j * g);
    Matrix<S> lifted = free_extend(group, solve_columns(d_tgt, rhs));
    if (Matrix<S>(d_tgt * lifted) != Matrix<S>(below * d_src)) {
      throw CertificationFailure("chain map square does not commute in degree " + std::to_string(i));
    }
    maps.push_back(std::move(lifted));
  }
  return maps;
}

/// Shared state for H_q^p(Γ, Σ, V) = Ext_A^p(A/J_q, V) computations over one
/// (Γ, Σ, field): the filtration and a cache of resolutions of A/J_q. The
/// cache is safe for concurrent insert-or-get.
template <class S>
class CohomologyEngine {
 public:
  CohomologyEngine(std::shared_ptr<const GroupAlgebra<S>> algebra, NormalSubgroup sigma, int q_max = 1)
      : algebra_(std::move(algebra)),
        sigma_(std::move(sigma)),
        filtration_(j_filtration(*algebra_, sigma_, q_max)) {}

  const GroupAlgebra<S>& algebra() const { return *algebra_; }
  const std::shared_ptr<const GroupAlgebra<S>>& algebra_ptr() const { return algebra_; }
  const NormalSubgroup& sigma() const { return sigma_; }
  const IdealFiltration<S>& filtration() const { return filtration_; }
  const FiniteGroup& group() const { return algebra_->group(); }

  /// A/J_q.
  AModule<S> quotient_module(int q) const {
    return quotient_amodule(*algebra_, filtration_.J(q), Subspace<S>::whole(algebra_->dim()),
                            "A/J_" + std::to_string(q));
  }

  /// Resolution of A/J_q of at least the given length.
  std::shared_ptr<const FreeResolution<S>> resolution(int q, int length, CoverOrder order = CoverOrder::forward) const {
    const auto key = std::make_pair(q, order);
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = cache_.find(key);
      if (it != cache_.end() && it->second->length() >= length) return it->second;
    }
    auto built = std::make_shared<const FreeResolution<S>>(build_resolution(*algebra_, quotient_module(q), length, order));
    std::lock_guard<std::mutex> lock(mutex_);
    auto& slot = cache_[key];
    if (!slot || slot->length() < built->length()) slot = built;
    return slot;
  }

  ExtResult<S> higher_cohomology(const GammaModule<S>& v, int q, int p, CoverOrder order = CoverOrder::forward) const {
    if (q < 1) throw OutOfRange("q must be at least 1");
    return ext(*algebra_, *resolution(q, p + 1, order), v, p);
  }

 private:
  std::shared_ptr<const GroupAlgebra<S>> algebra_;
  NormalSubgroup sigma_;
  IdealFiltration<S> filtration_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<int, CoverOrder>, std::shared_ptr<const FreeResolution<S>>> cache_;
};

/// One-shot H_q^p(Γ, Σ, V) without a shared engine.
template <class S>
ExtResult<S> higher_cohomology(std::shared_ptr<const GroupAlgebra<S>> algebra, const NormalSubgroup& sigma,
                               const GammaModule<S>& v, int q, int p) {
  return CohomologyEngine<S>(std::move(algebra), sigma, q).higher_cohomology(v, q, p);
}

}  // namespace hocoh
