#pragma once

#include <memory>
#include <vector>

#include "hocoh/finite_group.hpp"
#include "hocoh/linalg.hpp"

namespace hocoh {

/// The group algebra A = R[Γ] in the basis of group elements (canonical order).
template <class S>
class GroupAlgebra {
 public:
  GroupAlgebra(std::shared_ptr<const FiniteGroup> group, FieldSpec field)
      : group_(std::move(group)), field_(field), one_(from_int<S>(field, 1)) {
    const Index n = dim();
    left_.reserve(group_->order());
    right_.reserve(group_->order());
    for (std::size_t g = 0; g < group_->order(); ++g) {
      Matrix<S> l = Matrix<S>::Zero(n, n), r = Matrix<S>::Zero(n, n);
      for (std::size_t h = 0; h < group_->order(); ++h) {
        l(static_cast<Index>(group_->mult(g, h)), static_cast<Index>(h)) = one_;
        r(static_cast<Index>(group_->mult(h, g)), static_cast<Index>(h)) = one_;
      }
      left_.push_back(std::move(l));
      right_.push_back(std::move(r));
    }
  }

  const FiniteGroup& group() const { return *group_; }
  const std::shared_ptr<const FiniteGroup>& group_ptr() const { return group_; }
  const FieldSpec& field() const { return field_; }
  Index dim() const { return static_cast<Index>(group_->order()); }
  S one() const { return one_; }
  S zero() const { return from_int<S>(field_, 0); }

  /// Matrix of x ↦ g·x.
  const Matrix<S>& left_mult(std::size_t g) const { return left_[g]; }
  /// Matrix of x ↦ x·g.
  const Matrix<S>& right_mult(std::size_t g) const { return right_[g]; }

  Vector<S> element(std::size_t g) const {
    Vector<S> v = Vector<S>::Constant(dim(), zero());
    v(static_cast<Index>(g)) = one_;
    return v;
  }

  /// γ − e.
  Vector<S> augmentation_generator(std::size_t g) const {
    Vector<S> v = element(g);
    v(0) -= one_;
    return v;
  }

  /// Product in A.
  template <class DA, class DB>
  Vector<S> multiply(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) const {
    Vector<S> out = Vector<S>::Constant(dim(), zero());
    for (Index g = 0; g < dim(); ++g) {
      if (is_zero(a(g))) continue;
      for (Index h = 0; h < dim(); ++h) {
        if (is_zero(b(h))) continue;
        out(static_cast<Index>(group_->mult(static_cast<std::size_t>(g), static_cast<std::size_t>(h)))) +=
            a(g) * b(h);
      }
    }
    return out;
  }

  /// Left-multiplication matrix of an arbitrary algebra element.
  template <class D>
  Matrix<S> left_mult(const Eigen::MatrixBase<D>& a) const {
    Matrix<S> out = Matrix<S>::Constant(dim(), dim(), zero());
    for (Index g = 0; g < dim(); ++g) {
      if (!is_zero(a(g))) out += a(g) * left_[static_cast<std::size_t>(g)];
    }
    return out;
  }

  /// Σ c_γ for x = Σ c_γ γ.
  template <class D>
  S augmentation(const Eigen::MatrixBase<D>& x) const {
    S s = zero();
    for (Index g = 0; g < dim(); ++g) s += x(g);
    return s;
  }

  /// x stable under left and right multiplication by every group element.
  bool is_two_sided(const Subspace<S>& x) const {
    for (std::size_t g = 0; g < group_->order(); ++g) {
      for (Index i = 0; i < x.dim(); ++i) {
        const Vector<S> v = x.basis().row(i).transpose();
        if (!x.contains(left_[g] * v) || !x.contains(right_[g] * v)) return false;
      }
    }
    return true;
  }

  bool is_left_stable(const Subspace<S>& x) const {
    for (std::size_t g = 0; g < group_->order(); ++g) {
      for (Index i = 0; i < x.dim(); ++i) {
        if (!x.contains(left_[g] * x.basis().row(i).transpose())) return false;
      }
    }
    return true;
  }

 private:
  std::shared_ptr<const FiniteGroup> group_;
  FieldSpec field_;
  S one_;
  std::vector<Matrix<S>> left_;
  std::vector<Matrix<S>> right_;
};

/// I = span{γ − e}.
template <class S>
Subspace<S> augmentation_ideal(const GroupAlgebra<S>& algebra) {
  Matrix<S> rows(algebra.dim(), algebra.dim());
  for (Index g = 0; g < algebra.dim(); ++g) rows.row(g) = algebra.augmentation_generator(static_cast<std::size_t>(g)).transpose();
  return Subspace<S>::span(rows);
}

/// A·I_Σ = span{γ(σ − e)} with σ over the generators of Σ.
template <class S>
Subspace<S> sigma_ideal(const GroupAlgebra<S>& algebra, const NormalSubgroup& sigma) {
  const auto& gens = sigma.generators;
  Matrix<S> rows(algebra.dim() * static_cast<Index>(gens.size()), algebra.dim());
  Index r = 0;
  for (std::size_t s : gens) {
    const Vector<S> base = algebra.augmentation_generator(s);
    for (std::size_t g = 0; g < algebra.group().order(); ++g) rows.row(r++) = (algebra.left_mult(g) * base).transpose();
  }
  Subspace<S> out = Subspace<S>::span(rows);
  if (!algebra.is_two_sided(out)) throw CertificationFailure("A·I_Σ is not a two-sided ideal");
  return out;
}

/// Next power of an ideal: span{x(γ − e) : x ∈ basis(X), γ ∈ Γ}.
template <class S>
Subspace<S> times_augmentation(const GroupAlgebra<S>& algebra, const Subspace<S>& x) {
  Matrix<S> rows(x.dim() * algebra.dim(), algebra.dim());
  Index r = 0;
  for (Index i = 0; i < x.dim(); ++i) {
    const Vector<S> v = x.basis().row(i).transpose();
    for (std::size_t g = 0; g < algebra.group().order(); ++g) {
      rows.row(r++) = (algebra.right_mult(g) * v - v).transpose();
    }
  }
  return Subspace<S>::span(rows);
}

/// I^q rebuilt from the other side: span of (γ_1 − e)(γ_2 − e)…(γ_q − e),
/// accumulated by left multiplication over all group elements. Independent of
/// `times_augmentation`; used to recheck the filtration.
template <class S>
Subspace<S> augmentation_power_by_products(const GroupAlgebra<S>& algebra, int q) {
  if (q < 1) throw OutOfRange("I^q needs q >= 1");
  Subspace<S> current = augmentation_ideal(algebra);
  for (int k = 1; k < q; ++k) {
    Matrix<S> rows(current.dim() * algebra.dim(), algebra.dim());
    Index r = 0;
    for (std::size_t g = 0; g < algebra.group().order(); ++g) {
      const Matrix<S> left = algebra.left_mult(g);
      for (Index i = 0; i < current.dim(); ++i) {
        const Vector<S> x = current.basis().row(i).transpose();
        rows.row(r++) = (left * x - x).transpose();
      }
    }
    current = Subspace<S>::span(rows);
  }
  return current;
}

/// The filtration J_q = I^q + A·I_Σ, computed at least one step past its
/// stabilization point.
template <class S>
class IdealFiltration {
 public:
  const Subspace<S>& augmentation() const { return augmentation_; }
  const Subspace<S>& sigma_ideal() const { return sigma_; }
  /// Number of computed steps; J_1 .. J_size() are stored.
  int size() const { return static_cast<int>(j_.size()); }
  /// Smallest q with J_q = J_{q+1}.
  int stabilization_q() const { return stabilization_; }

  /// J_q for any q >= 1 (constant from the stabilization point on).
  const Subspace<S>& J(int q) const {
    if (q < 1) throw OutOfRange("J_q needs q >= 1");
    return j_[static_cast<std::size_t>(std::min(q, size()) - 1)];
  }
  /// I^q for 1 <= q <= size().
  const Subspace<S>& power(int q) const {
    if (q < 1 || q > size()) throw OutOfRange("I^q outside the computed range");
    return powers_[static_cast<std::size_t>(q - 1)];
  }
  const std::vector<Subspace<S>>& ideals() const { return j_; }

  template <class T>
  friend IdealFiltration<T> j_filtration(const GroupAlgebra<T>&, const NormalSubgroup&, int);

 private:
  Subspace<S> augmentation_;
  Subspace<S> sigma_;
  std::vector<Subspace<S>> powers_;
  std::vector<Subspace<S>> j_;
  int stabilization_ = 0;
};

/// Computes J_1 .. J_L with L = max(q_max, stabilization_q + 1). Every J_q
/// is certified two-sided.
template <class S>
IdealFiltration<S> j_filtration(const GroupAlgebra<S>& algebra, const NormalSubgroup& sigma, int q_max = 1) {
  if (q_max < 1) throw OutOfRange("q_max must be positive");
  IdealFiltration<S> f;
  f.augmentation_ = augmentation_ideal(algebra);
  f.sigma_ = sigma_ideal(algebra, sigma);
  f.powers_.push_back(f.augmentation_);
  f.j_.push_back(sum(f.augmentation_, f.sigma_));
  for (int q = 1; f.stabilization_ == 0 || q < std::max(q_max, f.stabilization_ + 1); ++q) {
    f.powers_.push_back(times_augmentation(algebra, f.powers_.back()));
    f.j_.push_back(sum(f.powers_.back(), f.sigma_));
    if (f.stabilization_ == 0 && f.j_[f.j_.size() - 1] == f.j_[f.j_.size() - 2]) f.stabilization_ = q;
  }
  for (const auto& j : f.j_) {
    if (!algebra.is_two_sided(j)) throw CertificationFailure("J_q is not a two-sided ideal");
  }
  return f;
}

/// N(q) = dim J_q − dim J_{q+1}; requires q + 1 <= filtration.size().
template <class S>
Index n_dimension(const IdealFiltration<S>& filtration, int q) {
  if (q < 1 || q >= filtration.size()) {
    throw OutOfRange("N(q) requested outside the computed filtration (q = " + std::to_string(q) + ")");
  }
  return filtration.J(q).dim() - filtration.J(q + 1).dim();
}

}  // namespace hocoh
