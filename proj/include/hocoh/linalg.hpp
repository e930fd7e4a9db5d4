#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "hocoh/errors.hpp"
#include "hocoh/scalar.hpp"

namespace hocoh {

using Index = Eigen::Index;

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <class S>
using RowMatrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <class S>
struct RrefResult {
  Index rank = 0;
  Matrix<S> reduced;  // rank x cols, nonzero rows only
  std::vector<Index> pivots;
};

namespace detail {

// row(target) -= factor * row(pivot), touching only the listed columns
template <class S>
inline void eliminate(RowMatrix<S>& work, Index target, Index pivot, const S& factor,
                      const std::vector<Index>& support) {
  for (Index c : support) work(target, c) -= factor * work(pivot, c);
}

template <class S>
inline std::vector<Index> row_support(const RowMatrix<S>& work, Index row, Index from) {
  std::vector<Index> support;
  for (Index c = from; c < work.cols(); ++c) {
    if (!is_zero(work(row, c))) support.push_back(c);
  }
  return support;
}

}  // namespace detail

/// Reduced row-echelon form. Pivot is the leftmost nonzero column, taken from
/// the first remaining row that is nonzero there; pivots are scaled to 1.
template <class Derived>
RrefResult<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  RowMatrix<S> work = m;
  const Index rows = work.rows(), cols = work.cols();
  RrefResult<S> out;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index found = -1;
    for (Index i = r; i < rows; ++i) {
      if (!is_zero(work(i, c))) {
        found = i;
        break;
      }
    }
    if (found < 0) continue;
    if (found != r) work.row(found).swap(work.row(r));
    const S scale = inverse(work(r, c));
    for (Index j = c; j < cols; ++j) work(r, j) *= scale;
    const std::vector<Index> support = detail::row_support(work, r, c);
    for (Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(work(i, c))) continue;
      const S factor = work(i, c);
      detail::eliminate(work, i, r, factor, support);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = work.topRows(r);
  return out;
}

/// Rank by forward elimination only (no back-substitution).
template <class Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  RowMatrix<S> work = m;
  const Index rows = work.rows(), cols = work.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index found = -1;
    for (Index i = r; i < rows; ++i) {
      if (!is_zero(work(i, c))) {
        found = i;
        break;
      }
    }
    if (found < 0) continue;
    if (found != r) work.row(found).swap(work.row(r));
    const S scale = inverse(work(r, c));
    const std::vector<Index> support = detail::row_support(work, r, c);
    for (Index i = r + 1; i < rows; ++i) {
      if (is_zero(work(i, c))) continue;
      const S factor = work(i, c) * scale;
      detail::eliminate(work, i, r, factor, support);
    }
    ++r;
  }
  return r;
}

/// Linear subspace of S^n stored as a canonical RREF basis, one vector per row.
template <class S>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(Index ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  /// Span of the rows of `vectors`.
  template <class Derived>
  static Subspace span(const Eigen::MatrixBase<Derived>& vectors) {
    Subspace out(vectors.cols());
    auto r = rref(vectors);
    out.basis_ = std::move(r.reduced);
    out.pivots_ = std::move(r.pivots);
    return out;
  }

  static Subspace whole(Index ambient_dim) {
    Subspace out(ambient_dim);
    out.basis_ = Matrix<S>::Identity(ambient_dim, ambient_dim);
    out.pivots_.resize(ambient_dim);
    for (Index i = 0; i < ambient_dim; ++i) out.pivots_[i] = i;
    return out;
  }

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  bool is_zero_space() const { return dim() == 0; }
  const Matrix<S>& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }

  /// v minus its projection along the pivot coordinates; zero iff v is in the span.
  template <class Derived>
  Vector<S> residual(const Eigen::MatrixBase<Derived>& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("vector does not match ambient dimension");
    Vector<S> w = v;
    for (Index i = 0; i < dim(); ++i) {
      const S c = w(pivots_[i]);
      if (is_zero(c)) continue;
      for (Index j = pivots_[i]; j < ambient_; ++j) {
        if (!is_zero(basis_(i, j))) w(j) -= c * basis_(i, j);
      }
    }
    return w;
  }

  template <class Derived>
  bool contains(const Eigen::MatrixBase<Derived>& v) const {
    const Vector<S> w = residual(v);
    for (Index j = 0; j < w.size(); ++j) {
      if (!is_zero(w(j))) return false;
    }
    return true;
  }

  bool contains(const Subspace& other) const {
    check_ambient(other);
    for (Index i = 0; i < other.dim(); ++i) {
      if (!contains(other.basis_.row(i).transpose())) return false;
    }
    return true;
  }

  /// Coordinates of a member vector in this basis (its entries at the pivots).
  template <class Derived>
  Vector<S> coordinates(const Eigen::MatrixBase<Derived>& v) const {
    if (!contains(v)) throw OutOfRange("vector is not in the subspace");
    Vector<S> c(dim());
    for (Index i = 0; i < dim(); ++i) c(i) = v(pivots_[i]);
    return c;
  }

  /// Matrix dim x ambient extracting pivot coordinates (valid on members only).
  Matrix<S> coordinate_matrix() const {
    Matrix<S> m = Matrix<S>::Zero(dim(), ambient_);
    for (Index i = 0; i < dim(); ++i) m(i, pivots_[i]) = S(1);
    return m;
  }

  /// Matrix (ambient - dim) x ambient whose kernel is exactly this subspace:
  /// the coordinates of v modulo the subspace on the non-pivot columns.
  Matrix<S> annihilator_matrix() const {
    const std::vector<Index> free = complement_columns();
    Matrix<S> m = Matrix<S>::Zero(static_cast<Index>(free.size()), ambient_);
    for (Index k = 0; k < static_cast<Index>(free.size()); ++k) {
      m(k, free[k]) = S(1);
      for (Index i = 0; i < dim(); ++i) m(k, pivots_[i]) -= basis_(i, free[k]);
    }
    return m;
  }

  std::vector<Index> complement_columns() const {
    std::vector<Index> free;
    std::size_t next = 0;
    for (Index c = 0; c < ambient_; ++c) {
      if (next < pivots_.size() && pivots_[next] == c) {
        ++next;
      } else {
        free.push_back(c);
      }
    }
    return free;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  void check_ambient(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionMismatch("subspaces live in different ambient spaces");
  }

 private:
  Index ambient_ = 0;
  Matrix<S> basis_;
  std::vector<Index> pivots_;
};

template <class S>
Subspace<S> sum(const Subspace<S>& a, const Subspace<S>& b) {
  a.check_ambient(b);
  Matrix<S> stacked(a.dim() + b.dim(), a.ambient_dim());
  stacked << a.basis(), b.basis();
  return Subspace<S>::span(stacked);
}

/// Common vectors: solve u^T A = w^T B through the kernel of [A^T | -B^T].
template <class S>
Subspace<S> intersection(const Subspace<S>& a, const Subspace<S>& b) {
  a.check_ambient(b);
  if (a.dim() == 0 || b.dim() == 0) return Subspace<S>(a.ambient_dim());
  Matrix<S> system(a.ambient_dim(), a.dim() + b.dim());
  system << a.basis().transpose(), -b.basis().transpose();
  const auto r = rref(system);
  const Index n = system.cols();
  std::vector<char> is_pivot(n, 0);
  for (Index p : r.pivots) is_pivot[p] = 1;
  // the columns of A^T are independent, so every free column lies in the w-block
  std::vector<Vector<S>> found;
  for (Index f = a.dim(); f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector<S> u = Vector<S>::Zero(a.dim());
    for (Index i = 0; i < r.rank; ++i) {
      if (r.pivots[i] < a.dim()) u(r.pivots[i]) = -r.reduced(i, f);
    }
    found.push_back(a.basis().transpose() * u);
  }
  Matrix<S> rows(static_cast<Index>(found.size()), a.ambient_dim());
  for (Index i = 0; i < rows.rows(); ++i) rows.row(i) = found[i].transpose();
  return Subspace<S>::span(rows);
}

/// Null space {x : m x = 0}.
template <class Derived>
Subspace<typename Derived::Scalar> kernel(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  const auto r = rref(m);
  const Index n = m.cols();
  std::vector<char> is_pivot(n, 0);
  for (Index p : r.pivots) is_pivot[p] = 1;
  Matrix<S> rows(n - r.rank, n);
  Index k = 0;
  for (Index f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    rows.row(k).setZero();
    rows(k, f) = S(1);
    for (Index i = 0; i < r.rank; ++i) rows(k, r.pivots[i]) = -r.reduced(i, f);
    ++k;
  }
  return Subspace<S>::span(rows);
}

/// Column space of m.
template <class Derived>
Subspace<typename Derived::Scalar> image(const Eigen::MatrixBase<Derived>& m) {
  return Subspace<typename Derived::Scalar>::span(m.transpose());
}

/// {x : m x in target}.
template <class Derived>
Subspace<typename Derived::Scalar> preimage(const Eigen::MatrixBase<Derived>& m,
                                            const Subspace<typename Derived::Scalar>& target) {
  if (m.rows() != target.ambient_dim()) throw DimensionMismatch("preimage: target ambient mismatch");
  using S = typename Derived::Scalar;
  const Matrix<S> composite = target.annihilator_matrix() * m;
  if (composite.rows() == 0) return Subspace<S>::whole(m.cols());
  return kernel(composite);
}

/// Some x with m x = b, or nothing when b is outside the column space. The
/// returned solution sets every free variable to zero.
template <class DerivedM, class DerivedB>
std::optional<Vector<typename DerivedM::Scalar>> solve(const Eigen::MatrixBase<DerivedM>& m,
                                                       const Eigen::MatrixBase<DerivedB>& b) {
  using S = typename DerivedM::Scalar;
  if (b.rows() != m.rows()) throw DimensionMismatch("solve: right-hand side has wrong length");
  Matrix<S> augmented(m.rows(), m.cols() + 1);
  augmented << m, b;
  const auto r = rref(augmented);
  if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;
  Vector<S> x = Vector<S>::Zero(m.cols());
  for (Index i = 0; i < r.rank; ++i) x(r.pivots[i]) = r.reduced(i, m.cols());
  return x;
}

/// Solves m X = B column by column; throws if any column is unsolvable.
template <class DerivedM, class DerivedB>
Matrix<typename DerivedM::Scalar> solve_columns(const Eigen::MatrixBase<DerivedM>& m,
                                                const Eigen::MatrixBase<DerivedB>& b) {
  using S = typename DerivedM::Scalar;
  if (b.rows() != m.rows()) throw DimensionMismatch("solve: right-hand side has wrong length");
  Matrix<S> augmented(m.rows(), m.cols() + b.cols());
  augmented << m, b;
  // one elimination for all right-hand sides; pivots must stay in the m-block
  const auto r = rref(augmented);
  Index m_rank = 0;
  while (m_rank < r.rank && r.pivots[m_rank] < m.cols()) ++m_rank;
  if (m_rank != r.rank) throw CertificationFailure("solve: right-hand side outside the column space");
  Matrix<S> x = Matrix<S>::Zero(m.cols(), b.cols());
  for (Index i = 0; i < r.rank; ++i) x.row(r.pivots[i]) = r.reduced.row(i).tail(b.cols());
  return x;
}

/// Quotient sup/sub with coordinates on the complement of the pivot columns
/// of sub, itself written in the coordinates of sup.
template <class S>
class Quotient {
 public:
  Quotient() = default;
  Quotient(Subspace<S> sup, const Subspace<S>& sub) : sup_(std::move(sup)) {
    if (!sup_.contains(sub)) throw OutOfRange("quotient: sub is not contained in sup");
    Matrix<S> coords(sub.dim(), sup_.dim());
    for (Index i = 0; i < sub.dim(); ++i) coords.row(i) = sup_.coordinates(sub.basis().row(i).transpose()).transpose();
    sub_in_sup_ = Subspace<S>::span(coords);
    complement_ = sub_in_sup_.complement_columns();
    projection_ = sub_in_sup_.annihilator_matrix() * sup_.coordinate_matrix();
    lift_ = Matrix<S>(sup_.ambient_dim(), dim());
    for (Index k = 0; k < dim(); ++k) lift_.col(k) = sup_.basis().row(complement_[k]).transpose();
  }

  Index dim() const { return static_cast<Index>(complement_.size()); }
  Index ambient_dim() const { return sup_.ambient_dim(); }
  const Subspace<S>& sup() const { return sup_; }

  /// dim x ambient; valid on vectors of sup.
  const Matrix<S>& projection() const { return projection_; }
  /// ambient x dim; column k is the canonical representative of class k.
  const Matrix<S>& lift() const { return lift_; }

  template <class Derived>
  Vector<S> project(const Eigen::MatrixBase<Derived>& v) const {
    if (!sup_.contains(v)) throw OutOfRange("quotient: vector not in sup");
    return projection_ * v;
  }

 private:
  Subspace<S> sup_;
  Subspace<S> sub_in_sup_;
  std::vector<Index> complement_;
  Matrix<S> projection_;
  Matrix<S> lift_;
};

/// Scalar-type conversion for integer matrices (0/±1 tables and the like).
template <class S, class Derived>
Matrix<S> to_field(const FieldSpec& field, const Eigen::MatrixBase<Derived>& m) {
  Matrix<S> out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = from_int<S>(field, static_cast<long long>(m(i, j)));
  }
  return out;
}

template <class Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (!is_zero(m(i, j))) return false;
    }
  }
  return true;
}

}  // namespace hocoh
