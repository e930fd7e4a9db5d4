#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "hocoh/bar_oracle.hpp"
#include "hocoh/resolution.hpp"

namespace hocoh {

/// 0 → left → middle → right → 0 with explicit maps.
template <class S>
struct ShortExactSequence {
  AModule<S> left, middle, right;
  Matrix<S> inject;   // middle.dim × left.dim
  Matrix<S> surject;  // right.dim × middle.dim
};

/// 0 → J_q/J_{q+1} → A/J_{q+1} → A/J_q → 0 in canonical quotient coordinates.
template <class S>
ShortExactSequence<S> quotient_ses(const GroupAlgebra<S>& algebra, const IdealFiltration<S>& filtration, int q) {
  if (q < 1) throw OutOfRange("q must be at least 1");
  const Subspace<S> whole = Subspace<S>::whole(algebra.dim());
  const Subspace<S>& jq = filtration.J(q);
  const Subspace<S>& jq1 = filtration.J(q + 1);
  const std::string a = std::to_string(q), b = std::to_string(q + 1);

  ShortExactSequence<S> ses;
  ses.left = quotient_amodule(algebra, jq1, jq, "J_" + a + "/J_" + b);
  ses.middle = quotient_amodule(algebra, jq1, whole, "A/J_" + b);
  ses.right = quotient_amodule(algebra, jq, whole, "A/J_" + a);

  const Quotient<S> ql(jq, jq1), qm(whole, jq1), qr(whole, jq);
  ses.inject = qm.projection() * ql.lift();
  ses.surject = qr.projection() * qm.lift();

  if (rank(ses.inject) != ses.left.dim()) throw CertificationFailure("SES: inclusion is not injective");
  if (rank(ses.surject) != ses.right.dim()) throw CertificationFailure("SES: projection is not surjective");
  if (image(ses.inject) != kernel(ses.surject)) throw CertificationFailure("SES: not exact in the middle");
  if (!is_equivariant(ses.left.module, ses.middle.module, ses.inject) ||
      !is_equivariant(ses.middle.module, ses.right.module, ses.surject)) {
    throw CertificationFailure("SES: maps are not A-linear");
  }
  return ses;
}

/// Certificate that Γ acts trivially on J_q/J_{q+1}, i.e. that it is R^N
/// with trivial action; `isomorphism` realizes J_q/J_{q+1} ≅ R^N.
template <class S>
struct TrivialActionCertificate {
  Index multiplicity = 0;
  Matrix<S> isomorphism;
};

template <class S>
TrivialActionCertificate<S> trivial_action_witness(const ShortExactSequence<S>& ses) {
  const GammaModule<S>& left = ses.left.module;
  const Matrix<S> id = left.identity();
  for (std::size_t g = 0; g < left.group().order(); ++g) {
    if (left.action(g) != id) {
      throw NontrivialAction("element " + std::to_string(g) + " acts nontrivially on " + ses.left.label);
    }
  }
  TrivialActionCertificate<S> cert{left.dim(), id};
  const GammaModule<S> target = trivial_module<S>(left.group_ptr(), left.field(), left.dim());
  if (!is_equivariant(left, target, cert.isomorphism)) throw NontrivialAction("isomorphism is not equivariant");
  return cert;
}

/// Resolutions of the three terms of an SES, with the middle one assembled
/// from the outer two. Generators of the middle F_i are the n_i(left)
/// generators of the left resolution followed by the n_i(right) ones.
template <class S>
struct HorseshoeResolution {
  FreeResolution<S> left, middle, right;
};

template <class S>
HorseshoeResolution<S> horseshoe(const GroupAlgebra<S>& algebra, const ShortExactSequence<S>& ses,
                                 FreeResolution<S> left, FreeResolution<S> right) {
  const FiniteGroup& group = algebra.group();
  const Index g = algebra.dim();
  const int length = std::min(left.length(), right.length());

  FreeResolution<S> middle;
  middle.target = ses.middle;
  for (int i = 0; i <= length; ++i) {
    middle.ranks.push_back(left.ranks[static_cast<std::size_t>(i)] + right.ranks[static_cast<std::size_t>(i)]);
  }

  // degree 0: the right generators go to chosen preimages under the projection
  const Index nr0 = right.ranks[0];
  Matrix<S> rhs(right.augmentation.rows(), nr0);
  for (Index j = 0; j < nr0; ++j) rhs.col(j) = right.augmentation.col(j * g);
  const Matrix<S> section = module_extend(ses.middle.module, solve_columns(ses.surject, rhs));
  const Matrix<S> left_aug = ses.inject * left.augmentation;
  middle.augmentation.resize(ses.middle.dim(), left_aug.cols() + section.cols());
  middle.augmentation << left_aug, section;

  // degree i: d_M(x, y) = (d_L x + t y, d_R y) with t solving d_L t = −t_prev d_R
  Matrix<S> prev_left = left_aug, prev_twist = section;
  for (int i = 1; i <= length; ++i) {
    const Matrix<S>& dl = left.boundaries[static_cast<std::size_t>(i - 1)];
    const Matrix<S>& dr = right.boundaries[static_cast<std::size_t>(i - 1)];
    const Index nr = right.ranks[static_cast<std::size_t>(i)];
    Matrix<S> target(prev_twist.rows(), nr);
    for (Index j = 0; j < nr; ++j) target.col(j) = -(prev_twist * dr.col(j * g));
    const Matrix<S> twist = free_extend(group, solve_columns(prev_left, target));

    Matrix<S> d = Matrix<S>::Constant(dl.rows() + dr.rows(), dl.cols() + dr.cols(), algebra.zero());
    d.topLeftCorner(dl.rows(), dl.cols()) = dl;
    d.topRightCorner(twist.rows(), twist.cols()) = twist;
    d.bottomRightCorner(dr.rows(), dr.cols()) = dr;
    middle.boundaries.push_back(std::move(d));
    prev_left = dl;
    prev_twist = twist;
  }

  if (rank(middle.augmentation) != ses.middle.dim()) throw CertificationFailure("horseshoe: augmentation not onto");
  for (int i = 1; i <= length; ++i) {
    const Matrix<S>& before = middle.differential(i - 1);
    const Matrix<S>& d = middle.differential(i);
    if (image(d) != kernel(before)) {
      throw CertificationFailure("horseshoe: not exact at stage " + std::to_string(i));
    }
  }
  left.boundaries.resize(static_cast<std::size_t>(length));
  right.boundaries.resize(static_cast<std::size_t>(length));
  return {std::move(left), std::move(middle), std::move(right)};
}

/// One degree of the long exact sequence
///   H_q^p → H_{q+1}^p → Ext^p(J_q/J_{q+1}, V) → H_q^{p+1}
/// with the maps written in the representative bases of each term.
template <class S>
struct LesDegree {
  int p = 0;
  Index dim_q = 0;     // H_q^p = Ext^p(A/J_q, V)
  Index dim_q1 = 0;    // H_{q+1}^p
  Index dim_left = 0;  // Ext^p(J_q/J_{q+1}, V)
  Matrix<S> to_q1;       // H_q^p → H_{q+1}^p
  Matrix<S> to_left;     // H_{q+1}^p → Ext^p(J_q/J_{q+1}, V)
  Matrix<S> connecting;  // Ext^p(J_q/J_{q+1}, V) → H_q^{p+1}
  bool exact_at_q = false;
  bool exact_at_q1 = false;
  bool exact_at_left = false;
};

template <class S>
struct LongExactSequenceReport {
  int q = 1;
  int p_max = 0;
  Index n = 0;  // N(q)
  std::vector<Index> ranks_left, ranks_middle, ranks_right;
  std::vector<LesDegree<S>> degrees;
  Index dim_q_next = 0;  // H_q^{p_max+1}, target of the last connecting map
  bool alternating_sum_zero = false;
  bool matches_direct = false;  // H_{q+1}^p from the horseshoe equals the direct resolution

  bool all_exact() const {
    for (const auto& d : degrees) {
      if (!d.exact_at_q || !d.exact_at_q1 || !d.exact_at_left) return false;
    }
    return alternating_sum_zero && matches_direct;
  }
};

namespace detail {

/// Map on cohomology induced by a cochain map; certifies that cocycles and
/// coboundaries are respected.
template <class S>
Matrix<S> induced_on_cohomology(const Matrix<S>& cochain_map, const ExtResult<S>& from, const ExtResult<S>& to) {
  for (Index i = 0; i < from.cocycles.dim(); ++i) {
    if (!to.cocycles.contains(cochain_map * from.cocycles.basis().row(i).transpose())) {
      throw CertificationFailure("cochain map does not preserve cocycles");
    }
  }
  for (Index i = 0; i < from.coboundaries.dim(); ++i) {
    if (!to.coboundaries.contains(cochain_map * from.coboundaries.basis().row(i).transpose())) {
      throw CertificationFailure("cochain map does not preserve coboundaries");
    }
  }
  return to.classes.projection() * cochain_map * from.representatives;
}

template <class S>
bool exact_at(const Matrix<S>& incoming, const Matrix<S>& outgoing) {
  return image(incoming) == kernel(outgoing);
}

/// Block selector: rows of the `first`/`second` summand of V^{a} ⊕ V^{b}.
template <class S>
Matrix<S> summand_projection(Index a, Index b, bool second, const S& zero, const S& one) {
  Matrix<S> m = Matrix<S>::Constant(second ? b : a, a + b, zero);
  for (Index i = 0; i < m.rows(); ++i) m(i, (second ? a : 0) + i) = one;
  return m;
}

}  // namespace detail

/// The long exact Ext sequence of 0 → J_q/J_{q+1} → A/J_{q+1} → A/J_q → 0
/// in degrees 0..p_max, materialized from a horseshoe resolution; the
/// connecting map is the snake construction (lift along the restriction,
/// apply the middle coboundary, read off the A/J_q part). Exactness is
/// checked as equality of subspaces at every node.
template <class S>
LongExactSequenceReport<S> long_exact_sequence(const CohomologyEngine<S>& engine, const GammaModule<S>& v, int q,
                                               int p_max) {
  if (p_max < 0 || p_max > 3) throw BudgetExceeded("long exact sequence supports p_max in [0, 3]");
  const GroupAlgebra<S>& algebra = engine.algebra();
  const ShortExactSequence<S> ses = quotient_ses(algebra, engine.filtration(), q);
  const int length = p_max + 2;
  HorseshoeResolution<S> hs = horseshoe(algebra, ses, build_resolution(algebra, ses.left, length),
                                        *engine.resolution(q, length));

  LongExactSequenceReport<S> report;
  report.q = q;
  report.p_max = p_max;
  report.n = engine.filtration().J(q).dim() - engine.filtration().J(q + 1).dim();
  report.ranks_left = hs.left.ranks;
  report.ranks_middle = hs.middle.ranks;
  report.ranks_right = hs.right.ranks;

  const S zero = algebra.zero(), one = algebra.one();
  const Index dv = v.dim();
  // cohomology of the three Hom complexes in degrees 0..p_max+1
  std::vector<ExtResult<S>> hl, hm, hr;
  std::vector<Matrix<S>> delta_m;
  for (int k = 0; k <= p_max + 1; ++k) {
    hl.push_back(ext(algebra, hs.left, v, k));
    hm.push_back(ext(algebra, hs.middle, v, k));
    hr.push_back(ext(algebra, hs.right, v, k));
    delta_m.push_back(cochain_differential(algebra, hs.middle, v, k));
  }
  auto rank_at = [](const FreeResolution<S>& r, int k) { return r.ranks[static_cast<std::size_t>(k)]; };

  std::vector<Matrix<S>> f, g, c;  // on cohomology: R→M, M→L, L→R[+1]
  for (int k = 0; k <= p_max + 1; ++k) {
    const Index a = rank_at(hs.left, k) * dv, b = rank_at(hs.right, k) * dv;
    const Matrix<S> restrict_left = detail::summand_projection<S>(a, b, false, zero, one);
    const Matrix<S> include_right = detail::summand_projection<S>(a, b, true, zero, one).transpose();
    f.push_back(detail::induced_on_cohomology<S>(include_right, hr[k], hm[k]));
    g.push_back(detail::induced_on_cohomology<S>(restrict_left, hm[k], hl[k]));
    if (k <= p_max) {
      const Index a1 = rank_at(hs.left, k + 1) * dv, b1 = rank_at(hs.right, k + 1) * dv;
      const Matrix<S> lifted = delta_m[k] * restrict_left.transpose();
      if (!is_zero_matrix(Matrix<S>(detail::summand_projection<S>(a1, b1, false, zero, one) * lifted * hl[k].cocycles.basis().transpose()))) {
        throw CertificationFailure("snake: lifted cocycle has a nonzero left component");
      }
      const Matrix<S> snake = detail::summand_projection<S>(a1, b1, true, zero, one) * lifted;
      c.push_back(detail::induced_on_cohomology<S>(snake, hl[k], hr[k + 1]));
    }
  }

  std::vector<Index> chain;  // dims along the sequence, for the Euler check
  for (int k = 0; k <= p_max; ++k) {
    LesDegree<S> d;
    d.p = k;
    d.dim_q = hr[k].dim;
    d.dim_q1 = hm[k].dim;
    d.dim_left = hl[k].dim;
    d.to_q1 = f[k];
    d.to_left = g[k];
    d.connecting = c[k];
    const Matrix<S> into_r = k == 0 ? Matrix<S>(hr[0].dim, 0) : c[k - 1];
    d.exact_at_q = detail::exact_at<S>(into_r, f[k]);
    d.exact_at_q1 = detail::exact_at<S>(f[k], g[k]);
    d.exact_at_left = detail::exact_at<S>(g[k], c[k]);
    chain.insert(chain.end(), {d.dim_q, d.dim_q1, d.dim_left});
    report.degrees.push_back(std::move(d));
  }
  report.dim_q_next = hr[p_max + 1].dim;

  // 0 → … → Ext^{p_max}(left) → image(connecting) → 0 is exact
  long long euler = 0, sign = 1;
  for (Index dim : chain) {
    euler += sign * dim;
    sign = -sign;
  }
  euler += sign * rank(c[p_max]);
  report.alternating_sum_zero = euler == 0;

  report.matches_direct = true;
  for (int k = 0; k <= p_max; ++k) {
    if (engine.higher_cohomology(v, q + 1, k).dim != hm[k].dim) report.matches_direct = false;
  }
  return report;
}

/// (dim Ext^p(J_q/J_{q+1}, V), N(q) · dim H^p(Γ, V)); the second factor
/// comes from the bar complex.
template <class S>
std::pair<Index, Index> power_identification(const CohomologyEngine<S>& engine, const GammaModule<S>& v, int q, int p,
                                             Index budget = default_bar_budget) {
  const GroupAlgebra<S>& algebra = engine.algebra();
  const ShortExactSequence<S> ses = quotient_ses(algebra, engine.filtration(), q);
  trivial_action_witness(ses);
  const Index lhs = ext(algebra, build_resolution(algebra, ses.left, p + 1), v, p).dim;
  const Index n = ses.left.dim();
  const Index rhs = n == 0 ? 0 : n * bar_oracle(v, p, budget);
  return {lhs, rhs};
}

struct VanishingVerdict {
  /// How H^p(Γ, V) = 0 was certified for 1 <= p <= p_max: "bar" when the
  /// inhomogeneous complex fits the budget, otherwise "resolution" (q = 1).
  std::string certificate;
  bool certified_acyclic = false;
  bool pass = false;
  std::vector<std::tuple<int, int, Index>> nonzero;  // (q, p, dim) violations
};

/// Checks H_q^p = 0 for 1 <= q <= q_max, 1 <= p <= p_max on a module whose
/// ordinary cohomology vanishes in those degrees.
template <class S>
VanishingVerdict vanishing_check(const CohomologyEngine<S>& engine, const GammaModule<S>& v, int q_max, int p_max,
                                 Index budget = default_bar_budget) {
  VanishingVerdict verdict;
  verdict.certified_acyclic = true;
  verdict.certificate = "bar";
  try {
    for (int p = 1; p <= p_max; ++p) {
      if (bar_oracle(v, p, budget) != 0) verdict.certified_acyclic = false;
    }
  } catch (const BudgetExceeded&) {
    verdict.certificate = "resolution";
    verdict.certified_acyclic = true;
    engine.resolution(1, p_max + 1);
    for (int p = 1; p <= p_max; ++p) {
      if (engine.higher_cohomology(v, 1, p).dim != 0) verdict.certified_acyclic = false;
    }
  }
  for (int q = 1; q <= q_max; ++q) {
    engine.resolution(q, p_max + 1);
    for (int p = 1; p <= p_max; ++p) {
      const Index dim = engine.higher_cohomology(v, q, p).dim;
      if (dim != 0) verdict.nonzero.emplace_back(q, p, dim);
    }
  }
  verdict.pass = verdict.certified_acyclic && verdict.nonzero.empty();
  return verdict;
}

}  // namespace hocoh
