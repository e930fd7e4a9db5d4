#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "hocoh/les.hpp"

namespace hocoh::test {

inline std::shared_ptr<const FiniteGroup> make_group(std::vector<std::vector<int>> gens, std::size_t degree = 0) {
  std::vector<Permutation> perms;
  for (auto& g : gens) perms.emplace_back(std::move(g));
  return std::make_shared<const FiniteGroup>(close_generators(perms, FiniteGroup::default_order_cap, degree));
}

inline std::shared_ptr<const FiniteGroup> cyclic(int n) {
  std::vector<int> images;
  for (int i = 0; i < n; ++i) images.push_back((i + 1) % n);
  return make_group({images});
}

inline std::shared_ptr<const FiniteGroup> trivial_group() { return make_group({}, 1); }
inline std::shared_ptr<const FiniteGroup> s3() { return make_group({{1, 2, 0}, {1, 0, 2}}); }
inline std::shared_ptr<const FiniteGroup> klein() { return make_group({{1, 0, 3, 2}, {2, 3, 0, 1}}); }
inline std::shared_ptr<const FiniteGroup> d4() { return make_group({{1, 2, 3, 0}, {3, 2, 1, 0}}); }
inline std::shared_ptr<const FiniteGroup> q8() {
  return make_group({{2, 3, 1, 0, 6, 7, 5, 4}, {4, 5, 7, 6, 1, 0, 2, 3}});
}
inline std::shared_ptr<const FiniteGroup> s4() { return make_group({{1, 2, 3, 0}, {1, 0, 2, 3}}); }

/// Σ generated by the listed generator positions of the group.
inline NormalSubgroup sigma_from(const FiniteGroup& g, const std::vector<std::size_t>& positions) {
  std::vector<std::size_t> gens;
  for (std::size_t p : positions) gens.push_back(g.generators()[p]);
  return subgroup_closure(g, gens);
}

template <class S>
struct Setup {
  std::shared_ptr<const GroupAlgebra<S>> algebra;
  std::shared_ptr<CohomologyEngine<S>> engine;

  const FiniteGroup& group() const { return algebra->group(); }
  const IdealFiltration<S>& filtration() const { return engine->filtration(); }
};

template <class S>
Setup<S> setup(std::shared_ptr<const FiniteGroup> g, FieldSpec field, const NormalSubgroup& sigma, int q_max = 3) {
  Setup<S> out;
  out.algebra = std::make_shared<const GroupAlgebra<S>>(g, field);
  out.engine = std::make_shared<CohomologyEngine<S>>(out.algebra, sigma, q_max);
  return out;
}

template <class S>
Setup<S> setup(std::shared_ptr<const FiniteGroup> g, FieldSpec field, int q_max = 3) {
  const NormalSubgroup sigma = subgroup_closure(*g, {});
  return setup<S>(std::move(g), field, sigma, q_max);
}

/// Integer matrix with entries in [-2, 2] and a controllable rank deficit.
template <class S>
Matrix<S> random_matrix(std::mt19937& rng, const FieldSpec& field, Index rows, Index cols) {
  std::uniform_int_distribution<int> entry(-2, 2);
  Matrix<S> m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) m(i, j) = from_int<S>(field, entry(rng));
  }
  if (rows >= 2) m.row(rows - 1) = m.row(0) + m.row(1);  // force a dependency
  return m;
}

template <class S>
Vector<S> unit(const FieldSpec& field, Index n, Index k) {
  Vector<S> v = Vector<S>::Constant(n, from_int<S>(field, 0));
  v(k) = from_int<S>(field, 1);
  return v;
}

}  // namespace hocoh::test
