#pragma once

#include "hocoh/gamma_module.hpp"

namespace hocoh {

/// Hom_A(J_q, V) inside the space of R-linear maps J_q → V. A map φ is
/// stored by its values on the basis of J_q: coordinate k·dim V + i is φ(x_k)_i.
template <class S>
struct HomSpace {
  Index source_dim = 0;  // dim J_q
  Index target_dim = 0;  // dim V
  Subspace<S> maps;

  Index dim() const { return maps.dim(); }
};

/// Which group elements the A-linearity constraints φ(γx) = γφ(x) range over.
/// Generators suffice because A is generated by Γ as an algebra.
enum class LinearityConstraints { generators, all_elements };

template <class S>
HomSpace<S> hom_a_space(const GroupAlgebra<S>& algebra, const IdealFiltration<S>& filtration, int q,
                        const GammaModule<S>& v,
                        LinearityConstraints constraints = LinearityConstraints::generators) {
  const Subspace<S>& j = filtration.J(q);
  const Index dj = j.dim(), dv = v.dim();
  HomSpace<S> out{dj, dv, Subspace<S>(dj * dv)};
  if (dj * dv == 0) return out;

  std::vector<std::size_t> elements;
  if (constraints == LinearityConstraints::generators) {
    elements = algebra.group().generators();
  } else {
    for (std::size_t g = 0; g < algebra.group().order(); ++g) elements.push_back(g);
  }
  if (elements.empty()) {
    out.maps = Subspace<S>::whole(dj * dv);
    return out;
  }

  const Matrix<S> id = v.identity();
  Matrix<S> system = Matrix<S>::Constant(static_cast<Index>(elements.size()) * dj * dv, dj * dv, algebra.zero());
  Index block = 0;
  for (std::size_t gamma : elements) {
    for (Index k = 0; k < dj; ++k, ++block) {
      // γ·x_k = Σ_l c_l x_l, so the constraint reads Σ_l c_l φ(x_l) − ρ(γ) φ(x_k) = 0
      const Vector<S> c = j.coordinates(algebra.left_mult(gamma) * j.basis().row(k).transpose());
      for (Index l = 0; l < dj; ++l) {
        if (!is_zero(c(l))) system.block(block * dv, l * dv, dv, dv) += c(l) * id;
      }
      system.block(block * dv, k * dv, dv, dv) -= v.action(gamma);
    }
  }
  out.maps = kernel(system);
  return out;
}

/// α(v) = (x ↦ x·v) in raw coordinates: (dim J_q · dim V) × dim V.
template <class S>
Matrix<S> alpha_raw(const IdealFiltration<S>& filtration, int q, const GammaModule<S>& v) {
  return stacked_action(v, filtration.J(q));
}

/// α : V → Hom_A(J_q, V) written in the coordinates of the hom space basis.
/// Throws AlphaNotAHom if some α(v) fails A-linearity.
template <class S>
Matrix<S> alpha_map(const HomSpace<S>& hom, const IdealFiltration<S>& filtration, int q, const GammaModule<S>& v) {
  const Matrix<S> raw = alpha_raw(filtration, q, v);
  for (Index i = 0; i < raw.cols(); ++i) {
    if (!hom.maps.contains(raw.col(i))) throw AlphaNotAHom("α(e_" + std::to_string(i) + ") is not A-linear");
  }
  return hom.maps.coordinate_matrix() * raw;
}

/// dim H_q^1 as dim Hom_A(J_q, V) − rank α.
template <class S>
Index h_q1_cocycle(const GroupAlgebra<S>& algebra, const IdealFiltration<S>& filtration, int q,
                   const GammaModule<S>& v) {
  const HomSpace<S> hom = hom_a_space(algebra, filtration, q, v);
  if (hom.dim() == 0) return 0;
  return hom.dim() - rank(alpha_map(hom, filtration, q, v));
}

}  // namespace hocoh
