#pragma once

#include <cstddef>
#include <string>

#include "hocoh/gamma_module.hpp"

namespace hocoh {

/// Row budget for the inhomogeneous cochain matrices.
inline constexpr Index default_bar_budget = 20000;

namespace detail {

inline Index int_pow(Index base, int exp) {
  Index out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

/// Coboundary C^n → C^{n+1} of the inhomogeneous complex C^n = maps(Γ^n, V):
///   (dφ)(g_1..g_{n+1}) = g_1 φ(g_2..g_{n+1})
///                      + Σ_{i=1}^{n} (−1)^i φ(g_1..g_i g_{i+1}..g_{n+1})
///                      + (−1)^{n+1} φ(g_1..g_n).
/// Tuples are indexed lexicographically with g_1 most significant.
template <class S>
Matrix<S> bar_coboundary(const GammaModule<S>& v, int n) {
  const FiniteGroup& group = v.group();
  const Index order = static_cast<Index>(group.order());
  const Index dv = v.dim();
  const Index src_tuples = int_pow(order, n), dst_tuples = src_tuples * order;
  const S zero = from_int<S>(v.field(), 0), one = from_int<S>(v.field(), 1);
  Matrix<S> d = Matrix<S>::Constant(dst_tuples * dv, src_tuples * dv, zero);
  std::vector<Index> t(static_cast<std::size_t>(n + 1));
  for (Index row = 0; row < dst_tuples; ++row) {
    Index rem = row;
    for (int i = n; i >= 0; --i) {
      t[static_cast<std::size_t>(i)] = rem % order;
      rem /= order;
    }
    auto encode = [&](auto&& entry, int skip_from, int len) {
      Index code = 0;
      for (int i = 0; i < len; ++i) code = code * order + entry(i + skip_from);
      return code;
    };
    auto add_identity = [&](Index col_tuple, const S& sign) {
      for (Index k = 0; k < dv; ++k) d(row * dv + k, col_tuple * dv + k) += sign;
    };
    // g_1 · φ(g_2 .. g_{n+1})
    const Index tail = encode([&](int i) { return t[static_cast<std::size_t>(i)]; }, 1, n);
    d.block(row * dv, tail * dv, dv, dv) += v.action(static_cast<std::size_t>(t[0]));
    // merged neighbours
    for (int i = 1; i <= n; ++i) {
      const Index merged = static_cast<Index>(
          group.mult(static_cast<std::size_t>(t[static_cast<std::size_t>(i - 1)]), static_cast<std::size_t>(t[static_cast<std::size_t>(i)])));
      auto entry = [&](int k) {
        if (k < i - 1) return t[static_cast<std::size_t>(k)];
        if (k == i - 1) return merged;
        return t[static_cast<std::size_t>(k + 1)];
      };
      add_identity(encode(entry, 0, n), i % 2 == 0 ? one : -one);
    }
    // (−1)^{n+1} φ(g_1 .. g_n)
    const Index head = encode([&](int i) { return t[static_cast<std::size_t>(i)]; }, 0, n);
    add_identity(head, (n + 1) % 2 == 0 ? one : -one);
  }
  return d;
}

}  // namespace detail

/// dim H^p(Γ, V) from the inhomogeneous cochain complex, independent of the
/// free-resolution machinery. Throws BudgetExceeded if C^{p+1} has more than
/// `budget` coordinates.
template <class S>
Index bar_oracle(const GammaModule<S>& v, int p, Index budget = default_bar_budget) {
  if (p < 0) throw OutOfRange("negative degree");
  const Index order = static_cast<Index>(v.group().order());
  const Index rows = detail::int_pow(order, p + 1) * v.dim();
  if (rows > budget) {
    throw BudgetExceeded("bar complex in degree " + std::to_string(p) + " needs " + std::to_string(rows) +
                         " rows (budget " + std::to_string(budget) + ")");
  }
  const Index cochains = detail::int_pow(order, p) * v.dim();
  if (cochains == 0) return 0;
  const Index cocycles = cochains - rank(detail::bar_coboundary(v, p));
  const Index coboundaries = p == 0 ? 0 : rank(detail::bar_coboundary(v, p - 1));
  return cocycles - coboundaries;
}

}  // namespace hocoh
