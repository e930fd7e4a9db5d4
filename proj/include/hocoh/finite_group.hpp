#pragma once

#include <cstddef>
#include <vector>

namespace hocoh {

/// Bijection of {0, ..., n-1} given by its image list.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InputError unless `images` is a bijection.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  const std::vector<int>& images() const { return images_; }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }

  /// Composition a * b = a ∘ b, i.e. apply b first.
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  Permutation inverse() const;
  /// +1 for even, -1 for odd permutations.
  int sign() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// A finite permutation group with its elements enumerated canonically:
/// breadth-first from the identity, right-multiplying by the generators in
/// input order. The identity is element 0.
class FiniteGroup {
 public:
  static constexpr std::size_t default_order_cap = 24;

  std::size_t order() const { return elements_.size(); }
  std::size_t degree() const { return degree_; }
  const Permutation& element(std::size_t k) const { return elements_[k]; }
  const std::vector<Permutation>& elements() const { return elements_; }

  std::size_t mult(std::size_t a, std::size_t b) const { return mult_[a * order() + b]; }
  std::size_t inv(std::size_t a) const { return inv_[a]; }
  std::size_t conjugate(std::size_t gamma, std::size_t sigma) const {
    return mult(mult(gamma, sigma), inv(gamma));
  }

  /// Element index of each input generator, in input order.
  const std::vector<std::size_t>& generators() const { return generators_; }
  /// For k > 0: element k = element(parent(k)) * generator(parent_generator(k)).
  std::size_t parent(std::size_t k) const { return parent_[k]; }
  std::size_t parent_generator(std::size_t k) const { return parent_gen_[k]; }

  /// Index of a permutation, or order() if it is not an element.
  std::size_t find(const Permutation& p) const;

  friend FiniteGroup close_generators(const std::vector<Permutation>& gens, std::size_t order_cap,
                                      std::size_t degree);

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::vector<std::size_t> mult_;
  std::vector<std::size_t> inv_;
  std::vector<std::size_t> generators_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> parent_gen_;
};

/// Enumerates the group generated by `gens`. `degree` is only consulted when
/// `gens` is empty. Throws InputError on degree mismatch or when the closure
/// grows beyond `order_cap`.
FiniteGroup close_generators(const std::vector<Permutation>& gens,
                             std::size_t order_cap = FiniteGroup::default_order_cap,
                             std::size_t degree = 0);

/// Normal subgroup Σ of Γ as sorted element indices (always containing 0),
/// together with the generators it was closed from.
struct NormalSubgroup {
  std::vector<std::size_t> members;
  std::vector<std::size_t> generators;

  std::size_t order() const { return members.size(); }
  bool contains(std::size_t k) const;
};

/// Closes `gen_indices` to a subgroup and checks normality; throws NotNormal
/// with the first witness (γ, σ) in index order.
NormalSubgroup subgroup_closure(const FiniteGroup& group, const std::vector<std::size_t>& gen_indices);

/// Σ = Γ, generated by Γ's own generators.
NormalSubgroup whole_group(const FiniteGroup& group);

}  // namespace hocoh
