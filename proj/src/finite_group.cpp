#include "hocoh/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

#include "hocoh/errors.hpp"

namespace hocoh {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[static_cast<std::size_t>(x)]) {
      throw InputError("not a permutation of {0.." + std::to_string(images_.size()) + "-1}");
    }
    seen[static_cast<std::size_t>(x)] = 1;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<int> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<int>(i);
  return Permutation(std::move(images));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  std::vector<int> images(b.images_.size());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = a(b(static_cast<int>(i)));
  Permutation out;
  out.images_ = std::move(images);
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> images(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) images[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  Permutation out;
  out.images_ = std::move(images);
  return out;
}

int Permutation::sign() const {
  std::vector<char> seen(images_.size(), 0);
  int s = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
      seen[j] = 1;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

std::size_t FiniteGroup::find(const Permutation& p) const {
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    if (elements_[k] == p) return k;
  }
  return order();
}

FiniteGroup close_generators(const std::vector<Permutation>& gens, std::size_t order_cap, std::size_t degree) {
  if (!gens.empty()) degree = gens.front().degree();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].degree() != degree) {
      throw InputError("generator " + std::to_string(i) + " has degree " + std::to_string(gens[i].degree()) +
                       ", expected " + std::to_string(degree));
    }
  }
  if (order_cap == 0) throw InputError("order cap must be positive");

  FiniteGroup g;
  g.degree_ = degree;
  std::map<Permutation, std::size_t> index;
  auto add = [&](Permutation p, std::size_t parent, std::size_t gen) {
    if (g.elements_.size() >= order_cap) {
      throw InputError("group closure exceeds order cap " + std::to_string(order_cap));
    }
    index.emplace(p, g.elements_.size());
    g.elements_.push_back(std::move(p));
    g.parent_.push_back(parent);
    g.parent_gen_.push_back(gen);
  };
  add(Permutation::identity(degree), 0, 0);
  for (std::size_t head = 0; head < g.elements_.size(); ++head) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Permutation next = g.elements_[head] * gens[s];
      if (!index.count(next)) add(std::move(next), head, s);
    }
  }

  const std::size_t n = g.elements_.size();
  g.mult_.resize(n * n);
  g.inv_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) g.mult_[a * n + b] = index.at(g.elements_[a] * g.elements_[b]);
    g.inv_[a] = index.at(g.elements_[a].inverse());
  }
  for (const auto& s : gens) g.generators_.push_back(index.at(s));
  return g;
}

bool NormalSubgroup::contains(std::size_t k) const {
  return std::binary_search(members.begin(), members.end(), k);
}

NormalSubgroup subgroup_closure(const FiniteGroup& group, const std::vector<std::size_t>& gen_indices) {
  NormalSubgroup sub;
  sub.generators = gen_indices;
  std::vector<char> in(group.order(), 0);
  std::deque<std::size_t> queue{0};
  in[0] = 1;
  for (std::size_t k : gen_indices) {
    if (k >= group.order()) throw InputError("subgroup generator index " + std::to_string(k) + " out of range");
  }
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t s : gen_indices) {
      const std::size_t y = group.mult(x, s);
      if (!in[y]) {
        in[y] = 1;
        queue.push_back(y);
      }
    }
  }
  for (std::size_t k = 0; k < group.order(); ++k) {
    if (in[k]) sub.members.push_back(k);
  }
  for (std::size_t gamma = 0; gamma < group.order(); ++gamma) {
    for (std::size_t sigma : sub.members) {
      if (!in[group.conjugate(gamma, sigma)]) throw NotNormal(gamma, sigma);
    }
  }
  return sub;
}

NormalSubgroup whole_group(const FiniteGroup& group) { return subgroup_closure(group, group.generators()); }

}  // namespace hocoh
