#include "tourney/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace tourney {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const int n = size();
  std::vector<bool> hit(n, false);
  for (int v : image_) {
    if (v < 0 || v >= n || hit[v]) throw std::invalid_argument("image is not a bijection");
    hit[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  return Permutation(std::move(image));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  std::vector<bool> seen(n, false);
  for (const auto& cycle : cycles) {
    for (int v : cycle) {
      if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("cycles are not disjoint");
      seen[v] = true;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) image[cycle[k]] = cycle[(k + 1) % cycle.size()];
  }
  return Permutation(std::move(image));
}

bool Permutation::is_identity() const {
  for (int u = 0; u < size(); ++u)
    if (image_[u] != u) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(size());
  for (int u = 0; u < size(); ++u) inv[image_[u]] = u;
  return Permutation(std::move(inv));
}

VertexSet Permutation::fixed_points() const {
  VertexSet fixed = 0;
  for (int u = 0; u < size(); ++u)
    if (image_[u] == u) fixed |= bit(u);
  return fixed;
}

VertexSet Permutation::apply(VertexSet set) const {
  VertexSet out = 0;
  for (int u : members(set)) out |= bit(image_[u]);
  return out;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (const auto& orbit : orbits(*this).orbits) result = std::lcm(result, orbit.size());
  return result;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  for (const auto& orbit : orbits(*this).orbits) {
    if (orbit.size() < 2) continue;
    out += '(';
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(orbit[k]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) throw std::invalid_argument("composing permutations of different sizes");
  std::vector<int> image(inner.size());
  for (int u = 0; u < inner.size(); ++u) image[u] = outer(inner(u));
  return Permutation(std::move(image));
}

OrbitPartition orbits(const Permutation& perm) {
  OrbitPartition part;
  std::vector<bool> seen(perm.size(), false);
  for (int start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> orbit;
    for (int v = start; !seen[v]; v = perm(v)) {
      seen[v] = true;
      orbit.push_back(v);
    }
    part.orbits.push_back(std::move(orbit));
  }
  return part;
}

std::uint64_t order(const Permutation& perm) { return perm.order(); }

}  // namespace tourney
