#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tourney/tournament.hpp"

namespace tourney {

/// A bijection on 0..n-1; image[u] is where u goes.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);
  /// Builds from disjoint cycles, e.g. {{0,3,6}} on 7 points is (0 3 6).
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int u) const { return image_[u]; }
  std::span<const int> images() const { return image_; }

  bool is_identity() const;
  Permutation inverse() const;
  VertexSet fixed_points() const;
  /// Image of a vertex set.
  VertexSet apply(VertexSet set) const;

  /// Smallest k > 0 with this^k = Id (lcm of the cycle lengths).
  std::uint64_t order() const;

  /// Nontrivial cycles, e.g. "(0 3 6)"; the identity prints as "()".
  std::string to_cycle_string() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> image_;
};

/// (outer o inner)(u) = outer(inner(u)): the right argument acts first.
Permutation compose(const Permutation& outer, const Permutation& inner);
inline Permutation operator*(const Permutation& outer, const Permutation& inner) {
  return compose(outer, inner);
}

/// Cycle decomposition. Orbits are listed by smallest member; each orbit is in
/// cycle order starting from that member, so its size is the vertex order.
struct OrbitPartition {
  std::vector<std::vector<int>> orbits;
  std::size_t count() const { return orbits.size(); }
};

OrbitPartition orbits(const Permutation& perm);
std::uint64_t order(const Permutation& perm);

}  // namespace tourney
