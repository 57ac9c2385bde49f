#pragma once

#include <functional>
#include <vector>

#include "tourney/permutation.hpp"
#include "tourney/tournament.hpp"

namespace tourney {

/// The full automorphism group of a tournament as an explicit element list,
/// sorted lexicographically by image so the identity comes first.
class AutomorphismGroup {
 public:
  AutomorphismGroup() = default;
  AutomorphismGroup(int n, std::vector<Permutation> elements);

  int degree() const { return n_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }
  const Permutation& operator[](std::size_t k) const { return elements_[k]; }

  bool contains(const Permutation& perm) const;

 private:
  int n_ = 0;
  std::vector<Permutation> elements_;
};

bool is_automorphism(const Tournament& t, const Permutation& perm);

/// Backtracking over images cell by cell (cells = equal indegree), keeping only
/// candidates whose arcs to the already-mapped vertices are preserved. The
/// visitor returns false to stop the search early.
void for_each_automorphism(const Tournament& t, const std::function<bool(const Permutation&)>& visit);

AutomorphismGroup automorphisms(const Tournament& t);

/// Stops at the first non-identity automorphism.
bool is_rigid(const Tournament& t);

/// Vertices fixed by every element of the group.
VertexSet fixed_by_all(const AutomorphismGroup& group);

/// phi*(i) = p - phi(p - i). Throws if phi is not an automorphism of P.
Permutation mirror(const PseudoCyclicTournament& t, const Permutation& phi);

}  // namespace tourney
