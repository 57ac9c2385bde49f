#include "tourney/automorphism.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace tourney {

AutomorphismGroup::AutomorphismGroup(int n, std::vector<Permutation> elements)
    : n_(n), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
}

bool AutomorphismGroup::contains(const Permutation& perm) const {
  return std::binary_search(elements_.begin(), elements_.end(), perm);
}

bool is_automorphism(const Tournament& t, const Permutation& perm) {
  if (perm.size() != t.size()) return false;
  for (int u = 0; u < t.size(); ++u)
    if (perm.apply(t.out_neighbors(u)) != t.out_neighbors(perm(u))) return false;
  return true;
}

namespace {

class AutomorphismSearch {
 public:
  AutomorphismSearch(const Tournament& t, const std::function<bool(const Permutation&)>& visit)
      : t_(t), visit_(visit), n_(t.size()), image_(n_, -1), cell_(n_, 0), order_(n_) {
    const auto indeg = t.indegrees();
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v)
        if (indeg[u] == indeg[v]) cell_[u] |= bit(v);
    // Small cells first: their vertices have few candidate images.
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return std::popcount(cell_[a]) < std::popcount(cell_[b]);
    });
  }

  void run() { extend(0, 0); }

 private:
  // Returns false once the visitor asked to stop.
  bool extend(int depth, VertexSet used) {
    if (depth == n_) return visit_(Permutation(image_));
    const int v = order_[depth];
    VertexSet candidates = cell_[v] & ~used;
    for (int k = 0; k < depth && candidates; ++k) {
      const int u = order_[k];
      candidates &= t_.has_arc(u, v) ? t_.out_neighbors(image_[u]) : t_.in_neighbors(image_[u]);
    }
    while (candidates) {
      const int w = std::countr_zero(candidates);
      candidates &= candidates - 1;
      image_[v] = w;
      if (!extend(depth + 1, used | bit(w))) return false;
    }
    image_[v] = -1;
    return true;
  }

  const Tournament& t_;
  const std::function<bool(const Permutation&)>& visit_;
  int n_;
  std::vector<int> image_;
  std::vector<VertexSet> cell_;
  std::vector<int> order_;
};

}  // namespace

void for_each_automorphism(const Tournament& t, const std::function<bool(const Permutation&)>& visit) {
  AutomorphismSearch(t, visit).run();
}

AutomorphismGroup automorphisms(const Tournament& t) {
  std::vector<Permutation> found;
  for_each_automorphism(t, [&](const Permutation& perm) {
    found.push_back(perm);
    return true;
  });
  AutomorphismGroup group(t.size(), std::move(found));
  if (group.size() % 2 == 0) throw std::logic_error("tournament automorphism group of even order");
  return group;
}

bool is_rigid(const Tournament& t) {
  bool rigid = true;
  for_each_automorphism(t, [&](const Permutation& perm) {
    if (perm.is_identity()) return true;
    rigid = false;
    return false;
  });
  return rigid;
}

VertexSet fixed_by_all(const AutomorphismGroup& group) {
  VertexSet fixed = all_vertices(group.degree());
  for (const auto& perm : group) fixed &= perm.fixed_points();
  return fixed;
}

Permutation mirror(const PseudoCyclicTournament& t, const Permutation& phi) {
  if (!is_automorphism(t.graph(), phi)) throw std::invalid_argument("mirror: not an automorphism of P");
  const int p = t.half_order();
  std::vector<int> image(p + 1);
  for (int i = 0; i <= p; ++i) image[i] = p - phi(p - i);
  return Permutation(std::move(image));
}

}  // namespace tourney
