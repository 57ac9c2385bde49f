#include "tourney/distinguishing.hpp"

#include <algorithm>

#include "tourney/subset_search.hpp"

namespace tourney {

Labeling::Labeling(std::vector<int> labels, int r) : labels_(std::move(labels)), r_(r) {
  if (r < 1) throw std::invalid_argument("labeling needs r >= 1");
  for (int label : labels_)
    if (label < 1 || label > r) throw std::invalid_argument("label out of range 1..r");
}

Labeling Labeling::two_classes(int n, VertexSet first) {
  std::vector<int> labels(n, 2);
  for (int u = 0; u < n; ++u)
    if (contains(first, u)) labels[u] = 1;
  return Labeling(std::move(labels), 2);
}

VertexSet Labeling::label_class(int label) const {
  VertexSet set = 0;
  for (int u = 0; u < size(); ++u)
    if (labels_[u] == label) set |= bit(u);
  return set;
}

Labeling canonical_labeling(const CyclicTournament& t) {
  return Labeling::two_classes(t.order(), all_vertices(t.half_order() + 1));
}

bool preserves(const Permutation& perm, const Labeling& labeling) {
  if (perm.size() != labeling.size()) throw std::invalid_argument("labeling length does not match");
  for (int u = 0; u < perm.size(); ++u)
    if (labeling[perm(u)] != labeling[u]) return false;
  return true;
}

bool stabilizes(const Permutation& perm, VertexSet set) { return perm.apply(set) == set; }

std::vector<Permutation> preserving_automorphisms(const AutomorphismGroup& group, const Labeling& labeling) {
  if (group.degree() != labeling.size()) throw std::invalid_argument("labeling length does not match");
  std::vector<Permutation> kept;
  for (const auto& perm : group)
    if (!perm.is_identity() && preserves(perm, labeling)) kept.push_back(perm);
  return kept;
}

bool is_distinguishing(const AutomorphismGroup& group, const Labeling& labeling) {
  return preserving_automorphisms(group, labeling).empty();
}

bool is_distinguishing(const Tournament& t, const Labeling& labeling) {
  if (t.size() != labeling.size()) throw std::invalid_argument("labeling length does not match");
  return is_distinguishing(automorphisms(t), labeling);
}

namespace {

void check_limit(const Tournament& t, const SearchLimits& limits) {
  if (t.size() > limits.max_vertices)
    throw SizeLimitError("search refused: n=" + std::to_string(t.size()) + " exceeds limit " +
                         std::to_string(limits.max_vertices));
}

std::vector<Permutation> nontrivial(const AutomorphismGroup& group) {
  std::vector<Permutation> out;
  for (const auto& perm : group)
    if (!perm.is_identity()) out.push_back(perm);
  return out;
}

// Assigns vertices n-1 down to 0, so the first hit is the colex-least labeling.
// Labels are introduced in order (a new label is at most one above the largest
// used so far); renaming labels maps any solution to one of that form.
class LabelSearch {
 public:
  LabelSearch(int n, const std::vector<Permutation>& elements, int r)
      : n_(n), r_(r), labels_(n, 0), elements_(elements) {
    for (const auto& perm : elements) inverses_.push_back(perm.inverse());
  }

  std::optional<std::vector<int>> run() {
    std::vector<int> alive(elements_.size());
    for (std::size_t k = 0; k < alive.size(); ++k) alive[k] = static_cast<int>(k);
    if (extend(n_ - 1, 0, alive)) return labels_;
    return std::nullopt;
  }

 private:
  bool extend(int v, int used, const std::vector<int>& alive) {
    if (v < 0) return false;
    const int top = std::min(r_, used + 1);
    for (int c = 1; c <= top; ++c) {
      labels_[v] = c;
      std::vector<int> next;
      next.reserve(alive.size());
      for (int k : alive) {
        const int fwd = elements_[k](v);
        const int back = inverses_[k](v);
        const bool killed = (labels_[fwd] != 0 && labels_[fwd] != c) || (labels_[back] != 0 && labels_[back] != c);
        if (!killed) next.push_back(k);
      }
      if (next.empty()) {
        for (int u = 0; u < v; ++u) labels_[u] = 1;
        return true;
      }
      if (extend(v - 1, std::max(used, c), next)) return true;
    }
    labels_[v] = 0;
    return false;
  }

  int n_;
  int r_;
  std::vector<int> labels_;
  const std::vector<Permutation>& elements_;
  std::vector<Permutation> inverses_;
};

}  // namespace

DistinguishingResult find_distinguishing_labeling(const Tournament& t, SearchLimits limits) {
  check_limit(t, limits);
  const int n = t.size();
  const auto elements = nontrivial(automorphisms(t));
  if (elements.empty()) return {1, Labeling(std::vector<int>(n, 1), 1)};
  for (int r = 2; r <= n; ++r)
    if (auto labels = LabelSearch(n, elements, r).run()) return {r, Labeling(std::move(*labels), r)};
  throw std::logic_error("no distinguishing labeling with n labels");
}

int distinguishing_number(const Tournament& t, SearchLimits limits) {
  return find_distinguishing_labeling(t, limits).number;
}

std::string ConjectureResult::method() const {
  if (certificate && certificate->rule) return to_string(*certificate->rule);
  return "brute";
}

ConjectureResult check_conjecture(const CyclicTournament& t, CheckMode mode) {
  ConjectureResult result;
  if (mode == CheckMode::CertifiedFirst) {
    auto verdict = certify(t);
    if (verdict.proved()) {
      result.holds = true;
      result.certificate = std::move(verdict);
      return result;
    }
  }
  const auto group = automorphisms(t.graph());
  const auto kept = preserving_automorphisms(group, canonical_labeling(t));
  result.group_order = group.size();
  result.holds = kept.empty();
  if (!kept.empty()) result.witness = kept.front();
  return result;
}

bool is_regular_set(const AutomorphismGroup& group, VertexSet set) {
  for (const auto& perm : group)
    if (!perm.is_identity() && stabilizes(perm, set)) return false;
  return true;
}

namespace {

using SubsetScan = std::optional<VertexSet> (*)(int, int, const std::function<bool(VertexSet)>&);

CostResult cost_with(const Tournament& t, SearchLimits limits, SubsetScan scan) {
  check_limit(t, limits);
  const auto group = automorphisms(t);
  if (group.size() == 1) throw std::invalid_argument("distinguishing cost undefined for a rigid tournament");
  const int n = t.size();
  for (int k = 1; k <= n / 2; ++k)
    if (auto found = scan(n, k, [&](VertexSet set) { return is_regular_set(group, set); }))
      return {k, *found};
  throw std::invalid_argument("no regular set of size <= n/2");
}

std::vector<VertexSet> moved_sets(const AutomorphismGroup& group) {
  std::vector<VertexSet> moved;
  const VertexSet all = all_vertices(group.degree());
  for (const auto& perm : group)
    if (!perm.is_identity()) moved.push_back(all & ~perm.fixed_points());
  return moved;
}

bool hits_all(const std::vector<VertexSet>& moved, VertexSet set) {
  return std::all_of(moved.begin(), moved.end(), [&](VertexSet m) { return (m & set) != 0; });
}

std::optional<VertexSet> min_rds_with(const Tournament& t, int size_bound, SearchLimits limits, SubsetScan scan) {
  check_limit(t, limits);
  const auto moved = moved_sets(automorphisms(t));
  const int n = t.size();
  for (int k = 0; k <= std::min(size_bound, n); ++k)
    if (auto found = scan(n, k, [&](VertexSet set) { return hits_all(moved, set) && is_rigid(t.induced(set)); }))
      return found;
  return std::nullopt;
}

}  // namespace

CostResult distinguishing_cost_witness(const Tournament& t, SearchLimits limits) {
  return cost_with(t, limits, &first_subset);
}
CostResult distinguishing_cost_witness_serial(const Tournament& t, SearchLimits limits) {
  return cost_with(t, limits, &first_subset_serial);
}
int distinguishing_cost(const Tournament& t, SearchLimits limits) { return distinguishing_cost_witness(t, limits).cost; }
int distinguishing_cost_serial(const Tournament& t, SearchLimits limits) {
  return distinguishing_cost_witness_serial(t, limits).cost;
}

bool is_determining_set(const AutomorphismGroup& group, VertexSet set) { return hits_all(moved_sets(group), set); }

bool is_determining_set(const Tournament& t, VertexSet set) { return is_determining_set(automorphisms(t), set); }

bool is_rigid_determining_set(const Tournament& t, const AutomorphismGroup& group, VertexSet set) {
  return is_determining_set(group, set) && is_rigid(t.induced(set));
}

bool is_rigid_determining_set(const Tournament& t, VertexSet set) {
  return is_rigid_determining_set(t, automorphisms(t), set);
}

std::optional<VertexSet> min_rigid_determining_set(const Tournament& t, int size_bound, SearchLimits limits) {
  return min_rds_with(t, size_bound, limits, &first_subset);
}
std::optional<VertexSet> min_rigid_determining_set_serial(const Tournament& t, int size_bound, SearchLimits limits) {
  return min_rds_with(t, size_bound, limits, &first_subset_serial);
}

}  // namespace tourney
