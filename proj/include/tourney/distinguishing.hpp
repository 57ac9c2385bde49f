#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tourney/automorphism.hpp"
#include "tourney/certificates.hpp"
#include "tourney/permutation.hpp"
#include "tourney/tournament.hpp"

namespace tourney {

/// Labels in 1..r, one per vertex.
class Labeling {
 public:
  Labeling() = default;
  Labeling(std::vector<int> labels, int r);

  /// Label 1 on `first`, label 2 elsewhere.
  static Labeling two_classes(int n, VertexSet first);

  int size() const { return static_cast<int>(labels_.size()); }
  int classes() const { return r_; }
  int operator[](int u) const { return labels_[u]; }
  const std::vector<int>& labels() const { return labels_; }
  /// Vertices carrying `label`.
  VertexSet label_class(int label) const;

  bool operator==(const Labeling&) const = default;

 private:
  std::vector<int> labels_;
  int r_ = 1;
};

/// Label 1 on 0..p, label 2 on p+1..2p.
Labeling canonical_labeling(const CyclicTournament& t);

bool preserves(const Permutation& perm, const Labeling& labeling);
/// perm maps `set` onto itself.
bool stabilizes(const Permutation& perm, VertexSet set);

/// Throws std::invalid_argument on a length mismatch.
bool is_distinguishing(const Tournament& t, const Labeling& labeling);
bool is_distinguishing(const AutomorphismGroup& group, const Labeling& labeling);

/// Nontrivial group elements preserving the labeling.
std::vector<Permutation> preserving_automorphisms(const AutomorphismGroup& group, const Labeling& labeling);

struct SearchLimits {
  int max_vertices = 31;
};

class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct DistinguishingResult {
  int number = 1;
  Labeling labeling;
};

/// Least r with a distinguishing r-labeling, plus the first such labeling in
/// colex order (vertex n-1 most significant).
DistinguishingResult find_distinguishing_labeling(const Tournament& t, SearchLimits limits = {});
int distinguishing_number(const Tournament& t, SearchLimits limits = {});

enum class CheckMode { BruteForce, CertifiedFirst };

struct ConjectureResult {
  bool holds = false;
  /// Nontrivial automorphism preserving the canonical labeling, when holds is false.
  std::optional<Permutation> witness;
  /// Set when a certificate decided.
  std::optional<CertificateVerdict> certificate;
  /// |Aut(T)| when the brute-force path ran, 0 otherwise.
  std::size_t group_order = 0;

  /// "brute" or the certificate rule name.
  std::string method() const;
};

ConjectureResult check_conjecture(const CyclicTournament& t, CheckMode mode = CheckMode::BruteForce);

/// The setwise stabilizer of R in the group is trivial.
bool is_regular_set(const AutomorphismGroup& group, VertexSet set);

struct CostResult {
  int cost = 0;
  VertexSet label_class = 0;  // first regular set of that size in colex order
};

/// Smallest regular set of size <= n/2. Throws std::invalid_argument on a rigid
/// tournament or when no such set exists.
CostResult distinguishing_cost_witness(const Tournament& t, SearchLimits limits = {});
int distinguishing_cost(const Tournament& t, SearchLimits limits = {});
CostResult distinguishing_cost_witness_serial(const Tournament& t, SearchLimits limits = {});
int distinguishing_cost_serial(const Tournament& t, SearchLimits limits = {});

/// No nontrivial group element fixes every vertex of X.
bool is_determining_set(const AutomorphismGroup& group, VertexSet set);
bool is_determining_set(const Tournament& t, VertexSet set);
bool is_rigid_determining_set(const Tournament& t, VertexSet set);
bool is_rigid_determining_set(const Tournament& t, const AutomorphismGroup& group, VertexSet set);

/// A rigid determining set of minimum size, at most `size_bound`, first in colex
/// order among those of that size.
std::optional<VertexSet> min_rigid_determining_set(const Tournament& t, int size_bound, SearchLimits limits = {});
std::optional<VertexSet> min_rigid_determining_set_serial(const Tournament& t, int size_bound,
                                                          SearchLimits limits = {});

}  // namespace tourney
