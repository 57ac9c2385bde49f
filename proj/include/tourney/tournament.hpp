#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tourney {

/// Vertex subsets are single machine words; bit v stands for vertex v.
using VertexSet = std::uint64_t;

/// Largest supported vertex count, so that any vertex set fits one word.
inline constexpr int kMaxVertices = 63;

inline constexpr VertexSet bit(int v) { return VertexSet{1} << v; }
inline constexpr VertexSet all_vertices(int n) { return n == 0 ? 0 : (~VertexSet{0} >> (64 - n)); }
inline constexpr bool contains(VertexSet set, int v) { return (set >> v) & 1u; }

/// Vertices of `set` in increasing order.
std::vector<int> members(VertexSet set);

struct Degrees {
  int in = 0;
  int out = 0;
  bool operator==(const Degrees&) const = default;
};

/// A tournament on vertices 0..n-1, stored as n out-neighbour bit rows plus
/// the transposed in-neighbour rows. Immutable once built.
class Tournament {
 public:
  Tournament() = default;

  /// Builds a tournament from `forward(u, v)` queried once for each pair
  /// u < v: true means the arc goes u -> v, false means v -> u.
  template <class Forward>
  static Tournament from_relation(int n, Forward&& forward) {
    Tournament t(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (forward(u, v))
          t.add_arc(u, v);
        else
          t.add_arc(v, u);
      }
    return t;
  }

  /// Validates antisymmetry and completeness of the given out-rows.
  static Tournament from_out_rows(std::vector<VertexSet> rows);

  static Tournament transitive(int n);
  /// TT*_n: transitive with the arc between 0 and n-1 reversed.
  static Tournament almost_transitive(int n);

  int size() const { return n_; }
  bool has_arc(int u, int v) const;
  VertexSet out_neighbors(int u) const;
  VertexSet in_neighbors(int u) const;
  int indegree(int u) const;
  int outdegree(int u) const;
  Degrees degrees(int u) const;
  std::vector<int> indegrees() const;

  Tournament converse() const;

  /// Sub-tournament induced by `vertices`, relabelled 0..k-1 in the given order.
  Tournament induced(std::span<const int> vertices) const;
  Tournament induced(VertexSet vertices) const;

  bool operator==(const Tournament&) const = default;

 private:
  explicit Tournament(int n);
  void add_arc(int u, int v);
  void check_vertex(int u) const;

  int n_ = 0;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
};

/// Induced sub-tournament together with the original index of each vertex.
struct SubTournament {
  Tournament graph;
  std::vector<int> origin;
};

/// Negative connectors S- (or N for pseudo-cyclic tournaments): a subset of
/// {1..p}. Member s is stored as bit s-1 of the mask.
class ConnectorSet {
 public:
  ConnectorSet() = default;
  ConnectorSet(int p, std::span<const int> members);
  ConnectorSet(int p, std::initializer_list<int> members)
      : ConnectorSet(p, std::span<const int>(members.begin(), members.size())) {}

  static ConnectorSet from_mask(int p, VertexSet mask);
  /// Parses a comma-separated literal such as "2,5,6"; empty means no connectors.
  static ConnectorSet parse(int p, std::string_view text);

  int half_order() const { return p_; }
  VertexSet mask() const { return mask_; }
  bool contains(int s) const { return s >= 1 && s <= p_ && tourney::contains(mask_, s - 1); }
  int size() const;
  bool empty() const { return mask_ == 0; }
  /// Smallest member; requires a non-empty set.
  int min() const;
  std::vector<int> members() const;

  /// {1..p} minus this set.
  ConnectorSet complement() const;
  /// Same members intersected with {1..q}, reinterpreted over {1..q}.
  ConnectorSet restricted(int q) const;

  /// Literal form, e.g. "2,5,6" (empty string for no connectors).
  std::string to_string() const;

  bool operator==(const ConnectorSet&) const = default;

 private:
  int p_ = 0;
  VertexSet mask_ = 0;
};

/// T(2p+1; S-) on vertices 0..2p.
class CyclicTournament {
 public:
  int half_order() const { return p_; }
  int order() const { return 2 * p_ + 1; }
  const ConnectorSet& negative() const { return neg_; }
  const Tournament& graph() const { return graph_; }
  /// The connector set S over Z_{2p+1}, as a bit set of residues.
  VertexSet connectors() const;

 private:
  friend CyclicTournament build_cyclic(int p, const ConnectorSet& neg);
  int p_ = 0;
  ConnectorSet neg_;
  Tournament graph_;
};

/// P(p; N) on vertices 0..p: for i > j the arc is i -> j iff i - j is in N.
class PseudoCyclicTournament {
 public:
  int half_order() const { return p_; }
  int order() const { return p_ + 1; }
  const ConnectorSet& negative() const { return neg_; }
  const Tournament& graph() const { return graph_; }

 private:
  friend PseudoCyclicTournament build_pseudo_cyclic(int p, const ConnectorSet& neg);
  int p_ = 0;
  ConnectorSet neg_;
  Tournament graph_;
};

CyclicTournament build_cyclic(int p, const ConnectorSet& neg);
PseudoCyclicTournament build_pseudo_cyclic(int p, const ConnectorSet& neg);

/// T_{i,j}: the sub-tournament induced by {i, ..., j}, relabelled 0..j-i.
SubTournament induced_interval(const CyclicTournament& t, int i, int j);
/// T_{0,p}, labelled 1 by the canonical labeling.
SubTournament lower_half(const CyclicTournament& t);
/// T_{p+1,2p}, labelled 2 by the canonical labeling (a single vertex when p = 1).
SubTournament upper_half(const CyclicTournament& t);

Tournament converse(const Tournament& t);

/// Text literal: first line n, then one line per vertex listing its
/// out-neighbours separated by spaces.
Tournament parse_tournament(std::istream& in);
Tournament parse_tournament(std::string_view text);
std::string format_tournament(const Tournament& t);

}  // namespace tourney
