#pragma once

#include <vector>

#include "tourney/tournament.hpp"

namespace tourney {

/// Step type of vertex i (0 <= i < p) from d(i) to d(i+1).
enum class VertexKind { Ascent, Descent, Plateau };

const char* to_string(VertexKind kind);

/// A maximal plateau (start, ..., start+length-1). `length` counts vertices,
/// so a run of m consecutive plateau-vertices gives length m+1.
struct PlateauSpan {
  int start = 0;
  int length = 0;
  int last() const { return start + length - 1; }
  bool operator==(const PlateauSpan&) const = default;
};

/// Indegree sequence IS(P) = (d(0), ..., d(p)) of a pseudo-cyclic tournament,
/// optionally with the per-vertex classification filled in.
struct IndegreeProfile {
  int p = 0;
  std::vector<int> values;
  std::vector<VertexKind> kinds;  // vertices 0..p-1; empty until classified
  int ascents = 0;
  int descents = 0;
  int plateaus = 0;
  std::vector<PlateauSpan> plateau_runs;
};

/// Closed-form indegrees of P(p; N): d(i) = i + |N cap {i+1..p-i}| on the
/// lower half, reflected through d(i) = p - d(p-i) on the upper half.
IndegreeProfile indegree_profile(int p, const ConnectorSet& neg);
IndegreeProfile indegree_profile(const PseudoCyclicTournament& t);

/// Profile plus vertex kinds, (alpha, delta, pi) counts and plateau runs.
IndegreeProfile classify_vertices(int p, const ConnectorSet& neg);
IndegreeProfile classify_vertices(const PseudoCyclicTournament& t);

/// True iff every vertex 0..p-1 is a plateau-vertex, i.e. P is regular.
bool is_cyclic_pseudo(const PseudoCyclicTournament& t);

/// V_d for each indegree d in 0..p.
struct IndegreeClasses {
  std::vector<VertexSet> by_indegree;
  VertexSet of(int d) const { return d >= 0 && d < static_cast<int>(by_indegree.size()) ? by_indegree[d] : 0; }
};

IndegreeClasses indegree_classes(int p, const ConnectorSet& neg);
IndegreeClasses indegree_classes(const PseudoCyclicTournament& t);
/// Classes of an arbitrary tournament, by direct in-arc counting.
IndegreeClasses indegree_classes(const Tournament& t);

}  // namespace tourney
