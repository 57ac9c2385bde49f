#include "tourney/indegree.hpp"

#include <stdexcept>

namespace tourney {

const char* to_string(VertexKind kind) {
  switch (kind) {
    case VertexKind::Ascent:
      return "ascent";
    case VertexKind::Descent:
      return "descent";
    case VertexKind::Plateau:
      return "plateau";
  }
  return "?";
}

IndegreeProfile indegree_profile(int p, const ConnectorSet& neg) {
  if (p < 1) throw std::invalid_argument("indegree profile needs p >= 1");
  if (neg.half_order() != p) throw std::invalid_argument("connector set does not match p");

  // prefix[k] = |N cap {1..k}|
  std::vector<int> prefix(p + 1, 0);
  for (int k = 1; k <= p; ++k) prefix[k] = prefix[k - 1] + (neg.contains(k) ? 1 : 0);

  IndegreeProfile prof;
  prof.p = p;
  prof.values.assign(p + 1, 0);
  for (int i = 0; 2 * i <= p; ++i) prof.values[i] = i + prefix[p - i] - prefix[i];
  for (int i = p / 2 + 1; i <= p; ++i) prof.values[i] = p - prof.values[p - i];
  return prof;
}

IndegreeProfile indegree_profile(const PseudoCyclicTournament& t) {
  return indegree_profile(t.half_order(), t.negative());
}

IndegreeProfile classify_vertices(int p, const ConnectorSet& neg) {
  IndegreeProfile prof = indegree_profile(p, neg);
  prof.kinds.resize(p);
  for (int i = 0; i < p; ++i) {
    const int step = prof.values[i + 1] - prof.values[i];
    VertexKind kind = VertexKind::Plateau;
    if (step > 0) {
      kind = VertexKind::Ascent;
      ++prof.ascents;
    } else if (step < 0) {
      kind = VertexKind::Descent;
      ++prof.descents;
    } else {
      ++prof.plateaus;
    }
    prof.kinds[i] = kind;
  }
  for (int i = 0; i < p;) {
    if (prof.kinds[i] != VertexKind::Plateau) {
      ++i;
      continue;
    }
    int j = i;
    while (j < p && prof.kinds[j] == VertexKind::Plateau) ++j;
    prof.plateau_runs.push_back({i, j - i + 1});
    i = j;
  }
  return prof;
}

IndegreeProfile classify_vertices(const PseudoCyclicTournament& t) {
  return classify_vertices(t.half_order(), t.negative());
}

bool is_cyclic_pseudo(const PseudoCyclicTournament& t) {
  return classify_vertices(t).plateaus == t.half_order();
}

IndegreeClasses indegree_classes(int p, const ConnectorSet& neg) {
  const IndegreeProfile prof = indegree_profile(p, neg);
  IndegreeClasses classes;
  classes.by_indegree.assign(p + 1, 0);
  for (int i = 0; i <= p; ++i) classes.by_indegree[prof.values[i]] |= bit(i);
  return classes;
}

IndegreeClasses indegree_classes(const PseudoCyclicTournament& t) {
  return indegree_classes(t.half_order(), t.negative());
}

IndegreeClasses indegree_classes(const Tournament& t) {
  IndegreeClasses classes;
  classes.by_indegree.assign(t.size(), 0);
  for (int v = 0; v < t.size(); ++v) classes.by_indegree[t.indegree(v)] |= bit(v);
  return classes;
}

}  // namespace tourney
