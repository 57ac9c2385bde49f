#pragma once

#include <set>
#include <vector>

#include "oracles.hpp"
#include "tourney/tournament.hpp"

namespace testing_support {

inline oracle::Matrix to_matrix(const tourney::Tournament& t) {
  oracle::Matrix m(t.size(), std::vector<bool>(t.size(), false));
  for (int u = 0; u < t.size(); ++u)
    for (int v = 0; v < t.size(); ++v) m[u][v] = u != v && t.has_arc(u, v);
  return m;
}

inline tourney::Tournament from_matrix(const oracle::Matrix& m) {
  std::vector<tourney::VertexSet> rows(m.size(), 0);
  for (std::size_t u = 0; u < m.size(); ++u)
    for (std::size_t v = 0; v < m.size(); ++v)
      if (m[u][v]) rows[u] |= tourney::bit(static_cast<int>(v));
  return tourney::Tournament::from_out_rows(std::move(rows));
}

inline std::set<int> as_set(const tourney::ConnectorSet& neg) {
  const auto members = neg.members();
  return {members.begin(), members.end()};
}

}  // namespace testing_support
