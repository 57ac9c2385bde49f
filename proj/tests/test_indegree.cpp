#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "tourney/indegree.hpp"

using namespace tourney;
using K = VertexKind;

namespace {

ConnectorSet random_connectors(int p, std::mt19937& rng) {
  std::uniform_int_distribution<VertexSet> pick(0, bit(p) - 1);
  return ConnectorSet::from_mask(p, pick(rng));
}

}  // namespace

TEST_CASE("indegree sequences") {
  CHECK(indegree_profile(8, ConnectorSet(8, {2, 4, 5})).values == std::vector<int>{3, 4, 4, 5, 4, 3, 4, 4, 5});
  CHECK(indegree_profile(5, ConnectorSet(5, {})).values == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(indegree_profile(8, ConnectorSet(8, {2, 3, 5})).values == std::vector<int>{3, 4, 4, 4, 4, 4, 4, 4, 5});
  CHECK(indegree_profile(5, ConnectorSet(5, {2, 5})).values == std::vector<int>{2, 2, 2, 3, 3, 3});
  CHECK(indegree_profile(2, ConnectorSet(2, {2})).values == std::vector<int>{1, 1, 1});
}

TEST_CASE("vertex classification") {
  const auto fig = classify_vertices(8, ConnectorSet(8, {2, 4, 5}));
  CHECK(fig.ascents == 4);
  CHECK(fig.descents == 2);
  CHECK(fig.plateaus == 2);

  const auto tt = classify_vertices(5, ConnectorSet(5, {}));
  CHECK(tt.ascents == 5);
  CHECK(tt.descents == 0);
  CHECK(tt.plateaus == 0);

  const auto p5 = classify_vertices(5, ConnectorSet(5, {2, 5}));
  CHECK(p5.kinds == std::vector<K>{K::Plateau, K::Plateau, K::Ascent, K::Plateau, K::Plateau});
  CHECK(p5.ascents == 1);
  CHECK(p5.descents == 0);
  CHECK(p5.plateaus == 4);
  // two vertex runs of 3 equal values each
  CHECK(p5.plateau_runs == std::vector<PlateauSpan>{{0, 3}, {3, 3}});
}

TEST_CASE("plateau span stores the vertex count") {
  const auto flat = classify_vertices(8, ConnectorSet(8, {2, 3, 5}));
  REQUIRE(flat.plateau_runs.size() == 1);
  CHECK(flat.plateau_runs[0].start == 1);
  CHECK(flat.plateau_runs[0].length == 7);
  CHECK(flat.plateau_runs[0].last() == 7);
  CHECK(flat.plateaus == flat.plateau_runs[0].length - 1);
}

TEST_CASE("regular pseudo-cyclic tournaments") {
  CHECK_FALSE(is_cyclic_pseudo(build_pseudo_cyclic(8, ConnectorSet(8, {2, 4, 5}))));
  CHECK(is_cyclic_pseudo(build_pseudo_cyclic(2, ConnectorSet(2, {2}))));
  CHECK_FALSE(is_cyclic_pseudo(build_pseudo_cyclic(5, ConnectorSet(5, {2, 5}))));
  for (int p = 1; p <= 10; ++p)
    for (VertexSet mask = 0; mask < bit(p); ++mask) {
      const auto neg = ConnectorSet::from_mask(p, mask);
      bool expected = p % 2 == 0 && neg.size() == p / 2;
      for (int i = 1; i <= p && expected; ++i)
        if (neg.contains(i) == neg.contains(p + 1 - i)) expected = false;
      CHECK(is_cyclic_pseudo(build_pseudo_cyclic(p, neg)) == expected);
    }
}

TEST_CASE("indegree classes") {
  const auto a = indegree_classes(5, ConnectorSet(5, {2, 4}));
  CHECK(a.of(2) == (bit(0) | bit(2) | bit(4)));
  CHECK(a.of(3) == (bit(1) | bit(3) | bit(5)));
  const auto b = indegree_classes(5, ConnectorSet(5, {3, 4}));
  CHECK(b.of(2) == (bit(0) | bit(3) | bit(4)));
  CHECK(b.of(3) == (bit(1) | bit(2) | bit(5)));
  const auto c = indegree_classes(5, ConnectorSet(5, {}));
  for (int d = 0; d <= 5; ++d) CHECK(c.of(d) == bit(d));
}

TEST_CASE("closed form matches direct in-arc counts") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 2000; ++trial) {
    const int p = 1 + trial % 20;
    const auto neg = random_connectors(p, rng);
    const auto direct = oracle::indegrees(oracle::pseudo(p, testing_support::as_set(neg)));
    CHECK(indegree_profile(p, neg).values == direct);
    const auto pseudo = build_pseudo_cyclic(p, neg);
    const auto from_formula = indegree_classes(pseudo);
    const auto from_count = indegree_classes(pseudo.graph());
    for (int d = 0; d <= p; ++d) CHECK(from_formula.of(d) == from_count.of(d));
  }
}

TEST_CASE("profile invariants on random instances") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 2000; ++trial) {
    const int p = 1 + trial % 20;
    const auto neg = random_connectors(p, rng);
    const auto prof = classify_vertices(p, neg);
    const auto& v = prof.values;
    CHECK(v.front() == neg.size());
    CHECK(v.back() == p - neg.size());
    CHECK(prof.ascents + prof.descents + prof.plateaus == p);
    CHECK(prof.plateaus % 2 == 0);
    CHECK(2 * prof.descents + prof.plateaus == 2 * neg.size());
    for (int i = 0; i <= p; ++i) CHECK(v[i] + v[p - i] == p);
    for (int i = 0; i < p; ++i) {
      const int hits = neg.contains(i + 1) + neg.contains(p - i);
      CHECK(v[i + 1] - v[i] == 1 - hits);
    }
    if (p % 2 == 1) {
      const int h = p / 2;
      CHECK(v[h + 1] - v[h] == 1 - 2 * neg.contains(h + 1));
    }
  }
}
