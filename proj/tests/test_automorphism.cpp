#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "tourney/automorphism.hpp"
#include "tourney/permutation.hpp"

using namespace tourney;

namespace {

std::vector<std::vector<int>> as_images(const AutomorphismGroup& group) {
  std::vector<std::vector<int>> out;
  for (const auto& perm : group) out.emplace_back(perm.images().begin(), perm.images().end());
  return out;
}

}  // namespace

TEST_CASE("permutation basics") {
  const auto phi = Permutation::from_cycles(7, {{0, 3, 6}});
  CHECK(phi.order() == 3);
  CHECK(phi.to_cycle_string() == "(0 3 6)");
  CHECK(phi.fixed_points() == (bit(1) | bit(2) | bit(4) | bit(5)));
  const auto orb = orbits(phi);
  CHECK(orb.count() == 5);
  CHECK(orb.orbits[0] == std::vector<int>{0, 3, 6});

  const auto psi = Permutation::from_cycles(6, {{0, 1, 2}, {3, 4, 5}});
  CHECK(orbits(psi).count() == 2);
  CHECK(order(psi) == 3);
  CHECK((psi * psi * psi).is_identity());
  CHECK(psi.inverse() * psi == Permutation::identity(6));

  const auto id = Permutation::identity(5);
  CHECK(orbits(id).count() == 5);
  CHECK(id.order() == 1);
  CHECK(id.to_cycle_string() == "()");
  CHECK_THROWS(Permutation({0, 0, 1}));
}

TEST_CASE("composition applies the right factor first") {
  const auto a = Permutation({1, 2, 0});
  const auto b = Permutation({0, 2, 1});
  const auto ab = a * b;
  for (int u = 0; u < 3; ++u) CHECK(ab(u) == a(b(u)));
}

TEST_CASE("group orders") {
  CHECK(automorphisms(build_cyclic(6, ConnectorSet(6, {2, 5, 6})).graph()).size() == 13);
  CHECK(automorphisms(build_cyclic(3, ConnectorSet(3, {3})).graph()).size() == 21);
  CHECK(automorphisms(Tournament::transitive(5)).size() == 1);
  CHECK(automorphisms(build_cyclic(2, ConnectorSet(2, {2})).graph()).size() == 5);
}

TEST_CASE("rigidity") {
  CHECK(is_rigid(Tournament::transitive(6)));
  CHECK_FALSE(is_rigid(build_pseudo_cyclic(6, ConnectorSet(6, {2, 5, 6})).graph()));
  const auto group = automorphisms(build_pseudo_cyclic(6, ConnectorSet(6, {2, 5, 6})).graph());
  CHECK(group.size() == 3);
  CHECK(group.contains(Permutation::from_cycles(7, {{0, 3, 6}})));
  CHECK(group[0].is_identity());
}

TEST_CASE("vertices fixed by the whole group") {
  CHECK(fixed_by_all(automorphisms(Tournament::transitive(5))) == all_vertices(5));
  CHECK(fixed_by_all(automorphisms(build_pseudo_cyclic(6, ConnectorSet(6, {2, 5, 6})).graph())) ==
        (bit(1) | bit(2) | bit(4) | bit(5)));
  CHECK(fixed_by_all(automorphisms(build_cyclic(6, ConnectorSet(6, {2, 5, 6})).graph())) == 0);
}

TEST_CASE("mirror of an automorphism of P(5;{2,5})") {
  const auto p = build_pseudo_cyclic(5, ConnectorSet(5, {2, 5}));
  const auto group = automorphisms(p.graph());
  CHECK(as_images(group) ==
        std::vector<std::vector<int>>{{0, 1, 2, 3, 4, 5}, {1, 2, 0, 4, 5, 3}, {2, 0, 1, 5, 3, 4}});
  const auto phi = Permutation::from_cycles(6, {{0, 1, 2}, {3, 4, 5}});
  const auto star = mirror(p, phi);
  CHECK(star == Permutation({2, 0, 1, 5, 3, 4}));
  CHECK(group.contains(star));
  CHECK(mirror(p, star) == phi);
  CHECK_THROWS_AS(mirror(p, Permutation::from_cycles(6, {{0, 1}})), std::invalid_argument);
}

TEST_CASE("backtracking matches filtering all permutations") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 7;
    const auto m = oracle::random_tournament(n, rng);
    const auto group = automorphisms(testing_support::from_matrix(m));
    CHECK(as_images(group) == oracle::automorphisms(m));
  }
}

TEST_CASE("early stop from the visitor") {
  int seen = 0;
  for_each_automorphism(build_cyclic(3, ConnectorSet(3, {3})).graph(), [&](const Permutation&) {
    ++seen;
    return seen < 4;
  });
  CHECK(seen == 4);
}
