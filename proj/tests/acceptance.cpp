// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "helpers.hpp"
#include "tourney/automorphism.hpp"
#include "tourney/certificates.hpp"
#include "tourney/distinguishing.hpp"
#include "tourney/indegree.hpp"

using namespace tourney;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!out.pass) ++failures;
  std::printf("%s [%2d] %s: %s (%.2fs)\n", out.pass ? "PASS" : "FAIL", id, name, out.detail.c_str(), secs);
  std::fflush(stdout);
}

template <class F>
void for_each_instance(int p_max, F&& f) {
  for (int p = 1; p <= p_max; ++p)
    for (VertexSet mask = 0; mask < bit(p); ++mask) f(build_cyclic(p, ConnectorSet::from_mask(p, mask)));
}

std::string str(std::size_t v) { return std::to_string(v); }

Outcome conjecture_sweep() {
  std::size_t total = 0, holding = 0, d2 = 0;
  for_each_instance(7, [&](const CyclicTournament& t) {
    ++total;
    if (check_conjecture(t, CheckMode::BruteForce).holds) ++holding;
    if (distinguishing_number(t.graph()) == 2) ++d2;
  });
  return {total == 254 && holding == total && d2 == total,
          str(holding) + "/" + str(total) + " hold, D(T)=2 for " + str(d2)};
}

Outcome thirteen_example() {
  const auto t = build_cyclic(6, ConnectorSet(6, {2, 5, 6}));
  const bool order13 = automorphisms(t.graph()).size() == 13;

  const auto lower = lower_half(t);
  const bool lower_ok = !is_rigid(lower.graph) &&
                        automorphisms(lower.graph).contains(Permutation::from_cycles(7, {{0, 3, 6}}));

  const auto upper = upper_half(t);
  bool upper_ok = false;
  if (!is_rigid(upper.graph))
    for (const auto& perm : automorphisms(upper.graph)) {
      if (perm.order() != 3) continue;
      std::vector<std::vector<int>> cycles;
      for (const auto& orbit : orbits(perm).orbits) {
        if (orbit.size() == 1) continue;
        std::vector<int> mapped;
        for (int v : orbit) mapped.push_back(upper.origin[v]);
        cycles.push_back(mapped);
      }
      if (cycles == std::vector<std::vector<int>>{{7, 8, 9}, {10, 11, 12}}) upper_ok = true;
    }

  const bool lambda_ok = is_distinguishing(t.graph(), canonical_labeling(t));
  return {order13 && lower_ok && upper_ok && lambda_ok,
          std::string("|Aut|=13 ") + (order13 ? "yes" : "no") + ", (0 3 6) " + (lower_ok ? "yes" : "no") +
              ", (7 8 9)(10 11 12) " + (upper_ok ? "yes" : "no") + ", canonical distinguishing " +
              (lambda_ok ? "yes" : "no")};
}

Outcome indegree_fixtures() {
  const auto fig = classify_vertices(8, ConnectorSet(8, {2, 4, 5}));
  const bool a = fig.values == std::vector<int>{3, 4, 4, 5, 4, 3, 4, 4, 5} && fig.ascents == 4 &&
                 fig.descents == 2 && fig.plateaus == 2;
  const bool b = indegree_profile(5, ConnectorSet(5, {2, 5})).values == std::vector<int>{2, 2, 2, 3, 3, 3};
  const bool c = indegree_profile(8, ConnectorSet(8, {2, 3, 5})).values == std::vector<int>{3, 4, 4, 4, 4, 4, 4, 4, 5};
  return {a && b && c, std::string("P(8;{2,4,5}) ") + (a ? "ok" : "bad") + ", P(5;{2,5}) " + (b ? "ok" : "bad") +
                           ", P(8;{2,3,5}) " + (c ? "ok" : "bad")};
}

VertexKind swapped(VertexKind k) {
  if (k == VertexKind::Ascent) return VertexKind::Descent;
  if (k == VertexKind::Descent) return VertexKind::Ascent;
  return k;
}

Outcome profile_properties() {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> pick_p(1, 20);
  std::size_t violations = 0;
  const int samples = 10000;
  for (int s = 0; s < samples; ++s) {
    const int p = pick_p(rng);
    const auto neg = ConnectorSet::from_mask(p, rng() & all_vertices(p));
    const int m = neg.size();
    const auto prof = classify_vertices(p, neg);
    const auto& v = prof.values;
    for (int i = 0; i <= p; ++i)
      if (v[i] + v[p - i] != p) ++violations;
    for (int i = 0; i < p; ++i)
      if (v[i + 1] - v[i] != 1 - neg.contains(i + 1) - neg.contains(p - i)) ++violations;
    if (2 * prof.descents + prof.plateaus != 2 * m || prof.plateaus % 2 != 0) ++violations;
    for (int i = 0; i <= p; ++i)
      for (int j = i + 1; j <= p; ++j) {
        if (v[i] != v[j]) continue;
        const bool same_half = 2 * j <= p || 2 * i >= p;
        if (j > i + (same_half ? m : 2 * m)) ++violations;
      }
    const auto dual = classify_vertices(p, neg.complement());
    for (int i = 0; i < p; ++i)
      if (dual.kinds[i] != swapped(prof.kinds[i])) ++violations;
  }
  return {violations == 0, str(samples) + " samples, " + str(violations) + " violations"};
}

Outcome engine_oracle() {
  std::mt19937 rng(8);
  std::size_t mismatches = 0, even = 0;
  const int trials = 200;
  for (int k = 0; k < trials; ++k) {
    const int n = 1 + k % 8;
    const auto m = oracle::random_tournament(n, rng);
    const auto group = automorphisms(testing_support::from_matrix(m));
    std::vector<std::vector<int>> got;
    for (const auto& perm : group) got.emplace_back(perm.images().begin(), perm.images().end());
    if (got != oracle::automorphisms(m)) ++mismatches;
    if (group.size() % 2 == 0) ++even;
  }
  return {mismatches == 0 && even == 0,
          str(trials) + " tournaments, " + str(mismatches) + " mismatches, " + str(even) + " even orders"};
}

Outcome certificate_soundness() {
  std::size_t proved = 0, violations = 0;
  for_each_instance(7, [&](const CyclicTournament& t) {
    CertificateVerdict v;
    try {
      v = certify(t);
    } catch (const std::logic_error&) {
      ++violations;  // a proved verdict failed re-verification
      return;
    }
    if (!v.proved()) return;
    ++proved;
    if (!reverify(t, v) || !check_conjecture(t, CheckMode::BruteForce).holds) ++violations;
  });
  return {violations == 0, str(proved) + "/254 certified, " + str(violations) + " violations"};
}

Outcome interval_rigidity() {
  std::size_t checked = 0;
  std::string failed;
  bool others_rigid = true;
  for (int p : {4, 6, 8, 10, 12})
    for (int a = 1; a <= p; ++a)
      for (int b = a; b <= p; ++b) {
        std::vector<int> members;
        for (int s = a; s <= b; ++s) members.push_back(s);
        const ConnectorSet neg(p, members);
        ++checked;
        if (is_rigid(build_pseudo_cyclic(p, neg).graph())) continue;
        failed += " P(" + std::to_string(p) + ";[" + std::to_string(a) + "," + std::to_string(b) + "])";
        // the other half of T(2p+1;[a,b]) must then be rigid
        if (!is_rigid(upper_half(build_cyclic(p, neg)).graph)) others_rigid = false;
      }
  if (failed.empty()) return {true, std::to_string(checked) + " intervals, all rigid"};
  return {false, std::to_string(checked) + " intervals, non-rigid:" + failed +
                     (others_rigid ? "; T_{p+1,2p} rigid for each of these" : "; T_{p+1,2p} also non-rigid")};
}

Outcome paley_suite() {
  std::string detail;
  bool ok = true;
  for (int n : {7, 11, 19, 23}) {
    const auto t = build_paley(n);
    const auto group = automorphisms(t.graph());
    const auto squares = quadratic_residues(n);
    bool affine = true;
    for (const auto& perm : group) {
      const int b = perm(0);
      const int a = ((perm(1) - b) % n + n) % n;
      if (!contains(squares, a)) affine = false;
      for (int i = 0; i < n; ++i)
        if (perm(i) != (a * i + b) % n) affine = false;
    }
    const bool order_ok = group.size() == static_cast<std::size_t>(n * (n - 1) / 2);
    const bool lambda_ok = is_distinguishing(group, canonical_labeling(t));
    bool rho_ok = true, pairs_ok = true;
    if (n <= 11) {
      rho_ok = distinguishing_cost(t.graph()) == 2;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (!is_rigid_determining_set(t.graph(), group, bit(u) | bit(v))) pairs_ok = false;
    }
    const bool all = affine && order_ok && lambda_ok && rho_ok && pairs_ok;
    ok = ok && all;
    detail += "QR" + std::to_string(n) + (all ? " ok" : " bad") + " |Aut|=" + str(group.size()) + "; ";
  }
  return {ok, detail};
}

Outcome mirror_closure() {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> pick_p(1, 10);
  std::size_t elements = 0, violations = 0;
  for (int s = 0; s < 500; ++s) {
    const int p = pick_p(rng);
    const auto pseudo = build_pseudo_cyclic(p, ConnectorSet::from_mask(p, rng() & all_vertices(p)));
    const auto group = automorphisms(pseudo.graph());
    for (const auto& phi : group) {
      ++elements;
      const auto star = mirror(pseudo, phi);
      if (!group.contains(star) || mirror(pseudo, star) != phi) ++violations;
    }
  }
  return {violations == 0, "500 tournaments, " + str(elements) + " elements, " + str(violations) + " violations"};
}

Outcome no_single_orbit() {
  std::size_t surfaced = 0, violations = 0;
  for_each_instance(7, [&](const CyclicTournament& t) {
    const int p = t.half_order();
    const auto lambda = canonical_labeling(t);
    for (const auto& perm : automorphisms(t.graph())) {
      if (perm.is_identity() || !preserves(perm, lambda)) continue;
      ++surfaced;
      int lower = 0, upper = 0;
      for (const auto& orbit : orbits(perm).orbits) (orbit.front() <= p ? lower : upper)++;
      if (lower < 2 || upper < 2) ++violations;
    }
  });
  return {violations == 0, str(surfaced) + " label-preserving automorphisms surfaced, " + str(violations) +
                               " violations" + (surfaced == 0 ? " (vacuous)" : "")};
}

}  // namespace

int main() {
  criterion(1, "conjecture sweep p<=7", conjecture_sweep);
  criterion(2, "T(13;{2,5,6}) example", thirteen_example);
  criterion(3, "indegree fixtures", indegree_fixtures);
  criterion(4, "indegree properties", profile_properties);
  criterion(5, "automorphism engine vs n! oracle", engine_oracle);
  criterion(6, "certificate soundness", certificate_soundness);
  criterion(7, "interval rigidity", interval_rigidity);
  criterion(8, "Paley suite", paley_suite);
  criterion(9, "mirror closure", mirror_closure);
  criterion(10, "no single orbit", no_single_orbit);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
