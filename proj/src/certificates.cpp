#include "tourney/certificates.hpp"

#include <bit>
#include <stdexcept>

#include "tourney/automorphism.hpp"
#include "tourney/indegree.hpp"

namespace tourney {

const char* to_string(CertificateRule rule) {
  switch (rule) {
    case CertificateRule::RigidHalf:
      return "RigidHalf";
    case CertificateRule::RotationGroup:
      return "RotationGroup";
    case CertificateRule::IndegreeClassesRigid:
      return "IndegreeClassesRigid";
    case CertificateRule::MinConnector:
      return "MinConnector";
    case CertificateRule::FewConnectors:
      return "FewConnectors";
    case CertificateRule::Interval:
      return "Interval";
    case CertificateRule::IntervalComplement:
      return "IntervalComplement";
    case CertificateRule::Paley:
      return "Paley";
    case CertificateRule::AscentPlateau:
      return "AscentPlateau";
  }
  return "?";
}

const char* to_string(Half half) { return half == Half::Lower ? "lower" : "upper"; }

namespace {

CertificateVerdict proved(CertificateRule rule, CertificateWitness witness) {
  return {CertificateStatus::Proved, rule, std::move(witness)};
}

CertificateVerdict inapplicable(CertificateRule rule) {
  return {CertificateStatus::Inapplicable, rule, std::monostate{}};
}

SubTournament half_of(const CyclicTournament& t, Half half) {
  return half == Half::Lower ? lower_half(t) : upper_half(t);
}

// Pseudo-cyclic parameters of a half: T_{0,p} = P(p;S-), T_{p+1,2p} = P(p-1;S- cap [1,p-1]).
// The upper half of T(3;.) is a single vertex and has no pseudo-cyclic form.
std::optional<std::pair<int, ConnectorSet>> pseudo_form(const CyclicTournament& t, Half half) {
  const int p = t.half_order();
  if (half == Half::Lower) return std::pair{p, t.negative()};
  if (p < 2) return std::nullopt;
  return std::pair{p - 1, t.negative().restricted(p - 1)};
}

// [lo, hi] subset of N; empty ranges are trivially contained.
bool range_in(const ConnectorSet& neg, int lo, int hi) {
  for (int s = lo; s <= hi; ++s)
    if (!neg.contains(s)) return false;
  return true;
}

bool classes_rigid(const Tournament& half, const std::vector<VertexSet>& classes) {
  for (VertexSet cls : classes)
    if (std::popcount(cls) >= 3 && !is_rigid(half.induced(cls))) return false;
  return true;
}

}  // namespace

std::string CertificateVerdict::describe() const {
  struct Describe {
    std::string operator()(std::monostate) const { return "no certificate"; }
    std::string operator()(const RigidHalfWitness& w) const {
      return std::string(to_string(w.half)) + " half rigid";
    }
    std::string operator()(const RotationGroupWitness& w) const {
      return "case " + std::to_string(w.case_number) + ", |Aut|=" + std::to_string(w.group_order);
    }
    std::string operator()(const IndegreeClassesWitness& w) const {
      return std::string(to_string(w.half)) + " half, " + std::to_string(w.classes.size()) +
             " rigid indegree classes";
    }
    std::string operator()(const MinConnectorWitness& w) const {
      return "min(S-)=" + std::to_string(w.min_connector) + " > 2*" + std::to_string(w.cardinality);
    }
    std::string operator()(const FewConnectorsWitness& w) const {
      return "|S-|=" + std::to_string(w.cardinality) + (w.via_converse ? " >= p-1" : " <= 2");
    }
    std::string operator()(const IntervalWitness& w) const {
      return "[" + std::to_string(w.a) + "," + std::to_string(w.b) + "]";
    }
    std::string operator()(const PaleyWitness& w) const {
      std::string out = "QR_" + std::to_string(w.n) + " residues {";
      bool first = true;
      for (int r : members(w.residues)) {
        out += (first ? "" : ",") + std::to_string(r);
        first = false;
      }
      return out + "}";
    }
    std::string operator()(const AscentPlateauWitness& w) const {
      return std::string(to_string(w.half)) + " half rigid by shape";
    }
  };
  std::string text = std::visit(Describe{}, witness);
  if (rule == CertificateRule::IntervalComplement) {
    const auto& w = std::get<IntervalWitness>(witness);
    text = "[1," + std::to_string(w.a) + "] u [" + std::to_string(w.b) + ",p]";
  }
  return text;
}

// ---------------------------------------------------------------------------
// Rules

CertificateVerdict cert_rigid_half(const CyclicTournament& t) {
  for (Half half : {Half::Lower, Half::Upper})
    if (is_rigid(half_of(t, half).graph)) return proved(CertificateRule::RigidHalf, RigidHalfWitness{half});
  return inapplicable(CertificateRule::RigidHalf);
}

std::optional<std::size_t> rotation_group_case(const CyclicTournament& t, int case_number) {
  const int p = t.half_order();
  const ConnectorSet& neg = t.negative();
  switch (case_number) {
    case 1: {
      const std::size_t order = automorphisms(t.graph()).size();
      if (order == static_cast<std::size_t>(2 * p + 1)) return order;
      return std::nullopt;
    }
    case 2: {
      if (p % 2 != 0 || neg.size() != p / 2) return std::nullopt;
      for (int s : neg.members())
        if (neg.contains(p + 1 - s)) return std::nullopt;
      const std::size_t order = automorphisms(lower_half(t).graph).size();
      if (order == static_cast<std::size_t>(p + 1)) return order;
      return std::nullopt;
    }
    case 3: {
      if (p % 2 != 1) return std::nullopt;
      if (neg.size() - (neg.contains(p) ? 1 : 0) != (p - 1) / 2) return std::nullopt;
      for (int s : neg.members())
        if (neg.contains(p - s)) return std::nullopt;
      const std::size_t order = automorphisms(upper_half(t).graph).size();
      if (order == static_cast<std::size_t>(p)) return order;
      return std::nullopt;
    }
    default:
      throw std::invalid_argument("rotation-group check has cases 1..3");
  }
}

CertificateVerdict cert_rotation_group(const CyclicTournament& t) {
  for (int c = 1; c <= 3; ++c)
    if (auto order = rotation_group_case(t, c))
      return proved(CertificateRule::RotationGroup, RotationGroupWitness{c, *order});
  return inapplicable(CertificateRule::RotationGroup);
}

CertificateVerdict cert_indegree_classes(const CyclicTournament& t) {
  for (Half half : {Half::Lower, Half::Upper}) {
    const SubTournament sub = half_of(t, half);
    std::vector<VertexSet> classes;
    if (auto form = pseudo_form(t, half)) {
      for (VertexSet cls : indegree_classes(form->first, form->second).by_indegree)
        if (cls) classes.push_back(cls);
    } else {
      classes.push_back(all_vertices(sub.graph.size()));
    }
    if (classes_rigid(sub.graph, classes))
      return proved(CertificateRule::IndegreeClassesRigid, IndegreeClassesWitness{half, std::move(classes)});
  }
  return inapplicable(CertificateRule::IndegreeClassesRigid);
}

CertificateVerdict cert_min_connector(const CyclicTournament& t) {
  const ConnectorSet& neg = t.negative();
  if (neg.empty()) return inapplicable(CertificateRule::MinConnector);
  if (neg.min() > 2 * neg.size())
    return proved(CertificateRule::MinConnector, MinConnectorWitness{neg.min(), neg.size()});
  return inapplicable(CertificateRule::MinConnector);
}

CertificateVerdict cert_few_connectors(const CyclicTournament& t) {
  const int k = t.negative().size();
  if (k <= 2) return proved(CertificateRule::FewConnectors, FewConnectorsWitness{k, false});
  if (k >= t.half_order() - 1) return proved(CertificateRule::FewConnectors, FewConnectorsWitness{k, true});
  return inapplicable(CertificateRule::FewConnectors);
}

CertificateVerdict cert_interval(const CyclicTournament& t) {
  const ConnectorSet& neg = t.negative();
  const int p = t.half_order();
  if (neg.empty()) return inapplicable(CertificateRule::Interval);
  const VertexSet mask = neg.mask();
  // Contiguous bits: shifting out the trailing zeros leaves 2^k - 1.
  const VertexSet shifted = mask >> std::countr_zero(mask);
  if ((shifted & (shifted + 1)) == 0) {
    const int a = neg.min();
    return proved(CertificateRule::Interval, IntervalWitness{a, a + neg.size() - 1});
  }
  // [1,a] u [b,p]: the complement is a non-empty interval strictly inside.
  if (neg.contains(1) && neg.contains(p)) {
    const ConnectorSet gap = neg.complement();
    const VertexSet g = gap.mask() >> std::countr_zero(gap.mask());
    if ((g & (g + 1)) == 0) {
      const int a = gap.min() - 1;
      const int b = gap.min() + gap.size();
      return proved(CertificateRule::IntervalComplement, IntervalWitness{a, b});
    }
  }
  return inapplicable(CertificateRule::Interval);
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

VertexSet quadratic_residues(int n) {
  if (n < 2 || n > kMaxVertices) throw std::invalid_argument("modulus out of range");
  VertexSet squares = 0;
  for (int x = 1; x < n; ++x) {
    const int r = (x * x) % n;
    if (r != 0) squares |= bit(r);
  }
  return squares;
}

CertificateVerdict cert_paley(const CyclicTournament& t) {
  const int n = t.order();
  if (!is_prime(n) || n % 4 != 3) return inapplicable(CertificateRule::Paley);
  const VertexSet residues = quadratic_residues(n);
  if (t.connectors() != residues) return inapplicable(CertificateRule::Paley);
  return proved(CertificateRule::Paley, PaleyWitness{n, residues});
}

CyclicTournament build_paley(int n) {
  if (!is_prime(n)) throw std::invalid_argument(std::to_string(n) + " not prime");
  if (n % 4 != 3) throw std::invalid_argument(std::to_string(n) + " not congruent to 3 mod 4");
  const int p = n / 2;
  const VertexSet residues = quadratic_residues(n);
  std::vector<int> neg;
  for (int s = 1; s <= p; ++s)
    if (!contains(residues, s)) neg.push_back(s);
  return build_cyclic(p, ConnectorSet(p, std::span<const int>(neg)));
}

ShapeCheck pseudo_rigidity_by_shape(int p, const ConnectorSet& neg) {
  const IndegreeProfile prof = classify_vertices(p, neg);
  auto fail = [](int condition) { return ShapeCheck{CertificateStatus::Inapplicable, condition}; };
  if (prof.ascents + prof.descents == 0) return fail(1);
  if (prof.ascents > 0 && prof.descents > 0) return fail(2);
  for (const PlateauSpan& span : prof.plateau_runs) {
    const int i = span.start;
    const int k = span.length;
    const int last = span.last();
    if (2 * last < p) {
      // Plateau strictly in the lower half; size-2 plateaus are exempt.
      if (k >= 3 && !range_in(neg, i + 1, i + k - 1) && !range_in(neg, p - i - k + 2, p - i))
        return fail(3);
    } else if (2 * i > p) {
      continue;  // mirror image of a lower plateau
    } else {
      // Crosses the middle, so p is even and the plateau is centred on p/2.
      const int q = p / 2 - i;
      if (p % 2 != 0 || last != p / 2 + q) return fail(4);
      if (!range_in(neg, p / 2 - q + 1, p / 2) && !range_in(neg, p / 2 + 1, p / 2 + q))
        return fail(4);
    }
  }
  return {CertificateStatus::Proved, 0};
}

ShapeCheck pseudo_rigidity_by_shape(const PseudoCyclicTournament& t) {
  return pseudo_rigidity_by_shape(t.half_order(), t.negative());
}

CertificateVerdict cert_ascent_plateau(const CyclicTournament& t) {
  for (Half half : {Half::Lower, Half::Upper}) {
    const auto form = pseudo_form(t, half);
    if (form && pseudo_rigidity_by_shape(form->first, form->second).proved())
      return proved(CertificateRule::AscentPlateau, AscentPlateauWitness{half});
  }
  return inapplicable(CertificateRule::AscentPlateau);
}

// ---------------------------------------------------------------------------
// Witness re-verification

namespace {

struct Reverifier {
  const CyclicTournament& t;
  CertificateRule rule;

  bool operator()(std::monostate) const { return false; }

  bool operator()(const RigidHalfWitness& w) const { return is_rigid(half_of(t, w.half).graph); }

  bool operator()(const AscentPlateauWitness& w) const { return is_rigid(half_of(t, w.half).graph); }

  bool operator()(const RotationGroupWitness& w) const {
    const int p = t.half_order();
    const auto negs = t.negative().members();
    switch (w.case_number) {
      case 1:
        return w.group_order == static_cast<std::size_t>(2 * p + 1) &&
               automorphisms(t.graph()).size() == w.group_order;
      case 2: {
        if (p % 2 || static_cast<int>(negs.size()) * 2 != p) return false;
        for (int s : negs)
          for (int r : negs)
            if (s + r == p + 1) return false;
        return w.group_order == static_cast<std::size_t>(p + 1) &&
               automorphisms(lower_half(t).graph).size() == w.group_order;
      }
      case 3: {
        int without_p = 0;
        for (int s : negs) without_p += (s != p);
        if (p % 2 == 0 || without_p * 2 != p - 1) return false;
        for (int s : negs)
          for (int r : negs)
            if (s + r == p) return false;
        return w.group_order == static_cast<std::size_t>(p) &&
               automorphisms(upper_half(t).graph).size() == w.group_order;
      }
      default:
        return false;
    }
  }

  bool operator()(const IndegreeClassesWitness& w) const {
    // Classes recounted from arcs rather than the closed form.
    const Tournament half = half_of(t, w.half).graph;
    std::vector<VertexSet> direct;
    for (VertexSet cls : indegree_classes(half).by_indegree)
      if (cls) direct.push_back(cls);
    if (direct != w.classes) return false;
    for (VertexSet cls : direct)
      if (!is_rigid(half.induced(cls))) return false;
    return true;
  }

  bool operator()(const MinConnectorWitness& w) const {
    const auto negs = t.negative().members();
    if (negs.empty() || negs.front() != w.min_connector || static_cast<int>(negs.size()) != w.cardinality)
      return false;
    if (w.min_connector <= 2 * w.cardinality) return false;
    // Every indegree class of T_{0,p} should induce a transitive tournament.
    const Tournament half = lower_half(t).graph;
    for (VertexSet cls : indegree_classes(half).by_indegree) {
      const Tournament sub = half.induced(cls);
      VertexSet seen = 0;
      for (int d : sub.indegrees()) seen |= bit(d);
      if (std::popcount(seen) != sub.size()) return false;
    }
    return true;
  }

  bool operator()(const FewConnectorsWitness& w) const {
    const int k = static_cast<int>(t.negative().members().size());
    if (k != w.cardinality) return false;
    return w.via_converse ? k >= t.half_order() - 1 : k <= 2;
  }

  bool operator()(const IntervalWitness& w) const {
    const int p = t.half_order();
    for (int s = 1; s <= p; ++s) {
      const bool expected = rule == CertificateRule::Interval ? (w.a <= s && s <= w.b)
                                                              : (s <= w.a || s >= w.b);
      if (t.negative().contains(s) != expected) return false;
    }
    return 1 <= w.a && w.a <= w.b && w.b <= p;
  }

  bool operator()(const PaleyWitness& w) const {
    const int n = t.order();
    if (w.n != n || n % 4 != 3) return false;
    for (int d = 2; d < n; ++d)
      if (n % d == 0) return false;
    VertexSet squares = 0;
    for (int x = 1; x <= n / 2; ++x) squares |= bit(x * x % n);
    // S is read off the arcs leaving vertex 0.
    return squares == w.residues && t.graph().out_neighbors(0) == squares;
  }
};

}  // namespace

bool reverify(const CyclicTournament& t, const CertificateVerdict& verdict) {
  if (!verdict.proved() || !verdict.rule) return false;
  return std::visit(Reverifier{t, *verdict.rule}, verdict.witness);
}

CertificateVerdict certify(const CyclicTournament& t) {
  using Rule = CertificateVerdict (*)(const CyclicTournament&);
  static constexpr Rule kRules[] = {
      cert_few_connectors, cert_min_connector, cert_interval,         cert_paley,
      cert_ascent_plateau, cert_rigid_half,    cert_indegree_classes, cert_rotation_group,
  };
  for (Rule rule : kRules) {
    CertificateVerdict verdict = rule(t);
    if (!verdict.proved()) continue;
    if (!reverify(t, verdict))
      throw std::logic_error(std::string("certificate ") + to_string(*verdict.rule) +
                             " failed re-verification for T(" + std::to_string(t.order()) + ";" +
                             t.negative().to_string() + ")");
    return verdict;
  }
  return CertificateVerdict{};
}

}  // namespace tourney
