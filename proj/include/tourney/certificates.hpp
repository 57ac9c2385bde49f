#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tourney/tournament.hpp"

namespace tourney {

// Sufficient conditions for the canonical labeling of T(2p+1; S-) to be
// distinguishing. Each rule is cheap relative to a full group computation and
// returns a witness that `reverify` can check by an independent route.

enum class CertificateRule {
  RigidHalf,
  RotationGroup,
  IndegreeClassesRigid,
  MinConnector,
  FewConnectors,
  Interval,
  IntervalComplement,
  Paley,
  AscentPlateau,
};

const char* to_string(CertificateRule rule);

enum class CertificateStatus { Proved, Inapplicable };

/// Lower = T_{0,p} (label 1), Upper = T_{p+1,2p} (label 2).
enum class Half { Lower, Upper };

const char* to_string(Half half);

struct RigidHalfWitness {
  Half half;
};
struct RotationGroupWitness {
  int case_number;  // 1: Aut(T) of order 2p+1; 2: via T_{0,p}; 3: via T_{p+1,2p}
  std::size_t group_order;
};
struct IndegreeClassesWitness {
  Half half;
  std::vector<VertexSet> classes;  // non-empty V_d of the half, in half-local labels
};
struct MinConnectorWitness {
  int min_connector;
  int cardinality;
};
struct FewConnectorsWitness {
  int cardinality;
  bool via_converse;  // |S-| >= p-1 rather than |S-| <= 2
};
/// Interval: S- = [a,b]. IntervalComplement: S- = [1,a] u [b,p].
struct IntervalWitness {
  int a;
  int b;
};
struct PaleyWitness {
  int n;
  VertexSet residues;
};
struct AscentPlateauWitness {
  Half half;
};

using CertificateWitness =
    std::variant<std::monostate, RigidHalfWitness, RotationGroupWitness, IndegreeClassesWitness,
                 MinConnectorWitness, FewConnectorsWitness, IntervalWitness, PaleyWitness,
                 AscentPlateauWitness>;

struct CertificateVerdict {
  CertificateStatus status = CertificateStatus::Inapplicable;
  std::optional<CertificateRule> rule;
  CertificateWitness witness;

  bool proved() const { return status == CertificateStatus::Proved; }
  /// Human-readable witness, e.g. "lower half rigid" or "S- = [3,5]".
  std::string describe() const;
};

CertificateVerdict cert_rigid_half(const CyclicTournament& t);
CertificateVerdict cert_rotation_group(const CyclicTournament& t);
/// Group order of the relevant tournament when rotation case 1, 2 or 3 holds.
std::optional<std::size_t> rotation_group_case(const CyclicTournament& t, int case_number);
CertificateVerdict cert_indegree_classes(const CyclicTournament& t);
CertificateVerdict cert_min_connector(const CyclicTournament& t);
CertificateVerdict cert_few_connectors(const CyclicTournament& t);
CertificateVerdict cert_interval(const CyclicTournament& t);
CertificateVerdict cert_paley(const CyclicTournament& t);
/// Shape test applied to T_{0,p} = P(p;S-), then T_{p+1,2p} = P(p-1;S- minus {p}).
CertificateVerdict cert_ascent_plateau(const CyclicTournament& t);

/// Shape-based rigidity test for P(p; N). `failed_condition` is the first of
/// the four conditions that does not hold (0 when proved).
struct ShapeCheck {
  CertificateStatus status = CertificateStatus::Inapplicable;
  int failed_condition = 0;
  bool proved() const { return status == CertificateStatus::Proved; }
};
ShapeCheck pseudo_rigidity_by_shape(int p, const ConnectorSet& neg);
ShapeCheck pseudo_rigidity_by_shape(const PseudoCyclicTournament& t);

/// Independent re-check of a Proved verdict's witness against T.
bool reverify(const CyclicTournament& t, const CertificateVerdict& verdict);

/// Tries the rules cheapest first: FewConnectors, MinConnector, Interval,
/// Paley, AscentPlateau, RigidHalf, IndegreeClassesRigid, RotationGroup.
/// Returns the first Proved verdict; a Proved verdict that fails `reverify`
/// throws std::logic_error.
CertificateVerdict certify(const CyclicTournament& t);

bool is_prime(int n);
/// Non-zero squares modulo n, as a bit set of residues.
VertexSet quadratic_residues(int n);
/// QR_n; n must be a prime congruent to 3 mod 4.
CyclicTournament build_paley(int n);

}  // namespace tourney
