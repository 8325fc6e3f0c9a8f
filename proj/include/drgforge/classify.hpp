#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "drgforge/design.hpp"
#include "drgforge/drg.hpp"
#include "drgforge/graph.hpp"
#include "drgforge/residue.hpp"

namespace drgforge {

enum class CaseKind {
  Complete,                        // (i)   K_4n
  CompleteMultipartite,            // (ii)  K_{s x t}
  CompleteBipartiteMinusMatching,  // (iii) K_{2n,2n} - 2n K_2
  DiffSetOverRho,                  // (iv)  bipartition class <rho>
  DiffSetOverH2,                   // (v)   bipartition class <rho^2,tau>
  DiffSetOverH3,                   // (vi)  bipartition class <rho^2,rho tau>
  HadamardPair,                    // (vii)
  NotDistanceRegular,
};

std::string to_string(CaseKind kind);
/// "i".."vii", empty for NotDistanceRegular.
std::string roman(CaseKind kind);

struct HadamardCertificate {
  FamilyKind family = FamilyKind::SemiDihedral;
  int n = 0;
  ResidueSet r;
  ResidueSet t;
  /// i -> |R ∩ (i+R)| + |T ∩ (i+T)| for every even i other than 0 and n.
  std::map<int, int> mu_check;
  bool accepted = false;
  /// Set when accepted: the array observed on the built graph.
  std::optional<IntersectionArray> array;
};

/// Throws StructuralViolation naming the first failed constraint:
///   SD:  R = -R ⊆ odd, T ⊆ even;  PSD: R = -R, T = n - T, both ⊆ odd;
///   |R| = |T| = n/2, R ∩ (n+R) = T ∩ (n+T) = ∅.
/// When every mu_check entry is n/2 the graph is built and must have the
/// array {n,n-1,n/2,1;1,n/2,n-1,n} (Internal otherwise).
HadamardCertificate verify_hadamard_certificate(FamilyKind family, int n, const ResidueSet& r,
                                                const ResidueSet& t);

struct TheoremCase {
  CaseKind kind = CaseKind::NotDistanceRegular;
  StructureReport structure;
  std::optional<NamedGraph> named;
  std::optional<std::string> subgroup;  // H of order t for (ii), bipartition class for (iv)-(vi)
  std::optional<DesignReport> design;
  std::optional<HadamardCertificate> certificate;
};

/// Classifies SD(n,R,T) or PSD(n,R,T) for n = 2^r > 4. Disconnected graphs
/// are NotDistanceRegular. Throws the validate() errors,
/// UnsupportedN for other families or n <= 4, and Internal if a
/// distance-regular graph fits none of the cases.
TheoremCase classify(const ConnectionSpec& spec);

/// Least image under the isomorphisms (R,T) -> (aR, b+aT), a a unit and b
/// even (SD), or (R,T) -> (R, n+T) (PSD). Order: R first, then T, each by
/// sorted member list.
std::pair<ResidueSet, ResidueSet> canonicalize(const ConnectionSpec& spec);

/// R candidates for both families: R = -R ⊆ odd, one of {x,-x}, {x+n,n-x}
/// per odd x < n/2. Index bit j picks the second option of quadruple j.
std::vector<ResidueSet> hadamard_r_candidates(int n);
/// T candidates: SD picks t or t+n for each even t < n (2^(n/2) of them);
/// PSD picks {x,n-x} or {x+n,-x} for odd x < n/2 (2^(n/4)).
std::uint64_t hadamard_t_candidate_count(FamilyKind family, int n);
ResidueSet hadamard_t_candidate(FamilyKind family, int n, std::uint64_t index);

struct SearchResult {
  FamilyKind family = FamilyKind::SemiDihedral;
  int n = 0;
  /// Canonical, distinct, sorted.
  std::vector<std::pair<ResidueSet, ResidueSet>> pairs;
  std::uint64_t candidates_examined = 0;  // |R candidates| x |T candidates|
  double elapsed_ms = 0.0;
};

/// Profile-hash join: R profiles |R ∩ (i+R)| over even 0 < i < n go in a
/// table; every T candidate probes with n/2 - |T ∩ (i+T)|. T candidates are
/// split across `threads` workers (0 = runtime default).
/// Throws UnsupportedN unless n = 2^r with 8 <= n <= 64.
SearchResult search_hadamard_pairs(FamilyKind family, int n, int threads = 0);
/// Double loop with the full residue-set check per pair. Same contract.
SearchResult search_hadamard_pairs_reference(FamilyKind family, int n);

/// Random valid spec: each inverse pair of R and each closure orbit of T is
/// included with probability `density`; never empty.
ConnectionSpec random_connection_spec(FamilyKind family, int n, std::mt19937_64& rng, double density = 0.3);

struct SweepResult {
  int examined = 0;
  int distance_regular = 0;
  /// Specs where the classifier verdict and the distance-module oracle differ.
  std::vector<ConnectionSpec> disagreements;
  std::map<CaseKind, int> cases;
};

/// Classifies every spec and compares "is a case" against the distance-module
/// oracle. Parallel over specs; results are combined in input order.
SweepResult classification_sweep(const std::vector<ConnectionSpec>& specs, int threads = 0);
SweepResult classification_sweep_reference(const std::vector<ConnectionSpec>& specs);

}  // namespace drgforge
