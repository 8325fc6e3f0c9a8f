#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "drgforge/drg.hpp"
#include "drgforge/graph.hpp"
#include "drgforge/group.hpp"

namespace drgforge {

enum class DesignKind { DifferenceSet, RelativeDifferenceSet };

struct DesignReport {
  DesignKind kind = DesignKind::DifferenceSet;
  // Difference set: (n, k, lambda). Relative difference set: (m, r, k, mu).
  int n = 0;
  int k = 0;
  int lambda = 0;
  int m = 0;
  int r = 0;
  int mu = 0;
  std::string ambient;
  std::optional<std::string> forbidden;
  bool symmetric = false;
  bool trivial = false;

  std::string parameters() const;
};

/// Every non-identity g in H has exactly lambda representations d1 d2^-1.
/// Throws NotASubset.
std::optional<DesignReport> verify_difference_set(const Subgroup& ambient, std::span<const Element> set);

/// D D^(-1) = k 1 + mu (H \ N) by counting differences. Also sets the
/// symmetric flag (D^-1 is a relative difference set for some subgroup).
/// Throws NotASubset and NotASubgroupChain.
std::optional<DesignReport> verify_relative_difference_set(const Subgroup& ambient, const Subgroup& forbidden,
                                                           std::span<const Element> set);

/// Same identity evaluated as a product in the group ring.
bool relative_difference_set_identity(const Subgroup& ambient, const Subgroup& forbidden,
                                      std::span<const Element> set, int mu);

/// {d^-1 : d in D} == {a d a : d in D}.
bool check_symmetry_condition(const Group& group, std::span<const Element> set, Element a);

/// a^-1 S as a sorted element list.
std::vector<Element> left_translate(const Group& group, Element a, std::span<const Element> set);

struct EquivalenceReport {
  bool graph_side = false;
  bool design_side = false;
  std::optional<IntersectionArray> array;
  std::optional<std::string> subgroup;  // H realising the design side
  std::optional<Element> representative;
  std::optional<DesignReport> design;
  /// Distance-layer claims once both sides hold (H\{1} = N_2 for the
  /// diameter-3 case; H\{1} = N_2 ∪ N_4 and N\{1} = N_4 for diameter 4).
  std::optional<bool> closing_claim;
};

/// Bipartite non-trivial diameter-3 DRG with array {k,k-1,k-mu;1,mu,k} versus
/// a^-1 S being a non-trivial difference set in an index-2 subgroup H with
/// D^-1 = aDa. `all_representatives` checks every a outside H (order <= 128).
EquivalenceReport check_bipartite_d3_equivalence(const CayleyGraph& graph, bool all_representatives = false);

/// Antipodal bipartite diameter-4 DRG with array
/// {r mu, r mu-1, (r-1) mu, 1; 1, mu, r mu-1, r mu} versus a^-1 S being a
/// symmetric (r mu, r, r mu, mu) relative difference set (r >= 2) with
/// D^-1 = aDa.
EquivalenceReport check_antipodal_d4_equivalence(const CayleyGraph& graph, bool all_representatives = false);

/// All k-subsets of H that are difference sets, one per right-translate class
/// (the lexicographically least translate by element index). Backtracking
/// with difference-count pruning; parallel over the second element.
/// Throws TooLarge for |H| > 64.
std::vector<std::vector<Element>> search_difference_sets(const Subgroup& ambient, int k, int threads = 0);

}  // namespace drgforge
