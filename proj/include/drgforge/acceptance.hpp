#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "drgforge/graph.hpp"

namespace drgforge {

/// Pairs recorded from earlier computer searches, used as fixtures.
struct KnownPair {
  FamilyKind family;
  int n;
  std::vector<int> r;
  std::vector<int> t;

  ConnectionSpec spec() const;
};

std::vector<KnownPair> known_hadamard_pairs();

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  double seconds = 0.0;
  std::string detail;
};

struct AcceptanceOptions {
  /// Adds the (psd, 64) emptiness run to criterion 4.
  bool extended = false;
  int threads = 0;
  std::uint64_t seed = 20240611;
};

CriterionResult run_criterion(int id, const AcceptanceOptions& options);
/// Criteria 1..9 in order.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

/// "PASS [3] title (0.012 s) detail"
std::string format_result(const CriterionResult& result);

}  // namespace drgforge
