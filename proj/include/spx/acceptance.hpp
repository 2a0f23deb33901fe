#pragma once

#include <string>
#include <vector>

namespace spx {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double wall_ms = 0.0;
};

/// Runs the full verification matrix (construction conformance, squeeze
/// reproduction, dual-oracle counts, generator bounds, exact f(2), the
/// bounds ledger, randomized Bollobas properties, peeling identities and
/// the k=1 anomaly report). `only` filters by substring of the name;
/// empty runs everything.
std::vector<CriterionResult> run_acceptance(const std::string& only = "");

}  // namespace spx
