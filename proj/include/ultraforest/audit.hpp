#pragma once

#include "ultraforest/space.hpp"

#include <json.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace ultraforest {

struct Discrepancy {
  std::string check;
  nlohmann::json detail;
};

struct AuditReport {
  std::size_t checks_run = 0;
  std::vector<std::string> skipped;  ///< checks whose oracle rejected the input size
  std::vector<Discrepancy> discrepancies;
};

/// Runs every tree-side predicate against its space-side oracle and every
/// multi-condition characterization, reporting any disagreement.
/// Requires |X| >= 2.
AuditReport audit_equivalences(const Space& space);

struct ExhaustiveAudit {
  std::size_t spaces = 0;
  std::size_t checks_run = 0;
  std::size_t skipped = 0;
  std::vector<std::pair<Space, Discrepancy>> discrepancies;
};

/// audit_equivalences over every enumerated space with 2..max_n points.
ExhaustiveAudit audit_exhaustive(std::size_t max_n);

nlohmann::json to_json(const AuditReport& report);

}  // namespace ultraforest
