#pragma once

#include <string>
#include <utility>
#include <vector>

#include "conc/verifier.hpp"

namespace conc {

/// A suite run together with the verdict against its static expectation.
/// Expected-pass suites are ok when every scan passed; documented-failure
/// suites are ok when the known failure interval is reproduced (within 1e-4
/// for the paper-pinned q_2 interval, 1e-3 for the product-sphere ones).
struct SuiteOutcome {
    std::string id;
    bool ok = false;
    std::string detail;
    std::vector<ScanReport> reports;
    std::vector<std::pair<std::string, double>> findings;
};

/// Identifiers of every registered suite, in execution order for `all`.
std::vector<std::string> suite_ids();

/// Runs one suite by id. Throws std::invalid_argument for unknown ids.
SuiteOutcome run_suite(const std::string& id, const SuiteConfig& cfg = {});

/// Product-sphere case scan for arbitrary (k, n); cases documented in the
/// source get an expectation, anything else is report-only.
SuiteOutcome run_product_case(int k, int n, const SuiteConfig& cfg = {});

}  // namespace conc
