#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace conc {

/// Grid density and tolerances for a certification scan.
struct SuiteConfig {
    int grid_size = 2000;
    double violation_tol = 1e-9;  // margins above this count as violations
    double refine_tol = 1e-6;     // width to which failure intervals shrink

    void validate() const;
};

/// Result of certifying lhs <= rhs over a parameter grid. max_violation is
/// the signed maximum of lhs - rhs (positive means a violation); passed is
/// equivalent to max_violation <= violation_tol. Failure intervals bracket
/// sign changes of the margin itself and are refined by bisection.
struct ScanReport {
    std::string suite_id;
    int grid_size = 0;
    bool passed = false;
    double max_violation = 0.0;
    double argmax = 0.0;
    std::vector<std::pair<double, double>> failure_intervals;
};

using RealFn = std::function<double(double)>;

/// Scan lhs - rhs over a uniform grid on [lo, hi]. Violating runs are
/// widened to bracketing sign changes of the margin and bisected down to
/// refine_tol. Deterministic; throws on non-finite evaluations, naming the
/// offending parameter.
ScanReport certify(const std::string& suite_id, const RealFn& lhs,
                   const RealFn& rhs, double lo, double hi,
                   const SuiteConfig& cfg = {});

/// Same scan over an explicit ascending grid (used for composite grids with
/// geometric refinement near an endpoint).
ScanReport certify_grid(const std::string& suite_id, const RealFn& lhs,
                        const RealFn& rhs, const std::vector<double>& grid,
                        const SuiteConfig& cfg = {});

/// One-line human-readable form.
std::string to_text(const ScanReport& report);

/// Structured JSON with fields exactly as in ScanReport.
std::string to_json(const ScanReport& report);

}  // namespace conc
