#include "conc/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace conc {

namespace {

double eval_margin(const std::string& id, const RealFn& lhs, const RealFn& rhs,
                   double x) {
    const double m = lhs(x) - rhs(x);
    if (!std::isfinite(m))
        throw std::runtime_error("certify(" + id +
                                 "): non-finite margin at x = " +
                                 std::to_string(x));
    return m;
}

// Bisect a sign change of the margin on [a, b] (margin(a) and margin(b) of
// opposite sign classes) down to refine_tol; returns the bracket midpoint.
double bisect_zero(const std::string& id, const RealFn& lhs, const RealFn& rhs,
                   double a, double b, bool positive_at_a, double tol) {
    while (b - a > tol) {
        const double mid = 0.5 * (a + b);
        if (mid <= a || mid >= b) break;  // ran out of doubles
        const bool pos = eval_margin(id, lhs, rhs, mid) > 0.0;
        if (pos == positive_at_a)
            a = mid;
        else
            b = mid;
    }
    return 0.5 * (a + b);
}

}  // namespace

void SuiteConfig::validate() const {
    if (grid_size < 100)
        throw std::invalid_argument("SuiteConfig: grid_size must be >= 100");
    if (!(violation_tol > 0.0) || !(refine_tol > 0.0))
        throw std::invalid_argument("SuiteConfig: tolerances must be > 0");
}

ScanReport certify_grid(const std::string& suite_id, const RealFn& lhs,
                        const RealFn& rhs, const std::vector<double>& grid,
                        const SuiteConfig& cfg) {
    cfg.validate();
    if (grid.size() < 2)
        throw std::invalid_argument("certify_grid: need at least 2 points");

    const int n = static_cast<int>(grid.size());
    std::vector<double> margin(grid.size());
    ScanReport report;
    report.suite_id = suite_id;
    report.grid_size = n;
    report.max_violation = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        margin[i] = eval_margin(suite_id, lhs, rhs, grid[i]);
        if (margin[i] > report.max_violation) {
            report.max_violation = margin[i];
            report.argmax = grid[i];
        }
    }
    report.passed = report.max_violation <= cfg.violation_tol;

    // Violating runs, widened to grid points where the margin is <= 0 so the
    // interval endpoints bracket sign changes of the margin itself.
    int i = 0;
    while (i < n) {
        if (margin[i] <= cfg.violation_tol) {
            ++i;
            continue;
        }
        int lo = i;
        while (lo > 0 && margin[lo - 1] > 0.0) --lo;
        int hi = i;
        while (hi + 1 < n && margin[hi + 1] > 0.0) ++hi;

        double left = grid[lo];
        if (lo > 0)
            left = bisect_zero(suite_id, lhs, rhs, grid[lo - 1], grid[lo],
                               /*positive_at_a=*/false, cfg.refine_tol);
        double right = grid[hi];
        if (hi + 1 < n)
            right = bisect_zero(suite_id, lhs, rhs, grid[hi], grid[hi + 1],
                                /*positive_at_a=*/true, cfg.refine_tol);
        report.failure_intervals.emplace_back(left, right);
        i = hi + 1;
    }
    return report;
}

ScanReport certify(const std::string& suite_id, const RealFn& lhs,
                   const RealFn& rhs, double lo, double hi,
                   const SuiteConfig& cfg) {
    if (!(lo < hi)) throw std::invalid_argument("certify: requires lo < hi");
    cfg.validate();
    std::vector<double> grid(cfg.grid_size);
    for (int i = 0; i < cfg.grid_size; ++i)
        grid[i] = lo + (hi - lo) * i / (cfg.grid_size - 1);
    grid.back() = hi;
    return certify_grid(suite_id, lhs, rhs, grid, cfg);
}

std::string to_text(const ScanReport& r) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "suite=%s grid=%d passed=%s max_violation=%.6g argmax=%.9g",
                  r.suite_id.c_str(), r.grid_size, r.passed ? "yes" : "no",
                  r.max_violation, r.argmax);
    std::string out(buf);
    if (!r.failure_intervals.empty()) {
        out += " intervals=";
        for (size_t i = 0; i < r.failure_intervals.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%s(%.9g, %.9g)",
                          i == 0 ? "" : " ", r.failure_intervals[i].first,
                          r.failure_intervals[i].second);
            out += buf;
        }
    }
    return out;
}

std::string to_json(const ScanReport& r) {
    nlohmann::json j;
    j["suite_id"] = r.suite_id;
    j["grid_size"] = r.grid_size;
    j["passed"] = r.passed;
    j["max_violation"] = r.max_violation;
    j["argmax"] = r.argmax;
    auto intervals = nlohmann::json::array();
    for (const auto& [lo, hi] : r.failure_intervals)
        intervals.push_back({lo, hi});
    j["failure_intervals"] = intervals;
    return j.dump();
}

}  // namespace conc
