#include "conc/product_spheres.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace conc {

namespace {
constexpr double kHalfPi = 1.570796326794896619231321691639751442;
constexpr double kPi = 3.141592653589793238462643383279502884;
}  // namespace

ProductSphereCase case_of(int k, int n) {
    if (k < 2) throw std::invalid_argument("case_of: k must be >= 2");
    if (n < 3)
        throw std::invalid_argument(
            "case_of: n must be >= 3 (n = 2 has zero curvature and the "
            "rescaling degenerates)");
    ProductSphereCase c;
    c.k = k;
    c.n = n;
    c.m = (n - 1) * k;
    c.r = std::sqrt(static_cast<double>(c.m - 1) / (n - 2));
    c.xi = 2.0 * (k - 1) * (n - 1) / static_cast<double>(n - 2);
    const double lhs = (c.m + 1 + c.xi) * (n - 2) / (c.m - 1.0);
    if (std::abs(lhs - n) > 1e-12 * n)
        throw std::logic_error("case_of: xi identity self-check failed");
    return c;
}

Prop15Bound prop15_bound(const ProductSphereCase& c, double t) {
    if (t < 0.0)
        throw std::invalid_argument("prop15_bound: t must be >= 0");
    const double x = t / c.r;
    if (x > kHalfPi)
        throw std::invalid_argument("prop15_bound: t/r = " +
                                    std::to_string(x) + " exceeds pi/2");
    const double exact =
        0.5 * std::exp(log_q_n(SphereDim(c.m + 1), x) - 0.5 * (c.m + 1) * x * x);
    const double coeff = (c.m + 1) * (c.n - 2) / (c.m - 1.0);
    const double exponential = 0.5 * std::exp(-0.5 * coeff * t * t);
    return Prop15Bound{exact, exponential};
}

ScanReport excess_scan(const ProductSphereCase& c, const SuiteConfig& cfg) {
    const SphereDim dim(c.m + 1);
    const double xi = c.xi;
    return certify(
        "excess/k=" + std::to_string(c.k) + "/n=" + std::to_string(c.n),
        [dim, xi](double x) { return q_n_xi(dim, x, xi); },
        [](double) { return 1.0; }, 0.0, kHalfPi, cfg);
}

ScanReport chordal_variant(const ProductSphereCase& c,
                           const SuiteConfig& cfg) {
    const SphereDim dim(c.m + 1);
    const double r = c.r;
    const int n = c.n;
    const double x_hi = std::min(kHalfPi, kPi / (2.0 * r));
    return certify(
        "chordal/k=" + std::to_string(c.k) + "/n=" + std::to_string(c.n),
        [dim, n, r](double x) {
            // log tail(x) vs -n c^2/2 compared in log space
            const double chord = 2.0 * std::sin(0.5 * x * r);
            const double log_tail =
                log_q_n(dim, x) - 0.5 * (dim.n) * x * x;
            return log_tail + 0.5 * n * chord * chord;
        },
        [](double) { return 0.0; }, 0.0, x_hi, cfg);
}

double admissible_t(const ProductSphereCase& c, const ScanReport& scan) {
    if (scan.failure_intervals.empty())
        return std::numeric_limits<double>::infinity();
    return scan.failure_intervals.front().first * c.r;
}

}  // namespace conc
