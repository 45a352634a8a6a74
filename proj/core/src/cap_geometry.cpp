#include "conc/cap_geometry.hpp"

#include <boost/math/special_functions/beta.hpp>

#include <cmath>
#include <limits>
#include <string>
#include <unordered_map>

#include "conc/quadrature.hpp"
#include "conc/special.hpp"

namespace conc {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kHalfPi = 1.570796326794896619231321691639751442;
constexpr double kLogSqrt2Pi = 0.918938533204672741780329736405617639;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Quadrature switches to the incomplete-beta representation above this n.
constexpr int kBetaThreshold = 10000;

void check_range(double v, double lo, double hi, const char* what) {
    if (!(v >= lo && v <= hi))
        throw std::invalid_argument(std::string(what) + ": argument " +
                                    std::to_string(v) + " outside [" +
                                    std::to_string(lo) + ", " +
                                    std::to_string(hi) + "]");
}

// log ∫_x^{π/2} cos^{n-2}θ dθ by quadrature of the max-normalized integrand.
// The factor cos^{n-2}x is pulled out in log form; what remains is bounded
// by 1 and decays at Gaussian scale 1/sqrt(n), so the interval can be cut at
// x + 40/sqrt(n-2) (the discarded mass is below e^{-800} relative).
double log_tail_quad(int n, double x) {
    if (x >= kHalfPi) return -kInf;
    if (n == 2) return std::log(kHalfPi - x);

    const double log_cos_x = std::log(std::cos(x));
    double hi = kHalfPi;
    const double cut = 40.0 / std::sqrt(static_cast<double>(n - 2));
    if (x + cut < hi) hi = x + cut;

    const double p = static_cast<double>(n - 2);
    auto g = [p, log_cos_x](double theta) {
        if (theta >= kHalfPi) return 0.0;
        return std::exp(p * (std::log(std::cos(theta)) - log_cos_x));
    };
    const double norm = integrate(g, x, hi);
    return p * log_cos_x + std::log(norm);
}

}  // namespace

double nu_density_at(SphereDim dim, double theta) {
    const double t = std::abs(theta);
    if (t >= kHalfPi) return dim.n == 2 && t == kHalfPi ? 1.0 / kPi : 0.0;
    if (dim.n == 2) return 1.0 / kPi;
    const double log_norm = std::log(2.0) + log_wallis(dim.n - 2);
    return std::exp((dim.n - 2) * std::log(std::cos(t)) - log_norm);
}

double log_cos_upper_tail(SphereDim dim, double x) {
    check_range(x, 0.0, kHalfPi, "log_cos_upper_tail");
    return log_tail_quad(dim.n, x);
}

double cap_volume(SphereDim dim, double r) {
    check_range(r, 0.0, kHalfPi, "cap_volume");
    if (r == 0.0) return 0.0;
    const int n = dim.n;
    if (n > kBetaThreshold) {
        const double s = std::sin(r);
        return 0.5 * boost::math::ibeta(0.5 * (n - 1), 0.5, s * s);
    }
    // ∫_0^r sin^{n-2} = ∫_{π/2 - r}^{π/2} cos^{n-2}
    const double log_num = log_tail_quad(n, kHalfPi - r);
    return std::exp(log_num - std::log(2.0) - log_wallis(n - 2));
}

double cap_tail(SphereDim dim, double a) {
    check_range(a, -kHalfPi, kHalfPi, "cap_tail");
    if (a < 0.0) return 1.0 - cap_tail(dim, -a);
    const int n = dim.n;
    if (n > kBetaThreshold) {
        const double c = std::cos(a);
        return 0.5 * boost::math::ibeta(0.5 * (n - 1), 0.5, c * c);
    }
    const double log_num = log_tail_quad(n, a);
    return std::exp(log_num - std::log(2.0) - log_wallis(n - 2));
}

double cap_bound_halfcos(SphereDim dim, double r) {
    check_range(r, 0.0, kHalfPi, "cap_bound_halfcos");
    if (r == 0.0) return 0.0;
    return std::exp(-std::log(2.0) + (dim.n - 1) * std::log(std::sin(r)));
}

double cap_bound_kappa(SphereDim dim, double r) {
    if (!(r >= 0.0 && r < kHalfPi))
        throw std::invalid_argument(
            "cap_bound_kappa: r must lie in [0, pi/2), got " +
            std::to_string(r));
    if (r == 0.0) return 0.0;
    return std::exp((dim.n - 1) * std::log(std::sin(r)) - kLogSqrt2Pi -
                    log_kappa(dim.n) - std::log(std::cos(r)));
}

double twofifths_min_x(SphereDim dim) {
    if (dim.n < 3)
        throw std::invalid_argument("twofifths_min_x: requires n >= 3");
    if (dim.n == 3) return 0.551 / std::sqrt(3.0);
    return 0.5 / std::sqrt(static_cast<double>(dim.n));
}

double cap_bound_twofifths(SphereDim dim, double x) {
    const double lo = twofifths_min_x(dim);
    if (!(x >= lo && x <= kHalfPi))
        throw std::invalid_argument(
            "cap_bound_twofifths: x = " + std::to_string(x) +
            " outside certified domain [" + std::to_string(lo) + ", pi/2]");
    return 0.4 * std::exp(-0.5 * dim.n * x * x);
}

double log_q_n(SphereDim dim, double x) {
    check_range(x, 0.0, kHalfPi, "q_n");
    const int n = dim.n;
    if (x >= kHalfPi) return -kInf;
    const double excess = 0.5 * n * x * x;
    if (n == 3) return std::log1p(-std::sin(x)) + excess;
    if (n == 4) {
        // s(x) = 2δ - sin 2δ with δ = π/2 - x; positive for x < π/2 but
        // vulnerable to roundoff very close to the endpoint.
        const double s = kPi - 2.0 * x - 2.0 * std::cos(x) * std::sin(x);
        if (s <= 0.0) return -kInf;
        return std::log(s / kPi) + excess;
    }
    // Normalize by the same quadrature at x = 0, so q_n(0) = 1 exactly.
    thread_local std::unordered_map<int, double> log_norm_cache;
    auto it = log_norm_cache.find(n);
    if (it == log_norm_cache.end())
        it = log_norm_cache.emplace(n, log_tail_quad(n, 0.0)).first;
    return log_tail_quad(n, x) - it->second + excess;
}

double q_n(SphereDim dim, double x) { return std::exp(log_q_n(dim, x)); }

double q_n_xi(SphereDim dim, double x, double xi) {
    if (xi < 0.0)
        throw std::invalid_argument("q_n_xi: xi must be >= 0, got " +
                                    std::to_string(xi));
    return std::exp(log_q_n(dim, x) + 0.5 * xi * x * x);
}

}  // namespace conc
