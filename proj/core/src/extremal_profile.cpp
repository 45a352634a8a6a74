#include "conc/extremal_profile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "conc/quadrature.hpp"
#include "conc/special.hpp"

namespace conc {

namespace {
constexpr double kHalfPi = 1.570796326794896619231321691639751442;

void check_a(double a, const char* what) {
    if (!(a >= -kHalfPi && a <= kHalfPi))
        throw std::invalid_argument(std::string(what) + ": a = " +
                                    std::to_string(a) +
                                    " outside [-pi/2, pi/2]");
}

// E (θ - a)^+ under ν_n for a >= 0, and E (a - θ)^+ for a < 0, as a single
// quadrature of (±(θ - a)) cos^{n-2}θ against the log-Gamma normalizer.
// The positive-part split avoids the cancellation a + E(θ-a)^+ would suffer
// near a = -π/2, where t(a) vanishes like (a + π/2)³.
double truncated_moment(SphereDim dim, double a) {
    const int n = dim.n;
    const double log_cos_a = std::log(std::cos(a));
    const double p = static_cast<double>(n - 2);
    double lo = a >= 0.0 ? a : -kHalfPi;
    double hi = a >= 0.0 ? kHalfPi : a;
    if (n > 2) {
        // cos^{n-2} decays at Gaussian scale away from a on either side
        const double cut = 40.0 / std::sqrt(p);
        if (a >= 0.0)
            hi = std::min(hi, a + cut);
        else
            lo = std::max(lo, a - cut);
    }
    double result;
    if (a >= 0.0) {
        result = integrate(
            [p, log_cos_a, a](double theta) {
                if (theta >= kHalfPi) return 0.0;
                return (theta - a) *
                       std::exp(p * (std::log(std::cos(theta)) - log_cos_a));
            },
            a, hi);
    } else {
        result = integrate(
            [p, log_cos_a, a](double theta) {
                if (theta <= -kHalfPi) return 0.0;
                return (a - theta) *
                       std::exp(p * (std::log(std::cos(theta)) - log_cos_a));
            },
            lo, a);
    }
    return std::exp(p * log_cos_a - std::log(2.0) - log_wallis(n - 2)) *
           result;
}

}  // namespace

double t_of_a(SphereDim dim, double a) {
    check_a(a, "t_of_a");
    if (a == -kHalfPi) return 0.0;
    if (a >= kHalfPi) return kHalfPi;
    // t = a - E φ_a; for a >= 0 this is a + E(θ-a)^+, for a < 0 it equals
    // E(a-θ)^+ directly (E θ = 0).
    if (a >= 0.0) return a + truncated_moment(dim, a);
    return truncated_moment(dim, a);
}

double mean_phi(SphereDim dim, double a) {
    check_a(a, "mean_phi");
    return a - t_of_a(dim, a);
}

double eta_of_a(SphereDim dim, double a) {
    if (a < 0.0)
        throw std::invalid_argument(
            "eta_of_a: a must be >= 0 (use the b = -a reformulation), got " +
            std::to_string(a));
    check_a(a, "eta_of_a");
    if (a >= kHalfPi) return 0.0;
    return truncated_moment(dim, a);
}

double one_sided_tail(SphereDim dim, double a) {
    check_a(a, "one_sided_tail");
    return cap_tail(dim, a);
}

double two_sided_tail(SphereDim dim, double a) {
    check_a(a, "two_sided_tail");
    const double t = t_of_a(dim, a);
    const double x2 = 2.0 * t - a;
    double tail = cap_tail(dim, a);
    if (x2 <= kHalfPi) tail += cap_tail(dim, x2);
    return tail;
}

double exp_bound(SphereDim dim, double t, double constant) {
    if (t < 0.0)
        throw std::invalid_argument("exp_bound: t must be >= 0, got " +
                                    std::to_string(t));
    if (!(constant > 0.0 && constant <= 1.0))
        throw std::invalid_argument("exp_bound: constant must lie in (0, 1]");
    return constant * std::exp(-0.5 * dim.n * t * t);
}

std::vector<TailProfilePoint> profile(SphereDim dim,
                                      const std::vector<double>& a_grid) {
    std::vector<TailProfilePoint> out;
    out.reserve(a_grid.size());
    for (double a : a_grid) {
        check_a(a, "profile");
        const double t = t_of_a(dim, a);
        const double x2 = 2.0 * t - a;
        const double one = cap_tail(dim, a);
        const double two = one + (x2 <= kHalfPi ? cap_tail(dim, x2) : 0.0);
        out.push_back(TailProfilePoint{a, t, a - t, one, two,
                                       std::exp(-0.5 * dim.n * t * t)});
    }
    return out;
}

std::vector<double> default_a_grid(int uniform_points, int geometric_points,
                                   double z_min) {
    if (uniform_points < 2 || geometric_points < 0 || !(z_min > 0.0))
        throw std::invalid_argument("default_a_grid: bad grid shape");
    std::vector<double> grid;
    grid.reserve(uniform_points + geometric_points);
    for (int i = 0; i < uniform_points; ++i)
        grid.push_back(std::min(
            kHalfPi, -kHalfPi + (2.0 * kHalfPi) * i / (uniform_points - 1)));
    grid.front() = -kHalfPi;
    grid.back() = kHalfPi;
    // Geometric spacing of z = a + pi/2 from z_min up to ~pi/2.
    for (int i = 0; i < geometric_points; ++i) {
        const double z =
            z_min * std::pow(kHalfPi / z_min,
                             static_cast<double>(i) /
                                 std::max(1, geometric_points - 1));
        grid.push_back(-kHalfPi + z);
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

double gauss_t_of_a(double a) {
    // t(a) = a + ∫_a^∞ Q(x) dx = a Φ(a) + φ(a), in closed form.
    return a * (1.0 - norm_upper_tail(a)) + norm_pdf(a);
}

double gauss_mean_phi(double a) { return a - gauss_t_of_a(a); }

double gauss_two_sided_tail(double a) {
    const double t = gauss_t_of_a(a);
    return norm_upper_tail(a) + norm_upper_tail(2.0 * t - a);
}

std::vector<TailProfilePoint> gaussian_profile(
    const std::vector<double>& a_grid) {
    std::vector<TailProfilePoint> out;
    out.reserve(a_grid.size());
    for (double a : a_grid) {
        const double t = gauss_t_of_a(a);
        const double one = norm_upper_tail(a);
        const double two = one + norm_upper_tail(2.0 * t - a);
        out.push_back(
            TailProfilePoint{a, t, a - t, one, two, std::exp(-0.5 * t * t)});
    }
    return out;
}

}  // namespace conc
