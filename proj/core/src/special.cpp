#include "conc/special.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace conc {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kLogPi = 1.144729885849400174143427351353058712;
constexpr double kLog2 = 0.693147180559945309417232121458176568;
constexpr double kSqrt2Pi = 2.506628274631000502415765284811045253;
}  // namespace

double log_wallis(int m) {
    if (m < 0) throw std::invalid_argument("wallis: m must be >= 0");
    // I_m = sqrt(pi) * Gamma((m+1)/2) / (2 * Gamma(m/2 + 1))
    return 0.5 * kLogPi + std::lgamma(0.5 * (m + 1)) - kLog2 -
           std::lgamma(0.5 * m + 1.0);
}

WallisValue wallis(int m) {
    const double lg = log_wallis(m);
    return WallisValue{m, std::exp(lg), lg};
}

double log_kappa(int n) {
    if (n < 1) throw std::invalid_argument("kappa: n must be >= 1");
    return 0.5 * kLog2 + std::lgamma(0.5 * (n + 1)) - std::lgamma(0.5 * n);
}

KappaValue kappa(int n) { return KappaValue{n, std::exp(log_kappa(n))}; }

double gauss_upper_tail(double u) {
    // ∫_u^∞ e^{-s²/2} ds = sqrt(pi/2) erfc(u/sqrt(2))
    return std::sqrt(kPi / 2.0) * std::erfc(u / std::sqrt(2.0));
}

double komatu_bound(double u) {
    if (u < 0.0)
        throw std::invalid_argument("komatu_bound: u must be >= 0, got " +
                                    std::to_string(u));
    return 2.0 * std::exp(-0.5 * u * u) / (u + std::sqrt(u * u + 2.0));
}

double sampford_bound(double u) {
    if (u < 0.0)
        throw std::invalid_argument("sampford_bound: u must be >= 0, got " +
                                    std::to_string(u));
    return 4.0 * std::exp(-0.5 * u * u) / (3.0 * u + std::sqrt(u * u + 8.0));
}

double norm_upper_tail(double u) { return 0.5 * std::erfc(u / std::sqrt(2.0)); }

double norm_pdf(double u) { return std::exp(-0.5 * u * u) / kSqrt2Pi; }

}  // namespace conc
