#include <doctest.h>

#include <cmath>

#include "conc/quadrature.hpp"

using conc::integrate;
using conc::QuadratureSpec;

namespace {
constexpr double kHalfPi = 1.5707963267948966;
}

TEST_CASE("integrates cos over [0, pi/2] to 1") {
    const double v = integrate([](double x) { return std::cos(x); }, 0.0, kHalfPi);
    CHECK(std::abs(v - 1.0) < 1e-12);
}

TEST_CASE("integrates cos^2 over [0, pi/2] to pi/4") {
    const double v = integrate(
        [](double x) { return std::cos(x) * std::cos(x); }, 0.0, kHalfPi);
    CHECK(std::abs(v - M_PI / 4.0) < 1e-12);
}

TEST_CASE("gaussian integral truncated at 40") {
    const double v =
        integrate([](double s) { return std::exp(-0.5 * s * s); }, 0.0, 40.0);
    CHECK(std::abs(v - std::sqrt(M_PI / 2.0)) < 1e-10);
}

TEST_CASE("empty interval integrates to zero") {
    CHECK(integrate([](double) { return 1.0; }, 2.0, 2.0) == 0.0);
}

TEST_CASE("deterministic for fixed inputs") {
    auto f = [](double x) { return std::exp(-x) * std::sin(3.0 * x); };
    const double a = integrate(f, 0.0, 5.0);
    const double b = integrate(f, 0.0, 5.0);
    CHECK(a == b);
}

TEST_CASE("sharply peaked integrand is resolved adaptively") {
    // width ~1% of the interval; features narrower than the two-level node
    // spacing are outside the contract
    auto f = [](double x) { return std::exp(-1e4 * (x - 0.7) * (x - 0.7)); };
    const double v = integrate(f, 0.0, kHalfPi);
    CHECK(std::abs(v - std::sqrt(M_PI / 1e4)) < 1e-12);
}

TEST_CASE("rejects reversed interval and bad specs") {
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 1.0, 0.0),
                    std::invalid_argument);
    QuadratureSpec bad;
    bad.abs_tol = 0.0;
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 0.0, 1.0, bad),
                    std::invalid_argument);
    bad = QuadratureSpec{};
    bad.max_depth = 3;
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 0.0, 1.0, bad),
                    std::invalid_argument);
}

TEST_CASE("signals non-convergence at max_depth") {
    QuadratureSpec tight;
    tight.abs_tol = 1e-300;
    tight.rel_tol = 1e-300;
    tight.max_depth = 12;
    auto step = [](double x) { return x > 0.333333 ? 1.0 : 0.0; };
    CHECK_THROWS_AS(integrate(step, 0.0, 1.0, tight), conc::QuadratureError);
}

TEST_CASE("rejects non-finite integrands") {
    CHECK_THROWS_AS(
        integrate([](double x) { return 1.0 / (x - 0.5); }, 0.0, 1.0),
        std::invalid_argument);
}
