#pragma once

#include <stdexcept>

namespace conc {

/// Ambient dimension n of the sphere S^{n-1}. n = 2 (the circle) is admitted
/// for the special-cased formulas.
struct SphereDim {
    explicit SphereDim(int ambient) : n(ambient) {
        if (n < 2) throw std::invalid_argument("SphereDim: need n >= 2");
    }
    int n;
};

/// Density of the marginal measure ν_n at θ: (2 I_{n-2})^{-1} cos^{n-2} θ on
/// (-π/2, π/2), zero outside. Evaluated in log space.
double nu_density_at(SphereDim dim, double theta);

/// log ∫_x^{π/2} cos^{n-2} θ dθ for x in [0, π/2]. The integrand is
/// normalized by its maximum before quadrature, so the result stays finite
/// for n up to 10^6 and beyond. Returns -inf at x = π/2.
double log_cos_upper_tail(SphereDim dim, double x);

/// Normalized volume v_n(r) of a spherical cap of geodesic radius r,
/// r in [0, π/2]. Quadrature for n <= 10^4, regularized incomplete beta
/// beyond. Monotone nondecreasing in r, with v_n(π/2) = 1/2.
double cap_volume(SphereDim dim, double r);

/// μ(K^a) = ν_n([a, π/2]), the Haar measure of the cap {u : u_1 >= sin a},
/// for |a| <= π/2. Computed as v_n(π/2 - a) for a >= 0 and via the
/// complement μ(K^{-a}) = 1 - μ(K^a) otherwise.
double cap_tail(SphereDim dim, double a);

/// Cap bound (1/2) sin^{n-1} r, 0 <= r <= π/2. Tight at both endpoints.
double cap_bound_halfcos(SphereDim dim, double r);

/// Cap bound sin^{n-1} r / (√(2π) κ_n cos r), 0 <= r < π/2. Diverges as
/// r -> π/2 but is the sharper bound elsewhere.
double cap_bound_kappa(SphereDim dim, double r);

/// Improved tail bound (2/5) e^{-n x²/2}, valid on x >= twofifths_min_x(n).
double cap_bound_twofifths(SphereDim dim, double x);

/// Lower end of the certified domain of cap_bound_twofifths: 1/(2√n) for
/// n > 3 and 0.551/√3 for n = 3 (the numerically located threshold for n = 3
/// is u* ≈ 0.5504 in u = x√n, so 0.551 is on the valid side).
double twofifths_min_x(SphereDim dim);

/// q_n(x) = (∫_x^{π/2} cos^{n-2} / I_{n-2}) e^{n x²/2} on [0, π/2].
/// Closed forms for n = 3, 4; integral form otherwise, normalized by the
/// same quadrature value at x = 0 so that q_n(0) = 1 exactly.
double q_n(SphereDim dim, double x);

/// log q_n(x); -inf at x = π/2. Safe for n where e^{n x²/2} overflows.
double log_q_n(SphereDim dim, double x);

/// q_{n,ξ}(x) = q_n(x) e^{ξ x²/2}, ξ >= 0.
double q_n_xi(SphereDim dim, double x, double xi);

}  // namespace conc
