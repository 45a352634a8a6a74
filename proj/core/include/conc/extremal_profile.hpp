#pragma once

#include <vector>

#include "conc/cap_geometry.hpp"

namespace conc {

/// One evaluation of the extremal truncation φ_a(θ) = min(θ, a):
/// the deviation scale t = a - E φ_a, the one- and two-sided extremal tails
/// at that scale, and the exponential comparator e^{-n t²/2}.
struct TailProfilePoint {
    double a;
    double t;
    double mean_phi;
    double one_sided;
    double two_sided;
    double exp_bound;
};

/// t(a) = a + ∫_a^{π/2} μ(K^x) dx. Nondecreasing in a, t(-π/2) = 0.
/// End-to-end error <= 1e-9 (inner cap tails at 1e-12, outer integral at
/// 1e-10).
double t_of_a(SphereDim dim, double a);

/// E φ_a = a - t(a).
double mean_phi(SphereDim dim, double a);

/// η(a) = t(a) - a = ∫_a^{π/2} μ(K^x) dx, for a >= 0 (the paper switches to
/// the b = -a form for negative a).
double eta_of_a(SphereDim dim, double a);

/// ν_n({φ_a >= E φ_a + t(a)}) = μ(K^a).
double one_sided_tail(SphereDim dim, double a);

/// ν_n({|φ_a - E φ_a| >= t(a)}) = ν_n([a, π/2]) + ν_n([2t - a, π/2]), the
/// second term clamped to 0 when 2t - a > π/2.
double two_sided_tail(SphereDim dim, double a);

/// constant · e^{-n t²/2}; constant 1 for the two-sided bound, 1/2 for the
/// one-sided-from-median form, e^{1/2}/2 for the improved a >= 0 variant.
double exp_bound(SphereDim dim, double t, double constant = 1.0);

std::vector<TailProfilePoint> profile(SphereDim dim,
                                      const std::vector<double>& a_grid);

/// Uniform grid over [-π/2, π/2] plus geometric refinement of a + π/2 down
/// to z_min near the left endpoint, where the F/G separation is a
/// high-order polynomial effect. Sorted ascending.
std::vector<double> default_a_grid(int uniform_points = 200,
                                   int geometric_points = 48,
                                   double z_min = 1e-4);

/// Gaussian analogue: ν replaced by the standard normal measure.
double gauss_t_of_a(double a);
double gauss_mean_phi(double a);
double gauss_two_sided_tail(double a);
std::vector<TailProfilePoint> gaussian_profile(const std::vector<double>& a_grid);

}  // namespace conc
