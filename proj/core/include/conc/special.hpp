#pragma once

namespace conc {

/// Wallis integral I_m = ∫_0^{π/2} cos^m θ dθ, carried in both linear and
/// log form so downstream cap formulas can stay in log space.
struct WallisValue {
    int m;
    double value;
    double log_value;
};

/// κ_n = √2 Γ((n+1)/2) / Γ(n/2). Satisfies κ_n κ_{n+1} = n and
/// I_m = √(π/2) / κ_{m+1}.
struct KappaValue {
    int n;
    double value;
};

double log_wallis(int m);  // m >= 0
WallisValue wallis(int m);

double log_kappa(int n);  // n >= 1
KappaValue kappa(int n);

/// Unnormalized Gaussian upper tail ∫_u^∞ e^{-s²/2} ds, via erfc.
double gauss_upper_tail(double u);

/// Komatu bound 2 e^{-u²/2} / (u + √(u²+2)), u >= 0.
/// Dominates gauss_upper_tail on [0, ∞).
double komatu_bound(double u);

/// Sampford bound 4 e^{-u²/2} / (3u + √(u²+8)), u >= 0.
/// Sharper than Komatu, still dominates the true tail.
double sampford_bound(double u);

/// Normalized upper tail Q(u) = P(Z >= u) for a standard normal Z.
double norm_upper_tail(double u);

/// Standard normal density.
double norm_pdf(double u);

}  // namespace conc
