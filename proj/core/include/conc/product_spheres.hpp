#pragma once

#include "conc/cap_geometry.hpp"
#include "conc/verifier.hpp"

namespace conc {

/// Curvature rescaling data for (S^{n-1})^k: the product has dimension
/// m = (n-1)k and Ricci curvature n-2, so it compares against the sphere of
/// radius r = sqrt((m-1)/(n-2)). The exponent excess ξ = 2(k-1)(n-1)/(n-2)
/// is the unique value making the rescaled exponent coefficient equal n.
struct ProductSphereCase {
    int k;
    int n;
    int m;
    double r;
    double xi;
};

/// Builds the case and self-checks the defining identity
/// (m + 1 + ξ)(n - 2)/(m - 1) = n. n = 2 is rejected (zero curvature).
ProductSphereCase case_of(int k, int n);

/// The two lower bounds on σ(A_t) from the comparison argument, returned as
/// the complementary tail bounds: exact = (1/2) q_{m+1}(t/r) e^{-(m+1)(t/r)²/2}
/// and exponential = (1/2) exp(-(m+1)(n-2)/(m-1) · t²/2). exact <= exponential.
struct Prop15Bound {
    double exact;
    double exponential;
};
Prop15Bound prop15_bound(const ProductSphereCase& c, double t);

/// Certifies q_{m+1,ξ}(x) <= 1 over x in [0, π/2]. On failure the refined
/// lower endpoint x_lo yields the admissible deviation range t <= x_lo · r.
ScanReport excess_scan(const ProductSphereCase& c, const SuiteConfig& cfg = {});

/// Same inequality under the chordal reparametrization: the enlargement is
/// measured by the chord c = 2 sin(t_geo/2), so the scan checks
/// tail(x) <= e^{-n c²/2} with c = 2 sin(x r / 2) for x up to min(π/2, π/(2r))
/// (chord range [0, √2]).
ScanReport chordal_variant(const ProductSphereCase& c,
                           const SuiteConfig& cfg = {});

/// t-threshold implied by a failed excess scan: x_lo · r of the first
/// failure interval, or +inf if the scan passed.
double admissible_t(const ProductSphereCase& c, const ScanReport& scan);

}  // namespace conc
