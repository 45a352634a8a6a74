#include "conc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace conc {

namespace {

constexpr int kPanelOrder = 15;

// Gauss-Legendre abscissas/weights on [-1, 1], order 15.
constexpr double kNodes[kPanelOrder] = {
    -0.98799251802048537741, -0.93727339240070595139, -0.84820658341042720618,
    -0.72441773136017006962, -0.57097217260853883047, -0.39415134707756338539,
    -0.20119409399743451439, 0.0,
    0.20119409399743451439,  0.39415134707756338539,  0.57097217260853883047,
    0.72441773136017006962,  0.84820658341042720618,  0.93727339240070595139,
    0.98799251802048537741};

constexpr double kWeights[kPanelOrder] = {
    0.03075324199611726914, 0.07036604748810812437, 0.10715922046717193949,
    0.13957067792615432400, 0.16626920581699392021, 0.18616100001556221133,
    0.19843148532711157861, 0.20257824192556128651,
    0.19843148532711157861, 0.18616100001556221133, 0.16626920581699392021,
    0.13957067792615432400, 0.10715922046717193949, 0.07036604748810812437,
    0.03075324199611726914};

double panel(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < kPanelOrder; ++i)
        sum += kWeights[i] * f(mid + half * kNodes[i]);
    return sum * half;
}

struct Ctx {
    const std::function<double(double)>& f;
    const QuadratureSpec& spec;
    double total_width;
    double scale;  // magnitude of the coarse whole-interval estimate
};

double refine(const Ctx& ctx, double a, double b, double coarse, int depth) {
    const double mid = 0.5 * (a + b);
    const double left = panel(ctx.f, a, mid);
    const double right = panel(ctx.f, mid, b);
    const double fine = left + right;
    const double err = std::abs(fine - coarse);

    const double frac = (b - a) / ctx.total_width;
    double tol = std::max(ctx.spec.abs_tol * frac,
                          ctx.spec.rel_tol * std::abs(fine));
    // Noise floor so integrands that are themselves computed numerically
    // (e.g. a nested quadrature) cannot force unbounded refinement.
    tol = std::max(tol, 64.0 * std::numeric_limits<double>::epsilon() *
                            (std::abs(fine) + ctx.scale * frac));

    if (err <= tol) return fine;
    if (depth >= ctx.spec.max_depth)
        throw QuadratureError("integrate: panel [" + std::to_string(a) + ", " +
                              std::to_string(b) +
                              "] did not converge at max_depth " +
                              std::to_string(ctx.spec.max_depth));
    return refine(ctx, a, mid, left, depth + 1) +
           refine(ctx, mid, b, right, depth + 1);
}

}  // namespace

void QuadratureSpec::validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
        throw std::invalid_argument("QuadratureSpec: tolerances must be > 0");
    if (max_depth < 10)
        throw std::invalid_argument("QuadratureSpec: max_depth must be >= 10");
}

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const QuadratureSpec& spec) {
    spec.validate();
    if (!(lo <= hi))
        throw std::invalid_argument("integrate: requires lo <= hi");
    if (lo == hi) return 0.0;

    const double whole = panel(f, lo, hi);
    if (!std::isfinite(whole))
        throw std::invalid_argument("integrate: integrand not finite on [" +
                                    std::to_string(lo) + ", " +
                                    std::to_string(hi) + "]");
    Ctx ctx{f, spec, hi - lo, std::abs(whole)};
    return refine(ctx, lo, hi, whole, 0);
}

}  // namespace conc
