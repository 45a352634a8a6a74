#pragma once

#include <functional>
#include <stdexcept>

namespace conc {

/// Tolerances and depth limit for adaptive quadrature. The defaults resolve
/// analytic integrands on compact intervals to near machine precision.
struct QuadratureSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_depth = 60;

    void validate() const;  // throws std::invalid_argument on bad tolerances
};

/// Thrown when a panel still disagrees with its own bisection at max_depth.
class QuadratureError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Adaptive quadrature of f over [lo, hi] with fixed 15-point Gauss-Legendre
/// panels. A panel is accepted once bisecting it changes the value by less
/// than its share of the error budget. Deterministic for fixed inputs.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const QuadratureSpec& spec = {});

}  // namespace conc
