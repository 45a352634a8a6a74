#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "conc/cap_geometry.hpp"
#include "conc/verifier.hpp"

namespace conc {

/// SplitMix64 (Steele, Lea, Flood 2014): 64-bit state advanced by the golden
/// gamma, output mixed by two xor-shift-multiply rounds. Seedable, trivially
/// splittable into independent sub-streams, and reproducible from the
/// published algorithm in any language.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

    /// Uniform double in (0, 1): top 53 bits, offset by half an ulp so the
    /// endpoints are never hit (safe for quantile inversion).
    double next_unit();

    /// Standard normal variate by inversion of next_unit(). Deterministic,
    /// rejection-free.
    double next_gaussian();

    /// Independent sub-stream for partition `index` of a run seeded with
    /// `seed`: a SplitMix64 seeded by the mix of seed and index.
    static SplitMix64 substream(std::uint64_t seed, std::uint64_t index);

  private:
    std::uint64_t state_;
};

/// Inverse standard normal CDF. Rational initial estimate refined by two
/// Halley steps against erfc; accurate to ~1 ulp over (0, 1).
double normal_quantile(double p);

struct McConfig {
    std::uint64_t seed = 0;
    long long samples = 100000;  // >= 10^4
    int dim = 3;                 // ambient dimension (S^{n-1} or R^n)
    std::vector<double> t_grid;  // sorted ascending

    void validate() const;
};

struct EmpiricalTail {
    double t;
    double p_hat;
    double std_err;  // binomial, sqrt(p(1-p)/samples)
    double bound;
};

enum class Center { median, mean };
enum class Side { one_sided, two_sided };

/// Uniform points on S^{n-1}: normalized Gaussian vectors in partitioned
/// sub-streams, so the stream is reproducible and independent of how
/// consumers chunk it. Degenerate zero vectors are redrawn.
class SphereStream {
  public:
    SphereStream(SphereDim dim, std::uint64_t seed);
    void next(std::span<double> out);  // out.size() == dim

  private:
    int dim_;
    std::uint64_t seed_;
    std::uint64_t count_ = 0;
    SplitMix64 rng_;
};

/// Evaluations of the named 1-Lipschitz test function over `samples` sphere
/// points. Catalog: "coord" (arcsin u_1), "distcap" (geodesic distance to
/// the cap K^a), "phi" (the truncation φ_a(arcsin u_1)). Unknown ids are
/// rejected.
std::vector<double> sphere_function_samples(const std::string& fn_id,
                                            const McConfig& cfg, double a);

/// Same for the Gaussian catalog: "coord" (x_1), "norm" (|x|), "halfspace"
/// (distance to {x_1 <= 0}).
std::vector<double> gaussian_function_samples(const std::string& fn_id,
                                              const McConfig& cfg);

/// Empirical deviation tails of a sphere test function against the matching
/// theorem bound: (1/2)e^{-n t²/2} for one-sided deviation from the median,
/// e^{-n t²/2} otherwise.
std::vector<EmpiricalTail> empirical_deviation(const std::string& fn_id,
                                               Center center, Side side,
                                               const McConfig& cfg,
                                               double a = 0.0);

/// Gaussian analogue; bound e^{-t²/2} (halved for the median one-sided form).
std::vector<EmpiricalTail> empirical_gaussian(const std::string& fn_id,
                                              Center center, Side side,
                                              const McConfig& cfg);

/// Certifies the pointwise domination of the rescaled marginal density
/// g_n(θ) = (2 I_{n-2} √n)^{-1} cos^{n-2}(θ/√n) by the Gaussian envelopes
/// (2π)^{-1/2} e^{-(n-2)θ²/(2n)} <= (2π)^{-1/2} e^{-θ²/6} over the support.
ScanReport density_domination_check(SphereDim dim, const SuiteConfig& cfg = {});

/// Rescaled marginal density g_n and its limiting normal density.
double rescaled_density(SphereDim dim, double theta);

/// Kolmogorov-Smirnov distance between sorted sample values and a CDF.
double ks_distance(std::vector<double> values,
                   const std::function<double(double)>& cdf);

/// EmpiricalTail rows as CSV (header t,p_hat,std_err,bound).
std::string tails_to_csv(const std::vector<EmpiricalTail>& rows);

}  // namespace conc
