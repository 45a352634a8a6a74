#include "conc/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "conc/special.hpp"

namespace conc {

namespace {
constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kChunk = 8192;  // samples per sub-stream
}  // namespace

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += kGoldenGamma);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double SplitMix64::next_unit() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
}

double SplitMix64::next_gaussian() { return normal_quantile(next_unit()); }

SplitMix64 SplitMix64::substream(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mixer(seed);
    const std::uint64_t a = mixer.next();
    return SplitMix64(a ^ (index * kGoldenGamma));
}

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("normal_quantile: p must lie in (0, 1)");

    // Acklam's rational approximation as the initial estimate.
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double p_low = 0.02425;

    double x;
    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q +
             c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - p_low) {
        const double q = p - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r +
             a[5]) *
            q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r +
             1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q +
              c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }

    // Two Halley refinements against the exact CDF (via erfc). The lower
    // tail is evaluated on whichever side loses fewer bits.
    for (int iter = 0; iter < 2; ++iter) {
        const double cdf = x < 0.0 ? 0.5 * std::erfc(-x / std::sqrt(2.0))
                                   : 1.0 - 0.5 * std::erfc(x / std::sqrt(2.0));
        const double err = cdf - p;
        const double pdf = norm_pdf(x);
        if (pdf == 0.0) break;
        const double u = err / pdf;
        x -= u / (1.0 + 0.5 * x * u);
    }
    return x;
}

void McConfig::validate() const {
    if (samples < 10000)
        throw std::invalid_argument("McConfig: samples must be >= 10^4");
    if (dim < 1) throw std::invalid_argument("McConfig: dim must be >= 1");
    if (!std::is_sorted(t_grid.begin(), t_grid.end()))
        throw std::invalid_argument("McConfig: t_grid must be sorted");
    for (double t : t_grid)
        if (t < 0.0)
            throw std::invalid_argument("McConfig: t_grid must be >= 0");
}

SphereStream::SphereStream(SphereDim dim, std::uint64_t seed)
    : dim_(dim.n), seed_(seed), rng_(SplitMix64::substream(seed, 0)) {}

void SphereStream::next(std::span<double> out) {
    if (static_cast<int>(out.size()) != dim_)
        throw std::invalid_argument("SphereStream: span size != dim");
    if (count_ % kChunk == 0 && count_ != 0)
        rng_ = SplitMix64::substream(seed_, count_ / kChunk);
    ++count_;
    for (;;) {
        double norm2 = 0.0;
        for (int i = 0; i < dim_; ++i) {
            out[i] = rng_.next_gaussian();
            norm2 += out[i] * out[i];
        }
        if (norm2 > 1e-280) {  // probability-zero guard
            const double inv = 1.0 / std::sqrt(norm2);
            for (int i = 0; i < dim_; ++i) out[i] *= inv;
            return;
        }
    }
}

namespace {

std::vector<double> collect_sphere(const McConfig& cfg,
                                   const std::function<double(
                                       std::span<const double>)>& f) {
    SphereStream stream(SphereDim(cfg.dim), cfg.seed);
    std::vector<double> point(cfg.dim);
    std::vector<double> values;
    values.reserve(cfg.samples);
    for (long long i = 0; i < cfg.samples; ++i) {
        stream.next(point);
        values.push_back(f(point));
    }
    return values;
}

double sample_center(std::vector<double> values, Center center) {
    if (center == Center::mean) {
        double s = 0.0;
        for (double v : values) s += v;
        return s / values.size();
    }
    std::sort(values.begin(), values.end());
    const size_t n = values.size();
    return n % 2 == 1 ? values[n / 2]
                      : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

std::vector<EmpiricalTail> tails_from_values(
    const std::vector<double>& values, Center center, Side side,
    const std::vector<double>& t_grid,
    const std::function<double(double)>& bound) {
    const double c = sample_center(values, center);
    const double n = static_cast<double>(values.size());
    std::vector<EmpiricalTail> out;
    out.reserve(t_grid.size());
    for (double t : t_grid) {
        long long hits = 0;
        if (side == Side::one_sided) {
            for (double v : values) hits += (v >= c + t);
        } else {
            for (double v : values) hits += (std::abs(v - c) >= t);
        }
        const double p = hits / n;
        out.push_back(
            EmpiricalTail{t, p, std::sqrt(p * (1.0 - p) / n), bound(t)});
    }
    return out;
}

}  // namespace

std::vector<double> sphere_function_samples(const std::string& fn_id,
                                            const McConfig& cfg, double a) {
    cfg.validate();
    if (fn_id == "coord")
        return collect_sphere(cfg, [](std::span<const double> u) {
            return std::asin(std::clamp(u[0], -1.0, 1.0));
        });
    if (fn_id == "distcap")
        return collect_sphere(cfg, [a](std::span<const double> u) {
            return std::max(0.0, a - std::asin(std::clamp(u[0], -1.0, 1.0)));
        });
    if (fn_id == "phi")
        return collect_sphere(cfg, [a](std::span<const double> u) {
            return std::min(std::asin(std::clamp(u[0], -1.0, 1.0)), a);
        });
    throw std::invalid_argument("unknown sphere test function: " + fn_id);
}

std::vector<double> gaussian_function_samples(const std::string& fn_id,
                                              const McConfig& cfg) {
    cfg.validate();
    std::vector<double> values;
    values.reserve(cfg.samples);
    std::vector<double> x(cfg.dim);
    SplitMix64 rng = SplitMix64::substream(cfg.seed, 0);
    for (long long i = 0; i < cfg.samples; ++i) {
        if (i % kChunk == 0 && i != 0)
            rng = SplitMix64::substream(cfg.seed, i / kChunk);
        for (int j = 0; j < cfg.dim; ++j) x[j] = rng.next_gaussian();
        if (fn_id == "coord") {
            values.push_back(x[0]);
        } else if (fn_id == "norm") {
            double s = 0.0;
            for (double v : x) s += v * v;
            values.push_back(std::sqrt(s));
        } else if (fn_id == "halfspace") {
            values.push_back(std::max(0.0, x[0]));
        } else {
            throw std::invalid_argument("unknown gaussian test function: " +
                                        fn_id);
        }
    }
    return values;
}

std::vector<EmpiricalTail> empirical_deviation(const std::string& fn_id,
                                               Center center, Side side,
                                               const McConfig& cfg, double a) {
    const auto values = sphere_function_samples(fn_id, cfg, a);
    const int n = cfg.dim;
    const double c0 =
        (center == Center::median && side == Side::one_sided) ? 0.5 : 1.0;
    return tails_from_values(values, center, side, cfg.t_grid, [n, c0](double t) {
        return c0 * std::exp(-0.5 * n * t * t);
    });
}

std::vector<EmpiricalTail> empirical_gaussian(const std::string& fn_id,
                                              Center center, Side side,
                                              const McConfig& cfg) {
    const auto values = gaussian_function_samples(fn_id, cfg);
    const double c0 =
        (center == Center::median && side == Side::one_sided) ? 0.5 : 1.0;
    return tails_from_values(values, center, side, cfg.t_grid, [c0](double t) {
        return c0 * std::exp(-0.5 * t * t);
    });
}

double rescaled_density(SphereDim dim, double theta) {
    const double root_n = std::sqrt(static_cast<double>(dim.n));
    return nu_density_at(dim, theta / root_n) / root_n;
}

ScanReport density_domination_check(SphereDim dim, const SuiteConfig& cfg) {
    if (dim.n < 3)
        throw std::invalid_argument("density_domination_check: needs n >= 3");
    const int n = dim.n;
    const double support = 0.5 * 3.141592653589793 * std::sqrt(double(n));
    auto envelope = [n](double theta) {
        return std::exp(-0.5 * (n - 2) * theta * theta / n) /
               std::sqrt(2.0 * 3.141592653589793);
    };
    // The weaker e^{-θ²/6} envelope dominates the sharper one for n >= 3;
    // certify the binding inequality g_n <= sharp envelope.
    return certify("density-domination/n=" + std::to_string(n),
                   [dim](double theta) { return rescaled_density(dim, theta); },
                   envelope, 0.0, support, cfg);
}

double ks_distance(std::vector<double> values,
                   const std::function<double(double)>& cdf) {
    std::sort(values.begin(), values.end());
    const double n = static_cast<double>(values.size());
    double d = 0.0;
    for (size_t i = 0; i < values.size(); ++i) {
        const double f = cdf(values[i]);
        d = std::max(d, std::abs(f - i / n));
        d = std::max(d, std::abs((i + 1) / n - f));
    }
    return d;
}

std::string tails_to_csv(const std::vector<EmpiricalTail>& rows) {
    std::string out = "t,p_hat,std_err,bound\n";
    char buf[160];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%.12g\n", r.t,
                      r.p_hat, r.std_err, r.bound);
        out += buf;
    }
    return out;
}

}  // namespace conc
