#include "conc/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "conc/cap_geometry.hpp"
#include "conc/extremal_profile.hpp"
#include "conc/monte_carlo.hpp"
#include "conc/product_spheres.hpp"
#include "conc/special.hpp"

namespace conc {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kHalfPi = 1.570796326794896619231321691639751442;
constexpr double kInf = std::numeric_limits<double>::infinity();

bool all_passed(const std::vector<ScanReport>& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const ScanReport& r) { return r.passed; });
}

void finish_expect_pass(SuiteOutcome& out) {
    out.ok = all_passed(out.reports);
    out.detail = out.ok ? "all scans passed" : "expected pass, got violation";
}

// Documented failure: exactly one interval whose endpoints match (lo, hi)
// within tol.
void finish_expect_interval(SuiteOutcome& out, const ScanReport& r, double lo,
                            double hi, double tol) {
    char buf[128];
    if (r.failure_intervals.size() != 1) {
        out.ok = false;
        std::snprintf(buf, sizeof buf,
                      "expected exactly one failure interval, got %zu",
                      r.failure_intervals.size());
        out.detail = buf;
        return;
    }
    const auto [flo, fhi] = r.failure_intervals.front();
    out.ok = std::abs(flo - lo) <= tol && std::abs(fhi - hi) <= tol;
    std::snprintf(buf, sizeof buf,
                  "failure interval (%.6f, %.6f) vs documented (%.6f, %.6f)",
                  flo, fhi, lo, hi);
    out.detail = buf;
}

std::vector<double> uniform_grid(double lo, double hi, int count) {
    std::vector<double> g(count);
    for (int i = 0; i < count; ++i) g[i] = lo + (hi - lo) * i / (count - 1);
    g.back() = hi;
    return g;
}

// Composite a-grid used by the profile scans; the grid density follows
// cfg.grid_size but stays an order of magnitude coarser than the closed-form
// scans since every point costs a quadrature.
std::vector<double> profile_grid(const SuiteConfig& cfg) {
    const int uniform = std::max(100, cfg.grid_size / 8);
    const int geometric = std::max(32, cfg.grid_size / 40);
    return default_a_grid(uniform, geometric);
}

double slope_fit(const std::vector<double>& xs, const std::vector<double>& ys) {
    // least-squares slope of log(y) against log(x)
    const int n = static_cast<int>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
        const double lx = std::log(xs[i]), ly = std::log(ys[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// ---------------------------------------------------------------- suites --

SuiteOutcome suite_q2_fail(const SuiteConfig& cfg) {
    SuiteOutcome out{"q2-fail", false, "", {}, {}};
    const SphereDim two(2);
    out.reports.push_back(certify(
        "q2-fail", [two](double x) { return q_n(two, x); },
        [](double) { return 1.0; }, 0.0, kHalfPi, cfg));
    finish_expect_interval(out, out.reports.front(), 1.0585758680658581,
                           1.1858772051160675, 1e-4);
    if (!out.reports.front().failure_intervals.empty()) {
        out.findings.emplace_back("alpha",
                                  out.reports.front().failure_intervals[0].first);
        out.findings.emplace_back(
            "beta", out.reports.front().failure_intervals[0].second);
    }
    return out;
}

SuiteOutcome suite_q34(const SuiteConfig& cfg) {
    SuiteOutcome out{"q34", false, "", {}, {}};
    const SphereDim n3(3), n4(4), n2(2);

    // Open interior grid; x = 0 is covered by the exact endpoint identity.
    std::vector<double> grid = uniform_grid(0.0, kHalfPi, cfg.grid_size);
    grid.erase(grid.begin());
    out.reports.push_back(certify_grid(
        "q34/q3", [n3](double x) { return q_n(n3, x); },
        [](double) { return 1.0; }, grid, cfg));
    out.reports.push_back(certify_grid(
        "q34/q4", [n4](double x) { return q_n(n4, x); },
        [](double) { return 1.0; }, grid, cfg));
    out.reports.push_back(certify_grid(
        "q34/q4<=q3", [n4](double x) { return q_n(n4, x); },
        [n3](double x) { return q_n(n3, x); }, grid, cfg));
    out.reports.push_back(certify_grid(
        "q34/q3<=q2", [n3](double x) { return q_n(n3, x); },
        [n2](double x) { return q_n(n2, x); }, grid, cfg));

    // Closed forms extend smoothly through 0; central differences with
    // Richardson extrapolation at step 1e-5.
    auto q3f = [](double x) { return (1.0 - std::sin(x)) * std::exp(1.5 * x * x); };
    auto q4f = [](double x) {
        return (kPi - 2.0 * x - 2.0 * std::cos(x) * std::sin(x)) / kPi *
               std::exp(2.0 * x * x);
    };
    auto deriv0 = [](auto f, double h) {
        auto central = [&f](double step) {
            return (f(step) - f(-step)) / (2.0 * step);
        };
        return (4.0 * central(0.5 * h) - central(h)) / 3.0;
    };
    out.findings.emplace_back("q3_prime_0", deriv0(q3f, 1e-5));
    out.findings.emplace_back("q4_prime_0", deriv0(q4f, 1e-5));
    out.findings.emplace_back("q3_at_0_minus_1", q_n(n3, 0.0) - 1.0);
    out.findings.emplace_back("q4_at_0_minus_1", q_n(n4, 0.0) - 1.0);

    finish_expect_pass(out);
    const bool derivs_ok =
        std::abs(out.findings[0].second - (-1.0)) <= 1e-6 &&
        std::abs(out.findings[1].second - (-4.0 / kPi)) <= 1e-6;
    const bool endpoint_ok = out.findings[2].second == 0.0 &&
                             out.findings[3].second == 0.0;
    if (out.ok && !(derivs_ok && endpoint_ok)) {
        out.ok = false;
        out.detail = "derivative or endpoint identity mismatch";
    }
    return out;
}

SuiteOutcome suite_g_max(const SuiteConfig& cfg) {
    SuiteOutcome out{"g-max", false, "", {}, {}};
    // g(x) = 3x - cos x/(1 - sin x) = 3x - cot(pi/4 - x/2); the cotangent
    // form has no cancellation near pi/2.
    auto g = [](double x) { return 3.0 * x - 1.0 / std::tan(0.25 * kPi - 0.5 * x); };
    out.reports.push_back(certify("g-max/g<=0", g, [](double) { return 0.0; },
                                  0.0, kHalfPi - 1e-9, cfg));

    // g'(x) = (2 - 3 sin x)/(1 - sin x) changes sign once, at sin x = 2/3.
    double lo = 0.0, hi = 1.5;
    while (hi - lo > 1e-14) {
        const double mid = 0.5 * (lo + hi);
        if (2.0 - 3.0 * std::sin(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    const double x0 = 0.5 * (lo + hi);
    out.findings.emplace_back("x0", x0);
    out.findings.emplace_back("x0_expected", std::asin(2.0 / 3.0));
    out.findings.emplace_back("g_at_x0", g(x0));
    out.findings.emplace_back("g_at_0", g(0.0));

    finish_expect_pass(out);
    if (out.ok) {
        const bool located = std::abs(x0 - std::asin(2.0 / 3.0)) <= 1e-8;
        const bool value = std::abs(g(x0) - (-0.046885)) <= 1e-5;
        if (!(located && value)) {
            out.ok = false;
            out.detail = "maximizer or maximum value off";
        }
    }
    return out;
}

SuiteOutcome suite_cos_exp(const SuiteConfig& cfg) {
    SuiteOutcome out{"cos-exp", false, "", {}, {}};
    out.reports.push_back(certify(
        "cos-exp", [](double x) { return std::cos(x); },
        [](double x) { return std::exp(-0.5 * x * x); }, 0.0, kHalfPi, cfg));
    finish_expect_pass(out);
    return out;
}

SuiteOutcome suite_monotone(const SuiteConfig& cfg,
                            const std::vector<double>& xi_list,
                            const std::string& id) {
    SuiteOutcome out{id, false, "", {}, {}};
    const auto xs = uniform_grid(0.0, kHalfPi, cfg.grid_size);
    constexpr int kNLo = 2, kNHi = 40;

    std::vector<std::vector<double>> table(kNHi + 3);
    for (int n = kNLo; n <= kNHi + 2; ++n) {
        table[n].resize(xs.size());
        const SphereDim dim(n);
        for (size_t i = 0; i < xs.size(); ++i) table[n][i] = q_n(dim, xs[i]);
    }

    for (double xi : xi_list) {
        ScanReport r;
        r.suite_id = id + "/xi=" + std::to_string(xi).substr(0, 4);
        r.grid_size = cfg.grid_size;
        r.max_violation = -kInf;
        for (int n = kNLo; n <= kNHi; ++n) {
            for (size_t i = 0; i < xs.size(); ++i) {
                const double w = std::exp(0.5 * xi * xs[i] * xs[i]);
                const double margin = (table[n + 2][i] - table[n][i]) * w;
                if (margin > r.max_violation) {
                    r.max_violation = margin;
                    r.argmax = xs[i];
                }
            }
        }
        r.passed = r.max_violation <= cfg.violation_tol;
        out.reports.push_back(r);
    }
    finish_expect_pass(out);
    return out;
}

SuiteOutcome suite_hemisphere(const SuiteConfig& cfg) {
    SuiteOutcome out{"hemisphere", false, "", {}, {}};
    for (int n = 3; n <= 40; ++n) {
        const SphereDim dim(n);
        out.reports.push_back(certify(
            "hemisphere/n=" + std::to_string(n),
            [dim](double x) { return cap_tail(dim, x); },
            [dim](double x) { return 0.5 * std::exp(-0.5 * dim.n * x * x); },
            0.0, kHalfPi, cfg));
    }
    // Equality only at x = 0: document the endpoint margin and the strictly
    // negative interior margin for one representative dimension.
    const SphereDim ten(10);
    out.findings.emplace_back("margin_at_0_n10", cap_tail(ten, 0.0) - 0.5);
    double interior = -kInf;
    for (double x : uniform_grid(0.05, kHalfPi, 200))
        interior = std::max(interior, cap_tail(ten, x) -
                                          0.5 * std::exp(-5.0 * x * x));
    out.findings.emplace_back("interior_max_margin_n10", interior);
    finish_expect_pass(out);
    return out;
}

SuiteOutcome suite_one_sided(const SuiteConfig& cfg, int n_lo, int n_hi) {
    SuiteOutcome out{"one-sided", false, "", {}, {}};
    const auto grid = profile_grid(cfg);
    for (int n = n_lo; n <= n_hi; ++n) {
        const SphereDim dim(n);
        out.reports.push_back(certify_grid(
            "one-sided/n=" + std::to_string(n),
            [dim](double a) { return one_sided_tail(dim, a); },
            [dim](double a) {
                const double t = t_of_a(dim, a);
                return std::exp(-0.5 * dim.n * t * t);
            },
            grid, cfg));
    }
    // Improved constant C = e^{1/2}/2 on a >= 0, plus the empirically
    // smallest constant the grid supports.
    const double improved_c = 0.5 * std::exp(0.5);
    const auto pos_grid = uniform_grid(0.0, kHalfPi, std::max(100, cfg.grid_size / 8));
    double min_constant = 0.0;
    for (int n = n_lo; n <= n_hi; ++n) {
        const SphereDim dim(n);
        out.reports.push_back(certify_grid(
            "one-sided-improved/n=" + std::to_string(n),
            [dim](double a) { return one_sided_tail(dim, a); },
            [dim, improved_c](double a) {
                const double t = t_of_a(dim, a);
                return improved_c * std::exp(-0.5 * dim.n * t * t);
            },
            pos_grid, cfg));
        for (double a : pos_grid) {
            const double t = t_of_a(dim, a);
            min_constant = std::max(
                min_constant,
                one_sided_tail(dim, a) * std::exp(0.5 * dim.n * t * t));
        }
    }
    out.findings.emplace_back("smallest_constant_on_grid", min_constant);
    // Equality at a = -pi/2 (t = 0): both sides are exactly 1.
    out.findings.emplace_back(
        "margin_at_left_endpoint_n2",
        one_sided_tail(SphereDim(2), -kHalfPi) - 1.0);
    finish_expect_pass(out);
    return out;
}

SuiteOutcome suite_two_sided(const SuiteConfig& cfg, int n_lo, int n_hi) {
    SuiteOutcome out{"two-sided", false, "", {}, {}};
    const auto grid = profile_grid(cfg);
    for (int n = n_lo; n <= n_hi; ++n) {
        const SphereDim dim(n);
        out.reports.push_back(certify_grid(
            "two-sided/n=" + std::to_string(n),
            [dim](double a) { return two_sided_tail(dim, a); },
            [dim](double a) {
                const double t = t_of_a(dim, a);
                return std::exp(-0.5 * dim.n * t * t);
            },
            grid, cfg));
    }

    // Intermediate inequalities from the proof, as sub-scans.
    const double ln15 = std::log(1.5);
    for (int n = std::max(3, n_lo); n <= n_hi; ++n) {
        const SphereDim dim(n);
        // concavity step: (1/2)(e^{-na²/2} + e^{-n(a+2η)²/2}) <= e^{-nt²/2}
        // on the region a + η <= 1/sqrt(n)
        std::vector<double> region;
        for (double a :
             uniform_grid(0.0, 1.0 / std::sqrt(double(n)), 200)) {
            if (a + eta_of_a(dim, a) <= 1.0 / std::sqrt(double(n)))
                region.push_back(a);
        }
        if (region.size() >= 2) {
            out.reports.push_back(certify_grid(
                "two-sided/eq46/n=" + std::to_string(n),
                [dim](double a) {
                    const double eta = eta_of_a(dim, a);
                    return 0.5 * (std::exp(-0.5 * dim.n * a * a) +
                                  std::exp(-0.5 * dim.n * (a + 2 * eta) *
                                           (a + 2 * eta)));
                },
                [dim](double a) {
                    const double t = t_of_a(dim, a);
                    return std::exp(-0.5 * dim.n * t * t);
                },
                region, cfg));
        }
        // η <= sqrt(a² + 2 ln 1.5 / n) - a for a >= 1/(2 sqrt n); the
        // improved cap bound behind it needs n > 3
        if (n >= 4) {
            out.reports.push_back(certify(
                "two-sided/eq52/n=" + std::to_string(n),
                [dim](double a) { return eta_of_a(dim, a); },
                [dim, ln15](double a) {
                    return std::sqrt(a * a + 2.0 * ln15 / dim.n) - a;
                },
                0.5 / std::sqrt(double(n)), kHalfPi, cfg));
        }
    }
    // Komatu-reduced scalar form, u >= 0.5
    out.reports.push_back(certify(
        "two-sided/eq54", [](double u) { return 0.4 * komatu_bound(u); },
        [ln15](double u) {
            return 2.0 * ln15 / (u + std::sqrt(u * u + 2.0 * ln15));
        },
        0.5, 10.0, cfg));
    // asymptotic small-b implication on u in [0, 3]
    out.reports.push_back(certify(
        "two-sided/eq58",
        [](double u) {
            const double v = std::sqrt(kPi / 8.0) * std::exp(-0.5 * u * u);
            return -std::expm1(-0.5 * v * v);
        },
        [](double u) {
            const double v = std::sqrt(kPi / 8.0) * std::exp(-0.5 * u * u);
            return (gauss_upper_tail(u) - gauss_upper_tail(u + 2.0 * v)) /
                   std::sqrt(2.0 * kPi);
        },
        0.0, 3.0, cfg));
    // large-b regime, u >= sqrt(6)
    auto eq61_lhs = [](double u) {
        return std::exp(-0.5 * u * u) / (4.0 * u * u);
    };
    auto eq61_rhs = [](double u) {
        const double v =
            std::exp(-0.5 * u * u) / (std::sqrt(2.0 * kPi) * u * u);
        return std::exp(-0.5 * (u + 2.0 * v) * (u + 2.0 * v));
    };
    out.reports.push_back(
        certify("two-sided/eq61", eq61_lhs, eq61_rhs, std::sqrt(6.0), 12.0, cfg));
    out.findings.emplace_back("eq61_ratio_at_sqrt6",
                              eq61_rhs(std::sqrt(6.0)) /
                                  eq61_lhs(std::sqrt(6.0)));

    // n = 3 near a = -pi/2: orders 4 and 6 of 1-F and 1-G, by log-log fit.
    const SphereDim three(3);
    const std::vector<double> zs{0.1, 0.05, 0.025};
    std::vector<double> fvals, gvals;
    for (double z : zs) {
        const double a = z - kHalfPi;
        const double t = t_of_a(three, a);
        // 1 - F = ν([-π/2, a)) - ν([2t-a, π/2]), both terms tiny and
        // computed without cancellation
        fvals.push_back(cap_tail(three, -a) - cap_tail(three, 2.0 * t - a));
        gvals.push_back(-std::expm1(-1.5 * t * t));
    }
    const double slope_f = slope_fit(zs, fvals);
    const double slope_g = slope_fit(zs, gvals);
    out.findings.emplace_back("n3_slope_one_minus_F", slope_f);
    out.findings.emplace_back("n3_slope_one_minus_G", slope_g);
    out.findings.emplace_back("n3_limit_one_minus_F_z4",
                              fvals.back() / std::pow(zs.back(), 4));
    double sep = kInf;
    for (size_t i = 0; i < zs.size(); ++i)
        sep = std::min(sep, (fvals[i] - gvals[i]) / std::pow(zs[i], 4));
    out.findings.emplace_back("n3_separation_z4", sep);

    finish_expect_pass(out);
    if (out.ok &&
        (std::abs(slope_f - 4.0) > 0.1 || std::abs(slope_g - 6.0) > 0.1)) {
        out.ok = false;
        out.detail = "n=3 asymptotic orders not reproduced";
    }
    return out;
}

SuiteOutcome suite_two_sided_n2(const SuiteConfig& cfg) {
    SuiteOutcome out{"two-sided-n2", false, "", {}, {}};
    const SphereDim two(2);
    out.reports.push_back(certify_grid(
        "two-sided-n2", [two](double a) { return two_sided_tail(two, a); },
        [two](double a) {
            const double t = t_of_a(two, a);
            return std::exp(-t * t);
        },
        profile_grid(cfg), cfg));
    const auto& r = out.reports.front();
    out.ok = !r.passed && !r.failure_intervals.empty();
    out.detail = out.ok ? "documented n=2 failure reproduced"
                        : "expected a documented failure interval";
    if (!r.failure_intervals.empty()) {
        out.findings.emplace_back("fail_a_lo", r.failure_intervals[0].first);
        out.findings.emplace_back("fail_a_hi", r.failure_intervals[0].second);
    }
    return out;
}

SuiteOutcome suite_lemma_powers(const SuiteConfig& cfg) {
    SuiteOutcome out{"lemma-powers", false, "", {}, {}};
    const int pts = std::max(200, cfg.grid_size / 10);

    // cos^{n-2}θ >= e^{-nθ²/2} on [0, cut/sqrt(n)]
    ScanReport eq49;
    eq49.suite_id = "lemma-powers/eq49";
    eq49.grid_size = pts;
    eq49.max_violation = -kInf;
    for (int n = 3; n <= 60; ++n) {
        const double cut = n == 3 ? 2.67 : (n == 4 ? 2.89 : 3.0);
        for (double th : uniform_grid(0.0, cut / std::sqrt(double(n)), pts)) {
            const double margin = std::exp(-0.5 * n * th * th) -
                                  std::pow(std::cos(th), n - 2);
            if (margin > eq49.max_violation) {
                eq49.max_violation = margin;
                eq49.argmax = th;
            }
        }
    }
    eq49.passed = eq49.max_violation <= cfg.violation_tol;
    out.reports.push_back(eq49);

    // cos^{n-1}θ <= e^{-nθ²/2} on [sqrt(6/n), π/2]
    ScanReport eq50;
    eq50.suite_id = "lemma-powers/eq50";
    eq50.grid_size = pts;
    eq50.max_violation = -kInf;
    for (int n = 3; n <= 60; ++n) {
        for (double th : uniform_grid(std::sqrt(6.0 / n), kHalfPi, pts)) {
            const double margin = std::pow(std::cos(th), n - 1) -
                                  std::exp(-0.5 * n * th * th);
            if (margin > eq50.max_violation) {
                eq50.max_violation = margin;
                eq50.argmax = th;
            }
        }
    }
    eq50.passed = eq50.max_violation <= cfg.violation_tol;
    out.reports.push_back(eq50);

    auto h = [](int n, double s) {
        return (n - 2) * std::log(std::cos(s / std::sqrt(double(n)))) +
               0.5 * s * s;
    };
    double h3_min = kInf;
    for (int n = 5; n <= 60; ++n) h3_min = std::min(h3_min, h(n, 3.0));
    double h3_max_increase = -kInf;
    for (int n = 7; n <= 200; ++n)
        h3_max_increase = std::max(h3_max_increase, h(n + 1, 3.0) - h(n, 3.0));
    out.findings.emplace_back("h_n3_min_5_60", h3_min);
    out.findings.emplace_back("h_n3_max_increase_from_7", h3_max_increase);
    out.findings.emplace_back("h3_at_2.67", h(3, 2.67));
    out.findings.emplace_back("h4_at_2.89", h(4, 2.89));
    out.findings.emplace_back("h10_at_0", h(10, 0.0));
    out.findings.emplace_back(
        "h10_prime_at_0",
        (h(10, 1e-6) - h(10, -1e-6)) / 2e-6);

    // cos^{n-1} sqrt(6/n) increases to e^{-3}
    double seq_max_decrease = -kInf;
    auto seq = [](int n) {
        return std::pow(std::cos(std::sqrt(6.0 / n)), n - 1);
    };
    for (int n = 3; n < 200; ++n)
        seq_max_decrease = std::max(seq_max_decrease, seq(n) - seq(n + 1));
    out.findings.emplace_back("cos_seq_max_decrease", seq_max_decrease);
    out.findings.emplace_back("cos_seq_gap_to_limit",
                              std::exp(-3.0) - seq(200));

    finish_expect_pass(out);
    if (out.ok) {
        const bool h_ok = h3_min >= 0.0 && h3_max_increase <= 0.0 &&
                          h(3, 2.67) >= 0.0 && h(4, 2.89) >= 0.0;
        const bool seq_ok =
            seq_max_decrease <= 0.0 && std::exp(-3.0) - seq(200) >= 0.0;
        if (!(h_ok && seq_ok)) {
            out.ok = false;
            out.detail = "h_n or cosine-sequence side conditions failed";
        }
    }
    return out;
}

SuiteOutcome suite_lemma_improved(const SuiteConfig& cfg) {
    SuiteOutcome out{"lemma-improved", false, "", {}, {}};
    const int pts = std::max(200, cfg.grid_size / 10);

    std::vector<int> ns;
    for (int n = 3; n <= 60; ++n) ns.push_back(n);
    ns.push_back(100);
    ns.push_back(500);

    ScanReport scan;
    scan.suite_id = "lemma-improved/domains";
    scan.grid_size = pts;
    scan.max_violation = -kInf;
    for (int n : ns) {
        const SphereDim dim(n);
        const double x_lo = n == 3 ? (5.0 / 9.0) / std::sqrt(3.0)
                                   : 0.5 / std::sqrt(double(n));
        for (double x : uniform_grid(x_lo, kHalfPi, pts)) {
            const double margin =
                cap_tail(dim, x) - 0.4 * std::exp(-0.5 * n * x * x);
            if (margin > scan.max_violation) {
                scan.max_violation = margin;
                scan.argmax = x;
            }
        }
    }
    scan.passed = scan.max_violation <= cfg.violation_tol;
    out.reports.push_back(scan);

    // True n = 3 threshold in u = x sqrt(3), by bisection of the margin.
    const SphereDim three(3);
    auto margin3 = [three](double u) {
        const double x = u / std::sqrt(3.0);
        return cap_tail(three, x) - 0.4 * std::exp(-0.5 * u * u);
    };
    double lo = 0.5, hi = 0.6;
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        if (margin3(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    const double ustar = 0.5 * (lo + hi);
    out.findings.emplace_back("n3_threshold_ustar", ustar);

    // Smallest n for which the explicit-coefficient chain behind the
    // asymptotic picture holds on u in [0.5, sqrt(6)].
    int regime_n = -1;
    for (int n = 3; n <= 60 && regime_n < 0; ++n) {
        const double coeff =
            1.0 / (2.0 * wallis(n - 2).value * std::sqrt(double(n)));
        bool holds = true;
        for (double u : uniform_grid(0.5, std::sqrt(6.0), pts)) {
            const double lhs =
                0.5 - coeff * (gauss_upper_tail(0.0) - gauss_upper_tail(u));
            if (lhs > 0.4 * std::exp(-0.5 * u * u)) {
                holds = false;
                break;
            }
        }
        if (holds) regime_n = n;
    }
    out.findings.emplace_back("ideal_bound_regime_n", double(regime_n));

    finish_expect_pass(out);
    if (out.ok) {
        const bool ustar_ok = ustar >= 0.545 && ustar <= 0.556;
        const bool regime_ok = regime_n > 0 && regime_n <= 30;
        if (!(ustar_ok && regime_ok)) {
            out.ok = false;
            out.detail = "threshold or regime boundary off";
        }
    }
    return out;
}

SuiteOutcome suite_a5(const SuiteConfig& cfg) {
    SuiteOutcome out{"a5", false, "", {}, {}};
    const int pts = std::max(200, cfg.grid_size / 10);

    ScanReport scan;
    scan.suite_id = "a5/eq67";
    scan.grid_size = pts;
    scan.max_violation = -kInf;
    for (int n = 3; n <= 60; ++n) {
        const double in1 = wallis(n - 1).value;
        for (double b :
             uniform_grid(std::sqrt(6.0 / n), kHalfPi, pts)) {
            const double sb = std::sin(b);
            const double t =
                in1 * std::exp(n * std::log(std::cos(b))) / (kPi * n * sb * sb);
            const double ratio = std::cos(b + 2.0 * t) / std::cos(b);
            const double lhs =
                std::cos(b + 2.0 * t) * std::cos(b + 2.0 * t) /
                (4.0 * (n - 1) * sb * sb);
            const double rhs = std::pow(ratio, n);
            const double margin = lhs - rhs;
            if (margin > scan.max_violation) {
                scan.max_violation = margin;
                scan.argmax = b;
            }
        }
    }
    scan.passed = scan.max_violation <= cfg.violation_tol;
    out.reports.push_back(scan);

    const double alpha =
        1.0 / (96.0 * std::exp(6.0)) + kPi / (4.0 * std::sqrt(2.0) * std::exp(3.0));
    out.findings.emplace_back("alpha", alpha);
    out.findings.emplace_back("one_minus_alpha3_cubed",
                              std::pow(1.0 - alpha / 3.0, 3));
    out.findings.emplace_back("endpoint_3_over_8u2_at_sqrt6", 3.0 / (8.0 * 6.0));

    finish_expect_pass(out);
    if (out.ok) {
        const bool consts_ok = alpha < 0.028 &&
                               std::pow(1.0 - alpha / 3.0, 3) > 0.97 &&
                               3.0 / (8.0 * 6.0) == 0.0625;
        if (!consts_ok) {
            out.ok = false;
            out.detail = "constant chain not reproduced";
        }
    }
    return out;
}

SuiteOutcome suite_wallis(const SuiteConfig&) {
    SuiteOutcome out{"wallis", false, "", {}, {}};
    double rec = 0.0, kap = 0.0, ik = 0.0;
    for (int m = 2; m <= 200; ++m) {
        const double im = wallis(m).value;
        rec = std::max(rec, std::abs(im - (m - 1.0) / m * wallis(m - 2).value) / im);
    }
    double sandwich_lo = kInf, sandwich_hi = kInf;
    for (int m = 1; m <= 200; ++m) {
        const double im = wallis(m).value;
        sandwich_lo = std::min(sandwich_lo, im - std::sqrt(kPi / (2.0 * m + 2.0)));
        sandwich_hi = std::min(sandwich_hi, std::sqrt(kPi / (2.0 * m + 1.0)) - im);
    }
    double mono = -kInf, above = kInf;
    for (int m = 3; m <= 200; ++m) {
        const double cur1 = wallis(m - 1).value * std::sqrt(double(m));
        const double nxt1 = wallis(m).value * std::sqrt(double(m + 1));
        const double cur2 = wallis(m - 2).value * std::sqrt(double(m));
        const double nxt2 = wallis(m - 1).value * std::sqrt(double(m + 1));
        mono = std::max({mono, nxt1 - cur1, nxt2 - cur2});
        above = std::min({above, cur1 - std::sqrt(kPi / 2.0),
                          cur2 - std::sqrt(kPi / 2.0)});
    }
    for (int n = 1; n <= 200; ++n) {
        kap = std::max(kap,
                       std::abs(kappa(n).value * kappa(n + 1).value - n) / n);
        const double lhs = wallis(n - 1).value;
        const double rhs = std::sqrt(kPi / 2.0) / kappa(n).value;
        ik = std::max(ik, std::abs(lhs - rhs) / lhs);
    }
    // Resolve which printed product identity holds numerically.
    double err_std = 0.0, err_printed = 0.0;
    for (int k = 2; k <= 199; ++k) {
        const double prod = wallis(k).value * wallis(k + 1).value;
        err_std = std::max(err_std,
                           std::abs(prod - kPi / (2.0 * (k + 1))) / prod);
        err_printed = std::max(
            err_printed, std::abs(prod - kPi / (2.0 * (k - 1))) / prod);
    }
    out.findings.emplace_back("recurrence_max_rel", rec);
    out.findings.emplace_back("sandwich_lower_min_margin", sandwich_lo);
    out.findings.emplace_back("sandwich_upper_min_margin", sandwich_hi);
    out.findings.emplace_back("sqrtm_seq_max_increase", mono);
    out.findings.emplace_back("sqrtm_seq_min_above_sqrt_pi_2", above);
    out.findings.emplace_back("kappa_product_max_rel", kap);
    out.findings.emplace_back("wallis_kappa_link_max_rel", ik);
    out.findings.emplace_back("product_identity_std_max_rel", err_std);
    out.findings.emplace_back("product_identity_printed_max_rel", err_printed);

    out.ok = rec <= 1e-12 && sandwich_lo >= 0.0 && sandwich_hi >= 0.0 &&
             mono < 0.0 && above >= 0.0 && kap <= 1e-10 && ik <= 1e-10 &&
             err_std <= 1e-10 && err_printed > 1e-2;
    out.detail = out.ok
                     ? "identities hold; I_k I_{k+1} = pi/(2(k+1)) (standard "
                       "form), the printed pi/(2(k-1)) does not"
                     : "identity check failed";
    return out;
}

SuiteOutcome suite_gauss_profile(const SuiteConfig& cfg) {
    SuiteOutcome out{"gauss-profile", false, "", {}, {}};
    out.reports.push_back(certify(
        "gauss-profile", [](double a) { return gauss_two_sided_tail(a); },
        [](double a) {
            const double t = gauss_t_of_a(a);
            return std::exp(-0.5 * t * t);
        },
        -6.0, 6.0, cfg));
    out.findings.emplace_back("t_at_0", gauss_t_of_a(0.0));
    out.findings.emplace_back("t_at_minus_10", gauss_t_of_a(-10.0));
    out.findings.emplace_back("mean_phi_at_10", gauss_mean_phi(10.0));
    finish_expect_pass(out);
    if (out.ok && (std::abs(gauss_t_of_a(-10.0)) > 1e-6 ||
                   std::abs(gauss_mean_phi(10.0)) > 1e-6)) {
        out.ok = false;
        out.detail = "asymptote checks failed";
    }
    return out;
}

SuiteOutcome suite_gauss_bounds(const SuiteConfig& cfg) {
    SuiteOutcome out{"gauss-bounds", false, "", {}, {}};
    out.reports.push_back(certify(
        "gauss-bounds/tail<=sampford", [](double u) { return gauss_upper_tail(u); },
        [](double u) { return sampford_bound(u); }, 0.0, 10.0, cfg));
    out.reports.push_back(certify(
        "gauss-bounds/sampford<=komatu",
        [](double u) { return sampford_bound(u); },
        [](double u) { return komatu_bound(u); }, 0.0, 10.0, cfg));
    finish_expect_pass(out);
    return out;
}

SuiteOutcome suite_density(const SuiteConfig& cfg) {
    SuiteOutcome out{"density", false, "", {}, {}};
    for (int n : {3, 4, 10, 100, 10000})
        out.reports.push_back(density_domination_check(SphereDim(n), cfg));
    // envelope chain for the worst case n = 3
    out.reports.push_back(certify(
        "density/envelope-chain-n3",
        [](double th) {
            return std::exp(-0.5 * th * th / 3.0) / std::sqrt(2.0 * kPi);
        },
        [](double th) {
            return std::exp(-th * th / 6.0) / std::sqrt(2.0 * kPi);
        },
        0.0, 10.0, cfg));
    const SphereDim big(10000);
    out.findings.emplace_back(
        "conv_gap_n1e4_theta1",
        std::abs(rescaled_density(big, 1.0) - norm_pdf(1.0)));
    finish_expect_pass(out);
    if (out.ok && std::abs(rescaled_density(big, 1.0) - norm_pdf(1.0)) > 1e-3) {
        out.ok = false;
        out.detail = "pointwise convergence check failed";
    }
    return out;
}

SuiteOutcome suite_qxi_spot(const std::string& id, int n, double xi,
                            bool expect_pass, const SuiteConfig& cfg) {
    SuiteOutcome out{id, false, "", {}, {}};
    const SphereDim dim(n);
    out.reports.push_back(certify(
        id, [dim, xi](double x) { return q_n_xi(dim, x, xi); },
        [](double) { return 1.0; }, 0.0, kHalfPi, cfg));
    const auto& r = out.reports.front();
    if (expect_pass) {
        finish_expect_pass(out);
    } else {
        out.ok = !r.passed && !r.failure_intervals.empty();
        out.detail = out.ok ? "documented failure reproduced"
                            : "expected a documented failure";
        if (!r.failure_intervals.empty()) {
            out.findings.emplace_back("fail_lo", r.failure_intervals[0].first);
            out.findings.emplace_back("fail_hi", r.failure_intervals[0].second);
        }
    }
    return out;
}

struct ProductExpectation {
    int k, n;
    bool geodesic_pass;
    double x_lo, x_hi, t_max;  // documented thresholds when failing
    int chordal;               // 1 = documented pass, 0 = no claim
};

constexpr ProductExpectation kProductTable[] = {
    {2, 3, false, 0.47595, 1.45105, 0.82437, 0},
    {2, 4, false, 0.71556, 1.19952, 1.1314, 1},
    {2, 5, true, 0, 0, 0, 0},
    {3, 6, false, -1, -1, -1, 1},  // failure documented without endpoints
    {3, 7, true, 0, 0, 0, 0},
    {4, 6, false, -1, -1, -1, 1},
    {4, 7, false, -1, -1, -1, 1},
    {4, 8, true, 0, 0, 0, 0},
};

}  // namespace

SuiteOutcome run_product_case(int k, int n, const SuiteConfig& cfg) {
    SuiteOutcome out{"product-k" + std::to_string(k) + "n" + std::to_string(n),
                     false,
                     "",
                     {},
                     {}};
    const ProductSphereCase c = case_of(k, n);
    out.findings.emplace_back("m", double(c.m));
    out.findings.emplace_back("r", c.r);
    out.findings.emplace_back("xi", c.xi);

    const ScanReport geo = excess_scan(c, cfg);
    const ScanReport chord = chordal_variant(c, cfg);
    out.reports.push_back(geo);
    out.reports.push_back(chord);
    const double t_max = admissible_t(c, geo);
    if (!geo.passed) out.findings.emplace_back("t_max", t_max);

    const ProductExpectation* exp = nullptr;
    for (const auto& e : kProductTable)
        if (e.k == k && e.n == n) exp = &e;
    if (exp == nullptr) {
        out.ok = true;
        out.detail = "no documented expectation; reporting only";
        return out;
    }

    char buf[160];
    if (exp->geodesic_pass) {
        out.ok = geo.passed;
        out.detail = out.ok ? "passes on the full range"
                            : "expected full-range pass";
    } else if (exp->x_lo >= 0.0) {
        finish_expect_interval(out, geo, exp->x_lo, exp->x_hi, 1e-3);
        if (out.ok && std::abs(t_max - exp->t_max) > 1e-3) {
            out.ok = false;
            std::snprintf(buf, sizeof buf, "t threshold %.5f vs documented %.5f",
                          t_max, exp->t_max);
            out.detail = buf;
        }
    } else {
        out.ok = !geo.passed;
        out.detail = out.ok ? "documented geodesic failure reproduced"
                            : "expected a geodesic failure";
    }
    if (out.ok && exp->chordal == 1 && !chord.passed) {
        out.ok = false;
        out.detail = "expected chordal pass";
    }
    return out;
}

std::vector<std::string> suite_ids() {
    return {"wallis",
            "cos-exp",
            "q34",
            "q2-fail",
            "g-max",
            "monotone-qn",
            "monotone-qnxi",
            "hemisphere",
            "one-sided",
            "two-sided",
            "two-sided-n2",
            "lemma-powers",
            "lemma-improved",
            "a5",
            "gauss-profile",
            "gauss-bounds",
            "density",
            "q41",
            "q62",
            "q31-fail",
            "q52-fail",
            "product-k2n3",
            "product-k2n4",
            "product-k2n5",
            "product-k3n6",
            "product-k3n7",
            "product-k4n6",
            "product-k4n7",
            "product-k4n8"};
}

SuiteOutcome run_suite(const std::string& id, const SuiteConfig& cfg) {
    if (id == "q2-fail") return suite_q2_fail(cfg);
    if (id == "q34") return suite_q34(cfg);
    if (id == "g-max") return suite_g_max(cfg);
    if (id == "cos-exp") return suite_cos_exp(cfg);
    if (id == "monotone-qn") return suite_monotone(cfg, {0.0}, "monotone-qn");
    if (id == "monotone-qnxi")
        return suite_monotone(cfg, {0.0, 1.0, 2.0, 4.0}, "monotone-qnxi");
    if (id == "hemisphere") return suite_hemisphere(cfg);
    if (id == "one-sided") return suite_one_sided(cfg, 2, 20);
    if (id == "two-sided") return suite_two_sided(cfg, 3, 20);
    if (id == "two-sided-n2") return suite_two_sided_n2(cfg);
    if (id == "lemma-powers") return suite_lemma_powers(cfg);
    if (id == "lemma-improved") return suite_lemma_improved(cfg);
    if (id == "a5") return suite_a5(cfg);
    if (id == "wallis") return suite_wallis(cfg);
    if (id == "gauss-profile") return suite_gauss_profile(cfg);
    if (id == "gauss-bounds") return suite_gauss_bounds(cfg);
    if (id == "density") return suite_density(cfg);
    if (id == "q41") return suite_qxi_spot("q41", 4, 1.0, true, cfg);
    if (id == "q62") return suite_qxi_spot("q62", 6, 2.0, true, cfg);
    if (id == "q31-fail") return suite_qxi_spot("q31-fail", 3, 1.0, false, cfg);
    if (id == "q52-fail") return suite_qxi_spot("q52-fail", 5, 2.0, false, cfg);
    if (id.rfind("product-k", 0) == 0) {
        const auto npos = id.find('n', 9);
        if (npos != std::string::npos) {
            const int k = std::stoi(id.substr(9, npos - 9));
            const int n = std::stoi(id.substr(npos + 1));
            return run_product_case(k, n, cfg);
        }
    }
    throw std::invalid_argument("unknown suite id: " + id);
}

}  // namespace conc
