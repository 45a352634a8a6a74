// Acceptance suite: every criterion runs at its stated tolerance and prints
// one PASS/FAIL line with the elapsed time. Exit code is the number of
// failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "conc/cap_geometry.hpp"
#include "conc/extremal_profile.hpp"
#include "conc/monte_carlo.hpp"
#include "conc/special.hpp"
#include "conc/suites.hpp"

using namespace conc;

namespace {

int failures = 0;

void criterion(const std::string& name, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
    std::string note;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(note);
    } catch (const std::exception& e) {
        note = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (elapsed > budget_seconds) {
        ok = false;
        note += (note.empty() ? "" : "; ") + std::string("over time budget");
    }
    std::printf("[%s] %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", name.c_str(),
                elapsed, note.empty() ? "" : " -- ", note.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

double finding(const SuiteOutcome& o, const std::string& key) {
    for (const auto& [k, v] : o.findings)
        if (k == key) return v;
    throw std::runtime_error("missing finding " + key);
}

char buf[256];

}  // namespace

int main() {
    const SuiteConfig cfg;  // grid 2000, violation tol 1e-9, refine tol 1e-6

    criterion("01 n=2 failure interval (1.05858, 1.18588) within 1e-4", 5.0,
              [&](std::string& note) {
                  const auto o = run_suite("q2-fail", cfg);
                  note = o.detail;
                  return o.ok;
              });

    criterion("02 q3,q4 <= 1 with derivatives -1 and -4/pi within 1e-6", 5.0,
              [&](std::string& note) {
                  const auto o = run_suite("q34", cfg);
                  std::snprintf(buf, sizeof buf, "q3'(0)=%.8f q4'(0)=%.8f",
                                finding(o, "q3_prime_0"),
                                finding(o, "q4_prime_0"));
                  note = buf;
                  return o.ok;
              });

    criterion("03 g-maximum at arcsin(2/3) within 1e-8, value within 1e-5",
              1.0, [&](std::string& note) {
                  const auto o = run_suite("g-max", cfg);
                  std::snprintf(buf, sizeof buf, "x0=%.10f g(x0)=%.6f",
                                finding(o, "x0"), finding(o, "g_at_x0"));
                  note = buf;
                  return o.ok;
              });

    criterion("04 monotone families q_{n+2}<=q_n and q_{n+2,xi}<=q_{n,xi}",
              60.0, [&](std::string& note) {
                  const auto a = run_suite("monotone-qn", cfg);
                  const auto b = run_suite("monotone-qnxi", cfg);
                  note = a.detail + " / " + b.detail;
                  return a.ok && b.ok;
              });

    criterion("05 hemisphere bound cap_tail <= (1/2)e^{-nx^2/2}, n=3..40",
              30.0, [&](std::string& note) {
                  const auto o = run_suite("hemisphere", cfg);
                  std::snprintf(buf, sizeof buf,
                                "margin at 0: %.1e, interior max: %.3e",
                                finding(o, "margin_at_0_n10"),
                                finding(o, "interior_max_margin_n10"));
                  note = buf;
                  return o.ok && std::abs(finding(o, "margin_at_0_n10")) < 1e-12 &&
                         finding(o, "interior_max_margin_n10") < 0.0;
              });

    criterion("06 theorem-3 profiles with n=3 asymptotic slopes 4 and 6",
              120.0, [&](std::string& note) {
                  const auto a = run_suite("one-sided", cfg);
                  const auto b = run_suite("two-sided", cfg);
                  std::snprintf(buf, sizeof buf, "slopes %.4f / %.4f",
                                finding(b, "n3_slope_one_minus_F"),
                                finding(b, "n3_slope_one_minus_G"));
                  note = buf;
                  return a.ok && b.ok;
              });

    criterion("07 lemma 12/13 domains, u* in [0.545, 0.556], h_n(3) checks",
              30.0, [&](std::string& note) {
                  const auto a = run_suite("lemma-powers", cfg);
                  const auto b = run_suite("lemma-improved", cfg);
                  std::snprintf(buf, sizeof buf, "u*=%.6f h_n3 min=%.4f",
                                finding(b, "n3_threshold_ustar"),
                                finding(a, "h_n3_min_5_60"));
                  note = buf;
                  return a.ok && b.ok;
              });

    criterion("08 appendix A.5: alpha < 0.028, (1-a/3)^3 > 0.97, ratio >= 23",
              5.0, [&](std::string& note) {
                  const auto o = run_suite("a5", cfg);
                  // Eq. (61) side ratio at u = sqrt(6)
                  const double u = std::sqrt(6.0);
                  const double v =
                      std::exp(-0.5 * u * u) / (std::sqrt(2.0 * M_PI) * u * u);
                  const double ratio =
                      std::exp(-0.5 * (u + 2 * v) * (u + 2 * v)) /
                      (std::exp(-0.5 * u * u) / (4.0 * u * u));
                  std::snprintf(buf, sizeof buf, "alpha=%.6f ratio=%.2f",
                                finding(o, "alpha"), ratio);
                  note = buf;
                  return o.ok && ratio >= 23.0;
              });

    criterion("09 product spheres: k=2 thresholds, n=5 pass, k=3/k=4 cases",
              60.0, [&](std::string& note) {
                  bool ok = true;
                  for (const char* id :
                       {"product-k2n3", "product-k2n4", "product-k2n5",
                        "product-k3n6", "product-k3n7", "product-k4n6",
                        "product-k4n7", "product-k4n8"}) {
                      const auto o = run_suite(id, cfg);
                      if (!o.ok) {
                          note += std::string(id) + ": " + o.detail + "; ";
                          ok = false;
                      }
                  }
                  if (ok) note = "all documented cases reproduced";
                  return ok;
              });

    criterion("10 gaussian profile bound on [-6,6]; komatu/sampford ordering",
              10.0, [&](std::string& note) {
                  const auto a = run_suite("gauss-profile", cfg);
                  const auto b = run_suite("gauss-bounds", cfg);
                  note = a.detail;
                  return a.ok && b.ok;
              });

    criterion("11 monte carlo: S^9 coordinate bounds and KS fit (seed 7)",
              60.0, [&](std::string& note) {
                  McConfig mc;
                  mc.seed = 7;
                  mc.samples = 100000;
                  mc.dim = 10;
                  for (int i = 1; i <= 20; ++i) mc.t_grid.push_back(0.05 * i);
                  bool ok = true;
                  const auto med = empirical_deviation(
                      "coord", Center::median, Side::one_sided, mc);
                  for (const auto& row : med)
                      ok = ok && row.p_hat <= row.bound + 3.0 * row.std_err;
                  const auto one = empirical_deviation(
                      "coord", Center::mean, Side::one_sided, mc);
                  const auto two = empirical_deviation(
                      "coord", Center::mean, Side::two_sided, mc);
                  for (size_t i = 0; i < two.size(); ++i) {
                      ok = ok && one[i].p_hat <= one[i].bound + 3.0 * one[i].std_err;
                      ok = ok && two[i].p_hat <= two[i].bound + 3.0 * two[i].std_err;
                  }
                  const auto values = sphere_function_samples("coord", mc, 0.0);
                  const SphereDim dim(10);
                  const double ks = ks_distance(values, [dim](double th) {
                      return 1.0 - cap_tail(dim, th);
                  });
                  const double crit = 1.62762 / std::sqrt(double(mc.samples));
                  std::snprintf(buf, sizeof buf, "KS=%.5f (crit %.5f)", ks,
                                crit);
                  note = buf;
                  return ok && ks < crit;
              });

    criterion("12 wallis/kappa identities and the product-identity verdict",
              5.0, [&](std::string& note) {
                  const auto o = run_suite("wallis", cfg);
                  note = o.detail;
                  return o.ok;
              });

    std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
