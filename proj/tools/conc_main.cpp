// conc: bound evaluation, profile generation, certification suites,
// product-sphere scans, and Monte Carlo checks for spherical and Gaussian
// concentration inequalities.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "conc/cap_geometry.hpp"
#include "conc/extremal_profile.hpp"
#include "conc/monte_carlo.hpp"
#include "conc/product_spheres.hpp"
#include "conc/special.hpp"
#include "conc/suites.hpp"
#include "conc/verifier.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr double kHalfPi = 1.570796326794896619231321691639751442;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct Output {
    bool json = false;
    std::string command_line;
    std::optional<std::uint64_t> seed;
    std::string out_file;

    std::string meta_csv() const {
        std::string s = "# conc " + std::string(kVersion) + "\n# command: " +
                        command_line + "\n";
        if (seed) s += "# seed: " + std::to_string(*seed) + "\n";
        return s;
    }
    nlohmann::json meta_json() const {
        nlohmann::json m;
        m["tool"] = std::string("conc ") + kVersion;
        m["command"] = command_line;
        if (seed) m["seed"] = *seed;
        return m;
    }
    void emit(const std::string& payload) const {
        if (out_file.empty()) {
            std::cout << payload;
            return;
        }
        std::ofstream f(out_file, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open " + out_file);
        f << payload;
        std::cerr << "wrote " << out_file << "\n";
    }
};

std::string csv_rows(const Output& out, const std::string& header,
                     const std::vector<std::vector<double>>& rows) {
    std::string s = out.meta_csv() + header + "\n";
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) s += ',';
            s += fmt(row[i]);
        }
        s += '\n';
    }
    return s;
}

nlohmann::json report_json(const conc::ScanReport& r) {
    return nlohmann::json::parse(conc::to_json(r));
}

nlohmann::json outcome_json(const conc::SuiteOutcome& o) {
    nlohmann::json j;
    j["id"] = o.id;
    j["ok"] = o.ok;
    j["detail"] = o.detail;
    auto reports = nlohmann::json::array();
    for (const auto& r : o.reports) reports.push_back(report_json(r));
    j["reports"] = reports;
    nlohmann::json f;
    for (const auto& [k, v] : o.findings) f[k] = v;
    j["findings"] = f;
    return j;
}

int cmd_cap(const Output& out, int n, std::optional<double> r,
            std::optional<double> a) {
    const conc::SphereDim dim(n);
    std::vector<std::pair<std::string, double>> rows;
    double x;  // distance from the hemisphere boundary
    if (r) {
        x = kHalfPi - *r;
        rows.emplace_back("cap_volume", conc::cap_volume(dim, *r));
    } else {
        x = *a;
        rows.emplace_back("cap_tail", conc::cap_tail(dim, *a));
    }
    const double radius = kHalfPi - x;
    if (radius >= 0.0 && radius <= kHalfPi) {
        rows.emplace_back("bound_halfcos", conc::cap_bound_halfcos(dim, radius));
        if (radius < kHalfPi)
            rows.emplace_back("bound_kappa", conc::cap_bound_kappa(dim, radius));
    }
    if (x >= 0.0) {
        rows.emplace_back("bound_hemisphere", 0.5 * std::exp(-0.5 * n * x * x));
        if (n >= 3 && x >= conc::twofifths_min_x(dim))
            rows.emplace_back("bound_twofifths",
                              conc::cap_bound_twofifths(dim, x));
    }
    if (out.json) {
        nlohmann::json j;
        j["meta"] = out.meta_json();
        for (const auto& [k, v] : rows) j[k] = v;
        out.emit(j.dump() + "\n");
    } else {
        std::string s = out.meta_csv() + "quantity,value\n";
        for (const auto& [k, v] : rows) s += k + "," + fmt(v) + "\n";
        out.emit(s);
    }
    return 0;
}

int cmd_qn(const Output& out, int n, double xi, std::optional<double> x,
           int grid) {
    const conc::SphereDim dim(n);
    std::vector<std::vector<double>> rows;
    if (x) {
        rows.push_back({*x, conc::q_n_xi(dim, *x, xi)});
    } else {
        for (int i = 0; i < grid; ++i) {
            const double xi_pt = kHalfPi * i / (grid - 1);
            rows.push_back({xi_pt, conc::q_n_xi(dim, xi_pt, xi)});
        }
    }
    if (out.json) {
        nlohmann::json j;
        j["meta"] = out.meta_json();
        auto arr = nlohmann::json::array();
        for (const auto& row : rows) arr.push_back({row[0], row[1]});
        j["rows"] = arr;
        out.emit(j.dump() + "\n");
    } else {
        out.emit(csv_rows(out, xi == 0.0 ? "x,qn" : "x,qnxi", rows));
    }
    return 0;
}

int cmd_profile(const Output& out, int n, bool gaussian, int points) {
    std::vector<conc::TailProfilePoint> prof;
    if (gaussian) {
        std::vector<double> grid;
        for (int i = 0; i < points; ++i)
            grid.push_back(-6.0 + 12.0 * i / (points - 1));
        prof = conc::gaussian_profile(grid);
    } else {
        prof = conc::profile(conc::SphereDim(n),
                             conc::default_a_grid(points));
    }
    std::vector<std::vector<double>> rows;
    for (const auto& p : prof)
        rows.push_back({p.a, p.t, p.mean_phi, p.one_sided, p.two_sided,
                        p.exp_bound});
    if (out.json) {
        nlohmann::json j;
        j["meta"] = out.meta_json();
        auto arr = nlohmann::json::array();
        for (const auto& row : rows)
            arr.push_back({{"a", row[0]},
                           {"t", row[1]},
                           {"mean_phi", row[2]},
                           {"one_sided", row[3]},
                           {"two_sided", row[4]},
                           {"exp_bound", row[5]}});
        j["rows"] = arr;
        out.emit(j.dump() + "\n");
        return 0;
    }
    out.emit(csv_rows(out, "a,t,mean_phi,one_sided,two_sided,exp_bound", rows));
    return 0;
}

int cmd_fig(const Output& out, int which, int n, int grid) {
    std::vector<std::vector<double>> rows;
    std::string header;
    switch (which) {
        case 1: {
            header = "x,q2,q3,q4";
            const conc::SphereDim n2(2), n3(3), n4(4);
            for (int i = 0; i < grid; ++i) {
                const double x = kHalfPi * i / (grid - 1);
                rows.push_back({x, conc::q_n(n2, x), conc::q_n(n3, x),
                                conc::q_n(n4, x)});
            }
            break;
        }
        case 2: {
            header = "a,F,G";
            const auto prof = conc::profile(conc::SphereDim(n),
                                            conc::default_a_grid(grid / 4));
            for (const auto& p : prof)
                rows.push_back({p.a, p.two_sided, p.exp_bound});
            break;
        }
        case 3: {
            header = "u,log_lhs,log_rhs";
            for (int i = 0; i < grid; ++i) {
                const double u = 3.0 * i / (grid - 1);
                const double v =
                    std::sqrt(M_PI / 8.0) * std::exp(-0.5 * u * u);
                const double lhs = (conc::gauss_upper_tail(u) -
                                    conc::gauss_upper_tail(u + 2.0 * v)) /
                                   std::sqrt(2.0 * M_PI);
                const double rhs = -std::expm1(-0.5 * v * v);
                rows.push_back({u, std::log(lhs), std::log(rhs)});
            }
            break;
        }
        case 4: {
            header = "a,tail,bound";
            for (int i = 0; i < grid; ++i) {
                const double a = -6.0 + 12.0 * i / (grid - 1);
                rows.push_back({a, conc::gauss_two_sided_tail(a),
                                std::exp(-0.5 * conc::gauss_t_of_a(a) *
                                         conc::gauss_t_of_a(a))});
            }
            break;
        }
        default:
            std::cerr << "unknown figure id " << which << "\n";
            return 2;
    }
    if (out.json) {
        nlohmann::json j;
        j["meta"] = out.meta_json();
        j["header"] = header;
        auto arr = nlohmann::json::array();
        for (const auto& row : rows) arr.push_back(row);
        j["rows"] = arr;
        out.emit(j.dump() + "\n");
        return 0;
    }
    out.emit(csv_rows(out, header, rows));
    return 0;
}

int cmd_verify(const Output& out, std::vector<std::string> ids,
               const conc::SuiteConfig& cfg) {
    if (ids.empty() || (ids.size() == 1 && ids[0] == "all"))
        ids = conc::suite_ids();
    bool all_ok = true;
    nlohmann::json jout = nlohmann::json::array();
    std::string text;
    for (const auto& id : ids) {
        const conc::SuiteOutcome o = conc::run_suite(id, cfg);
        all_ok = all_ok && o.ok;
        if (out.json) {
            jout.push_back(outcome_json(o));
        } else {
            text += std::string(o.ok ? "OK      " : "MISMATCH") + " " + o.id +
                    ": " + o.detail + "\n";
            for (const auto& r : o.reports) text += "  " + conc::to_text(r) + "\n";
            for (const auto& [k, v] : o.findings)
                text += "  " + k + " = " + fmt(v) + "\n";
        }
        std::cerr << (o.ok ? "[ok] " : "[MISMATCH] ") << o.id << "\n";
    }
    if (out.json) {
        nlohmann::json root;
        root["meta"] = out.meta_json();
        root["suites"] = jout;
        root["all_ok"] = all_ok;
        out.emit(root.dump() + "\n");
    } else {
        out.emit(out.meta_csv() + text);
    }
    return all_ok ? 0 : 1;
}

int cmd_product(const Output& out, int k, int n, const conc::SuiteConfig& cfg) {
    const conc::SuiteOutcome o = conc::run_product_case(k, n, cfg);
    if (out.json) {
        nlohmann::json root;
        root["meta"] = out.meta_json();
        root["suite"] = outcome_json(o);
        out.emit(root.dump() + "\n");
    } else {
        std::string text = out.meta_csv();
        text += std::string(o.ok ? "OK      " : "MISMATCH") + " " + o.id +
                ": " + o.detail + "\n";
        for (const auto& r : o.reports) text += "  " + conc::to_text(r) + "\n";
        for (const auto& [kk, v] : o.findings)
            text += "  " + kk + " = " + fmt(v) + "\n";
        out.emit(text);
    }
    return o.ok ? 0 : 1;
}

std::vector<double> build_t_grid(double t_max, double t_step) {
    std::vector<double> grid;
    for (int i = 1; i * t_step <= t_max + 1e-12; ++i)
        grid.push_back(i * t_step);
    return grid;
}

int cmd_mc(const Output& out, const std::string& fn, bool gaussian, int n,
           long long samples, std::uint64_t seed, const std::string& center,
           bool two_sided, double a, double t_max, double t_step) {
    conc::McConfig cfg;
    cfg.seed = seed;
    cfg.samples = samples;
    cfg.dim = n;
    cfg.t_grid = build_t_grid(t_max, t_step);
    const conc::Center c =
        center == "median" ? conc::Center::median : conc::Center::mean;
    const conc::Side s =
        two_sided ? conc::Side::two_sided : conc::Side::one_sided;
    const auto tails =
        gaussian ? conc::empirical_gaussian(fn, c, s, cfg)
                 : conc::empirical_deviation(fn, c, s, cfg, a);
    if (out.json) {
        nlohmann::json j;
        j["meta"] = out.meta_json();
        auto arr = nlohmann::json::array();
        for (const auto& row : tails)
            arr.push_back({{"t", row.t},
                           {"p_hat", row.p_hat},
                           {"std_err", row.std_err},
                           {"bound", row.bound}});
        j["rows"] = arr;
        out.emit(j.dump() + "\n");
        return 0;
    }
    out.emit(out.meta_csv() + conc::tails_to_csv(tails));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"concentration-of-measure bounds, certification suites, and "
                 "Monte Carlo checks on S^{n-1} and Gauss space"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("conc ") + kVersion);

    Output out;
    for (int i = 0; i < argc; ++i) {
        if (i) out.command_line += ' ';
        out.command_line += argv[i];
    }

    int grid = 2000;
    double tol = 1e-9;
    std::uint64_t seed = 0;
    bool seed_given = false;
    app.add_flag("--json", out.json, "structured JSON instead of CSV");
    app.add_option("--grid", grid, "scan grid size")->capture_default_str();
    app.add_option("--tol", tol, "violation tolerance")->capture_default_str();
    auto* seed_opt = app.add_option("--seed", seed, "RNG seed");
    app.add_option("--out", out.out_file, "write output to FILE");

    // cap
    auto* cap = app.add_subcommand("cap", "cap volume / tail with bounds")->fallthrough();
    int cap_n = 3;
    double cap_r = 0.0, cap_a = 0.0;
    cap->add_option("--n", cap_n, "ambient dimension")->required();
    auto* ropt = cap->add_option("--r", cap_r, "geodesic radius in [0, pi/2]");
    auto* aopt = cap->add_option("--a", cap_a, "cap level in [-pi/2, pi/2]");
    ropt->excludes(aopt);

    // qn
    auto* qn = app.add_subcommand("qn", "inequality kernel q_n / q_{n,xi}")->fallthrough();
    int qn_n = 3;
    double qn_xi = 0.0, qn_x = 0.0;
    qn->add_option("--n", qn_n)->required();
    qn->add_option("--xi", qn_xi, "exponent excess (>= 0)");
    auto* xopt = qn->add_option("--x", qn_x, "evaluate at a single point");

    // profile
    auto* prof = app.add_subcommand("profile", "extremal tail profile")->fallthrough();
    int prof_n = 3, prof_points = 200;
    bool prof_gauss = false;
    prof->add_option("--n", prof_n);
    prof->add_flag("--gauss", prof_gauss, "Gaussian analogue");
    prof->add_option("--points", prof_points, "grid points");

    // fig
    auto* fig = app.add_subcommand("fig", "figure data (1..4)")->fallthrough();
    int fig_which = 1, fig_n = 3;
    fig->add_option("which", fig_which, "figure id")->required();
    fig->add_option("--n", fig_n, "dimension for figure 2");

    // verify
    auto* verify = app.add_subcommand("verify", "run certification suites")->fallthrough();
    std::vector<std::string> suite_list;
    verify->add_option("suites", suite_list, "suite ids or `all`");

    // product
    auto* product = app.add_subcommand("product", "product-sphere scan")->fallthrough();
    int pk = 2, pn = 3;
    product->add_option("--k", pk, "number of factors")->required();
    product->add_option("--n", pn, "factor dimension")->required();

    // mc / gauss
    auto* mc = app.add_subcommand("mc", "Monte Carlo deviation tails")->fallthrough();
    std::string mc_f = "coord", mc_center = "median";
    int mc_n = 3;
    long long mc_samples = 100000;
    bool mc_two = false, mc_gauss = false;
    double mc_a = 0.5, mc_tmax = 1.0, mc_tstep = 0.05;
    mc->add_option("--f", mc_f, "test function id")->required();
    mc->add_option("--n", mc_n, "dimension");
    mc->add_option("--samples", mc_samples);
    mc->add_option("--center", mc_center)
        ->check(CLI::IsMember({"median", "mean"}));
    mc->add_flag("--two-sided", mc_two);
    mc->add_flag("--gaussian", mc_gauss, "sample gamma_n instead of the sphere");
    mc->add_option("--a", mc_a, "truncation/cap level for distcap and phi");
    mc->add_option("--t-max", mc_tmax);
    mc->add_option("--t-step", mc_tstep);

    auto* gs = app.add_subcommand("gauss", "Gaussian Monte Carlo tails")->fallthrough();
    std::string gs_f = "coord", gs_center = "mean";
    int gs_n = 1;
    long long gs_samples = 100000;
    bool gs_two = true;
    double gs_tmax = 1.0, gs_tstep = 0.05;
    gs->add_option("--f", gs_f)->required();
    gs->add_option("--n", gs_n);
    gs->add_option("--samples", gs_samples);
    gs->add_option("--center", gs_center)
        ->check(CLI::IsMember({"median", "mean"}));
    gs->add_flag("--two-sided,!--one-sided", gs_two);
    gs->add_option("--t-max", gs_tmax);
    gs->add_option("--t-step", gs_tstep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (seed_opt->count() > 0) {
        seed_given = true;
        out.seed = seed;
    }
    conc::SuiteConfig cfg;
    cfg.grid_size = grid;
    cfg.violation_tol = tol;

    try {
        if (cap->parsed()) {
            if (ropt->count() == 0 && aopt->count() == 0) {
                std::cerr << "cap: need --r or --a\n";
                return 2;
            }
            return cmd_cap(out, cap_n,
                           ropt->count() ? std::optional<double>(cap_r)
                                         : std::nullopt,
                           aopt->count() ? std::optional<double>(cap_a)
                                         : std::nullopt);
        }
        if (qn->parsed())
            return cmd_qn(out, qn_n, qn_xi,
                          xopt->count() ? std::optional<double>(qn_x)
                                        : std::nullopt,
                          grid);
        if (prof->parsed())
            return cmd_profile(out, prof_n, prof_gauss, prof_points);
        if (fig->parsed()) return cmd_fig(out, fig_which, fig_n, grid);
        if (verify->parsed()) return cmd_verify(out, suite_list, cfg);
        if (product->parsed()) return cmd_product(out, pk, pn, cfg);
        if (mc->parsed()) {
            if (!seed_given) out.seed = 0;
            return cmd_mc(out, mc_f, mc_gauss, mc_gauss && mc->count("--n") == 0 ? 1 : mc_n,
                          mc_samples, seed, mc_center, mc_two, mc_a, mc_tmax,
                          mc_tstep);
        }
        if (gs->parsed()) {
            if (!seed_given) out.seed = 0;
            return cmd_mc(out, gs_f, true, gs_n, gs_samples, seed, gs_center,
                          gs_two, 0.0, gs_tmax, gs_tstep);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
