// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "ostar/descriptors.hpp"
#include "ostar/detail/numeric.hpp"
#include "ostar/geometry.hpp"
#include "ostar/inequalities.hpp"
#include "ostar/integrate.hpp"
#include "ostar/madd.hpp"
#include "ostar/orlicz.hpp"
#include "ostar/scenario.hpp"

using namespace ostar;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int idx, const std::string& desc, bool ok, const std::string& note = "") {
    std::printf("%s  %2d  %s%s%s\n", ok ? "PASS" : "FAIL", idx, desc.c_str(),
                note.empty() ? "" : " -- ", note.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

std::vector<Direction> probe_dirs(int count) {
    std::vector<Direction> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i)
        out.push_back(Direction::angle_2d(2.0 * M_PI * i / count));
    return out;
}

double sup_gap(const StarBody& a, const StarBody& b,
               const std::vector<Direction>& dirs) {
    double g = 0.0;
    for (const Direction& u : dirs)
        g = std::max(g, std::abs(a.rho(u) - b.rho(u)));
    return g;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

// ---- criterion 1: quadrature sanity ----------------------------------------

void criterion_1() {
    const double v2 = volume(make_ball(2, 1.0), build_rule(2, 256));
    const double v3 = volume(make_ball(3, 1.0), build_rule(3, 64));
    const SphericalRule mc = build_rule(4, 100000, 7);
    const StarBody b4 = make_ball(4, 1.0);
    const double v4 = volume(b4, mc);
    const double se = volume_standard_error(b4, mc);
    const bool ok2 = std::abs(v2 - M_PI) <= 1e-12;
    const bool ok3 = std::abs(v3 - 4.0 * M_PI / 3.0) <= 1e-9;
    const bool ok4 = std::abs(v4 - M_PI * M_PI / 2.0) <= std::max(4.0 * se, 1e-12);
    report(1, "quadrature sanity: V(B2), V(B3), V(B4)", ok2 && ok3 && ok4,
           "errs " + fmt(std::abs(v2 - M_PI)) + ", " +
               fmt(std::abs(v3 - 4.0 * M_PI / 3.0)) + ", " +
               fmt(std::abs(v4 - M_PI * M_PI / 2.0)));
}

// ---- criterion 2: Orlicz -> L_p reduction -----------------------------------

void criterion_2() {
    const auto dirs = probe_dirs(256);
    double worst = 0.0;
    for (double p : {0.5, 1.0, 2.0, 5.0}) {
        const OrliczFunction phi =
            make_registry_function("lp:" + std::to_string(p), 2, 2);
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const StarBody k = make_random_smooth_star(2, 9000 + seed);
            const StarBody l = make_random_smooth_star(2, 9500 + seed);
            const StarBody s = orlicz_sum(phi, {k, l});
            const StarBody ref = pth_radial_combination(1.0, k, p, 1.0, l);
            worst = std::max(worst, sup_gap(s, ref, dirs));
        }
    }
    report(2, "Orlicz sum reduces to p-th radial combination (p in {0.5,1,2,5})",
           worst <= 1e-10, "sup gap " + fmt(worst));
}

// ---- criterion 3: structural property suite ---------------------------------

void criterion_3() {
    const auto dirs2 = probe_dirs(24);
    double worst_gl = 0.0, worst_hom = 0.0, worst_mono = 0.0, worst_id = 0.0,
           worst_sec = 0.0;

    for (std::uint64_t i = 0; i < 50; ++i) {
        const bool use_poly = (i % 2) == 1;

        // GL covariance, n = 2 and n = 3
        const int n = i < 25 ? 2 : 3;
        const OrliczFunction phi =
            make_registry_function(use_poly ? "poly:1,1" : "lp:2", 2, n);
        const StarBody k = make_random_smooth_star(n, 100 + i);
        const StarBody l = make_random_smooth_star(n, 200 + i);
        const LinearMap a = LinearMap::random(n, 300 + i);
        const StarBody lhs = linear_image(orlicz_sum(phi, {k, l}), a);
        const StarBody rhs = orlicz_sum(phi, {linear_image(k, a), linear_image(l, a)});
        if (n == 2) {
            worst_gl = std::max(worst_gl, sup_gap(lhs, rhs, dirs2));
        } else {
            const SphericalRule probe3 = build_rule(3, 4);
            for (const Direction& u : probe3.nodes())
                worst_gl = std::max(worst_gl, std::abs(lhs.rho(u) - rhs.rho(u)));
        }

        // homogeneity, monotonicity, identity on n = 2 bodies
        const OrliczFunction phi2 =
            make_registry_function(use_poly ? "poly:1,1" : "lp:2", 2, 2);
        const StarBody k2 = make_random_smooth_star(2, 400 + i);
        const StarBody l2 = make_random_smooth_star(2, 500 + i);
        std::mt19937_64 rng(600 + i);
        const double r = detail::uniform(rng, 0.3, 3.0);
        worst_hom = std::max(
            worst_hom,
            sup_gap(orlicz_sum(phi2, {scale_body(k2, r), scale_body(l2, r)}),
                    scale_body(orlicz_sum(phi2, {k2, l2}), r), dirs2));

        const StarBody grown = scale_body(k2, 1.0 + detail::uniform(rng, 0.01, 0.5));
        const StarBody s_small = orlicz_sum(phi2, {k2, l2});
        const StarBody s_big = orlicz_sum(phi2, {grown, l2});
        for (const Direction& u : dirs2)
            worst_mono = std::max(worst_mono, s_small.rho(u) - s_big.rho(u));

        const StarBody padded = orlicz_sum(phi2, {k2, make_ball(2, 0.0)});
        worst_id = std::max(worst_id, sup_gap(padded, k2, dirs2));

        // section covariance on n = 3 bodies
        const StarBody k3 = make_random_smooth_star(3, 700 + i);
        const StarBody l3 = make_random_smooth_star(3, 800 + i);
        const std::vector<int> axes = (i % 3 == 0)   ? std::vector<int>{0, 1}
                                      : (i % 3 == 1) ? std::vector<int>{0, 2}
                                                     : std::vector<int>{1, 2};
        const OrliczFunction phi3 =
            make_registry_function(use_poly ? "poly:1,1" : "lp:2", 2, 3);
        const StarBody sec_of_sum =
            restrict_to_coordinate_subspace(orlicz_sum(phi3, {k3, l3}), axes);
        const StarBody sum_of_sec =
            orlicz_sum(phi3, {restrict_to_coordinate_subspace(k3, axes),
                              restrict_to_coordinate_subspace(l3, axes)});
        worst_sec = std::max(worst_sec, sup_gap(sec_of_sum, sum_of_sec, dirs2));
    }

    const bool ok = worst_gl <= 1e-10 && worst_hom <= 1e-10 &&
                    worst_mono <= 1e-10 && worst_id <= 1e-10 && worst_sec <= 1e-10;
    report(3, "structural suite: GL covariance, homogeneity, monotonicity, identity, sections",
           ok,
           "gaps " + fmt(worst_gl) + ", " + fmt(worst_hom) + ", " + fmt(worst_mono) +
               ", " + fmt(worst_id) + ", " + fmt(worst_sec));
}

// ---- criterion 4: associativity dichotomy -----------------------------------

void criterion_4() {
    const SphericalRule probe = build_rule(2, 64);
    double lp_gap = 0.0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        std::mt19937_64 rng(1000 + seed);
        const StarBody a = make_ball(2, detail::uniform(rng, 0.4, 3.0));
        const StarBody b = make_ball(2, detail::uniform(rng, 0.4, 3.0));
        const StarBody c = make_ball(2, detail::uniform(rng, 0.4, 3.0));
        for (const char* desc : {"lp:1", "lp:2"})
            lp_gap = std::max(lp_gap,
                              check_associativity(make_registry_function(desc, 2, 2),
                                                  a, b, c, probe)
                                  .max_gap);
    }

    const OrliczFunction poly = make_registry_function("poly:1,1", 2, 2);
    double witness_gap = 0.0;
    for (std::uint64_t seed = 0; seed < 50 && witness_gap < 1e-2; ++seed) {
        std::mt19937_64 rng(2000 + seed);
        const StarBody a = make_ball(2, detail::uniform(rng, 0.4, 3.0));
        const StarBody b = make_ball(2, detail::uniform(rng, 0.4, 3.0));
        const StarBody c = make_ball(2, detail::uniform(rng, 0.4, 3.0));
        witness_gap =
            std::max(witness_gap, check_associativity(poly, a, b, c, probe).max_gap);
    }
    report(4, "associativity: lp exact, genuine Orlicz witness found",
           lp_gap <= 1e-10 && witness_gap >= 1e-2,
           "lp gap " + fmt(lp_gap) + ", witness gap " + fmt(witness_gap));
}

// ---- criteria 5 and 6: dual Orlicz- and log-Brunn-Minkowski ------------------

void criterion_5() {
    const SphericalRule rule = build_rule(2, 256);
    bool ok = true;
    std::string note;
    double min_slack = 1e300;

    const std::vector<std::string> concave{"lp:0.5", "lp:1", "poly:1,1"};
    const std::vector<std::string> convex{"lp:3", "psi-lp:-1"}; // p in {n+1, -1}

    for (int i = 0; i < 100; ++i) {
        const StarBody k = make_random_smooth_star(2, 3000 + i);
        const bool dilatate_pair = (i % 10) == 9;
        StarBody l;
        if (dilatate_pair) {
            std::mt19937_64 rng(3600 + i);
            l = scale_body(k, detail::uniform(rng, 0.5, 2.0));
        } else {
            l = make_random_smooth_star(2, 3300 + i);
        }
        const bool is_dil = dilatate_test(k, l, rule).is_dilatate;

        for (const auto& desc : concave) {
            const auto rep = check_dual_orlicz_bm(make_registry_function(desc, 2, 2),
                                                  {k, l}, rule);
            min_slack = std::min(min_slack, rep.slack);
            if (rep.direction != IneqDirection::GE || !rep.satisfied) ok = false;
            if (rep.equality != is_dil) {
                ok = false;
                note = desc + " equality/dilatate mismatch at pair " + std::to_string(i);
            }
        }
        for (const auto& desc : convex) {
            const auto rep = check_dual_orlicz_bm(make_registry_function(desc, 2, 2),
                                                  {k, l}, rule);
            min_slack = std::min(min_slack, rep.slack);
            if (rep.direction != IneqDirection::LE || !rep.satisfied) ok = false;
            if (rep.equality != is_dil) {
                ok = false;
                note = desc + " equality/dilatate mismatch at pair " + std::to_string(i);
            }
        }
    }
    if (min_slack < -1e-9) ok = false;
    report(5, "dual Orlicz-BM: concave/convex directions, equality = dilatates", ok,
           note.empty() ? "min slack " + fmt(min_slack) : note);
}

void criterion_6() {
    const SphericalRule rule = build_rule(2, 256);
    bool ok = true;
    double min_slack = 1e300, worst_eq = 0.0;
    for (int i = 0; i < 100; ++i) {
        const StarBody k = make_random_smooth_star(2, 4000 + i);
        const StarBody l = make_random_smooth_star(2, 4300 + i);
        const auto rep = check_dual_log_bm(k, l, 0.5, rule);
        min_slack = std::min(min_slack, rep.slack);
        if (!rep.satisfied) ok = false;

        std::mt19937_64 rng(4600 + i);
        const auto eq = check_dual_log_bm(k, scale_body(k, detail::uniform(rng, 0.5, 2.0)),
                                          detail::uniform(rng, 0.1, 0.9), rule);
        worst_eq = std::max(worst_eq, std::abs(eq.slack));
    }
    ok = ok && min_slack >= -1e-9 && worst_eq <= 1e-9;
    report(6, "dual log-BM on 100 pairs; dilatate equality", ok,
           "min slack " + fmt(min_slack) + ", max |eq slack| " + fmt(worst_eq));
}

// ---- criterion 7: first variation -------------------------------------------

void criterion_7() {
    const SphericalRule rule = build_rule(2, 512);
    bool ok = true;
    std::string note;

    // ball/ball symbolic case: slope of pi (a^p + eps b^p)^{2/p} at 0
    for (double p : {1.0, 2.0}) {
        const double a = 1.3, b = 0.8;
        const OrliczFunction f =
            make_registry_function("lp:" + std::to_string(p), 1, 2);
        const auto rep =
            first_variation_volume(f, f, make_ball(2, a), make_ball(2, b), rule);
        const double exact = (2.0 / p) * M_PI * std::pow(a, 2.0 - p) * std::pow(b, p);
        if (std::abs(rep.numeric_derivative - exact) / exact >= 1e-3 ||
            rep.relative_error >= 1e-3) {
            ok = false;
            note = "ball case p=" + fmt(p);
        }
    }

    double worst = 0.0;
    for (const char* desc : {"lp:2", "lp:0.5"}) {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const OrliczFunction f = make_registry_function(desc, 1, 2);
            const auto rep = first_variation_volume(
                f, f, make_random_smooth_star(2, 5000 + seed),
                make_random_smooth_star(2, 5300 + seed), rule);
            worst = std::max(worst, rep.relative_error);
        }
    }
    ok = ok && worst < 1e-3;
    report(7, "first variation of volume vs dual Orlicz mixed volume", ok,
           note.empty() ? "max rel err " + fmt(worst) : note);
}

// ---- criterion 8: dual Orlicz-Minkowski and L_p special case -----------------

void criterion_8() {
    bool ok = true;
    std::string note;
    double min_slack = 1e300;

    auto run = [&](int n, const SphericalRule& rule, const std::vector<double>& ps,
                   int pairs) {
        for (int i = 0; i < pairs; ++i) {
            const StarBody k = make_random_smooth_star(n, 6000 + i);
            const bool dilatate_pair = (i % 10) == 9;
            StarBody l;
            if (dilatate_pair) {
                std::mt19937_64 rng(6600 + i);
                l = scale_body(k, detail::uniform(rng, 0.5, 2.0));
            } else {
                l = make_random_smooth_star(n, 6300 + i);
            }
            const bool is_dil = dilatate_test(k, l, rule).is_dilatate;
            for (double p : ps) {
                const auto f =
                    make_mixed_integrand("power:" + std::to_string(p), n);
                const auto rep = check_dual_orlicz_minkowski(f, k, l, rule);
                min_slack = std::min(min_slack, rep.slack);
                if (!rep.satisfied) {
                    ok = false;
                    note = "violated at p=" + fmt(p) + " n=" + std::to_string(n);
                }
                const bool expect_ge = p < 0.0 || p > n; // reversed branch
                if ((rep.direction == IneqDirection::GE) != expect_ge) ok = false;
                const bool strict = p != 0.0 && std::abs(p - n) > 1e-12;
                if (strict && rep.equality != is_dil) {
                    ok = false;
                    note = "equality/dilatate mismatch p=" + fmt(p);
                }
            }
        }
    };

    run(2, build_rule(2, 256), {0.5, 1.0, 2.0, -1.0, 3.0}, 100);
    run(3, build_rule(3, 32), {0.5, 1.0, 2.0, 3.0, -1.0, 4.0}, 100);

    ok = ok && min_slack >= -1e-9;
    report(8, "dual Orlicz-Minkowski: p grid in [0,n], reversal at p in {-1, n+1}",
           ok, note.empty() ? "min slack " + fmt(min_slack) : note);
}

// ---- criterion 9: dual log-Minkowski and its polar form ----------------------

void criterion_9() {
    const SphericalRule rule = build_rule(2, 256);
    bool ok = true;
    double min_slack = 1e300, worst_eq = 0.0;

    for (int i = 0; i < 100; ++i) {
        const StarBody k = make_random_smooth_star(2, 7000 + i);
        const StarBody l = make_random_smooth_star(2, 7300 + i);
        const auto rep = check_dual_log_minkowski(k, l, rule);
        min_slack = std::min(min_slack, rep.slack);
        if (!rep.satisfied) ok = false;

        std::mt19937_64 rng(7600 + i);
        const auto eq = check_dual_log_minkowski(
            k, scale_body(k, detail::uniform(rng, 0.5, 2.0)), rule);
        worst_eq = std::max(worst_eq, std::abs(eq.slack));
    }

    for (int i = 0; i < 100; ++i) {
        std::mt19937_64 rng(7900 + i);
        std::vector<double> ax1{detail::uniform(rng, 0.5, 2.5),
                                detail::uniform(rng, 0.5, 2.5)};
        std::vector<double> ax2{detail::uniform(rng, 0.5, 2.5),
                                detail::uniform(rng, 0.5, 2.5)};
        const auto rep = check_polar_log(make_ellipsoid_support(ax1),
                                         make_ellipsoid_support(ax2), rule);
        min_slack = std::min(min_slack, rep.slack);
        if (!rep.satisfied) ok = false;

        const double c = detail::uniform(rng, 0.5, 2.0);
        const auto eq = check_polar_log(
            make_ellipsoid_support(ax1),
            make_ellipsoid_support(std::vector<double>{c * ax1[0], c * ax1[1]}),
            rule);
        worst_eq = std::max(worst_eq, std::abs(eq.slack));
    }

    ok = ok && min_slack >= -1e-9 && worst_eq <= 1e-9;
    report(9, "dual log-Minkowski and polar corollary on 100 pairs each", ok,
           "min slack " + fmt(min_slack) + ", max |eq slack| " + fmt(worst_eq));
}

// ---- criterion 10: radial M-addition ----------------------------------------

void criterion_10() {
    const auto dirs = probe_dirs(128);
    bool ok = true;
    std::string note;

    // lp-curve reproduces 2nd radial addition at resolution 1024
    const MSet curve = make_lp_curve_mset(2.0, 1024);
    double curve_gap = 0.0;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const StarBody k = make_random_smooth_star(2, 8000 + seed);
        const StarBody l = make_random_smooth_star(2, 8300 + seed);
        curve_gap = std::max(curve_gap,
                             sup_gap(radial_m_sum(curve, {k, l}),
                                     pth_radial_combination(1.0, k, 2.0, 1.0, l), dirs));
    }
    if (curve_gap > 1e-5) {
        ok = false;
        note = "lp-curve gap " + fmt(curve_gap);
    }

    // m_set_from_phi equivalence, shrinking with resolution
    const OrliczFunction cubic = make_registry_function("lp:3", 2, 2);
    const StarBody k = make_random_smooth_star(2, 8600);
    const StarBody l = make_random_smooth_star(2, 8601);
    const StarBody direct = orlicz_sum(cubic, {k, l});
    std::vector<double> gaps;
    for (int res : {1024, 2048, 4096})
        gaps.push_back(
            sup_gap(radial_m_sum(m_set_from_phi(cubic, res), {k, l}), direct, dirs));
    if (!(gaps[0] <= 1e-4 && gaps[1] <= gaps[0] && gaps[2] <= gaps[1])) {
        ok = false;
        note = "equivalence gaps " + fmt(gaps[0]) + " -> " + fmt(gaps[1]) + " -> " +
               fmt(gaps[2]);
    }

    // sqrt counterexample: witness with gap 2 at the unit pair
    const OrliczFunction root = make_registry_function("lp:0.5", 2, 2);
    const auto sub = check_sublinearity_counterexample(root);
    const std::vector<double> r11{1.0, 1.0}, r10{1.0, 0.0}, r01{0.0, 1.0};
    const double unit_gap =
        solve_level(root, r11) - solve_level(root, r10) - solve_level(root, r01);
    if (!sub.witness.has_value() || unit_gap < 1.999) {
        ok = false;
        note = "counterexample gap " + fmt(unit_gap);
    }

    report(10, "radial M-addition: lp-curve, Orlicz equivalence, sqrt counterexample",
           ok,
           note.empty() ? "gaps " + fmt(curve_gap) + "; " + fmt(gaps[0]) + " -> " +
                              fmt(gaps[1]) + " -> " + fmt(gaps[2]) + "; witness " +
                              fmt(unit_gap)
                        : note);
}

// ---- criterion 11: Orlicz intersection body ----------------------------------

void criterion_11() {
    const double p = 0.5;
    const StarBody disk = make_ball(2, 1.0);
    const SphericalRule rule = build_rule(2, 1 << 20);

    // quadrature value and rotational-symmetry spread over aligned probes
    double lo = 1e300, hi = 0.0;
    for (int i = 0; i < 16; ++i) {
        const auto res = intersection_body_radial_power(
            disk, p, Direction::angle_2d(2.0 * M_PI * i / 16.0), rule, 1e-7);
        lo = std::min(lo, res.value);
        hi = std::max(hi, res.value);
    }
    const double spread = (hi - lo) / hi;

    // seeded rejection-sampling Monte Carlo oracle for the disk integral
    const std::uint64_t mc_seed = 20240917;
    std::mt19937_64 rng(mc_seed);
    const std::size_t samples = 10000000;
    double acc = 0.0;
    std::size_t got = 0;
    while (got < samples) {
        const double x = detail::uniform(rng, -1.0, 1.0);
        const double y = detail::uniform(rng, -1.0, 1.0);
        if (x * x + y * y > 1.0) continue;
        const double d = std::abs(x);
        if (d < 1e-300) continue; // keep the estimator finite
        acc += 1.0 / std::sqrt(d);
        ++got;
    }
    const double integral_mc = M_PI * acc / static_cast<double>(samples);
    const double lambda_mc = integral_mc * integral_mc; // lambda = I^{1/p}, p = 1/2

    const double rel = std::abs(hi - lambda_mc) / lambda_mc;
    report(11, "Orlicz intersection body of the disk vs Monte Carlo oracle",
           rel <= 0.01 && spread <= 1e-6,
           "rel err " + fmt(rel) + ", symmetry spread " + fmt(spread) +
               " (mc seed " + std::to_string(mc_seed) + ")");
}

// ---- criterion 12: scenario reproducibility ----------------------------------

void criterion_12() {
    const char* scenarios = std::getenv("OSTAR_SCENARIOS");
    if (scenarios == nullptr) {
        report(12, "paper-suite scenario reproducibility", false,
               "OSTAR_SCENARIOS not set");
        return;
    }
    const fs::path src = fs::path(scenarios) / "paper_suite.json";
    auto run_copy = [&](const char* tag) {
        const fs::path dir = fs::temp_directory_path() / ("ostar_accept_" + std::string(tag));
        fs::remove_all(dir);
        fs::create_directories(dir);
        fs::copy_file(src, dir / "paper_suite.json");
        if (run_scenario((dir / "paper_suite.json").string()) != 0)
            throw std::runtime_error("paper suite run failed");
        return dir;
    };
    try {
        const fs::path d1 = run_copy("a");
        const fs::path d2 = run_copy("b");
        bool identical = true;
        std::string first_diff;
        int artifacts = 0;
        for (const auto& entry : fs::directory_iterator(d1 / "out")) {
            ++artifacts;
            std::ifstream a(entry.path(), std::ios::binary);
            std::ifstream b(d2 / "out" / entry.path().filename(), std::ios::binary);
            std::stringstream sa, sb;
            sa << a.rdbuf();
            sb << b.rdbuf();
            if (sa.str() != sb.str()) {
                identical = false;
                first_diff = entry.path().filename().string();
            }
        }
        report(12, "paper-suite scenario: byte-identical artifacts on rerun",
               identical && artifacts >= 15,
               identical ? std::to_string(artifacts) + " artifacts compared"
                         : "diff in " + first_diff);
    } catch (const std::exception& e) {
        report(12, "paper-suite scenario reproducibility", false, e.what());
    }
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all 12 acceptance criteria passed\n");
    return 0;
}
