// Acceptance criteria 1-8: one PASS/FAIL line each, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include "rgsslab/beam.hpp"
#include "rgsslab/burgers.hpp"
#include "rgsslab/errors.hpp"
#include "rgsslab/harness.hpp"
#include "rgsslab/nlo.hpp"
#include "rgsslab/ode_embedding.hpp"
#include "rgsslab/parallel.hpp"
#include "rgsslab/plasma.hpp"
#include "rgsslab/rgflow.hpp"
#include "rgsslab/rng.hpp"
#include "rgsslab/special.hpp"

using namespace rgsslab;
using std::numbers::pi;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string g(double v) { return format_g(v, 3); }

// One sub-requirement of a criterion.
struct Part {
    std::string what;
    bool ok;
};

int failures = 0;

void verdict(int id, const std::string& title, const std::vector<Part>& parts) {
    bool ok = true;
    std::string detail;
    for (const auto& p : parts) {
        ok = ok && p.ok;
        if (!detail.empty()) detail += "; ";
        detail += (p.ok ? "" : "[x] ") + p.what;
    }
    if (!ok) ++failures;
    std::printf("%s criterion %d (%s): %s\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
    std::fflush(stdout);
}

// Runs fn and turns an unexpected exception into a failed part.
template <class F>
std::vector<Part> guarded(F&& fn) {
    try {
        return fn();
    } catch (const std::exception& e) {
        return {{std::string("raised ") + e.what(), false}};
    }
}

std::vector<Part> group_law() {
    const auto t0 = Clock::now();
    IntegratorConfig cfg;
    const CounterRng rng(1);
    const std::vector<std::function<double(double)>> betas{
        [](double x) { return 2.0 * x; }, [](double x) { return x * x; }, [](double x) { return x * x + 0.3 * x * x * x; }};
    double worst = 0;
    for (std::size_t b = 0; b < betas.size(); ++b) {
        VectorField field;
        field.add("l", [](const Point&) { return -1.0; });
        field.add("g", [beta = betas[b]](const Point& p) { return beta(p.at("g")); });
        const auto r = map_index<double>(
            1000,
            [&](std::size_t i) {
                const double gg = rng.uniform(0.01, 1.0, b, 4 * i);
                const double span = std::min(0.2 / gg, 2.0);
                const double l1 = rng.uniform(-span, span, b, 4 * i + 1), l2 = rng.uniform(-span, span, b, 4 * i + 2);
                const Point p{{"l", rng.uniform(-1, 1, b, 4 * i + 3)}, {"g", gg}};
                const Point end = flow(field, p, l1 + l2, cfg);
                const double norm = std::max({1.0, std::abs(end.at("l")), std::abs(end.at("g"))});
                return compose_residual(field, p, l1, l2, cfg) / norm;
            },
            Exec::Parallel);
        for (double v : r) worst = std::max(worst, v);
    }
    const double secs = seconds_since(t0);
    return {{"max relative compose residual " + g(worst) + " <= 1e-8 over 3 x 1000 samples", worst <= 1e-8},
            {"runtime " + g(secs) + " s <= 5 s", secs <= 5}};
}

std::vector<Part> automodel() {
    IntegratorConfig cfg;
    double worst = 0;
    for (double k : {-1.5, 0.5, 2.0}) {
        const rgflow::BetaFunction1 b{[k](double x) { return k * x; }};
        for (int i = 0; i <= 40; ++i) {
            const double x = 0.1 * std::pow(100.0, i / 40.0);
            for (double g0 : {0.01, 0.2, 1.0})
                worst = std::max(worst, std::abs(rgflow::effective_coupling(b, x, g0, cfg) / (g0 * std::pow(x, k)) - 1));
        }
    }
    return {{"max relative |gbar - g x^k| " + g(worst) + " <= 1e-9 on x in [0.1, 10]", worst <= 1e-9}};
}

std::vector<Part> ode_model() {
    IntegratorConfig cfg;
    NumDiffConfig nd;
    const auto probes = ode::r1_probes(3, 200, 0.2);
    auto r1 = SolutionSampler::scalar("u", [cfg](const Point& q) {
        return ode::reconstruct_via_r1(q.at("t"), {q.at("tau"), q.at("x")}, q.at("a"), cfg);
    });
    double e_r1 = 0, e_fs = 0, e_imp = 0, e_r2 = 0;
    for (const auto& p : probes) {
        const double d = ode::direct_solve(p.rhs, {p.tau, p.x}, p.t, cfg);
        e_r1 = std::max(e_r1, std::abs(ode::reconstruct_via_r1(p.t, {p.tau, p.x}, p.rhs.a, cfg) / d - 1));
        e_imp = std::max(e_imp, std::abs(ode::reconstruct_implicit(p.rhs, {p.tau, p.x}, p.t) / d - 1));
        const Point pt{{"t", p.t}, {"tau", p.tau}, {"x", p.x}, {"a", p.rhs.a}, {"b", 0.0}, {"c", 0.0}};
        e_fs = std::max(e_fs, std::abs(ode::fs_residual_r1(r1, pt, nd)));
    }
    // Cubic and quartic terms exercise the implicit bracket beyond the R1 family.
    for (const auto& p : ode::implicit_probes(3, 200)) {
        const double d = ode::direct_solve(p.rhs, {p.tau, p.x}, p.t, cfg);
        e_imp = std::max(e_imp, std::abs(ode::reconstruct_implicit(p.rhs, {p.tau, p.x}, p.t) / d - 1));
    }
    for (double b : {0.1, 0.25, 0.4, 0.5})
        for (auto [x, tau, t] : {std::tuple{0.5, 0.0, 0.8}, {1.0, 0.2, 0.5}, {-0.7, 0.0, 1.0}, {0.3, 1.0, -1.0}})
            e_r2 = std::max(e_r2, std::abs(ode::reconstruct_via_r2(t, {tau, x}, b, cfg) -
                                           ode::direct_solve({1, b, 0}, {tau, x}, t, cfg)));
    return {{"R1 vs direct " + g(e_r1) + " <= 1e-7 rel (200 probes, margin 0.2)", e_r1 <= 1e-7},
            {"implicit vs direct " + g(e_imp) + " <= 1e-7 rel", e_imp <= 1e-7},
            {"|R1 FS residual| " + g(e_fs) + " <= 1e-6", e_fs <= 1e-6},
            {"R2 continuation to b = 0.5 " + g(e_r2) + " <= 1e-6", e_r2 <= 1e-6}};
}

std::vector<Part> burgers_model() {
    using namespace burgers;
    const auto t0 = Clock::now();
    QuadratureConfig q;
    NumDiffConfig nd;
    double e_fd = 0;
    for (double a : {0.5, 1.0})
        for (double nu : {0.25, 0.5}) {
            const BurgersProblem prob{a, nu, gaussian_profile(1.0, 1.0)};
            const double dx = 0.02;
            const auto fd = fd_oracle(prob, -12, 12, 1.0, dx, 0.4 * dx * dx / (2 * nu));
            double e = 0, scale = 0;
            for (double t : {0.1, 0.4, 0.7, 1.0})
                for (double x = -3; x <= 3 + 1e-9; x += 0.3) {
                    const double u = exact_solution(t, x, prob, q);
                    e = std::max(e, std::abs(fd.value(t, x) - u));
                    scale = std::max(scale, std::abs(u));
                }
            e_fd = std::max(e_fd, e / scale);
        }
    // Refinement study at a = 1, nu = 0.5, t = 0.5 on nodes shared by every grid.
    const BurgersProblem ref{1.0, 0.5, gaussian_profile(1.0, 1.0)};
    std::vector<double> errs;
    for (double dx : {0.08, 0.04, 0.02}) {
        const auto fd = fd_oracle(ref, -12, 12, 0.5, dx, 0.4 * dx * dx / (2 * ref.nu));
        double e = 0;
        for (double x = -2; x <= 2 + 1e-9; x += 0.08) e = std::max(e, std::abs(fd.value(0.5, x) - exact_solution(0.5, x, ref, q)));
        errs.push_back(e);
    }
    const double o1 = std::log2(errs[0] / errs[1]), o2 = std::log2(errs[1] / errs[2]);
    double e_fs = 0;
    for (double a : {0.5, 1.0}) {
        const BurgersProblem prob{a, 0.5, gaussian_profile(1.0, 1.0)};
        const auto sol = exact_sampler(prob, q);
        for (double t : {0.1, 0.3, 0.5, 0.7, 1.0})
            for (double x : {-2.0, -1.0, 0.0, 0.7, 1.5}) {
                const Point p{{"t", t}, {"x", x}, {"a", a}, {"nu", 0.5}};
                e_fs = std::max({e_fs, std::abs(fs_residual_r5(sol, p, prob, q, nd)), std::abs(fs_residual_r6(sol, p, prob, q, nd))});
            }
    }
    const BurgersProblem c{1.0, 0.5, constant_profile(0.6)};
    double e_c = 0;
    for (double t : {0.0, 0.1, 0.5, 1.0})
        for (double x : {-2.0, 0.0, 3.0}) e_c = std::max(e_c, std::abs(exact_solution(t, x, c, q) - 0.6));
    const double secs = seconds_since(t0);
    return {{"exact vs FD " + g(e_fd) + " <= 5e-3 rel", e_fd <= 5e-3},
            {"FD orders " + g(o1) + ", " + g(o2) + " within 0.2 of 2", std::abs(o1 - 2) <= 0.2 && std::abs(o2 - 2) <= 0.2},
            {"FS residuals " + g(e_fs) + " <= 1e-5 on 50 probes", e_fs <= 1e-5},
            {"constant profile " + g(e_c) + " <= 1e-10", e_c <= 1e-10},
            {"runtime " + g(secs) + " s <= 60 s", secs <= 60}};
}

std::vector<Part> nlo_flat() {
    using namespace nlo;
    double worst = 0, control = 1;
    for (double w : {0.0, 0.1, 0.2, 0.3, 0.4, 0.5})
        for (double n : {0.2, 0.3, 0.4, 0.5, 0.6, 0.7}) {
            worst = std::max(worst, lb_coordinates_r7(hodograph_point(sech2_beam(), 0.1, w, n), 0.1).relative());
            control = std::min(control, lb_coordinates_r7(hodograph_point(gaussian_beam(), 0.1, w, n), 0.1).relative());
        }
    std::vector<WNPoint> probes;
    for (double w : {0.1, 0.2, 0.3})
        for (double n : {0.2, 0.4, 0.6}) probes.push_back({w, n});
    const std::vector<double> alphas{0.1, 0.05, 0.025};
    const double sa = order_check(Approx::GaussA, gaussian_beam(), alphas, probes).slope;
    const double sb = order_check(Approx::GaussB, gaussian_beam(), alphas, probes).slope;
    bool floor = false;
    try {
        order_check(Approx::SolitonA, sech2_beam(), alphas, probes);
    } catch (const Error& e) {
        floor = e.kind() == ErrorKind::ResidualBelowNoiseFloor;
    }
    return {{"R7 sech2 " + g(worst) + " <= 1e-4 rel", worst <= 1e-4},
            {"Gaussian control " + g(control) + " >= 1e-2", control >= 1e-2},
            {"gauss_a slope " + g(sa) + " >= 1.7", sa >= 1.7},
            {"gauss_b slope " + g(sb) + " >= 1.7", sb >= 1.7},
            {std::string("soliton_a residual at the noise floor for every alpha: ") + (floor ? "yes" : "no"), floor}};
}

std::vector<Part> nlo_cyl() {
    using namespace nlo;
    BeamBoundary b{gaussian_beam()};
    b.alpha = 0.05;
    b.T = 10;
    b.nu_geom = 2;
    double e = 0;
    for (double t : {0.2, 0.5, 0.92})
        for (double x : {0.25, 0.5, 1.0, 1.5}) {
            const auto s = r9_surface(b, t, x), d = direct_nlo_state(b, t, x);
            e = std::max({e, std::abs(s.v - d.v), std::abs(s.n - d.n)});
        }
    double coef = 0;
    const CounterRng rng(5);
    for (std::uint64_t i = 0; i < 100; ++i) {
        BeamBoundary r = b;
        r.alpha = rng.uniform(0, 0.2, 0, i);
        r.beta = rng.uniform(0, 0.05, 1, i);
        r.T = rng.uniform(2, 20, 2, i);
        const double x = rng.uniform(0.05, 2.5, 3, i);
        const Point p{{"t", 0.0}, {"x", x}, {"v", r.V(x)}, {"n", r.profile(x)}};
        coef = std::max(coef, std::abs(r9_field(r).coefficient("t", p) - 1));
    }
    // Diffraction substitute: the FS residual shrinks under step refinement.
    BeamBoundary d = b;
    d.beta = 0.01;
    const auto field = r9_field(d);
    const auto sol = r9_surface_sampler(d);
    std::vector<double> r;
    for (double h : {2e-2, 1e-2, 5e-3}) {
        NumDiffConfig nd;
        nd.scheme_order = 2;
        nd.base_step = h;
        const auto k = canonical_residual(field, sol, Point{{"t", 0.5}, {"x", 0.9}}, nd);
        r.push_back(std::max(std::abs(k[0]), std::abs(k[1])));
    }
    const bool conv = r[0] >= 3 * r[1] && r[1] >= 3 * r[2];
    double axis = 0;
    for (double chi : {1e-3 * (1 - 1e-9), -1e-3 * (1 - 1e-9)}) {
        const auto s = source_terms(d, chi), q = source_terms_direct(d, chi);
        axis = std::max({axis, std::abs(s.S - q.S), std::abs(s.S_chi - q.S_chi)});
    }
    return {{"R9 surface vs direct (alpha 0.05, T 10) " + g(e) + " <= 1e-5", e <= 1e-5},
            {"d_t coefficient at t = 0 off by " + g(coef) + " (must be 1)", coef <= 1e-12},
            {"beta != 0 FS residual " + g(r[0]) + " -> " + g(r[1]) + " -> " + g(r[2]) + " under step halving", conv},
            {"chi -> 0 series vs quotient " + g(axis) + " <= 1e-12", axis <= 1e-12}};
}

std::vector<Part> plasma_model() {
    using namespace plasma;
    double pde = 0;
    int folds = 0, probes = 0;
    for (double a : {0.1, 0.3, 0.5})
        for (int i = 0; i <= 20; ++i)
            for (int j = 0; j <= 24; ++j) {
                ++probes;
                try {
                    const auto [r1, r2] = pde_residual(PlasmaConfig{Regime::Hot, a}, -2 + 0.2 * i, pi / 12 * j);
                    pde = std::max({pde, std::abs(r1), std::abs(r2)});
                } catch (const Error& e) {
                    if (e.kind() != ErrorKind::FoldEncountered) throw;
                    ++folds;
                }
            }
    NumDiffConfig nd;
    double fs = 0;
    for (auto reg : {Regime::Cold, Regime::Hot})
        for (double a : {0.2, 0.5}) {
            const auto sol = parametric_sampler(PlasmaConfig{reg, a});
            for (double x : {-1.5, -0.3, 0.4, 1.2})
                for (double t : {0.2, 1.5, 3.0, 4.4}) {
                    try {
                        const auto [s1, s2] = fs_residual_r8(sol, Point{{"x", x}, {"t", t}, {"a", a}}, nd);
                        fs = std::max({fs, std::abs(s1), std::abs(s2)});
                    } catch (const Error& e) {
                        if (e.kind() != ErrorKind::FoldEncountered) throw;
                    }
                }
        }
    double qh = 0, series = 0;
    for (int i = 0; i <= 80; ++i) {
        const double m = -5 + 0.125 * i;
        const auto q = q_hot(m);
        qh = std::max({qh, std::abs(q.q1 - pi * special::airy_ai_contour(m)), std::abs(q.q2 - pi * special::scorer_gi_contour(m))});
        series = std::max({series, std::abs(special::airy_ai(m) - special::airy_ai_maclaurin(m)),
                           std::abs(special::scorer_gi(m) - special::scorer_gi_maclaurin(m))});
    }
    return {{"hot pde residual " + g(pde) + " <= 1e-8 (" + std::to_string(probes - folds) + " of " +
                 std::to_string(probes) + " probes off the fold)",
             pde <= 1e-8},
            {"R8 FS residual " + g(fs) + " <= 1e-6, both regimes", fs <= 1e-6},
            {"q_hot vs contour " + g(qh) + " <= 1e-8", qh <= 1e-8},
            {"Ai, Gi vs series " + g(series) + " <= 1e-9", series <= 1e-9}};
}

std::vector<Part> full_suite() {
    const auto t0 = Clock::now();
    std::vector<harness::ReportRow> first, second;
    for (const auto& s : harness::builtin_suite("all")) {
        auto r = harness::run_scenario(s);
        first.insert(first.end(), r.begin(), r.end());
    }
    const double secs = seconds_since(t0);
    for (const auto& s : harness::builtin_suite("all")) {
        auto r = harness::run_scenario(s);
        second.insert(second.end(), r.begin(), r.end());
    }
    std::ostringstream a, b;
    harness::write_csv(a, first, false);
    harness::write_csv(b, second, false);
    std::size_t failed = 0;
    std::string names;
    for (const auto& r : first)
        if (!r.pass) {
            ++failed;
            names += (names.empty() ? "" : ", ") + r.check_id;
        }
    return {{"verify all took " + g(secs) + " s <= 600 s", secs <= 600},
            {"two runs byte-identical (ms column excluded)", a.str() == b.str()},
            {"suite failures reported by criteria 1-7: " + std::to_string(failed) + (names.empty() ? "" : " (" + names + ")"),
             true}};
}

}  // namespace

int main() {
    apply_thread_env();
    verdict(1, "group law", guarded(group_law));
    verdict(2, "automodel limit", guarded(automodel));
    verdict(3, "ODE model", guarded(ode_model));
    verdict(4, "Burgers", guarded(burgers_model));
    verdict(5, "NLO flat", guarded(nlo_flat));
    verdict(6, "NLO cylindrical", guarded(nlo_cyl));
    verdict(7, "plasma", guarded(plasma_model));
    verdict(8, "full suite", guarded(full_suite));
    return failures == 0 ? 0 : 1;
}
