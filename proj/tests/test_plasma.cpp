#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rgsslab/errors.hpp"
#include "rgsslab/plasma.hpp"
#include "rgsslab/special.hpp"

using namespace rgsslab;
using namespace rgsslab::plasma;
using std::numbers::pi;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("special function examples") {
    CHECK(special::airy_ai(0) == doctest::Approx(0.3550280539).epsilon(1e-10));
    CHECK(special::airy_ai(0) == doctest::Approx(1 / (std::pow(3.0, 2.0 / 3.0) * std::tgamma(2.0 / 3.0))).epsilon(1e-15));
    CHECK(special::scorer_gi(0) == doctest::Approx(0.204975).epsilon(1e-6));
    double prev = special::airy_ai(0);
    for (double m = 0.25; m <= 10; m += 0.25) {
        const double v = special::airy_ai(m);
        CHECK(v < prev);
        CHECK(v > 0);
        prev = v;
    }
    CHECK(special::airy_ai(5) <= 1e-3);
    CHECK(kind_of([] { special::scorer_gi(21); }) == ErrorKind::AccuracyWindowExceeded);
    CHECK(kind_of([] { special::airy_ai(-20.5); }) == ErrorKind::AccuracyWindowExceeded);
}

TEST_CASE("Ai and Gi agree with the Maclaurin and contour oracles") {
    double ai = 0, gi = 0, ai_c = 0, gi_c = 0;
    for (double m = -5; m <= 5 + 1e-9; m += 0.125) {
        ai = std::max(ai, std::abs(special::airy_ai(m) - special::airy_ai_maclaurin(m)));
        gi = std::max(gi, std::abs(special::scorer_gi(m) - special::scorer_gi_maclaurin(m)));
        ai_c = std::max(ai_c, std::abs(special::airy_ai(m) - special::airy_ai_contour(m)));
        gi_c = std::max(gi_c, std::abs(special::scorer_gi(m) - special::scorer_gi_contour(m)));
    }
    CHECK(ai <= 1e-9);
    CHECK(gi <= 1e-9);
    CHECK(ai_c <= 1e-9);
    CHECK(gi_c <= 1e-9);
    CHECK(special::scorer_gi_contour(0) == doctest::Approx(special::scorer_gi(0)).epsilon(1e-13));
}

TEST_CASE("Gi satisfies its defining equation across the window") {
    NumDiffConfig nd;
    for (double m : {-19.0, -12.3, -4.1, 0.0, 3.3, 7.9, 8.5, 14.0, 19.5}) {
        const double d2 = numdiff([](double x) { return special::scorer_gi(x); }, m, 2, nd);
        const double tol = m > 8 ? 1e-5 : 1e-6;
        CHECK(std::abs(d2 - m * special::scorer_gi(m) + 1 / pi) <= tol);
        const double d1 = numdiff([](double x) { return special::scorer_gi(x); }, m, 1, nd);
        CHECK(std::abs(d1 - special::scorer_gi_prime(m)) <= tol);
        const double a1 = numdiff([](double x) { return special::airy_ai(x); }, m, 1, nd);
        CHECK(std::abs(a1 - special::airy_ai_prime(m)) <= 1e-8);
    }
    // Asymptotic branch against the contour oracle beyond the table.
    for (double m : {9.0, 12.0, 20.0})
        CHECK(special::scorer_gi(m) == doctest::Approx(special::scorer_gi_contour(m)).epsilon(1e-6));
}

TEST_CASE("a corrupted Scorer table is detectable") {
    const special::ScorerTable bad(1e-3);
    CHECK(std::abs(bad.gi(0.3) - special::scorer_gi_maclaurin(0.3)) > 1e-5);
}

TEST_CASE("q_cold examples") {
    const auto q0 = q_cold(0), q1 = q_cold(1);
    CHECK(q0.q1 == 1.0);
    CHECK(q0.q2 == 0.0);
    CHECK(q1.q1 == 0.5);
    CHECK(q1.q2 == 0.5);
    double p1 = q1.q1, p2 = q1.q2;
    for (double m = 1.5; m < 50; m += 0.5) {
        const auto q = q_cold(m);
        CHECK(q.q1 < p1);
        CHECK(q.q2 < p2);
        p1 = q.q1;
        p2 = q.q2;
    }
    CHECK(q_cold(1e8).q1 <= 1e-15);
    NumDiffConfig nd;
    CHECK(q_cold(0.7).dq2 == doctest::Approx(numdiff([](double m) { return q_cold(m).q2; }, 0.7, 1, nd)).epsilon(1e-9));
}

TEST_CASE("q_hot examples") {
    const auto q = q_hot(0);
    CHECK(q.q1 == doctest::Approx(1.11536).epsilon(1e-5));
    CHECK(q.q2 == doctest::Approx(0.64395).epsilon(1e-5));
    CHECK(std::abs(q_hot(3).q1 - pi * special::airy_ai_contour(3)) <= 1e-8);
    double worst = 0;
    for (double m = -5; m <= 5 + 1e-9; m += 0.25) {
        const auto h = q_hot(m);
        worst = std::max({worst, std::abs(h.q1 - pi * special::airy_ai_contour(m)),
                          std::abs(h.q2 - pi * special::scorer_gi_contour(m))});
    }
    CHECK(worst <= 1e-8);
}

TEST_CASE("parametric solution examples") {
    const PlasmaConfig cold{Regime::Cold, 0.3};
    const auto s = parametric_solution(cold, 0.0, pi / 2);
    CHECK(s.E == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(std::abs(s.v) <= 1e-16);
    CHECK(s.x == doctest::Approx(0.3).epsilon(1e-15));
    for (auto reg : {Regime::Cold, Regime::Hot}) {
        const PlasmaConfig c{reg, 0.0};
        for (double m : {-1.3, 0.0, 2.2}) {
            const auto q = q_of(c, m);
            for (double t : {0.0, 1.0, 4.0}) {
                const auto st = parametric_solution(c, m, t);
                CHECK(st.x == m);
                CHECK(st.v * st.v + st.E * st.E == doctest::Approx(q.q1 * q.q1 + q.q2 * q.q2).epsilon(1e-14));
            }
        }
    }
}

TEST_CASE("equation residuals") {
    for (auto reg : {Regime::Cold, Regime::Hot}) {
        const auto [r1, r2] = pde_residual(PlasmaConfig{reg, 0.0}, 0.4, 1.1);
        CHECK(std::abs(r1) <= 1e-15);
        CHECK(std::abs(r2) <= 1e-15);
    }
    double hot = 0, cold = 0;
    int folds = 0, probes = 0;
    for (double a : {0.1, 0.3, 0.5}) {
        for (double m = -2; m <= 2 + 1e-9; m += 0.2) {
            for (double t = 0; t <= 2 * pi + 1e-9; t += pi / 12) {
                ++probes;
                try {
                    const auto [h1, h2] = pde_residual(PlasmaConfig{Regime::Hot, a}, m, t);
                    hot = std::max({hot, std::abs(h1), std::abs(h2)});
                } catch (const Error& e) {
                    CHECK(e.kind() == ErrorKind::FoldEncountered);
                    ++folds;
                }
                const auto [c1, c2] = pde_residual(PlasmaConfig{Regime::Cold, a}, m, t);
                cold = std::max({cold, std::abs(c1), std::abs(c2)});
            }
        }
    }
    CHECK(hot <= 1e-8);
    CHECK(cold <= 1e-6);
    CHECK(folds < probes / 4);
}

TEST_CASE("perturbing q1 in E is detected") {
    auto q = [](double m) { return q_hot(m); };
    auto bent = [](double m) {
        auto h = q_hot(m);
        h.q1 *= 1.01;
        h.dq1 *= 1.01;
        return h;
    };
    double worst = 0;
    for (double m : {-1.0, 0.0, 1.0})
        for (double t : {0.3, 1.2, 2.5}) {
            const auto [r1, r2] = pde_residual(0.3, q, bent, m, t);
            worst = std::max({worst, std::abs(r1), std::abs(r2)});
        }
    CHECK(worst > 1e-3);
}

TEST_CASE("fold detection") {
    const PlasmaConfig c{Regime::Cold, 3.0};
    const double m = 1 / std::sqrt(3.0);
    CHECK(x_mu(c, m, pi / 2) < 0);
    // 1 - 6 mu/(1 + mu^2)^2 = 0 at the inner fold edge.
    const double edge = 0.17731115263579045;
    CHECK(std::abs(x_mu(c, edge, pi / 2)) <= 1e-12);
    CHECK(kind_of([&] { pde_residual(c, edge, pi / 2); }) == ErrorKind::FoldEncountered);
    const double x = parametric_solution(c, m, pi / 2).x;
    CHECK(invert_parametric(c, x, pi / 2, -10, 10).size() >= 3);
}

TEST_CASE("inversion") {
    const auto r0 = invert_parametric(PlasmaConfig{Regime::Cold, 0.0}, 0.7, 1.0);
    REQUIRE(r0.size() == 1);
    CHECK(r0[0] == 0.7);
    for (auto reg : {Regime::Cold, Regime::Hot}) {
        const PlasmaConfig c{reg, 0.2};
        for (double x : {-1.5, -0.2, 0.0, 0.9, 1.7})
            for (double t : {0.0, 1.0, 2.5, 5.0}) {
                const auto r = invert_parametric(c, x, t, x - 5, x + 5);
                REQUIRE(r.size() == 1);
                if (reg == Regime::Cold) CHECK(std::abs(r[0] - x) <= 0.2);
                CHECK(std::abs(parametric_solution(c, r[0], t).x - x) <= 1e-12);
            }
    }
}

TEST_CASE("R8 FS residual") {
    NumDiffConfig nd;
    for (auto reg : {Regime::Cold, Regime::Hot}) {
        const auto sol = parametric_sampler(PlasmaConfig{reg, 0.2});
        double worst = 0;
        for (double x : {-1.5, -0.3, 0.4, 1.2})
            for (double t : {0.2, 1.5, 3.0, 4.4}) {
                const auto [s1, s2] = fs_residual_r8(sol, Point{{"x", x}, {"t", t}, {"a", 0.2}}, nd);
                worst = std::max({worst, std::abs(s1), std::abs(s2)});
            }
        CHECK(worst <= 1e-6);
        const auto [z1, z2] = fs_residual_r8(sol, Point{{"x", 0.3}, {"t", 0.8}, {"a", 0.0}}, nd);
        CHECK(std::abs(z1) <= 1e-8);
        CHECK(std::abs(z2) <= 1e-8);
    }
    // A sampler frozen at a = 0.2 has v_a = 0, so the residual is -E v_x.
    const PlasmaConfig c{Regime::Cold, 0.2};
    const auto live = parametric_sampler(c);
    SolutionSampler frozen = live;
    frozen.value = [live](const Point& p) { return live.value(p.with("a", 0.2)); };
    const Point p{{"x", 0.4}, {"t", 1.0}, {"a", 0.2}};
    const auto u = frozen.value(p);
    const double v_x = frozen.derivative(p, "x", 0, 1, nd);
    const auto [f1, f2] = fs_residual_r8(frozen, p, nd);
    CHECK(f1 == doctest::Approx(-u[1] * v_x).epsilon(1e-8));
    CHECK(std::abs(f1) > 1e-3);
}
