#include <doctest.h>

#include <cmath>

#include "rgsslab/errors.hpp"
#include "rgsslab/ode_embedding.hpp"

using namespace rgsslab;
using namespace rgsslab::ode;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InvalidArgument;
}

Point tx_point(double t, double tau, double x, double a) {
    return Point{{"t", t}, {"tau", tau}, {"x", x}, {"a", a}, {"b", 0.0}, {"c", 0.0}};
}

}  // namespace

TEST_CASE("direct solve examples") {
    IntegratorConfig cfg;
    CHECK(direct_solve({0, 0, 0}, {0.3, 1.7}, 2.0, cfg) == 1.7);
    CHECK(direct_solve({1, 0, 0}, {0, 1}, 0.5, cfg) == doctest::Approx(2.0).epsilon(1e-11));
    try {
        direct_solve({1, 0, 0}, {0, 1}, 1.5, cfg);
        FAIL("expected blow-up");
    } catch (const BlowUpError& e) {
        CHECK(e.reached() == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("embedding residual") {
    NumDiffConfig nd;
    const PolyRHS r{1, 0, 0};
    auto exact = exact_r1_sampler();
    Point p = tx_point(0.6, 0.1, 0.8, 1.0);
    CHECK(std::abs(embedding_residual(exact, r, p, nd)) <= 1e-7);
    auto constant = SolutionSampler::scalar("u", [](const Point&) { return 0.4; });
    CHECK(embedding_residual(constant, r, p, nd) == 0.0);
    auto ident = SolutionSampler::scalar("u", [](const Point& q) { return q.at("x"); });
    CHECK(embedding_residual(ident, r, p, nd) == doctest::Approx(0.64).epsilon(1e-12));
}

TEST_CASE("embedding residual on the direct solution with cubic and quartic terms") {
    IntegratorConfig cfg;
    auto sol = direct_sampler(cfg);
    Point p{{"t", 0.4}, {"tau", -0.1}, {"x", 0.6}, {"a", 1.0}, {"b", 0.3}, {"c", 0.1}};
    CHECK(std::abs(embedding_residual(sol, {1, 0.3, 0.1}, p, {})) <= 1e-7);
}

TEST_CASE("RG operator coefficients") {
    auto R1 = rg_operator(Operator::R1, {1, 0, 0});
    Point p{{"x", 2.0}, {"tau", 1.0}, {"t", 3.0}, {"u", 0.5}, {"a", 1.0}, {"b", 0.0}, {"c", 0.0}};
    CHECK(R1.coefficient("x", p) == 4.0);
    CHECK(R1.coefficient("a", p) == 1.0);
    CHECK(R1.coefficient("u", p) == 0.75);
    CHECK(R1.coefficient("t", p) == 0.0);

    auto R2 = rg_operator(Operator::R2, {1, 0.5, 0});
    Point q{{"x", 1.0}, {"tau", 0.0}, {"u", 1.0}, {"t", 0.0}, {"a", 1.0}, {"b", 0.5}, {"c", 0.0}};
    CHECK(R2.coefficient("x", q) == 1.0);
    CHECK(R2.coefficient("u", q) == 1.0);
    CHECK(R2.coefficient("b", q) == -0.5);
}

TEST_CASE("R3 coefficient difference is anchor independent") {
    // f_b / f^2 = 1/u at a = 1, b = c = 0, so t-coefficient minus tau-coefficient = -ln(u/x).
    Point p{{"x", 0.5}, {"tau", 0.0}, {"u", 2.0}, {"t", 0.0}, {"a", 1.0}, {"b", 0.0}, {"c", 0.0}};
    for (double anchor : {1.0, 3.0, 0.2}) {
        auto R3 = rg_operator(Operator::R3, {1, 0, 0}, anchor);
        const double ct = R3.coefficient("t", p), ctau = R3.coefficient("tau", p);
        CHECK(ct == doctest::Approx(-std::log(2.0 / anchor)).epsilon(1e-12));
        CHECK(ct - ctau == doctest::Approx(-std::log(4.0)).epsilon(1e-12));
    }
}

TEST_CASE("RG operator constraints") {
    CHECK(kind_of([] { rg_operator(Operator::R1, {1, 0.2, 0}); }) == ErrorKind::ConstraintViolated);
    CHECK(kind_of([] { rg_operator(Operator::R2, {0.5, 0.2, 0}); }) == ErrorKind::ConstraintViolated);
    CHECK(kind_of([] { rg_operator(Operator::X1, {1, 0, 0}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("reconstruction via R1") {
    IntegratorConfig cfg;
    CHECK(reconstruct_via_r1(0.5, {0, 1}, 1.0, cfg) == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(reconstruct_via_r1(0.7, {0.7, 1.3}, 1.0, cfg) == 1.3);
    CHECK(reconstruct_via_r1(0.5, {0, 1.3}, 0.0, cfg) == 1.3);
    CHECK(reconstruct_via_r1(-0.4, {0.3, -0.9}, 0.8, cfg) ==
          doctest::Approx(-0.9 / (1 - 0.8 * -0.9 * -0.7)).epsilon(1e-10));
}

TEST_CASE("implicit reconstruction") {
    IntegratorConfig cfg;
    CHECK(reconstruct_implicit({1, 0, 0}, {0, 1}, 0.5) == doctest::Approx(2.0).epsilon(1e-12));
    const double d = direct_solve({1, 0.3, 0.1}, {0, 0.5}, 0.4, cfg);
    CHECK(std::abs(reconstruct_implicit({1, 0.3, 0.1}, {0, 0.5}, 0.4) - d) <= 1e-7);
    CHECK(reconstruct_implicit({1, 0.3, 0.1}, {0.2, 0.5}, 0.2) == 0.5);
    CHECK(kind_of([] { reconstruct_implicit({1, 0, 0}, {0, 1}, 2.0); }) == ErrorKind::NoRootInBracket);
    CHECK(kind_of([] { reconstruct_implicit({1, 0, 0}, {0, 0}, 2.0); }) == ErrorKind::QuadratureSingularity);
}

TEST_CASE("implicit reconstruction stops at an interior zero of f") {
    // f = u^2 (1 - u) has a stable zero at u = 1; the solution approaches it without crossing.
    IntegratorConfig cfg;
    const PolyRHS r{1, -1, 0};
    const double d = direct_solve(r, {0, 0.5}, 3.0, cfg);
    const double u = reconstruct_implicit(r, {0, 0.5}, 3.0);
    CHECK(u < 1.0);
    CHECK(std::abs(u - d) <= 1e-9);
}

TEST_CASE("FS residual of R1") {
    NumDiffConfig nd;
    auto exact = exact_r1_sampler();
    CHECK(std::abs(fs_residual_r1(exact, tx_point(0.6, 0.1, 0.8, 1.0), nd)) <= 1e-6);
    auto constant = SolutionSampler::scalar("u", [](const Point&) { return 0.7; });
    CHECK(fs_residual_r1(constant, tx_point(0.5, 0.0, 0.8, 1.0), nd) == doctest::Approx(0.5 * 0.49));

    // First-order perturbation theory leaves a residual 2 a x^3 (t - tau)^2 + O(a^2).
    auto pt = SolutionSampler::scalar("u", [](const Point& q) {
        const double x = q.at("x");
        return x + q.at("a") * x * x * (q.at("t") - q.at("tau"));
    });
    const double r1 = fs_residual_r1(pt, tx_point(0.5, 0.1, 0.7, 0.02), nd);
    const double r2 = fs_residual_r1(pt, tx_point(0.5, 0.1, 0.7, 0.01), nd);
    CHECK(r1 == doctest::Approx(2 * 0.02 * 0.343 * 0.16).epsilon(0.05));
    CHECK(r1 / r2 == doctest::Approx(2.0).epsilon(0.02));
}

TEST_CASE("R1 and implicit reconstructions agree with direct integration on randomized probes") {
    IntegratorConfig cfg;
    NumDiffConfig nd;
    double worst_r1 = 0, worst_fs = 0;
    for (const auto& p : r1_probes(7, 200, 0.2)) {
        const double d = direct_solve(p.rhs, {p.tau, p.x}, p.t, cfg);
        worst_r1 = std::max(worst_r1, std::abs(reconstruct_via_r1(p.t, {p.tau, p.x}, p.rhs.a, cfg) / d - 1));
        auto sampler = SolutionSampler::scalar("u", [cfg](const Point& q) {
            return reconstruct_via_r1(q.at("t"), {q.at("tau"), q.at("x")}, q.at("a"), cfg);
        });
        worst_fs = std::max(worst_fs, std::abs(fs_residual_r1(sampler, tx_point(p.t, p.tau, p.x, p.rhs.a), nd)));
    }
    CHECK(worst_r1 <= 1e-7);
    CHECK(worst_fs <= 1e-6);

    double worst_imp = 0, worst_anchor = 0;
    for (const auto& p : implicit_probes(7, 200)) {
        const double d = direct_solve(p.rhs, {p.tau, p.x}, p.t, cfg);
        const double u = reconstruct_implicit(p.rhs, {p.tau, p.x}, p.t);
        worst_imp = std::max(worst_imp, std::abs(u / d - 1));
        const double u2 = reconstruct_implicit(p.rhs, {p.tau, p.x}, p.t, {3.0 * p.x});
        worst_anchor = std::max(worst_anchor, std::abs(u2 / u - 1));
    }
    CHECK(worst_imp <= 1e-7);
    CHECK(worst_anchor <= 1e-9);
}

TEST_CASE("reconstructions preserve the boundary value exactly") {
    IntegratorConfig cfg;
    for (double x : {-1.3, 0.2, 0.9}) {
        CHECK(reconstruct_via_r1(0.4, {0.4, x}, 1.5, cfg) == x);
        CHECK(reconstruct_via_r2(0.4, {0.4, x}, 0.3, cfg) == x);
        if (x > 0) CHECK(reconstruct_implicit({1, 0.2, 0.1}, {0.4, x}, 0.4) == x);
    }
}

TEST_CASE("R2 continues the b = 0 solution to b > 0") {
    IntegratorConfig cfg;
    double worst = 0;
    for (double b : {0.05, 0.2, 0.35, 0.5}) {
        for (auto [x, tau, t] : {std::tuple{0.5, 0.0, 0.8}, {1.0, 0.2, 0.5}, {-0.7, 0.0, 1.0}, {0.3, 1.0, -1.0}}) {
            const double d = direct_solve({1, b, 0}, {tau, x}, t, cfg);
            worst = std::max(worst, std::abs(reconstruct_via_r2(t, {tau, x}, b, cfg) - d));
        }
    }
    CHECK(worst <= 1e-6);
}

TEST_CASE("solution transport along admitted and RG operators") {
    IntegratorConfig cfg;
    const PolyRHS r{1, 0, 0}, r2{1, 0.3, 0}, r3{1, 0.2, 0.1};
    const CauchyData data{0.0, 0.5};
    CHECK(solution_transport_check(make_operator(Operator::X1, r), r, data, 0.6, 0.3, cfg) <= 1e-6);
    CHECK(solution_transport_check(make_operator(Operator::X2, r), r, data, 0.6, 0.3, cfg) <= 1e-6);
    CHECK(solution_transport_check(make_operator(Operator::X3, r) + make_operator(Operator::X4, r), r, data, 0.6,
                                   0.1, cfg) <= 1e-6);
    CHECK(solution_transport_check(make_operator(Operator::X5, r3), r3, data, 0.6, 0.2, cfg) <= 1e-6);
    CHECK(solution_transport_check(make_operator(Operator::X6, r3), r3, data, 0.6, 0.2, cfg) <= 1e-6);
    CHECK(solution_transport_check(make_operator(Operator::X7, r3), r3, data, 0.6, 0.2, cfg) <= 1e-6);
    CHECK(solution_transport_check(rg_operator(Operator::R1, r), r, data, 0.6, 0.3, cfg) <= 1e-6);
    CHECK(solution_transport_check(rg_operator(Operator::R2, r2), r2, {-1.0, 0.5}, -0.6, 0.3, cfg) <= 1e-6);
    CHECK(solution_transport_check(rg_operator(Operator::R3, r3), r3, data, 0.6, 0.2, cfg) <= 1e-6);
    CHECK(solution_transport_check(rg_operator(Operator::R4, r3), r3, data, 0.6, 0.2, cfg) <= 1e-6);
    CHECK(solution_transport_check(make_operator(Operator::X1, r), r, data, 0.6, 0.0, cfg) == 0.0);
}

TEST_CASE("X3 alone moves the solution off the solution manifold") {
    // X3 shifts u along f(u) without the compensating shift of x, so it is admitted but is not an RGS.
    IntegratorConfig cfg;
    const PolyRHS r{1, 0, 0};
    const double res = solution_transport_check(make_operator(Operator::X3, r), r, {0.0, 0.5}, 0.6, 0.1, cfg);
    CHECK(res > 1e-3);
}
