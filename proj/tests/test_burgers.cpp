#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rgsslab/burgers.hpp"
#include "rgsslab/errors.hpp"

using namespace rgsslab;
using namespace rgsslab::burgers;

namespace {

BurgersProblem gauss_problem(double a, double nu) { return {a, nu, gaussian_profile(1.0, 1.0)}; }

Point probe(double t, double x, double a, double nu) { return Point{{"t", t}, {"x", x}, {"a", a}, {"nu", nu}}; }

ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InvalidArgument;
}

double heat_gaussian(double t, double x, double nu) {
    const double s = 1 + 4 * nu * t;
    return std::exp(-x * x / s) / std::sqrt(s);
}

}  // namespace

TEST_CASE("convolution examples") {
    QuadratureConfig q;
    BurgersProblem zero{1.0, 0.5, constant_profile(0.0)};
    CHECK(convolve([](double) { return 1.0; }, 0.7, 1.3, zero, q) == doctest::Approx(1.0).epsilon(1e-14));
    BurgersProblem c{0.8, 0.5, constant_profile(0.3)};
    CHECK(convolve([](double) { return 1.0; }, 0.7, -2.0, c, q) == doctest::Approx(std::exp(0.8 * 0.3 / 0.5)).epsilon(1e-14));
    BurgersProblem lin = gauss_problem(0.0, 0.5);
    CHECK(std::abs(convolve([](double y) { return y; }, 0.4, 0.0, lin, q)) <= 1e-15);
}

TEST_CASE("exact solution examples") {
    QuadratureConfig q;
    BurgersProblem c{1.0, 0.5, constant_profile(0.7)};
    for (double t : {0.1, 1.0, 5.0}) CHECK(std::abs(exact_solution(t, 0.4, c, q) - 0.7) <= 1e-10);
    auto g = gauss_problem(1.0, 0.5);
    CHECK(exact_solution(0.0, 0.37, g, q) == g.f.f(0.37));
    auto fd = fd_oracle(g, -12, 12, 0.5, 0.02, 1.5e-4);
    CHECK(std::abs(exact_solution(0.5, 0.0, g, q) - fd.value(0.5, 0.0)) <= 5e-3);
}

TEST_CASE("heat limit at a = 0 matches the spreading Gaussian") {
    QuadratureConfig q;
    auto g = gauss_problem(0.0, 0.5);
    for (double x : {-1.0, 0.0, 0.6, 2.5}) CHECK(std::abs(exact_solution(0.5, x, g, q) - heat_gaussian(0.5, x, 0.5)) <= 1e-14);
}

TEST_CASE("finite-difference oracle") {
    BurgersProblem zero{1.0, 0.5, constant_profile(0.0)};
    auto fz = fd_oracle(zero, -5, 5, 0.3, 0.05, 1e-3);
    CHECK(fz.value(0.3, 1.234) == 0.0);

    auto heat = gauss_problem(0.0, 0.5);
    auto fh = fd_oracle(heat, -10, 10, 0.25, 0.01, 4e-5);
    double worst = 0;
    for (double x = -3; x <= 3; x += 0.25) worst = std::max(worst, std::abs(fh.value(0.25, x) - heat_gaussian(0.25, x, 0.5)));
    CHECK(worst <= 1e-4);
}

TEST_CASE("finite differences converge at second order against the exact solution") {
    QuadratureConfig q;
    auto g = gauss_problem(1.0, 0.5);
    std::vector<double> errs;
    for (double dx : {0.08, 0.04, 0.02}) {
        const double dt = 0.4 * dx * dx / (2 * g.nu);
        auto fd = fd_oracle(g, -12, 12, 0.5, dx, dt);
        double e = 0;
        for (double x = -2; x <= 2; x += 0.08) e = std::max(e, std::abs(fd.value(0.5, x) - exact_solution(0.5, x, g, q)));
        errs.push_back(e);
    }
    for (std::size_t i = 1; i < errs.size(); ++i) {
        INFO("errors " << errs[i - 1] << " -> " << errs[i]);
        CHECK(errs[i - 1] / errs[i] == doctest::Approx(4.0).epsilon(0.15));
    }
}

TEST_CASE("exact solution agrees with the FD oracle across parameters") {
    QuadratureConfig q;
    for (double a : {0.5, 1.0}) {
        for (double nu : {0.25, 0.5}) {
            auto g = gauss_problem(a, nu);
            const double dx = 0.02;
            auto fd = fd_oracle(g, -12, 12, 1.0, dx, 0.4 * dx * dx / (2 * nu));
            double e = 0, scale = 0;
            for (double t : {0.1, 0.4, 0.7, 1.0}) {
                for (double x = -3; x <= 3; x += 0.3) {
                    const double u = exact_solution(t, x, g, q);
                    e = std::max(e, std::abs(fd.value(t, x) - u));
                    scale = std::max(scale, std::abs(u));
                }
            }
            INFO("a = " << a << " nu = " << nu);
            CHECK(e / scale <= 5e-3);
        }
    }
}

TEST_CASE("serial and parallel FD steps agree bitwise") {
    auto g = gauss_problem(1.0, 0.5);
    std::vector<double> u(3001);
    for (std::size_t j = 0; j < u.size(); ++j) u[j] = g.f.f(-15 + 0.01 * static_cast<double>(j));
    std::vector<double> s, p;
    fd_step(u, s, 1.0, 0.5, 0.01, 4e-5, Exec::Serial);
    fd_step(u, p, 1.0, 0.5, 0.01, 4e-5, Exec::Parallel);
    CHECK(s == p);
    FdOptions serial{512, Exec::Serial}, parallel{512, Exec::Parallel};
    auto a = fd_oracle(g, -8, 8, 0.2, 0.04, 6e-4, serial);
    auto b = fd_oracle(g, -8, 8, 0.2, 0.04, 6e-4, parallel);
    CHECK(a.snapshot(a.times().size() - 1) == b.snapshot(b.times().size() - 1));
}

TEST_CASE("FD oracle preconditions") {
    auto g = gauss_problem(1.0, 0.5);
    CHECK(kind_of([&] { fd_oracle(g, -10, 10, 0.1, 0.01, 1e-3); }) == ErrorKind::StabilityViolation);
    CHECK(kind_of([&] { fd_oracle(g, -2, 2, 0.1, 0.05, 1e-4); }) == ErrorKind::DomainTooNarrow);
}

TEST_CASE("truncation warning fires for a narrow window") {
    QuadratureConfig q;
    q.half_width_sigmas = 6;
    BurgersProblem g{1.0, 0.5, constant_profile(0.4)};
    CHECK(kind_of([&] { exact_solution(0.5, 0.0, g, q); }) == ErrorKind::TruncationWarning);
    q.strict = false;
    CHECK(convolve_checked([](double) { return 1.0; }, 0.5, 0.0, g, q).edge_ratio > 1e-14);
    QuadratureConfig bad;
    bad.nodes = 32;
    CHECK(kind_of([&] { exact_solution(0.5, 0.0, g, bad); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("R5 FS residual") {
    QuadratureConfig q;
    NumDiffConfig nd;
    auto g = gauss_problem(1.0, 0.5);
    CHECK(std::abs(fs_residual_r5(exact_sampler(g, q), probe(0.5, 0.3, 1.0, 0.5), g, q, nd)) <= 1e-5);

    BurgersProblem c{1.0, 0.5, constant_profile(0.6)};
    CHECK(std::abs(fs_residual_r5(exact_sampler(c, q), probe(0.5, 0.3, 1.0, 0.5), c, q, nd)) <= 1e-11);

    auto exact = exact_sampler(g, q);
    auto shifted_sol = SolutionSampler::scalar("u", [exact](const Point& p) { return exact.value(p)[0] + 0.1; });
    CHECK(std::abs(fs_residual_r5(shifted_sol, probe(0.5, 0.3, 1.0, 0.5), g, q, nd)) > 0.05);
}

TEST_CASE("R6 FS residual") {
    QuadratureConfig q;
    NumDiffConfig nd;
    auto g = gauss_problem(1.0, 0.5);
    CHECK(std::abs(fs_residual_r6(exact_sampler(g, q), probe(0.5, 0.3, 1.0, 0.5), g, q, nd)) <= 1e-5);
    BurgersProblem c{1.0, 0.5, constant_profile(0.6)};
    CHECK(std::abs(fs_residual_r6(exact_sampler(c, q), probe(0.5, 0.3, 1.0, 0.5), c, q, nd)) <= 1e-11);
    auto h = gauss_problem(0.0, 0.5);
    CHECK(std::abs(fs_residual_r6(exact_sampler(h, q), probe(0.5, 0.3, 0.0, 0.5), h, q, nd)) <= 1e-6);
}

TEST_CASE("FS residuals vanish over a parameter grid") {
    QuadratureConfig q;
    NumDiffConfig nd;
    double worst = 0;
    for (double a : {0.5, 1.0}) {
        auto g = gauss_problem(a, 0.5);
        auto sol = exact_sampler(g, q);
        for (double t : {0.1, 0.3, 0.5, 0.7, 1.0}) {
            for (double x : {-2.0, -1.0, 0.0, 0.7, 1.5}) {
                worst = std::max(worst, std::abs(fs_residual_r5(sol, probe(t, x, a, 0.5), g, q, nd)));
                worst = std::max(worst, std::abs(fs_residual_r6(sol, probe(t, x, a, 0.5), g, q, nd)));
            }
        }
    }
    CHECK(worst <= 1e-5);
}

TEST_CASE("residuals do not grow as quadrature nodes double") {
    NumDiffConfig nd;
    auto g = gauss_problem(1.0, 0.5);
    double prev = 1e300;
    for (int nodes : {64, 128, 256, 512}) {
        QuadratureConfig q;
        q.nodes = nodes;
        const double r = std::abs(fs_residual_r5(exact_sampler(g, q), probe(0.5, 0.3, 1.0, 0.5), g, q, nd));
        INFO("nodes " << nodes << " residual " << r);
        CHECK(r <= std::max(prev, 1e-9));
        prev = r;
    }
}

TEST_CASE("alpha heat residual") {
    NumDiffConfig nd;
    const double nu = 0.5;
    auto kernel = [nu](double t, double x) { return std::exp(-x * x / (4 * nu * t)) / std::sqrt(4 * std::numbers::pi * nu * t); };
    CHECK(std::abs(alpha_heat_residual(kernel, nu, Point{{"t", 0.5}, {"x", 0.4}}, nd)) <= 1e-6);
    CHECK(alpha_heat_residual([](double, double) { return 2.0; }, nu, Point{{"t", 0.5}, {"x", 0.4}}, nd) == 0.0);
    CHECK(alpha_heat_residual([](double, double x) { return x * x; }, nu, Point{{"t", 0.5}, {"x", 0.4}}, nd) ==
          doctest::Approx(-2 * nu).epsilon(1e-6));
}

TEST_CASE("shifting the profile shifts the solution") {
    QuadratureConfig q;
    auto g = gauss_problem(1.0, 0.5);
    BurgersProblem s{1.0, 0.5, shifted(g.f, 0.75)};
    for (double x : {-1.0, 0.2, 1.4}) CHECK(std::abs(exact_solution(0.6, x + 0.75, s, q) - exact_solution(0.6, x, g, q)) <= 1e-10);
}

TEST_CASE("small a approaches the heat solution linearly") {
    QuadratureConfig q;
    std::vector<double> c;
    for (double a : {1e-2, 1e-3}) {
        auto g = gauss_problem(a, 0.5);
        c.push_back(std::abs(exact_solution(0.5, 0.2, g, q) - heat_gaussian(0.5, 0.2, 0.5)) / a);
    }
    CHECK(std::isfinite(c[0]));
    CHECK(c[1] == doctest::Approx(c[0]).epsilon(0.05));
}

TEST_CASE("table profile reproduces tabulated data") {
    std::vector<double> x, y;
    for (int i = 0; i <= 200; ++i) {
        x.push_back(-10 + 0.1 * i);
        y.push_back(std::exp(-x.back() * x.back()));
    }
    auto t = table_profile(x, y);
    CHECK(std::abs(t.f(0.35) - std::exp(-0.35 * 0.35)) <= 1e-4);
    CHECK(t.f(-20) == y.front());
    CHECK_THROWS_AS(table_profile({0, 1, 3, 4}, {1, 1, 1, 1}), Error);
}
