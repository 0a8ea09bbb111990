#include "rgsslab/burgers.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include <omp.h>

#include <boost/math/quadrature/gauss.hpp>

#include "rgsslab/errors.hpp"

namespace rgsslab::burgers {

void BurgersProblem::validate() const {
    require(nu > 0, ErrorKind::InvalidArgument, "nu must be positive");
    require(std::isfinite(a), ErrorKind::InvalidArgument, "a must be finite");
    require(static_cast<bool>(f.f), ErrorKind::InvalidArgument, "profile f is missing");
}

void QuadratureConfig::validate() const {
    require(half_width_sigmas >= 6, ErrorKind::InvalidArgument, "half_width_sigmas must be >= 6");
    require(nodes >= 64, ErrorKind::InvalidArgument, "quadrature needs >= 64 nodes");
}

namespace {

constexpr int kPanel = 16;

// Nodes and weights of the 16-point Gauss-Legendre rule on [-1, 1].
struct GaussRule {
    std::array<double, kPanel> x{}, w{};
    GaussRule() {
        using G = boost::math::quadrature::gauss<double, kPanel>;
        const auto& ab = G::abscissa();
        const auto& wt = G::weights();
        for (int i = 0; i < kPanel / 2; ++i) {
            x[static_cast<std::size_t>(i)] = -ab[static_cast<std::size_t>(kPanel / 2 - 1 - i)];
            w[static_cast<std::size_t>(i)] = wt[static_cast<std::size_t>(kPanel / 2 - 1 - i)];
            x[static_cast<std::size_t>(kPanel - 1 - i)] = ab[static_cast<std::size_t>(kPanel / 2 - 1 - i)];
            w[static_cast<std::size_t>(kPanel - 1 - i)] = wt[static_cast<std::size_t>(kPanel / 2 - 1 - i)];
        }
    }
};

const GaussRule& rule() {
    static const GaussRule r;
    return r;
}

// Normalized heat-kernel average of G at (t, x) on the window x +- hws sqrt(2 nu t).
Convolution kernel_average(const std::function<double(double)>& G, double t, double x, double nu,
                           const QuadratureConfig& q) {
    q.validate();
    require(t > 0, ErrorKind::InvalidArgument, "kernel average needs t > 0");
    const double four_nu_t = 4 * nu * t;
    const double half = q.half_width_sigmas * std::sqrt(2 * nu * t);
    const int panels = q.nodes / kPanel;
    const double pw = 2 * half / panels;
    const auto& r = rule();
    double sum = 0, peak = 0;
    for (int k = 0; k < panels; ++k) {
        const double c = x - half + (k + 0.5) * pw;
        for (int i = 0; i < kPanel; ++i) {
            const double y = c + 0.5 * pw * r.x[static_cast<std::size_t>(i)];
            const double v = G(y) * std::exp(-(x - y) * (x - y) / four_nu_t);
            sum += r.w[static_cast<std::size_t>(i)] * v;
            peak = std::max(peak, std::abs(v));
        }
    }
    const double edge_kernel = std::exp(-half * half / four_nu_t);
    const double edge = std::max(std::abs(G(x - half)), std::abs(G(x + half))) * edge_kernel;
    const double value = sum * 0.5 * pw / std::sqrt(std::numbers::pi * four_nu_t);
    return {value, peak > 0 ? edge / peak : 0.0};
}

Convolution checked(Convolution c, const QuadratureConfig& q) {
    if (q.strict && c.edge_ratio > 1e-14)
        fail(ErrorKind::TruncationWarning,
             "integrand at the window edge is " + format_g(c.edge_ratio) + " of the peak");
    return c;
}

}  // namespace

Convolution convolve_checked(const std::function<double(double)>& F, double t, double x, const BurgersProblem& prob,
                             const QuadratureConfig& q) {
    prob.validate();
    const double s = prob.a / prob.nu;
    auto G = [&](double y) { return F(y) * std::exp(s * prob.f.f(y)); };
    return checked(kernel_average(G, t, x, prob.nu, q), q);
}

double convolve(const std::function<double(double)>& F, double t, double x, const BurgersProblem& prob,
                const QuadratureConfig& q) {
    return convolve_checked(F, t, x, prob, q).value;
}

double heat_solution(double t, double x, const Profile1D& f, double nu, const QuadratureConfig& q) {
    if (t == 0.0) return f.f(x);
    return checked(kernel_average(f.f, t, x, nu, q), q).value;
}

double exact_solution(double t, double x, const BurgersProblem& prob, const QuadratureConfig& q) {
    prob.validate();
    require(t >= 0, ErrorKind::InvalidArgument, "exact solution needs t >= 0");
    if (t == 0.0) return prob.f.f(x);
    if (prob.a == 0.0) return heat_solution(t, x, prob.f, prob.nu, q);
    const double s = prob.a / prob.nu;
    auto G = [&](double y) { return std::expm1(s * prob.f.f(y)); };
    const auto c = checked(kernel_average(G, t, x, prob.nu, q), q);
    return std::log1p(c.value) / s;
}

SolutionSampler exact_sampler(const BurgersProblem& prob, const QuadratureConfig& q) {
    return SolutionSampler::scalar("u", [prob, q](const Point& p) {
        BurgersProblem local = prob;
        local.a = p.get_or("a", prob.a);
        local.nu = p.get_or("nu", prob.nu);
        return exact_solution(p.at("t"), p.at("x"), local, q);
    });
}

void fd_step(const std::vector<double>& u, std::vector<double>& out, double a, double nu, double dx, double dt,
             Exec exec) {
    const std::size_t n = u.size();
    out.resize(n);
    const double inv2dx = 1.0 / (2 * dx), invdx2 = 1.0 / (dx * dx);
    auto body = [&](std::size_t i) {
        const double ux = (u[i + 1] - u[i - 1]) * inv2dx;
        const double uxx = (u[i + 1] - 2 * u[i] + u[i - 1]) * invdx2;
        out[i] = u[i] + dt * (a * ux * ux + nu * uxx);
    };
    const auto last = static_cast<long long>(n) - 1;
    if (exec == Exec::Serial) {
        for (long long i = 1; i < last; ++i) body(static_cast<std::size_t>(i));
    } else {
        const int cap = thread_cap();
        const int threads = cap > 0 ? cap : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(threads)
        for (long long i = 1; i < last; ++i) body(static_cast<std::size_t>(i));
    }
    out[0] = u[0];
    out[n - 1] = u[n - 1];
}

double FdField::value(double t, double x) const {
    require(t >= times_.front() && t <= times_.back(), ErrorKind::InvalidArgument, "t outside the FD run");
    const double xl = x0_, xh = x0_ + dx_ * static_cast<double>(nx_ - 1);
    require(x >= xl && x <= xh, ErrorKind::InvalidArgument, "x outside the FD grid");
    auto it = std::upper_bound(times_.begin(), times_.end(), t);
    std::size_t k1 = std::min<std::size_t>(static_cast<std::size_t>(it - times_.begin()), times_.size() - 1);
    std::size_t k0 = k1 == 0 ? 0 : k1 - 1;
    const double tw = times_[k1] == times_[k0] ? 0.0 : (t - times_[k0]) / (times_[k1] - times_[k0]);
    const double s = (x - x0_) / dx_;
    std::size_t j0 = std::min<std::size_t>(static_cast<std::size_t>(std::floor(s)), nx_ - 2);
    const double xw = s - static_cast<double>(j0);
    auto lerp_x = [&](const std::vector<double>& u) { return (1 - xw) * u[j0] + xw * u[j0 + 1]; };
    return (1 - tw) * lerp_x(snaps_[k0]) + tw * lerp_x(snaps_[k1]);
}

FdField fd_oracle(const BurgersProblem& prob, double x_lo, double x_hi, double t_end, double dx, double dt,
                  const FdOptions& opt) {
    prob.validate();
    require(x_hi > x_lo && dx > 0 && dt > 0 && t_end > 0, ErrorKind::InvalidArgument, "bad FD grid parameters");
    const double bound = 0.4 * dx * dx / (2 * prob.nu);
    if (dt > bound)
        fail(ErrorKind::StabilityViolation,
             "dt = " + format_g(dt) + " exceeds 0.4 dx^2/(2 nu) = " + format_g(bound));
    const double fscale = std::max(1.0, std::abs(prob.f.f(0.5 * (x_lo + x_hi))));
    for (double edge : {x_lo, x_hi}) {
        const double inward = edge == x_lo ? 1.0 : -1.0;
        for (int k = 1; k <= 10; ++k)
            if (std::abs(prob.f.f(edge + inward * 0.1 * k) - prob.f.f(edge)) > 1e-10 * fscale)
                fail(ErrorKind::DomainTooNarrow, "profile is not flat near the edge x = " + format_g(edge));
    }
    const auto nx = static_cast<std::size_t>(std::llround((x_hi - x_lo) / dx)) + 1;
    const double h = (x_hi - x_lo) / static_cast<double>(nx - 1);
    const auto steps = static_cast<long long>(std::ceil(t_end / dt - 1e-9));
    const double k = t_end / static_cast<double>(steps);
    const long long stride =
        std::max<long long>(1, (steps + static_cast<long long>(opt.max_snapshots) - 2) /
                                   static_cast<long long>(std::max<std::size_t>(opt.max_snapshots - 1, 1)));

    std::vector<double> u(nx), next(nx);
    for (std::size_t j = 0; j < nx; ++j) u[j] = prob.f.f(x_lo + h * static_cast<double>(j));
    std::vector<double> times{0.0};
    std::vector<std::vector<double>> snaps{u};
    for (long long s = 1; s <= steps; ++s) {
        fd_step(u, next, prob.a, prob.nu, h, k, opt.exec);
        u.swap(next);
        if (s % stride == 0 || s == steps) {
            times.push_back(s == steps ? t_end : k * static_cast<double>(s));
            snaps.push_back(u);
        }
    }
    return FdField(x_lo, h, nx, std::move(times), std::move(snaps));
}

double fs_residual_r5(const SolutionSampler& sol, const Point& p, const BurgersProblem& prob,
                      const QuadratureConfig& q, const NumDiffConfig& nd) {
    BurgersProblem local = prob;
    local.a = p.get_or("a", prob.a);
    local.nu = p.get_or("nu", prob.nu);
    require(local.a != 0.0, ErrorKind::InvalidArgument, "R5 residual needs a != 0");
    const double t = p.at("t"), x = p.at("x");
    const double u = sol.value(p)[0];
    const double ua = sol.derivative(p, "a", 0, 1, nd);
    const double fbar = convolve(local.f.f, t, x, local, q);
    return -ua - u / local.a + std::exp(-local.a * u / local.nu) * fbar / local.a;
}

double fs_residual_r6(const SolutionSampler& sol, const Point& p, const BurgersProblem& prob,
                      const QuadratureConfig& q, const NumDiffConfig& nd) {
    BurgersProblem local = prob;
    local.a = p.get_or("a", prob.a);
    local.nu = p.get_or("nu", prob.nu);
    const double t = p.at("t"), x = p.at("x");
    const double u = sol.value(p)[0];
    const double ut = sol.derivative(p, "t", 0, 1, nd);
    const auto& f = local.f;
    auto source = [&](double y) {
        const double fx = f.fx(y);
        return local.a * fx * fx + local.nu * f.fxx(y);
    };
    const double bar = convolve(source, t, x, local, q);
    return -ut + std::exp(-local.a * u / local.nu) * bar;
}

double alpha_heat_residual(const std::function<double(double, double)>& alpha, double nu, const Point& p,
                           const NumDiffConfig& nd) {
    const double t = p.at("t"), x = p.at("x");
    const double at = numdiff([&](double s) { return alpha(s, x); }, t, 1, nd);
    const double axx = numdiff([&](double s) { return alpha(t, s); }, x, 2, nd);
    return at - nu * axx;
}

}  // namespace rgsslab::burgers
