#pragma once

#include <functional>
#include <vector>

#include "rgsslab/numdiff.hpp"
#include "rgsslab/parallel.hpp"
#include "rgsslab/profile.hpp"
#include "rgsslab/vfield.hpp"

namespace rgsslab::burgers {

// u_t = a u_x^2 + nu u_xx, u(0, x) = f(x).
struct BurgersProblem {
    double a = 1;
    double nu = 0.5;
    Profile1D f;

    void validate() const;
    BurgersProblem with_a(double a2) const { auto p = *this; p.a = a2; return p; }
};

struct QuadratureConfig {
    // Window half-width in kernel standard deviations sqrt(2 nu t).
    double half_width_sigmas = 10;
    // Total Gauss-Legendre nodes, in 16-point panels.
    int nodes = 256;
    // Raise TruncationWarning when the window-edge integrand exceeds 1e-14 of the peak.
    bool strict = true;

    void validate() const;
};

struct Convolution {
    double value;
    // Largest window-edge integrand over the largest node integrand.
    double edge_ratio;
};

// (4 pi nu t)^(-1/2) int F(y) exp(-(x-y)^2/(4 nu t) + a f(y)/nu) dy.
double convolve(const std::function<double(double)>& F, double t, double x, const BurgersProblem& prob,
                const QuadratureConfig& q);
Convolution convolve_checked(const std::function<double(double)>& F, double t, double x, const BurgersProblem& prob,
                             const QuadratureConfig& q);

// (nu/a) ln <<1>>, evaluated as (nu/a) log1p(K * expm1(a f/nu)); heat evolution of f when a = 0.
double exact_solution(double t, double x, const BurgersProblem& prob, const QuadratureConfig& q);

// Sampler over (t, x, a, nu) for the exact solution with profile prob.f.
SolutionSampler exact_sampler(const BurgersProblem& prob, const QuadratureConfig& q);

// One explicit step: centered u_x squared and centered u_xx, Dirichlet ends held fixed.
void fd_step(const std::vector<double>& u, std::vector<double>& out, double a, double nu, double dx, double dt,
             Exec exec);

class FdField {
public:
    FdField(double x0, double dx, std::size_t nx, std::vector<double> times, std::vector<std::vector<double>> snaps)
        : x0_(x0), dx_(dx), nx_(nx), times_(std::move(times)), snaps_(std::move(snaps)) {}

    // Bilinear in (t, x) between stored snapshots.
    double value(double t, double x) const;
    double x_at(std::size_t j) const { return x0_ + dx_ * static_cast<double>(j); }
    std::size_t nx() const noexcept { return nx_; }
    double dx() const noexcept { return dx_; }
    const std::vector<double>& times() const noexcept { return times_; }
    const std::vector<double>& snapshot(std::size_t k) const { return snaps_.at(k); }

private:
    double x0_, dx_;
    std::size_t nx_;
    std::vector<double> times_;
    std::vector<std::vector<double>> snaps_;
};

struct FdOptions {
    std::size_t max_snapshots = 512;
    Exec exec = Exec::Parallel;
};

// Explicit finite differences on [x_lo, x_hi]; t_end is hit exactly by shortening the last step.
FdField fd_oracle(const BurgersProblem& prob, double x_lo, double x_hi, double t_end, double dx, double dt,
                  const FdOptions& opt = {});

// Heat evolution of f, (4 pi nu t)^(-1/2) int f(y) exp(-(x-y)^2/(4 nu t)) dy.
double heat_solution(double t, double x, const Profile1D& f, double nu, const QuadratureConfig& q);

// -u_a - u/a + (1/a) exp(-a u/nu) <<f>>.
double fs_residual_r5(const SolutionSampler& sol, const Point& p, const BurgersProblem& prob,
                      const QuadratureConfig& q, const NumDiffConfig& nd);

// -u_t + exp(-a u/nu) <<a f_x^2 + nu f_xx>>.
double fs_residual_r6(const SolutionSampler& sol, const Point& p, const BurgersProblem& prob,
                      const QuadratureConfig& q, const NumDiffConfig& nd);

// alpha_t - nu alpha_xx.
double alpha_heat_residual(const std::function<double(double, double)>& alpha, double nu, const Point& p,
                           const NumDiffConfig& nd);

}  // namespace rgsslab::burgers
