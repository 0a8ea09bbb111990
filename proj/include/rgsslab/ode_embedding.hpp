#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rgsslab/integrator.hpp"
#include "rgsslab/numdiff.hpp"
#include "rgsslab/vfield.hpp"

namespace rgsslab::ode {

// f(u) = a u^2 + b u^3 + c u^4.
struct PolyRHS {
    double a = 0, b = 0, c = 0;

    double f(double u) const { return u * u * (a + u * (b + u * c)); }
    double f_u(double u) const { return u * (2 * a + u * (3 * b + 4 * c * u)); }
    static PolyRHS from(const Point& p) { return {p.get_or("a", 0), p.get_or("b", 0), p.get_or("c", 0)}; }
};

// u(tau) = x.
struct CauchyData {
    double tau = 0, x = 0;
};

enum class Operator { X1, X2, X3, X4, X5, X6, X7, R1, R2, R3, R4 };

// Coordinates used by every operator of this model.
inline constexpr const char* kVars[] = {"t", "tau", "x", "a", "b", "c", "u"};

Point make_point(double t, const CauchyData& d, const PolyRHS& r, double u);

double direct_solve(const PolyRHS& rhs, const CauchyData& data, double t, const IntegratorConfig& cfg);

// Sampler over (t, tau, x, a, b, c) backed by direct_solve.
SolutionSampler direct_sampler(const IntegratorConfig& cfg);

// u = x / (1 - a x (t - tau)), the b = c = 0 family.
SolutionSampler exact_r1_sampler();

// u_tau + f(x) u_x.
double embedding_residual(const SolutionSampler& sol, const PolyRHS& rhs, const Point& p,
                          const NumDiffConfig& nd);

// <F>(v) = int_{anchor}^{v} F. Anchor and v must lie on the same side of every zero of f.
double bracket(const std::function<double(double)>& F, double v, double anchor);

// Admitted operators X1..X7 and RG operators R1..R4. Parameter constraints of R1/R2 are checked
// against `rhs`; brackets read a, b, c from the point being flowed.
VectorField make_operator(Operator which, const PolyRHS& rhs, double anchor = 1.0);
VectorField rg_operator(Operator which, const PolyRHS& rhs, double anchor = 1.0);

// Flows the unperturbed (a = 0, u = x0) state along R1 to parameter a.
double reconstruct_via_r1(double t, const CauchyData& data, double a, const IntegratorConfig& cfg);

// a = 1, c = 0: continues the second-order perturbative solution at b_end = b_ratio * b along R2.
double reconstruct_via_r2(double t, const CauchyData& data, double b, const IntegratorConfig& cfg,
                          double b_ratio = 1e-4);

struct ImplicitOptions {
    // Lower limit of <1/f>; defaults to x.
    std::optional<double> anchor;
};

// Root of <1/f>(u) - <1/f>(x) = t - tau.
double reconstruct_implicit(const PolyRHS& rhs, const CauchyData& data, double t, const ImplicitOptions& opt = {});

// t u^2 - x^2 tau u_x - u_a.
double fs_residual_r1(const SolutionSampler& sol, const Point& p, const NumDiffConfig& nd);

// Flows (t, tau, x, a, b, c, u = direct_solve) by lambda and compares the flowed u with a re-solve
// of the transformed Cauchy problem.
double solution_transport_check(const VectorField& field, const PolyRHS& rhs, const CauchyData& data, double t,
                                double lambda, const IntegratorConfig& cfg);

struct Probe {
    double t, tau, x;
    PolyRHS rhs;
};

// b = c = 0 probes with |1 - a x (t - tau)| >= margin along the whole R1 flow in a.
std::vector<Probe> r1_probes(std::uint64_t seed, std::size_t count, double margin);

// x > 0 and a, b, c >= 0, so f > 0 on every bracket; forward times stop at 80% of the blow-up time.
std::vector<Probe> implicit_probes(std::uint64_t seed, std::size_t count);

}  // namespace rgsslab::ode
