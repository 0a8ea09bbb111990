#pragma once

#include <utility>
#include <vector>

#include "rgsslab/numdiff.hpp"
#include "rgsslab/special.hpp"
#include "rgsslab/vfield.hpp"

namespace rgsslab::plasma {

// v_t + a v v_x - E = 0, E_t + a v E_x + v = 0 in units omega = Delta = L = 1, so eps = a.
enum class Regime { Cold, Hot };

struct PlasmaConfig {
    Regime regime = Regime::Cold;
    // Physical configurations have a >= 0; validate() admits any finite a.
    double a = 0;
    // Scorer table for the hot regime; the shared default when null.
    const special::ScorerTable* table = nullptr;

    void validate() const;
    PlasmaConfig with_a(double a2) const { auto c = *this; c.a = a2; return c; }
};

struct QPair {
    double q1, q2;
    // d/dmu of q1, q2.
    double dq1 = 0, dq2 = 0;
};

// (1/(1+mu^2), mu/(1+mu^2)).
QPair q_cold(double mu);
// (pi Ai(mu), pi Gi(mu)).
QPair q_hot(double mu, const special::ScorerTable& table = special::default_scorer_table());
QPair q_of(const PlasmaConfig& cfg, double mu);

struct PlasmaState {
    double x, v, E;
};

// E = -(q1 sin t + q2 cos t), v = q1 cos t - q2 sin t, x = mu - a E.
PlasmaState parametric_solution(const PlasmaConfig& cfg, double mu, double t);

// x_mu = 1 + a (q1' sin t + q2' cos t).
double x_mu(const PlasmaConfig& cfg, double mu, double t);

// Equation residuals at the parametric point (mu, t) from analytic mu-derivatives. Raises
// FoldEncountered for |x_mu| < 0.1.
std::pair<double, double> pde_residual(const PlasmaConfig& cfg, double mu, double t);

// The same residuals for arbitrary profile functions q(mu) (e.g. a perturbed pair).
std::pair<double, double> pde_residual(double a, const std::function<QPair(double)>& q_v,
                                       const std::function<QPair(double)>& q_e, double mu, double t);

// All roots of mu - a E(mu, t) = x in [lo, hi], increasing.
std::vector<double> invert_parametric(const PlasmaConfig& cfg, double x, double t, double lo = -50, double hi = 50);

// Sampler over (x, t, a) with dependents (v, E); raises FoldEncountered where the inversion is not
// unique or |x_mu| < 0.1.
SolutionSampler parametric_sampler(const PlasmaConfig& cfg);

// (v_a - E v_x, E_a - E E_x) for a sampler over (x, t, a) with dependents (v, E).
std::pair<double, double> fs_residual_r8(const SolutionSampler& sol, const Point& p, const NumDiffConfig& nd);

}  // namespace rgsslab::plasma
