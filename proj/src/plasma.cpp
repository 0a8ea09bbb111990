#include "rgsslab/plasma.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/tools/roots.hpp>

#include "rgsslab/errors.hpp"

namespace rgsslab::plasma {

void PlasmaConfig::validate() const {
    // Negative a is admitted so derivative stencils can straddle a = 0.
    require(std::isfinite(a), ErrorKind::InvalidArgument, "a must be finite");
}

QPair q_cold(double mu) {
    const double d = 1 + mu * mu;
    return {1 / d, mu / d, -2 * mu / (d * d), (1 - mu * mu) / (d * d)};
}

QPair q_hot(double mu, const special::ScorerTable& table) {
    using std::numbers::pi;
    return {pi * special::airy_ai(mu), pi * table.gi(mu), pi * special::airy_ai_prime(mu), pi * table.gi_prime(mu)};
}

QPair q_of(const PlasmaConfig& cfg, double mu) {
    if (cfg.regime == Regime::Cold) return q_cold(mu);
    return q_hot(mu, cfg.table ? *cfg.table : special::default_scorer_table());
}

PlasmaState parametric_solution(const PlasmaConfig& cfg, double mu, double t) {
    cfg.validate();
    const QPair q = q_of(cfg, mu);
    const double s = std::sin(t), c = std::cos(t);
    const double E = -(q.q1 * s + q.q2 * c);
    return {mu - cfg.a * E, q.q1 * c - q.q2 * s, E};
}

double x_mu(const PlasmaConfig& cfg, double mu, double t) {
    const QPair q = q_of(cfg, mu);
    return 1 + cfg.a * (q.dq1 * std::sin(t) + q.dq2 * std::cos(t));
}

std::pair<double, double> pde_residual(double a, const std::function<QPair(double)>& q_v,
                                       const std::function<QPair(double)>& q_e, double mu, double t) {
    const QPair qv = q_v(mu), qe = q_e(mu);
    const double s = std::sin(t), c = std::cos(t);
    // x follows E: x = mu - a E.
    const double E = -(qe.q1 * s + qe.q2 * c);
    const double E_t = -(qe.q1 * c - qe.q2 * s);
    const double E_mu = -(qe.dq1 * s + qe.dq2 * c);
    const double v = qv.q1 * c - qv.q2 * s;
    const double v_t = -(qv.q1 * s + qv.q2 * c);
    const double v_mu = qv.dq1 * c - qv.dq2 * s;
    const double xm = 1 - a * E_mu, xt = -a * E_t;
    if (std::abs(xm) < 0.1)
        fail(ErrorKind::FoldEncountered, "x_mu = " + format_g(xm) + " at mu = " + format_g(mu) + ", t = " + format_g(t));
    const double v_x = v_mu / xm, E_x = E_mu / xm;
    const double vt_x = v_t - v_x * xt, Et_x = E_t - E_x * xt;
    return {vt_x + a * v * v_x - E, Et_x + a * v * E_x + v};
}

std::pair<double, double> pde_residual(const PlasmaConfig& cfg, double mu, double t) {
    cfg.validate();
    auto q = [&cfg](double m) { return q_of(cfg, m); };
    return pde_residual(cfg.a, q, q, mu, t);
}

std::vector<double> invert_parametric(const PlasmaConfig& cfg, double x, double t, double lo, double hi) {
    cfg.validate();
    require(lo < hi, ErrorKind::InvalidArgument, "inversion interval is empty");
    auto F = [&](double mu) { return parametric_solution(cfg, mu, t).x - x; };
    std::vector<double> roots;
    if (cfg.a == 0) {
        if (x >= lo && x <= hi) roots.push_back(x);
        return roots;
    }
    const double h = 0.01;
    double m0 = lo, f0 = F(lo);
    while (m0 < hi) {
        const double m1 = std::min(m0 + h, hi), f1 = F(m1);
        if (f0 == 0) {
            roots.push_back(m0);
        } else if (f0 * f1 < 0) {
            boost::math::tools::eps_tolerance<double> tol(52);
            std::uintmax_t iters = 200;
            const auto r = boost::math::tools::toms748_solve(F, m0, m1, f0, f1, tol, iters);
            roots.push_back(0.5 * (r.first + r.second));
        }
        m0 = m1;
        f0 = f1;
    }
    if (f0 == 0) roots.push_back(hi);
    return roots;
}

SolutionSampler parametric_sampler(const PlasmaConfig& cfg) {
    SolutionSampler s;
    s.dependents = {"v", "E"};
    s.value = [cfg](const Point& p) {
        const PlasmaConfig c = cfg.with_a(p.at("a"));
        const double x = p.at("x"), t = p.at("t");
        // |mu - x| <= a max|q|, and max|q| <= pi max(|Ai|, |Gi|) < 2 on the real line.
        const double r = 2 * std::abs(c.a) + 1;
        const auto roots = invert_parametric(c, x, t, x - r, x + r);
        if (roots.size() != 1)
            fail(ErrorKind::FoldEncountered, std::to_string(roots.size()) + " preimages at x = " + format_g(x));
        if (std::abs(x_mu(c, roots[0], t)) < 0.1)
            fail(ErrorKind::FoldEncountered, "probe is within the fold margin");
        const PlasmaState st = parametric_solution(c, roots[0], t);
        return std::vector<double>{st.v, st.E};
    };
    return s;
}

std::pair<double, double> fs_residual_r8(const SolutionSampler& sol, const Point& p, const NumDiffConfig& nd) {
    const auto u = sol.value(p);
    const double E = u.at(1);
    const double v_a = sol.derivative(p, "a", 0, 1, nd), v_x = sol.derivative(p, "x", 0, 1, nd);
    const double E_a = sol.derivative(p, "a", 1, 1, nd), E_x = sol.derivative(p, "x", 1, 1, nd);
    return {v_a - E * v_x, E_a - E * E_x};
}

}  // namespace rgsslab::plasma
