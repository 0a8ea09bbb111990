#include "rgsslab/ode_embedding.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include <boost/math/tools/roots.hpp>

#include "rgsslab/errors.hpp"
#include "rgsslab/quadrature.hpp"
#include "rgsslab/rng.hpp"

namespace rgsslab::ode {

Point make_point(double t, const CauchyData& d, const PolyRHS& r, double u) {
    return Point{{"t", t}, {"tau", d.tau}, {"x", d.x}, {"a", r.a}, {"b", r.b}, {"c", r.c}, {"u", u}};
}

double direct_solve(const PolyRHS& rhs, const CauchyData& data, double t, const IntegratorConfig& cfg) {
    if (t == data.tau) return data.x;
    auto f = [&rhs](double, const std::vector<double>& y, std::vector<double>& dy) { dy[0] = rhs.f(y[0]); };
    try {
        return integrate_dopri5(f, data.tau, {data.x}, t, cfg).y[0];
    } catch (const BlowUpError& e) {
        throw BlowUpError(e.reached(), "Cauchy solution blows up near t = " + format_g(e.reached()));
    }
}

SolutionSampler direct_sampler(const IntegratorConfig& cfg) {
    return SolutionSampler::scalar("u", [cfg](const Point& p) {
        return direct_solve(PolyRHS::from(p), {p.at("tau"), p.at("x")}, p.at("t"), cfg);
    });
}

SolutionSampler exact_r1_sampler() {
    return SolutionSampler::scalar("u", [](const Point& p) {
        const double x = p.at("x");
        return x / (1 - p.at("a") * x * (p.at("t") - p.at("tau")));
    });
}

double embedding_residual(const SolutionSampler& sol, const PolyRHS& rhs, const Point& p,
                          const NumDiffConfig& nd) {
    return sol.derivative(p, "tau", 0, 1, nd) + rhs.f(p.at("x")) * sol.derivative(p, "x", 0, 1, nd);
}

double bracket(const std::function<double(double)>& F, double v, double anchor) {
    if (v == anchor) return 0.0;
    if (!(v * anchor > 0))
        fail(ErrorKind::QuadratureSingularity, "bracket interval crosses u = 0");
    // Geometric panels keep every sub-interval within a factor 2 in |s|, so wide brackets stay cheap.
    double sum = 0, lo = anchor;
    while (lo != v) {
        double hi = std::abs(v) > std::abs(lo) ? std::min(std::abs(v), 2 * std::abs(lo))
                                               : std::max(std::abs(v), 0.5 * std::abs(lo));
        hi = std::copysign(hi, v);
        sum += integrate_adaptive(F, lo, hi);
        lo = hi;
    }
    return sum;
}

namespace {

using PartialKind = int;  // 0: d/da, 1: d/db, 2: d/dc

double f_param(PartialKind k, double u) { return k == 0 ? u * u : k == 1 ? u * u * u : u * u * u * u; }

// <f_k / f^2>(v) with the point's coefficients.
double param_bracket(PartialKind k, const PolyRHS& r, double v, double anchor) {
    return bracket([k, r](double s) { const double fs = r.f(s); return f_param(k, s) / (fs * fs); }, v, anchor);
}

const char* param_name(PartialKind k) { return k == 0 ? "a" : k == 1 ? "b" : "c"; }

}  // namespace

VectorField make_operator(Operator which, const PolyRHS& rhs, double anchor) {
    VectorField f;
    auto fu = [](const Point& p) { return PolyRHS::from(p).f(p.at("u")); };
    auto fx = [](const Point& p) { return PolyRHS::from(p).f(p.at("x")); };
    auto one = [](const Point&) { return 1.0; };
    switch (which) {
        case Operator::X1:
            f.add("t", one).add("u", fu);
            break;
        case Operator::X2:
            f.add("tau", one).add("x", fx);
            break;
        case Operator::X3:
            f.add("u", fu);
            break;
        case Operator::X4:
            f.add("x", fx);
            break;
        case Operator::X5:
        case Operator::X6:
        case Operator::X7: {
            const PartialKind k = which == Operator::X5 ? 0 : which == Operator::X6 ? 1 : 2;
            f.add("x", [k, anchor](const Point& p) {
                const auto r = PolyRHS::from(p);
                const double x = p.at("x");
                return r.f(x) * param_bracket(k, r, x, anchor);
            });
            f.add("u", [k, anchor](const Point& p) {
                const auto r = PolyRHS::from(p);
                const double u = p.at("u");
                return r.f(u) * param_bracket(k, r, u, anchor);
            });
            f.add(param_name(k), one);
            break;
        }
        case Operator::R1:
            require(rhs.b == 0 && rhs.c == 0, ErrorKind::ConstraintViolated, "R1 requires b = c = 0");
            f.add("x", [](const Point& p) { const double x = p.at("x"); return x * x * p.at("tau"); });
            f.add("a", one);
            f.add("u", [](const Point& p) { const double u = p.at("u"); return u * u * p.at("t"); });
            break;
        case Operator::R2:
            require(rhs.a == 1 && rhs.c == 0, ErrorKind::ConstraintViolated, "R2 requires a = 1, c = 0");
            f.add("x", [](const Point& p) {
                const double x = p.at("x"), b = p.at("b");
                return x * x * (1 + b * x) * p.at("tau") + x;
            });
            f.add("u", [](const Point& p) {
                const double u = p.at("u"), b = p.at("b");
                return u * u * (1 + b * u) * p.at("t") + u;
            });
            f.add("b", [](const Point& p) { return -p.at("b"); });
            break;
        case Operator::R3:
        case Operator::R4: {
            const PartialKind k = which == Operator::R3 ? 1 : 2;
            f.add("t", [k, anchor](const Point& p) { return -param_bracket(k, PolyRHS::from(p), p.at("u"), anchor); });
            f.add("tau", [k, anchor](const Point& p) { return -param_bracket(k, PolyRHS::from(p), p.at("x"), anchor); });
            f.add(param_name(k), one);
            break;
        }
    }
    return f;
}

VectorField rg_operator(Operator which, const PolyRHS& rhs, double anchor) {
    require(which == Operator::R1 || which == Operator::R2 || which == Operator::R3 || which == Operator::R4,
            ErrorKind::InvalidArgument, "rg_operator accepts R1..R4 only");
    return make_operator(which, rhs, anchor);
}

double reconstruct_via_r1(double t, const CauchyData& data, double a, const IntegratorConfig& cfg) {
    if (a == 0.0 || t == data.tau) return data.x;
    const auto R1 = rg_operator(Operator::R1, {a, 0, 0});
    // The x-dynamics do not see u, so flowing back with u = 0 (a fixed point of u' = u^2 t) recovers
    // the unperturbed reference value x0.
    const Point target = make_point(t, data, {a, 0, 0}, 0.0);
    const double x0 = flow(R1, target, -a, cfg).at("x");
    const Point start = make_point(t, {data.tau, x0}, {0, 0, 0}, x0);
    return flow(R1, start, a, cfg).at("u");
}

double reconstruct_via_r2(double t, const CauchyData& data, double b, const IntegratorConfig& cfg, double b_ratio) {
    const double s = t - data.tau;
    const double x = data.x;
    if (s == 0.0) return x;
    if (b == 0.0) return x / (1 - x * s);
    require(b_ratio > 0 && b_ratio < 1, ErrorKind::InvalidArgument, "b_ratio must lie in (0, 1)");
    // R2 is not translation invariant in time; an origin where t and tau share sign(-x) keeps the
    // x-characteristic bounded over the long flow.
    const double shift = x > 0 ? std::max(t, data.tau) + 1.0 : std::min(t, data.tau) - 1.0;
    const double ts = t - shift, taus = data.tau - shift;
    const auto R2 = rg_operator(Operator::R2, {1, b, 0});
    const double lambda = -std::log(b_ratio);

    const Point target = make_point(ts, {taus, x}, {1, b, 0}, 0.0);
    const Point end = flow(R2, target, lambda, cfg);
    const double xe = end.at("x"), be = end.at("b");
    // Second-order perturbation theory in b around u0 = x/(1 - x s).
    const double z = 1 - xe * s, L = std::log(z);
    const double u0 = xe / z;
    const double u1 = -u0 * u0 * L;
    const double u2 = u0 * u0 * xe * (1 + (L * L - L - 1) / z);
    const double ue = u0 + be * (u1 + be * u2);
    const Point back = flow(R2, make_point(ts, {taus, xe}, {1, be, 0}, ue), -lambda, cfg);
    return back.at("u");
}

namespace {

// Zeros of f other than u = 0, sorted.
std::vector<double> nonzero_roots(const PolyRHS& r) {
    std::vector<double> z;
    if (r.c != 0) {
        const double disc = r.b * r.b - 4 * r.a * r.c;
        if (disc >= 0) {
            const double q = -0.5 * (r.b + std::copysign(std::sqrt(disc), r.b));
            if (q != 0) {
                z.push_back(q / r.c);
                z.push_back(r.a == 0 ? 0.0 : r.a / q);
            }
        }
    } else if (r.b != 0) {
        z.push_back(-r.a / r.b);
    }
    std::erase_if(z, [](double v) { return v == 0.0 || !std::isfinite(v); });
    std::sort(z.begin(), z.end());
    return z;
}

}  // namespace

double reconstruct_implicit(const PolyRHS& rhs, const CauchyData& data, double t, const ImplicitOptions& opt) {
    const double x = data.x, dt = t - data.tau;
    if (dt == 0.0) return x;
    const double fx = rhs.f(x);
    if (fx == 0.0) fail(ErrorKind::QuadratureSingularity, "f vanishes at the reference value");
    const double anchor = opt.anchor.value_or(x);
    auto inv_f = [&rhs](double s) { return 1.0 / rhs.f(s); };
    const double Fx = bracket(inv_f, x, anchor);
    auto G = [&](double u) { return bracket(inv_f, u, anchor) - Fx - dt; };

    const double dir = (fx > 0 ? 1.0 : -1.0) * (dt > 0 ? 1.0 : -1.0);
    // The nearest zero of f in the search direction bounds the bracket; the integral diverges there.
    double wall = std::numeric_limits<double>::infinity();
    for (double z : nonzero_roots(rhs))
        if ((z - x) * dir > 0) wall = std::min(wall, std::abs(z - x));
    if (x * dir < 0) wall = std::min(wall, std::abs(x));

    double lo = x, glo = -dt;  // G(x) = -dt
    double hi = x, ghi = glo;
    double step = 0.05 * std::max(std::abs(x), 1e-3);
    bool found = false;
    for (int k = 0; k < 200; ++k) {
        double dist = std::isfinite(wall) ? wall * (1 - std::ldexp(1.0, -(k + 1))) : step * std::ldexp(1.0, k);
        if (!std::isfinite(wall)) dist = std::min(dist, 1e12);
        if (std::isfinite(wall) && dist >= wall) break;
        hi = x + dir * dist;
        ghi = G(hi);
        if ((ghi > 0) != (glo > 0) || ghi == 0) {
            found = true;
            break;
        }
        lo = hi;
        glo = ghi;
        if (!std::isfinite(wall) && dist >= 1e12) break;
    }
    if (!found) fail(ErrorKind::NoRootInBracket, "no root of the implicit relation before blow-up");
    if (ghi == 0) return hi;
    boost::uintmax_t iters = 200;
    auto [a, b] = boost::math::tools::toms748_solve(G, std::min(lo, hi), std::max(lo, hi),
                                                    lo < hi ? glo : ghi, lo < hi ? ghi : glo,
                                                    boost::math::tools::eps_tolerance<double>(50), iters);
    return 0.5 * (a + b);
}

double fs_residual_r1(const SolutionSampler& sol, const Point& p, const NumDiffConfig& nd) {
    const double u = sol.value(p)[0];
    const double x = p.at("x");
    return p.at("t") * u * u - x * x * p.at("tau") * sol.derivative(p, "x", 0, 1, nd) -
           sol.derivative(p, "a", 0, 1, nd);
}

double solution_transport_check(const VectorField& field, const PolyRHS& rhs, const CauchyData& data, double t,
                                double lambda, const IntegratorConfig& cfg) {
    const double u = direct_solve(rhs, data, t, cfg);
    if (lambda == 0.0) return 0.0;
    const Point moved = flow(field, make_point(t, data, rhs, u), lambda, cfg);
    const double resolved = direct_solve(PolyRHS::from(moved), {moved.at("tau"), moved.at("x")}, moved.at("t"), cfg);
    return std::abs(moved.at("u") - resolved);
}

std::vector<Probe> r1_probes(std::uint64_t seed, std::size_t count, double margin) {
    const CounterRng rng(seed);
    std::vector<Probe> out;
    for (std::uint64_t k = 0; out.size() < count; ++k) {
        Probe p{};
        p.x = rng.uniform(-2, 2, 11, 5 * k);
        p.rhs = {rng.uniform(0.05, 2, 11, 5 * k + 1), 0, 0};
        p.tau = rng.uniform(-1, 1, 11, 5 * k + 2);
        p.t = p.tau + rng.uniform(-1.5, 1.5, 11, 5 * k + 3);
        if (std::abs(p.x) < 0.05) continue;
        // 1 - a' x s is linear in a', so checking a' = a covers the whole flow from 0.
        if (1 - p.rhs.a * p.x * (p.t - p.tau) < margin) continue;
        // The backward x-flow to a = 0 passes x / (1 + a' x tau).
        if (1 + p.rhs.a * p.x * p.tau < margin) continue;
        out.push_back(p);
    }
    return out;
}

std::vector<Probe> implicit_probes(std::uint64_t seed, std::size_t count) {
    const CounterRng rng(seed);
    std::vector<Probe> out;
    for (std::uint64_t k = 0; out.size() < count; ++k) {
        Probe p{};
        p.x = rng.uniform(0.1, 1.5, 12, 6 * k);
        p.rhs = {rng.uniform(0.1, 1.5, 12, 6 * k + 1), rng.uniform(0, 0.5, 12, 6 * k + 2),
                 rng.uniform(0, 0.2, 12, 6 * k + 3)};
        p.tau = rng.uniform(-1, 1, 12, 6 * k + 4);
        const double frac = rng.uniform(-1, 0.8, 12, 6 * k + 5);
        const auto r = p.rhs;
        // Time for u to reach infinity from x: int_x^inf ds / f(s), taken to a large cutoff.
        const double t_star = bracket([r](double s) { return 1.0 / r.f(s); }, 1e8, p.x);
        p.t = p.tau + frac * t_star;
        out.push_back(p);
    }
    return out;
}

}  // namespace rgsslab::ode
