#include "rgsslab/nlo.hpp"

#include <array>
#include <cmath>

#include <boost/math/tools/roots.hpp>

#include "rgsslab/errors.hpp"

namespace rgsslab::nlo {

void BeamBoundary::validate() const {
    require(static_cast<bool>(profile.jet), ErrorKind::InvalidArgument, "beam profile is missing");
    require(alpha >= 0 && beta >= 0, ErrorKind::InvalidArgument, "alpha and beta must be non-negative");
    require(nu_geom == 1 || nu_geom == 2, ErrorKind::InvalidArgument, "nu_geom must be 1 or 2");
    require(T > 0, ErrorKind::InvalidArgument, "T must be positive (infinity for a flat front)");
}

namespace {

// Power-series coefficients in w; tau_k and chi_k are jets in n about the node.
struct NodeSeries {
    double n;
    std::vector<Jet> tau, chi;
};

NodeSeries node_series(const BeamProfile& p, double alpha, double n, const SeriesConfig& s) {
    require(n > 0 && n < 1, ErrorKind::WindowTooWide, "hodograph nodes must lie strictly inside (0, 1)");
    require(s.order >= 1, ErrorKind::InvalidArgument, "series order must be >= 1");
    const auto K = static_cast<std::size_t>(s.order);
    const std::size_t len = K + 3;
    NodeSeries ns{n, std::vector<Jet>(K + 1), std::vector<Jet>(K + 1)};
    ns.chi[0] = hodograph_boundary_jet(p, n, len);
    for (std::size_t k = 0; k < len; ++k)
        require(std::isfinite(ns.chi[0][k]), ErrorKind::WindowTooWide, "boundary jet is not finite at this n");
    ns.tau[0] = Jet::constant(0.0, len);
    const Jet nv = Jet::variable(n, len);
    for (std::size_t k = 0; k < K; ++k) {
        const double inv = 1.0 / static_cast<double>(k + 1);
        ns.tau[k + 1] = (nv * der(ns.chi[k])) * inv;
        ns.chi[k + 1] = der(ns.tau[k]) * (-alpha * inv);
    }
    return ns;
}

HodographPoint eval_series(const NodeSeries& ns, double w, const SeriesConfig& s) {
    std::array<double, 6> sum{}, tail{};
    const std::size_t K = ns.tau.size() - 1;
    double wk = 1;
    for (std::size_t k = 0; k <= K; ++k) {
        for (std::size_t d = 0; d < 3; ++d) {
            const double a = wk * ns.tau[k].derivative(d), c = wk * ns.chi[k].derivative(d);
            sum[d] += a;
            sum[3 + d] += c;
            if (k + 1 >= K) {
                tail[d] += std::abs(a);
                tail[3 + d] += std::abs(c);
            }
        }
        wk *= w;
    }
    for (std::size_t i = 0; i < 6; ++i) {
        if (!(tail[i] <= s.tail_tol * std::max(1.0, std::abs(sum[i]))))
            fail(ErrorKind::SeriesDivergence, "hodograph series tail " + format_g(tail[i]) + " at w = " +
                                                  format_g(w) + ", n = " + format_g(ns.n));
    }
    return {w, ns.n, sum[0], sum[1], sum[2], sum[3], sum[4], sum[5]};
}

double fd1(const std::vector<double>& f, std::size_t i, double h) {
    return (-f[i + 2] + 8 * f[i + 1] - 8 * f[i - 1] + f[i - 2]) / (12 * h);
}

double fd2(const std::vector<double>& f, std::size_t i, double h) {
    return (-f[i + 2] + 16 * f[i + 1] - 30 * f[i] + 16 * f[i - 1] - f[i - 2]) / (12 * h * h);
}

// Sum of terms, keeping the largest magnitude as the scale.
struct TermSum {
    double sum = 0, scale = 0;
    TermSum& operator<<(double t) {
        sum += t;
        scale = std::max(scale, std::abs(t));
        return *this;
    }
};

LBCoordPair pair_of(const TermSum& f, const TermSum& g) { return {f.sum, g.sum, std::max(f.scale, g.scale)}; }

}  // namespace

HodographPoint hodograph_point(const BeamProfile& p, double alpha, double w, double n, const SeriesConfig& s) {
    return eval_series(node_series(p, alpha, n, s), w, s);
}

HodographPoint HodographGrid::at_fd(std::size_t iw, std::size_t in) const {
    const std::size_t nn = n_.size();
    require(in >= 2 && in + 2 < nn, ErrorKind::DerivativeUnavailable, "5-point n stencil leaves the grid");
    const double h = (n_.back() - n_.front()) / static_cast<double>(nn - 1);
    std::vector<double> tau(5), chi(5);
    for (std::size_t k = 0; k < 5; ++k) {
        tau[k] = at(iw, in - 2 + k).tau;
        chi[k] = at(iw, in - 2 + k).chi;
    }
    HodographPoint r = at(iw, in);
    r.tau_n = fd1(tau, 2, h);
    r.tau_nn = fd2(tau, 2, h);
    r.chi_n = fd1(chi, 2, h);
    r.chi_nn = fd2(chi, 2, h);
    return r;
}

HodographGrid solve_hodograph(const BeamProfile& p, double alpha, const HodographGridSpec& spec, Exec exec) {
    require(spec.nw >= 1 && spec.nn >= 5, ErrorKind::InvalidArgument, "hodograph grid needs nw >= 1 and nn >= 5");
    require(spec.n_min > 0 && spec.n_max < 1 && spec.n_min < spec.n_max, ErrorKind::WindowTooWide,
            "n window must lie strictly inside (0, 1)");
    require(spec.w_lo <= spec.w_hi, ErrorKind::InvalidArgument, "w range is reversed");
    std::vector<double> w(spec.nw), n(spec.nn);
    for (std::size_t i = 0; i < spec.nw; ++i)
        w[i] = spec.nw == 1 ? spec.w_lo
                            : spec.w_lo + (spec.w_hi - spec.w_lo) * static_cast<double>(i) / static_cast<double>(spec.nw - 1);
    for (std::size_t j = 0; j < spec.nn; ++j)
        n[j] = spec.n_min + (spec.n_max - spec.n_min) * static_cast<double>(j) / static_cast<double>(spec.nn - 1);
    std::vector<HodographPoint> pts(spec.nw * spec.nn);
    for_each_index(
        spec.nn,
        [&](std::size_t j) {
            const NodeSeries ns = node_series(p, alpha, n[j], spec.series);
            for (std::size_t i = 0; i < spec.nw; ++i) pts[i * spec.nn + j] = eval_series(ns, w[i], spec.series);
        },
        exec);
    return HodographGrid(std::move(w), std::move(n), std::move(pts));
}

PhysicalState hodograph_to_physical(const HodographPoint& h, double alpha) {
    const double t = h.tau / h.n, v = alpha * h.w;
    return {t, h.chi + v * t, v, h.n};
}

LBCoordPair lb_coordinates_r7(const HodographPoint& h, double alpha, R7Reading reading) {
    const double n = h.n, w = h.w;
    TermSum f, g;
    f << 2 * n * (1 - n) * h.tau_nn << -n * h.tau_n << -2 * n * w * h.chi_n << -2 * n * n * w * h.chi_nn
      << 0.5 * alpha * n * w * w * (reading == R7Reading::TauNN ? h.tau_nn : h.tau_n);
    g << 2 * n * (1 - n) * h.chi_nn << (2 - 3 * n) * h.chi_n << 2 * alpha * w * n * h.tau_nn << alpha * w * h.tau_n
      << 0.5 * alpha * w * w * n * h.chi_nn << 0.5 * alpha * w * w * h.chi_n;
    return pair_of(f, g);
}

LBCoordPair combined_operator(const HodographPoint& h, double alpha, VReading reading) {
    const double n = h.n, w = h.w;
    const double v = reading == VReading::AlphaW ? alpha * w : w;
    const double q = -n + 0.25 * alpha * w * w;
    TermSum f, g;
    // f1
    f << -0.5 * h.tau << n * h.tau_n << 0.5 * n * w * h.chi_n;
    // 2 f2
    f << 2 * n * h.tau_n;
    // 2 f3
    f << 0.5 * h.tau << -2 * n * h.tau_n << -2.5 * w * n * h.chi_n << 2 * q * n * h.tau_nn << -2 * w * n * n * h.chi_nn;
    // g1
    g << -0.5 * alpha * w * h.tau_n << n * h.chi_n;
    // 2 g2
    g << 2 * h.chi_n << 2 * n * h.chi_nn;
    // 2 g3
    g << 1.5 * v * h.tau_n << -2 * (2 * n - 0.25 * alpha * w * w) * h.chi_n << 2 * alpha * w * n * h.tau_nn
      << 2 * q * n * h.chi_nn;
    return pair_of(f, g);
}

Approx approx_from_string(const std::string& s) {
    if (s == "soliton_a") return Approx::SolitonA;
    if (s == "soliton_b") return Approx::SolitonB;
    if (s == "gauss_a") return Approx::GaussA;
    if (s == "gauss_b") return Approx::GaussB;
    fail(ErrorKind::InvalidArgument, "unknown coefficient set: " + s);
}

const char* to_string(Approx a) {
    switch (a) {
        case Approx::SolitonA: return "soliton_a";
        case Approx::SolitonB: return "soliton_b";
        case Approx::GaussA: return "gauss_a";
        case Approx::GaussB: return "gauss_b";
    }
    return "?";
}

LBCoordPair approx_coeffs(Approx which, const HodographPoint& h, double alpha, double tau_alpha, double chi_alpha) {
    const double n = h.n, w = h.w, t = h.tau, c = h.chi;
    TermSum f, g;
    switch (which) {
        case Approx::SolitonA:
            f << 2 * n * (1 - n) * h.tau_nn << -n * h.tau_n << -2 * n * w * h.chi_n << -2 * n * n * w * h.chi_nn
              << alpha * 0.5 * n * w * w * h.tau_nn;
            g << 2 * n * (1 - n) * h.chi_nn << (2 - 3 * n) * h.chi_n << alpha * w * 2 * n * h.tau_nn
              << alpha * w * h.tau_n << alpha * 0.5 * w * w * n * h.chi_nn << alpha * 0.5 * w * w * h.chi_n;
            break;
        case Approx::SolitonB: {
            const double th = std::tanh(c), sc = 1 / (std::cosh(c) * std::cosh(c));
            f << 1.0 << 2 * n * h.chi_n * th << alpha * t * t / n * sc << -alpha * 2 * t * h.tau_n * sc
              << alpha * 2 * t * t * th * sc;
            g << -alpha * 2 * t * h.chi_n * sc << -alpha * 2 * h.tau_n * th;
            break;
        }
        case Approx::GaussA:
            f << 1.0 << 2 * n * c * h.chi_n << -alpha * 2 * t * h.tau_n << alpha * t * t / n;
            g << -alpha * 2 * t * h.chi_n << -alpha * 2 * c * h.tau_n;
            break;
        case Approx::GaussB:
            f << 2 * n * t * h.chi_n << 2 * n * h.tau_n * c << alpha * 2 * c * tau_alpha;
            g << 1.0 << 2 * n * c * h.chi_n << alpha * 2 * c * chi_alpha << -alpha * 2 * t * h.tau_n;
            break;
    }
    return pair_of(f, g);
}

LBCoordPair approx_coeffs(Approx which, const BeamProfile& p, double alpha, double w, double n, const SeriesConfig& s) {
    const HodographPoint h = hodograph_point(p, alpha, w, n, s);
    if (which != Approx::GaussB) return approx_coeffs(which, h, alpha);
    const double da = std::max(1e-3, 0.05 * alpha);
    const HodographPoint hp = hodograph_point(p, alpha + da, w, n, s);
    const HodographPoint hm = hodograph_point(p, alpha - da, w, n, s);
    return approx_coeffs(which, h, alpha, (hp.tau - hm.tau) / (2 * da), (hp.chi - hm.chi) / (2 * da));
}

OrderFit order_check(Approx which, const BeamProfile& p, const std::vector<double>& alphas,
                     const std::vector<WNPoint>& probes, const SeriesConfig& s) {
    require(alphas.size() >= 3, ErrorKind::PreconditionFailed, "order_check needs at least three alpha values");
    require(!probes.empty(), ErrorKind::PreconditionFailed, "order_check needs probes");
    const double ratio = alphas[1] / alphas[0];
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        require(alphas[i] > 0, ErrorKind::PreconditionFailed, "alpha values must be positive");
        if (i > 0)
            require(std::abs(alphas[i] / alphas[i - 1] - ratio) <= 1e-9 * ratio && ratio != 1,
                    ErrorKind::PreconditionFailed, "alpha values must form a geometric progression");
    }
    OrderFit fit;
    for (double a : alphas) {
        double r = 0;
        for (const auto& pr : probes) {
            const auto c = approx_coeffs(which, p, a, pr.w, pr.n, s);
            r = std::max({r, std::abs(c.f), std::abs(c.g)});
        }
        fit.residuals.push_back(r);
    }
    bool all_floor = true;
    for (double r : fit.residuals) all_floor = all_floor && r < 1e-11;
    if (all_floor)
        fail(ErrorKind::ResidualBelowNoiseFloor,
             std::string(to_string(which)) + " residual is at the noise floor for every alpha (exact symmetry)");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(alphas.size());
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        const double x = std::log(alphas[i]), y = std::log(std::max(fit.residuals[i], 1e-300));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    fit.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    return fit;
}

namespace {

SourceTerms from_jet(const Jet& s) { return {s[0], s.derivative(1), s.derivative(2)}; }

void require_regular(const BeamBoundary& b, double n) {
    if (b.beta != 0)
        require(n > 1e-100, ErrorKind::SingularProfile, "N vanishes where the diffraction term divides by sqrt N");
}

}  // namespace

SourceTerms source_terms_direct(const BeamBoundary& b, double chi) {
    const Jet N = b.profile.jet(chi, 5);
    Jet S = b.alpha * N.truncated(3);
    if (b.beta != 0) {
        require_regular(b, N[0]);
        require(chi != 0, ErrorKind::SingularProfile, "direct source form is singular at chi = 0");
        const Jet P = sqrt(N);
        const Jet dP = der(P);
        const Jet Q = der(dP) + dP.truncated(3) / Jet::variable(chi, 3);
        S += b.beta * (Q / P.truncated(3));
    }
    return from_jet(S);
}

SourceTerms source_terms(const BeamBoundary& b, double chi) {
    if (b.beta == 0 || std::abs(chi) >= 1e-3) return source_terms_direct(b, chi);
    // Expansion about the axis; sqrt N is even, so (sqrt N)' / chi is regular there.
    const Jet N = b.profile.jet(0.0, 9);
    require_regular(b, N[0]);
    const Jet P = sqrt(N);
    Jet dP = der(P);
    dP[0] = 0;
    const Jet Q = der(dP) + div_by_h(dP);
    const Jet S0 = b.alpha * N.truncated(7) + b.beta * (Q / P.truncated(7));
    return from_jet(S0.shifted(chi).truncated(3));
}

namespace {

struct R9Coeffs {
    double ct, cx, cv, cn;
};

R9Coeffs r9_coeffs(const BeamBoundary& b, double t, double x, double v, double n) {
    const SourceTerms s = source_terms(b, x - v * t);
    const double invT = std::isinf(b.T) ? 0.0 : 1.0 / b.T;
    const double th = 1 - t * invT;
    return {th * th + t * t * s.S_chichi, -x * invT * th + t * s.S_chi + v * t * t * s.S_chichi,
            x * invT * invT + v * invT * th + s.S_chi,
            2 * n * invT * th - n * t * (1 + v * t / x) * s.S_chichi - n * t / x * s.S_chi};
}

void require_cylindrical(const BeamBoundary& b) {
    b.validate();
    require(b.nu_geom == 2, ErrorKind::PreconditionFailed, "R9 is defined for the cylindrical geometry");
}

}  // namespace

VectorField r9_field(const BeamBoundary& b) {
    require_cylindrical(b);
    auto c = [b](const Point& p) { return r9_coeffs(b, p.at("t"), p.at("x"), p.at("v"), p.at("n")); };
    VectorField f("s");
    f.add("t", [c](const Point& p) { return c(p).ct; });
    f.add("x", [c](const Point& p) { return c(p).cx; });
    f.add("v", [c](const Point& p) { return c(p).cv; });
    f.add("n", [c](const Point& p) { return c(p).cn; });
    return f;
}

std::vector<Point> propagate_r9(const BeamBoundary& b, double x0, const std::vector<double>& s_values,
                                const IntegratorConfig& cfg) {
    const VectorField field = r9_field(b);
    Point cur{{"t", 0.0}, {"x", x0}, {"v", b.V(x0)}, {"n", b.profile(x0)}};
    double s = 0;
    std::vector<Point> out;
    out.reserve(s_values.size());
    for (double target : s_values) {
        require(target >= s, ErrorKind::InvalidArgument, "propagate_r9 needs non-decreasing parameter values");
        cur = flow(field, cur, target - s, cfg);
        s = target;
        out.push_back(cur);
    }
    return out;
}

namespace {

// (x, v, n) at time t on the R9 trajectory from x0, followed in t.
std::array<double, 3> r9_at_time(const BeamBoundary& b, double x0, double t, const IntegratorConfig& cfg) {
    std::vector<double> y0{x0, b.V(x0), b.profile(x0)};
    if (t == 0) return {y0[0], y0[1], y0[2]};
    OdeRhs rhs = [&b](double tt, const std::vector<double>& y, std::vector<double>& dy) {
        const R9Coeffs c = r9_coeffs(b, tt, y[0], y[1], y[2]);
        if (!(c.ct > 0)) fail(ErrorKind::CharacteristicsCross, "R9 trajectory turns back in t");
        dy[0] = c.cx / c.ct;
        dy[1] = c.cv / c.ct;
        dy[2] = c.cn / c.ct;
    };
    const auto r = integrate_dopri5(rhs, 0.0, y0, t, cfg);
    return {r.y[0], r.y[1], r.y[2]};
}

}  // namespace

BeamState r9_surface(const BeamBoundary& b, double t, double x, const IntegratorConfig& cfg) {
    require_cylindrical(b);
    require(x > 0, ErrorKind::InvalidArgument, "the cylindrical surface is sampled at x > 0");
    require(t >= 0, ErrorKind::InvalidArgument, "t must be non-negative");
    const double th = std::isinf(b.T) ? 1.0 : 1 - t / b.T;
    require(th > 0, ErrorKind::CharacteristicsCross, "t is beyond the geometric focus");
    auto miss = [&](double x0) { return r9_at_time(b, x0, t, cfg)[0] - x; };
    const double guess = x / th;
    double d = 0.05 * std::max(guess, 0.1);
    double lo = std::max(guess - d, 1e-8), hi = guess + d;
    double flo = miss(lo), fhi = miss(hi);
    for (int i = 0; i < 40 && flo * fhi > 0; ++i) {
        d *= 2;
        if (flo > 0) {
            lo = std::max(lo - d, 1e-8);
            flo = miss(lo);
        } else {
            hi += d;
            fhi = miss(hi);
        }
    }
    require(flo * fhi <= 0, ErrorKind::NoRootInBracket, "no R9 trajectory reaches this (t, x)");
    boost::math::tools::eps_tolerance<double> tol(50);
    std::uintmax_t iters = 100;
    const auto r = boost::math::tools::toms748_solve(miss, lo, hi, flo, fhi, tol, iters);
    const auto y = r9_at_time(b, 0.5 * (r.first + r.second), t, cfg);
    return {y[1], y[2]};
}

SolutionSampler r9_surface_sampler(const BeamBoundary& b, const IntegratorConfig& cfg) {
    SolutionSampler s;
    s.dependents = {"v", "n"};
    s.value = [b, cfg](const Point& p) {
        const BeamState st = r9_surface(b, p.at("t"), p.at("x"), cfg);
        return std::vector<double>{st.v, st.n};
    };
    return s;
}

namespace {

// Flat geometry: t-series for v and n with x-jets about x.
void flat_series(const BeamBoundary& b, double x, std::size_t K, std::vector<double>& vc, std::vector<double>& nc) {
    const double invT = std::isinf(b.T) ? 0.0 : 1.0 / b.T;
    const std::size_t len = K + 1;
    std::vector<Jet> V, N, dV, dN;
    V.push_back(Jet::variable(x, len) * (-invT));
    N.push_back(b.profile.jet(x, len));
    dV.push_back(der(V[0]));
    dN.push_back(der(N[0]));
    for (std::size_t k = 0; k < K; ++k) {
        const std::size_t m = len - k - 1;
        Jet vk = b.alpha * dN[k].truncated(m);
        Jet nk = Jet::constant(0.0, m);
        for (std::size_t j = 0; j <= k; ++j) {
            vk -= (V[j] * dV[k - j]).truncated(m);
            nk -= (N[j] * dV[k - j]).truncated(m) + (V[j] * dN[k - j]).truncated(m);
        }
        const double inv = 1.0 / static_cast<double>(k + 1);
        V.push_back(vk * inv);
        N.push_back(nk * inv);
        dV.push_back(der(V.back()));
        dN.push_back(der(N.back()));
    }
    for (std::size_t k = 0; k <= K; ++k) {
        vc.push_back(V[k][0]);
        nc.push_back(N[k][0]);
    }
}

// Jet in y = x^2 about x0^2 of the even profile N.
Jet profile_in_y(const BeamProfile& p, double x0, std::size_t len) {
    const double ax = std::abs(x0);
    if (p.y_jet) return p.y_jet(ax * ax, len);
    if (ax < 0.3) {
        // Even Taylor coefficients about the axis, re-expanded about y0 = x0^2.
        const std::size_t extra = 24;
        const Jet a = p.jet(0.0, 2 * (len + extra));
        std::vector<double> even(len + extra);
        for (std::size_t k = 0; k < even.size(); ++k) even[k] = a[2 * k];
        return Jet(std::move(even)).shifted(ax * ax).truncated(len);
    }
    return compose(p.jet(ax, len), sqrt(Jet::variable(ax * ax, len)));
}

// Cylindrical geometry in y = x^2 with v = x p(y), n = m(y); both p and m are even in x, so the
// geometric term n v / x = n p needs no division:
//   p_t = 2 alpha m' - p^2 - 2 y p p',  m_t = -2 m p - 2 y (m' p + m p').
void cylindrical_series(const BeamBoundary& b, double x, std::size_t K, std::vector<double>& vc,
                        std::vector<double>& nc) {
    const double invT = std::isinf(b.T) ? 0.0 : 1.0 / b.T;
    const std::size_t len = K + 1;
    const Jet Y = Jet::variable(x * x, len);
    std::vector<Jet> P, M, dP, dM;
    P.push_back(Jet::constant(-invT, len));
    M.push_back(profile_in_y(b.profile, x, len));
    dP.push_back(der(P[0]));
    dM.push_back(der(M[0]));
    for (std::size_t k = 0; k < K; ++k) {
        const std::size_t m = len - k - 1;
        Jet pk = (2 * b.alpha) * dM[k].truncated(m);
        Jet mk = Jet::constant(0.0, m);
        Jet pp = Jet::constant(0.0, m), mixed = Jet::constant(0.0, m);
        for (std::size_t j = 0; j <= k; ++j) {
            pk -= (P[j] * P[k - j]).truncated(m);
            pp += (P[j] * dP[k - j]).truncated(m);
            mk -= 2.0 * (M[j] * P[k - j]).truncated(m);
            mixed += (dM[j] * P[k - j]).truncated(m) + (M[j] * dP[k - j]).truncated(m);
        }
        pk -= 2.0 * (Y.truncated(m) * pp);
        mk -= 2.0 * (Y.truncated(m) * mixed);
        const double inv = 1.0 / static_cast<double>(k + 1);
        P.push_back(pk * inv);
        M.push_back(mk * inv);
        dP.push_back(der(P.back()));
        dM.push_back(der(M.back()));
    }
    for (std::size_t k = 0; k <= K; ++k) {
        vc.push_back(x * P[k][0]);
        nc.push_back(M[k][0]);
    }
}

}  // namespace

BeamState direct_nlo_state(const BeamBoundary& b, double t, double x, const DirectConfig& cfg) {
    b.validate();
    require(b.beta == 0, ErrorKind::PreconditionFailed, "the direct solver covers beta = 0 only");
    require(t >= 0, ErrorKind::InvalidArgument, "t must be non-negative");
    const double invT = std::isinf(b.T) ? 0.0 : 1.0 / b.T;
    const double th = 1 - t * invT;
    require(th > 0, ErrorKind::CharacteristicsCross, "t is beyond the geometric focus");
    if (b.alpha == 0) {
        const double x0 = x / th;
        return {b.V(x0), b.profile(x0) / std::pow(th, b.nu_geom)};
    }
    require(cfg.order >= 2, ErrorKind::InvalidArgument, "series order must be >= 2");
    const auto K = static_cast<std::size_t>(cfg.order);
    std::vector<double> vc, nc;
    if (b.nu_geom == 2)
        cylindrical_series(b, x, K, vc, nc);
    else
        flat_series(b, x, K, vc, nc);
    double v = 0, n = 0, tail = 0, tk = 1;
    for (std::size_t k = 0; k <= K; ++k) {
        v += vc[k] * tk;
        n += nc[k] * tk;
        if (k + 1 >= K) tail += std::abs(vc[k] * tk) + std::abs(nc[k] * tk);
        tk *= t;
    }
    if (!(tail <= cfg.tail_tol * std::max(1.0, std::abs(v) + std::abs(n))))
        fail(ErrorKind::CharacteristicsCross, "time series diverges at t = " + format_g(t) +
                                                  " (tail " + format_g(tail) + "): near the gradient catastrophe");
    return {v, n};
}

SolutionSampler direct_nlo_solver(const BeamBoundary& b, const DirectConfig& cfg) {
    b.validate();
    require(b.beta == 0, ErrorKind::PreconditionFailed, "the direct solver covers beta = 0 only");
    SolutionSampler s;
    s.dependents = {"v", "n"};
    s.value = [b, cfg](const Point& p) {
        const BeamState st = direct_nlo_state(b, p.at("t"), p.at("x"), cfg);
        return std::vector<double>{st.v, st.n};
    };
    return s;
}

std::pair<double, double> beam_residual(const BeamBoundary& b, const SolutionSampler& sol, double t, double x,
                                        const NumDiffConfig& nd) {
    require(b.beta == 0, ErrorKind::PreconditionFailed, "beam_residual covers beta = 0 only");
    const Point p{{"t", t}, {"x", x}};
    const auto u = sol.value(p);
    const double v = u.at(0), n = u.at(1);
    const double v_t = sol.derivative(p, "t", 0, 1, nd), v_x = sol.derivative(p, "x", 0, 1, nd);
    const double n_t = sol.derivative(p, "t", 1, 1, nd), n_x = sol.derivative(p, "x", 1, 1, nd);
    const double geom = b.nu_geom == 2 ? n * v / x : 0.0;
    return {v_t + v * v_x - b.alpha * n_x, n_t + n * v_x + v * n_x + geom};
}

}  // namespace rgsslab::nlo
