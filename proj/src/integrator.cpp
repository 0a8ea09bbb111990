#include "rgsslab/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rgsslab/errors.hpp"

namespace rgsslab {

void IntegratorConfig::validate() const {
    require(rel_tol > 0 && abs_tol > 0, ErrorKind::InvalidArgument, "tolerances must be positive");
    require(max_steps >= 1, ErrorKind::InvalidArgument, "max_steps must be >= 1");
    require(max_step > 0, ErrorKind::InvalidArgument, "max_step must be positive");
    require(blowup_bound > 0, ErrorKind::InvalidArgument, "blowup_bound must be positive");
}

namespace {

constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192, a75 = -2187.0 / 6784,
                 a76 = 11.0 / 84;
// Difference between the 5th- and 4th-order weights.
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

bool all_finite(const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

double scaled_norm(const std::vector<double>& v, const std::vector<double>& y,
                   const IntegratorConfig& cfg) {
    double s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        double sc = cfg.abs_tol + cfg.rel_tol * std::abs(y[i]);
        s += (v[i] / sc) * (v[i] / sc);
    }
    return v.empty() ? 0.0 : std::sqrt(s / static_cast<double>(v.size()));
}

double initial_step(const OdeRhs& rhs, double t0, const std::vector<double>& y0,
                    const std::vector<double>& f0, double dir, double span,
                    const IntegratorConfig& cfg) {
    double d0 = scaled_norm(y0, y0, cfg), d1 = scaled_norm(f0, y0, cfg);
    double h0 = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
    h0 = std::min({h0, std::abs(span), cfg.max_step});
    std::vector<double> y1(y0.size()), f1(y0.size());
    for (std::size_t i = 0; i < y0.size(); ++i) y1[i] = y0[i] + dir * h0 * f0[i];
    rhs(t0 + dir * h0, y1, f1);
    std::vector<double> df(y0.size());
    for (std::size_t i = 0; i < y0.size(); ++i) df[i] = f1[i] - f0[i];
    double d2 = all_finite(df) ? scaled_norm(df, y0, cfg) / h0 : 1e300;
    double h1 = std::max(d1, d2) <= 1e-15 ? std::max(1e-6, h0 * 1e-3)
                                          : std::pow(0.01 / std::max(d1, d2), 0.2);
    return std::min({100 * h0, h1, std::abs(span), cfg.max_step});
}

}  // namespace

OdeResult integrate_dopri5(const OdeRhs& rhs, double t0, std::vector<double> y, double t1,
                           const IntegratorConfig& cfg) {
    cfg.validate();
    OdeResult res;
    const double span = t1 - t0;
    if (span == 0.0) {
        res.y = std::move(y);
        return res;
    }
    const double dir = span > 0 ? 1.0 : -1.0;
    const double h_min = 1e-14 * std::abs(span);
    const std::size_t n = y.size();
    std::vector<double> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), ytmp(n), ynew(n), err(n);

    rhs(t0, y, k1);
    if (!all_finite(k1)) throw BlowUpError(t0, "non-finite field at the start point");
    double h = initial_step(rhs, t0, y, k1, dir, span, cfg);
    double t = t0;
    bool last_rejected = false;

    while (dir * (t1 - t) > 0) {
        if (res.accepted + res.rejected >= cfg.max_steps)
            fail(ErrorKind::StepLimit, "max_steps exhausted at t = " + format_g(t));
        if (h < h_min) throw BlowUpError(t, "step size underflow at t = " + format_g(t));
        bool final_step = false;
        if (h >= std::abs(t1 - t)) {
            h = std::abs(t1 - t);
            final_step = true;
        }
        const double hs = dir * h;

        for (std::size_t i = 0; i < n; ++i) ytmp[i] = y[i] + hs * a21 * k1[i];
        rhs(t + c2 * hs, ytmp, k2);
        for (std::size_t i = 0; i < n; ++i) ytmp[i] = y[i] + hs * (a31 * k1[i] + a32 * k2[i]);
        rhs(t + c3 * hs, ytmp, k3);
        for (std::size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + hs * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        rhs(t + c4 * hs, ytmp, k4);
        for (std::size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + hs * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        rhs(t + c5 * hs, ytmp, k5);
        for (std::size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + hs * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        rhs(t + hs, ytmp, k6);
        for (std::size_t i = 0; i < n; ++i)
            ynew[i] = y[i] + hs * (a71 * k1[i] + a73 * k3[i] + a74 * k4[i] + a75 * k5[i] + a76 * k6[i]);
        const double t_new = final_step ? t1 : t + hs;
        rhs(t_new, ynew, k7);

        double enorm;
        if (!all_finite(ynew) || !all_finite(k7)) {
            enorm = 1e300;
        } else {
            double s = 0;
            for (std::size_t i = 0; i < n; ++i) {
                err[i] = hs * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
                double sc = cfg.abs_tol + cfg.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
                s += (err[i] / sc) * (err[i] / sc);
            }
            enorm = n ? std::sqrt(s / static_cast<double>(n)) : 0.0;
        }

        if (enorm <= 1.0) {
            t = t_new;
            y.swap(ynew);
            k1.swap(k7);
            ++res.accepted;
            for (double v : y)
                if (std::abs(v) > cfg.blowup_bound)
                    throw BlowUpError(t, "state exceeded bound at t = " + format_g(t));
            double fac = enorm == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(enorm, -0.2), 0.2, 5.0);
            if (last_rejected) fac = std::min(fac, 1.0);
            h = std::min(h * fac, cfg.max_step);
            last_rejected = false;
        } else {
            ++res.rejected;
            double fac = enorm >= 1e300 ? 0.1 : std::clamp(0.9 * std::pow(enorm, -0.2), 0.1, 1.0);
            h *= fac;
            last_rejected = true;
        }
    }
    res.y = std::move(y);
    return res;
}

std::vector<double> integrate_rk4(const OdeRhs& rhs, double t0, std::vector<double> y, double t1,
                                  long steps) {
    require(steps >= 1, ErrorKind::InvalidArgument, "rk4 needs at least one step");
    const std::size_t n = y.size();
    const double h = (t1 - t0) / static_cast<double>(steps);
    std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);
    for (long s = 0; s < steps; ++s) {
        const double t = t0 + static_cast<double>(s) * h;
        rhs(t, y, k1);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
        rhs(t + 0.5 * h, tmp, k2);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
        rhs(t + 0.5 * h, tmp, k3);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * k3[i];
        rhs(t + h, tmp, k4);
        for (std::size_t i = 0; i < n; ++i) y[i] += h / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    }
    return y;
}

}  // namespace rgsslab
