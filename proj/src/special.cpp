#include "rgsslab/special.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/special_functions/airy.hpp>

#include "rgsslab/errors.hpp"
#include "rgsslab/quadrature.hpp"

namespace rgsslab::special {

namespace {

using std::numbers::pi;

constexpr double kLo = -20, kHi = 8, kStep = 0.25;
constexpr int kTerms = 40;

void require_window(double mu) {
    require(std::abs(mu) <= kWindow, ErrorKind::AccuracyWindowExceeded,
            "mu = " + format_g(mu) + " is outside the accuracy window [-20, 20]");
}

// Taylor coefficients of y'' = (mu0 + h) y - 1/pi about mu0 from y, y'.
void taylor(double mu0, double y, double dy, double* a, int n) {
    a[0] = y;
    a[1] = dy;
    for (int k = 0; k + 2 < n; ++k) {
        const double prev = k >= 1 ? a[k - 1] : 0.0;
        a[k + 2] = (mu0 * a[k] + prev - (k == 0 ? 1 / pi : 0.0)) / ((k + 1.0) * (k + 2.0));
    }
}

void step(double mu0, double h, double& y, double& dy) {
    double a[kTerms];
    taylor(mu0, y, dy, a, kTerms);
    double s = 0, ds = 0;
    for (int k = kTerms - 1; k >= 0; --k) {
        s = s * h + a[k];
        if (k >= 1) ds = ds * h + k * a[k];
    }
    y = s;
    dy = ds;
}

// Gi(0) = Bi(0)/3, Gi'(0) = Bi'(0)/3.
const double kGi0 = 1 / (std::pow(3.0, 7.0 / 6.0) * std::tgamma(2.0 / 3.0));
const double kGi0p = 1 / (std::pow(3.0, 5.0 / 6.0) * std::tgamma(1.0 / 3.0));

void asymptotic(double mu, double& y, double& dy) {
    // Gi ~ (1/(pi mu)) sum (3k)!/(k! (3 mu^3)^k), summed to the smallest term.
    const double z = 3 * mu * mu * mu;
    double term = 1, s = 1, ds = 1, last = 1;
    for (int k = 0; k < 60; ++k) {
        const double next = term * (3.0 * k + 1) * (3.0 * k + 2) * (3.0 * k + 3) / ((k + 1.0) * z);
        if (next >= last || next < 1e-17) break;
        term = next;
        last = next;
        s += term;
        ds += (3.0 * (k + 1) + 1) * term;
    }
    y = s / (pi * mu);
    dy = -ds / (pi * mu * mu);
}

}  // namespace

double airy_ai(double mu) {
    require_window(mu);
    return boost::math::airy_ai(mu);
}

double airy_ai_prime(double mu) {
    require_window(mu);
    return boost::math::airy_ai_prime(mu);
}

ScorerTable::ScorerTable(double perturb) {
    const auto n = static_cast<std::size_t>(std::lround((kHi - kLo) / kStep)) + 1;
    const auto i0 = static_cast<std::size_t>(std::lround(-kLo / kStep));
    y_.assign(n, 0.0);
    dy_.assign(n, 0.0);
    y_[i0] = kGi0;
    dy_[i0] = kGi0p;
    double y = kGi0, dy = kGi0p;
    for (std::size_t i = i0; i + 1 < n; ++i) {
        step(kLo + kStep * static_cast<double>(i), kStep, y, dy);
        y_[i + 1] = y;
        dy_[i + 1] = dy;
    }
    y = kGi0;
    dy = kGi0p;
    for (std::size_t i = i0; i > 0; --i) {
        step(kLo + kStep * static_cast<double>(i), -kStep, y, dy);
        y_[i - 1] = y;
        dy_[i - 1] = dy;
    }
    if (perturb != 0)
        for (auto& v : y_) v *= 1 + perturb;
}

void ScorerTable::eval(double mu, double& y, double& dy) const {
    require_window(mu);
    if (mu > kHi) {
        asymptotic(mu, y, dy);
        return;
    }
    const auto i = static_cast<std::size_t>(std::lround((mu - kLo) / kStep));
    const double mu0 = kLo + kStep * static_cast<double>(i);
    y = y_[i];
    dy = dy_[i];
    step(mu0, mu - mu0, y, dy);
}

double ScorerTable::gi(double mu) const {
    double y, dy;
    eval(mu, y, dy);
    return y;
}

double ScorerTable::gi_prime(double mu) const {
    double y, dy;
    eval(mu, y, dy);
    return dy;
}

const ScorerTable& default_scorer_table() {
    static const ScorerTable t;
    return t;
}

double scorer_gi(double mu) { return default_scorer_table().gi(mu); }
double scorer_gi_prime(double mu) { return default_scorer_table().gi_prime(mu); }

namespace {

constexpr double kC1 = 0.355028053887817239260;  // Ai(0)
constexpr double kC2 = 0.258819403792806798405;  // -Ai'(0)

void airy_fg(double x, double& f, double& g) {
    const double x3 = x * x * x;
    double tf = 1, tg = x;
    f = tf;
    g = tg;
    for (int k = 0; k < 200; ++k) {
        tf *= x3 / ((3.0 * k + 2) * (3.0 * k + 3));
        tg *= x3 / ((3.0 * k + 3) * (3.0 * k + 4));
        f += tf;
        g += tg;
        if (std::abs(tf) + std::abs(tg) < 1e-18 * (std::abs(f) + std::abs(g)) && k > 3) break;
    }
}

}  // namespace

double airy_ai_maclaurin(double mu) {
    double f, g;
    airy_fg(mu, f, g);
    return kC1 * f - kC2 * g;
}

double scorer_gi_maclaurin(double mu) {
    double f, g;
    airy_fg(mu, f, g);
    const double bi = std::sqrt(3.0) * (kC1 * f + kC2 * g);
    // Hi = (3^(-2/3)/pi) sum Gamma((k+1)/3) (3^(1/3) mu)^k / k!.
    const double z = std::cbrt(3.0) * mu;
    double pw = 1, hi = 0;
    for (int k = 0; k < 400; ++k) {
        const double term = std::tgamma((k + 1) / 3.0) * pw;
        hi += term;
        if (k > 10 && std::abs(term) < 1e-18 * std::abs(hi)) break;
        pw *= z / (k + 1.0);
    }
    return bi - hi / (std::cbrt(9.0) * pi);
}

namespace {

double contour(double mu, double phase, double sign) {
    // (1/pi) int_0^S exp(-s^3/3 - mu s/2) sin(phase + sign sqrt3 mu s/2) ds; the tail beyond S is
    // below exp(-100).
    const double S = 8 + std::sqrt(std::abs(mu));
    auto f = [&](double s) {
        return std::exp(-s * s * s / 3 - mu * s / 2) * std::sin(phase + sign * std::sqrt(3.0) * mu * s / 2);
    };
    double total = 0;
    const int panels = 8;
    for (int i = 0; i < panels; ++i) total += integrate_adaptive(f, S * i / panels, S * (i + 1) / panels, 1e-12);
    return total / pi;
}

}  // namespace

double airy_ai_contour(double mu) { return contour(mu, pi / 3, -1); }
double scorer_gi_contour(double mu) { return contour(mu, pi / 6, 1); }

}  // namespace rgsslab::special
