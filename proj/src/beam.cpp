#include "rgsslab/beam.hpp"

#include <cmath>
#include <memory>

#include <boost/math/interpolators/cardinal_cubic_b_spline.hpp>
#include <boost/math/tools/roots.hpp>

#include "rgsslab/errors.hpp"

namespace rgsslab {

BeamProfile sech2_beam() {
    BeamProfile p;
    p.name = "sech2";
    p.jet = [](double x0, std::size_t len) { return pow(cosh(Jet::variable(x0, len)), -2.0); };
    p.inverse_jet = [](double n0, std::size_t len) {
        require(n0 > 0 && n0 < 1, ErrorKind::NotInvertible, "sech2 inverse jet needs 0 < n < 1");
        // arcosh(u) = ln(u + sqrt(u^2 - 1)), u = n^-1/2.
        const Jet u = pow(Jet::variable(n0, len), -0.5);
        return log(u + sqrt(u * u + (-1.0)));
    };
    p.y_jet = [](double y0, std::size_t len) {
        // cosh(sqrt y) = sum y^k / (2k)!, entire in y; the truncated sum is re-expanded about y0.
        const std::size_t terms = len + 40 + static_cast<std::size_t>(4 * std::sqrt(y0));
        std::vector<double> c(terms);
        double f = 1;
        for (std::size_t k = 0; k < terms; ++k) {
            c[k] = 1 / f;
            f *= static_cast<double>((2 * k + 1) * (2 * k + 2));
        }
        return pow(Jet(std::move(c)).shifted(y0).truncated(len), -2.0);
    };
    return p;
}

BeamProfile gaussian_beam() {
    BeamProfile p;
    p.name = "gaussian";
    p.jet = [](double x0, std::size_t len) {
        const Jet x = Jet::variable(x0, len);
        return exp(-(x * x));
    };
    p.inverse_jet = [](double n0, std::size_t len) {
        require(n0 > 0 && n0 < 1, ErrorKind::NotInvertible, "gaussian inverse jet needs 0 < n < 1");
        return sqrt(-log(Jet::variable(n0, len)));
    };
    p.y_jet = [](double y0, std::size_t len) { return exp(-Jet::variable(y0, len)); };
    return p;
}

BeamProfile table_beam(const std::vector<double>& x, const std::vector<double>& n, std::string name) {
    require(x.size() == n.size() && x.size() >= 4, ErrorKind::InvalidArgument, "beam table needs >= 4 matching samples");
    require(x.front() == 0, ErrorKind::InvalidArgument, "beam table must start at x = 0");
    const double h = (x.back() - x.front()) / static_cast<double>(x.size() - 1);
    for (std::size_t i = 1; i < x.size(); ++i) {
        require(std::abs(x[i] - x[i - 1] - h) <= 1e-9 * h, ErrorKind::InvalidArgument, "beam table spacing must be uniform");
        require(n[i] < n[i - 1], ErrorKind::NotInvertible, "beam table must be strictly decreasing");
    }
    require(n.back() > 0, ErrorKind::InvalidArgument, "beam table intensities must be positive");
    // Zero slope at the axis keeps the even extension smooth.
    auto spline = std::make_shared<boost::math::interpolators::cardinal_cubic_b_spline<double>>(
        n.begin(), n.end(), 0.0, h, 0.0, (n[n.size() - 1] - n[n.size() - 2]) / h);
    const double x_end = x.back();
    BeamProfile p;
    p.name = std::move(name);
    p.exact_len = 3;
    p.jet = [spline, x_end](double x0, std::size_t len) {
        const double s = x0 < 0 ? -1.0 : 1.0;
        const double ax = std::min(std::abs(x0), x_end);
        auto j = Jet::constant(0.0, len);
        if (len > 0) j[0] = (*spline)(ax);
        if (len > 1) j[1] = s * spline->prime(ax);
        if (len > 2) j[2] = 0.5 * spline->double_prime(ax);
        return j;
    };
    return p;
}

std::function<double(double)> boundary_to_hodograph(const BeamProfile& p) {
    if (p.inverse_jet) return [p](double n) {
        require(n > 0 && n <= 1, ErrorKind::NotInvertible, "n must lie in (0, 1]");
        return n == 1 ? 0.0 : p.inverse_jet(n, 1)[0];
    };
    // Monotonicity on a sample grid out to where N is negligible.
    const double peak = p(0);
    double prev = peak, x = 0;
    while (x < 50 && prev > 1e-12 * peak) {
        x += 0.01;
        const double v = p(x);
        require(v < prev || (v == prev && v <= 1e-12 * peak), ErrorKind::NotInvertible,
                "profile " + p.name + " is not strictly decreasing on x >= 0");
        prev = v;
    }
    const double x_far = x;
    return [p, peak, x_far](double n) {
        require(n > 0 && n <= peak, ErrorKind::NotInvertible, "n outside the profile range");
        if (n == peak) return 0.0;
        double hi = 1;
        while (p(hi) > n) {
            hi *= 2;
            require(hi <= 2 * x_far + 2, ErrorKind::NotInvertible, "n below the resolvable profile tail");
        }
        boost::math::tools::eps_tolerance<double> tol(52);
        std::uintmax_t iters = 200;
        auto r = boost::math::tools::toms748_solve([&](double s) { return p(s) - n; }, 0.0, hi, tol, iters);
        return 0.5 * (r.first + r.second);
    };
}

Jet hodograph_boundary_jet(const BeamProfile& p, double n0, std::size_t len) {
    if (p.inverse_jet) return p.inverse_jet(n0, len);
    const double x0 = boundary_to_hodograph(p)(n0);
    return revert(p.jet(x0, len)) + x0;
}

}  // namespace rgsslab
