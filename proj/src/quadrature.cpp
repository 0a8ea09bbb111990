#include "rgsslab/quadrature.hpp"

#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "rgsslab/errors.hpp"

namespace rgsslab {

double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double rel_tol) {
    if (a == b) return 0.0;
    bool bad = false;
    auto guarded = [&](double s) {
        double v = f(s);
        if (!std::isfinite(v)) {
            bad = true;
            return 0.0;
        }
        return v;
    };
    double err = 0, l1 = 0;
    const double v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(guarded, a, b, 15, rel_tol,
                                                                                   &err, &l1);
    if (bad || !std::isfinite(v))
        fail(ErrorKind::QuadratureSingularity, "integrand not finite on the interval");
    // The Kronrod error estimate is unreliable on very short panels; only gross failures count.
    if (err > 1e-4 * std::max(l1, 1e-300) && err > 1e-12 && std::abs(b - a) > 1e-6 * std::max(std::abs(a), std::abs(b)))
        fail(ErrorKind::QuadratureSingularity, "quadrature did not converge");
    return v;
}

}  // namespace rgsslab
