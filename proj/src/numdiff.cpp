#include "rgsslab/numdiff.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "rgsslab/errors.hpp"

namespace rgsslab {

void NumDiffConfig::validate() const {
    require(scheme_order == 2 || scheme_order == 4, ErrorKind::InvalidArgument,
            "scheme_order must be 2 or 4");
    require(base_step > 0, ErrorKind::InvalidArgument, "base_step must be positive");
    require(richardson_levels >= 0, ErrorKind::InvalidArgument, "richardson_levels must be >= 0");
}

double NumDiffConfig::step_for(double x, int order) const {
    double h = std::max(base_step, base_step * std::abs(x));
    return order == 2 ? 10.0 * h : h;
}

namespace {

double eval(const std::function<double(double)>& f, double x) {
    double v = f(x);
    if (!std::isfinite(v))
        fail(ErrorKind::StencilOutOfDomain, "non-finite value at stencil node " + format_g(x));
    return v;
}

double stencil(const std::function<double(double)>& f, double x, double h, int order, int scheme) {
    if (order == 1) {
        if (scheme == 2) return (eval(f, x + h) - eval(f, x - h)) / (2 * h);
        return ((eval(f, x - 2 * h) - eval(f, x + 2 * h)) + 8 * (eval(f, x + h) - eval(f, x - h))) / (12 * h);
    }
    const double f0 = eval(f, x);
    if (scheme == 2) return ((eval(f, x + h) - f0) + (eval(f, x - h) - f0)) / (h * h);
    const double inner = (eval(f, x + h) - f0) + (eval(f, x - h) - f0);
    const double outer = (eval(f, x + 2 * h) - f0) + (eval(f, x - 2 * h) - f0);
    return (16 * inner - outer) / (12 * h * h);
}

}  // namespace

double numdiff(const std::function<double(double)>& f, double x, int order, const NumDiffConfig& nd) {
    nd.validate();
    require(order == 1 || order == 2, ErrorKind::InvalidArgument, "derivative order must be 1 or 2");
    const double h = nd.step_for(x, order);
    // Tableau over steps h, 2h, 4h, ...; column k removes the h^(p+2(k-1)) term.
    const int levels = nd.richardson_levels;
    std::vector<double> row(static_cast<std::size_t>(levels) + 1);
    for (int k = 0; k <= levels; ++k) row[static_cast<std::size_t>(k)] = stencil(f, x, h * std::ldexp(1.0, k), order, nd.scheme_order);
    for (int col = 1; col <= levels; ++col) {
        const double fac = std::ldexp(1.0, nd.scheme_order + 2 * (col - 1));
        for (int k = 0; k + col <= levels; ++k) {
            auto& fine = row[static_cast<std::size_t>(k)];
            fine += (fine - row[static_cast<std::size_t>(k + 1)]) / (fac - 1);
        }
    }
    return row[0];
}

double numdiff(const std::function<double(const Point&)>& f, const Point& p, std::string_view var,
               int order, const NumDiffConfig& nd) {
    if (!p.has(var))
        fail(ErrorKind::DerivativeUnavailable, "point has no coordinate '" + std::string(var) + "'");
    Point work = p;
    auto g = [&](double x) {
        work.set(var, x);
        return f(work);
    };
    return numdiff(g, p.at(var), order, nd);
}

}  // namespace rgsslab
