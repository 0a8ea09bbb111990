#include "rgsslab/rgflow.hpp"

#include <cmath>

#include "rgsslab/errors.hpp"
#include "rgsslab/vfield.hpp"

namespace rgsslab::rgflow {

double effective_coupling(const BetaFunction1& b, double x, double g, const IntegratorConfig& cfg) {
    require(x > 0, ErrorKind::InvalidArgument, "effective coupling needs x > 0");
    VectorField field("s");
    field.add("g", [beta = b.beta](const Point& p) { return beta(p.at("g")); });
    try {
        return flow(field, Point{{"g", g}}, std::log(x), cfg).at("g");
    } catch (const BlowUpError& e) {
        const double xs = std::exp(e.reached());
        throw BlowUpError(xs, "effective coupling singular near x = " + format_g(xs));
    }
}

EffectiveCoupling make_effective_coupling(const BetaFunction1& b, const IntegratorConfig& cfg) {
    return {[b, cfg](double x, double g) { return effective_coupling(b, x, g, cfg); }};
}

double functional_equation_residual(const EffectiveCoupling& ec, double x, double a, double g) {
    require(x > 0 && a > 0, ErrorKind::InvalidArgument, "functional equation needs x, a > 0");
    return std::abs(ec.gbar(x, g) - ec.gbar(x / a, ec.gbar(a, g)));
}

std::pair<double, double> two_coupling_flow(const BetaFunction2& b, double x, double y, double g,
                                            double h, const IntegratorConfig& cfg) {
    require(x > 0, ErrorKind::InvalidArgument, "two-coupling flow needs x > 0");
    VectorField field("lambda");
    field.add("s", [](const Point&) { return 1.0; });
    field.add("g", [beta = b.beta1](const Point& p) {
        return beta(p.at("y") * std::exp(-p.at("s")), p.at("g"), p.at("h"));
    });
    field.add("h", [beta = b.beta2](const Point& p) {
        return beta(p.at("y") * std::exp(-p.at("s")), p.at("g"), p.at("h"));
    });
    try {
        Point end = flow(field, Point{{"s", 0.0}, {"g", g}, {"h", h}, {"y", y}}, std::log(x), cfg);
        return {end.at("g"), end.at("h")};
    } catch (const BlowUpError& e) {
        const double xs = std::exp(e.reached());
        throw BlowUpError(xs, "two-coupling flow singular near x = " + format_g(xs));
    }
}

double singular_point(const BetaFunction1& b, double g, double x_max, const IntegratorConfig& cfg) {
    try {
        effective_coupling(b, x_max, g, cfg);
    } catch (const BlowUpError& e) {
        return e.reached();
    }
    fail(ErrorKind::PreconditionFailed, "no singularity below x_max");
}

}  // namespace rgsslab::rgflow
