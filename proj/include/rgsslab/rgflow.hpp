#pragma once

#include <functional>
#include <utility>

#include "rgsslab/integrator.hpp"

namespace rgsslab::rgflow {

struct BetaFunction1 {
    std::function<double(double g)> beta;
};

struct BetaFunction2 {
    std::function<double(double y, double g, double h)> beta1;
    std::function<double(double y, double g, double h)> beta2;
};

struct EffectiveCoupling {
    std::function<double(double x, double g)> gbar;
};

// Solves x dgbar/dx = beta(gbar), gbar(1) = g, integrating in ln x. A pole before x is reported
// as BlowUpError whose reached() is the singular x.
double effective_coupling(const BetaFunction1& b, double x, double g, const IntegratorConfig& cfg);

EffectiveCoupling make_effective_coupling(const BetaFunction1& b, const IntegratorConfig& cfg);

// |gbar(x, g) - gbar(x/a, gbar(a, g))|.
double functional_equation_residual(const EffectiveCoupling& ec, double x, double a, double g);

// x dgbar/dx = beta1(y/x; gbar, hbar), x dhbar/dx = beta2(y/x; gbar, hbar) from x = 1.
std::pair<double, double> two_coupling_flow(const BetaFunction2& b, double x, double y, double g,
                                            double h, const IntegratorConfig& cfg);

// First x in (1, x_max] where the flow from g blows up; throws PreconditionFailed if none.
double singular_point(const BetaFunction1& b, double g, double x_max, const IntegratorConfig& cfg);

}  // namespace rgsslab::rgflow
