#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "rgsslab/integrator.hpp"
#include "rgsslab/numdiff.hpp"
#include "rgsslab/point.hpp"

namespace rgsslab {

using ScalarFn = std::function<double(const Point&)>;

struct Coefficient {
    std::string var;
    ScalarFn fn;
};

// Infinitesimal operator sum_i c_i(p) d/d(var_i). Autonomous in the group parameter.
class VectorField {
public:
    explicit VectorField(std::string param_name = "lambda") : param_(std::move(param_name)) {}

    VectorField& add(std::string var, ScalarFn fn);

    const std::string& param_name() const noexcept { return param_; }
    const std::vector<Coefficient>& coefficients() const noexcept { return coeffs_; }

    bool touches(std::string_view var) const;
    // Zero when the field has no component on `var`.
    double coefficient(std::string_view var, const Point& p) const;

    VectorField scaled(double s) const;
    friend VectorField operator+(const VectorField& a, const VectorField& b);

private:
    std::string param_;
    std::vector<Coefficient> coeffs_;
};

// Integrates d(coords)/d(lambda) = coefficients from 0 to lambda. Coordinates the field does not
// touch are carried unchanged.
Point flow(const VectorField& field, const Point& start, double lambda, const IntegratorConfig& cfg);

// Max-norm of flow(flow(p, l1), l2) - flow(p, l1 + l2) over all coordinates.
double compose_residual(const VectorField& field, const Point& start, double l1, double l2,
                        const IntegratorConfig& cfg);

struct SolutionSampler {
    enum class Mode { Analytic, Numeric };
    using PartialFn = std::function<double(const Point&, std::string_view var, std::size_t dep, int order)>;

    std::vector<std::string> dependents;
    std::function<std::vector<double>(const Point&)> value;
    // Only consulted in Analytic mode.
    PartialFn partial;
    Mode mode = Mode::Numeric;

    double derivative(const Point& p, std::string_view var, std::size_t dep, int order,
                      const NumDiffConfig& nd) const;

    static SolutionSampler scalar(std::string dependent, ScalarFn f);
};

// kappa_j = eta_j - sum_i xi_i du_j/dx_i, coefficients evaluated at p extended by u(p).
std::vector<double> canonical_residual(const VectorField& field, const SolutionSampler& sol,
                                       const Point& p, const NumDiffConfig& nd);

// R C - phi C for the first dependent of `c`.
double covariant_residual(const VectorField& field, const SolutionSampler& c, const ScalarFn& phi,
                          const Point& p, const NumDiffConfig& nd);

}  // namespace rgsslab
