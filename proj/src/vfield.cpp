#include "rgsslab/vfield.hpp"

#include <algorithm>
#include <cmath>

#include "rgsslab/errors.hpp"

namespace rgsslab {

VectorField& VectorField::add(std::string var, ScalarFn fn) {
    require(var != param_, ErrorKind::InvalidArgument, "field may not depend on its own group parameter");
    for (auto& c : coeffs_) {
        if (c.var == var) {
            auto prev = std::move(c.fn);
            c.fn = [prev, fn](const Point& p) { return prev(p) + fn(p); };
            return *this;
        }
    }
    coeffs_.push_back({std::move(var), std::move(fn)});
    return *this;
}

bool VectorField::touches(std::string_view var) const {
    return std::any_of(coeffs_.begin(), coeffs_.end(), [&](const Coefficient& c) { return c.var == var; });
}

double VectorField::coefficient(std::string_view var, const Point& p) const {
    for (const auto& c : coeffs_)
        if (c.var == var) return c.fn(p);
    return 0.0;
}

VectorField VectorField::scaled(double s) const {
    VectorField out(param_);
    for (const auto& c : coeffs_) {
        auto fn = c.fn;
        out.coeffs_.push_back({c.var, [fn, s](const Point& p) { return s * fn(p); }});
    }
    return out;
}

VectorField operator+(const VectorField& a, const VectorField& b) {
    VectorField out = a;
    for (const auto& c : b.coeffs_) out.add(c.var, c.fn);
    return out;
}

Point flow(const VectorField& field, const Point& start, double lambda, const IntegratorConfig& cfg) {
    for (const auto& c : field.coefficients())
        require(start.has(c.var), ErrorKind::InvalidArgument,
                "flow start lacks coordinate '" + c.var + "'");
    if (lambda == 0.0) return start;

    const auto& coeffs = field.coefficients();
    std::vector<double> y0;
    y0.reserve(coeffs.size());
    for (const auto& c : coeffs) y0.push_back(start.at(c.var));

    Point work = start;
    std::vector<double*> slots;
    for (const auto& c : coeffs) slots.push_back(&work.slot(c.var));
    auto rhs = [&](double, const std::vector<double>& y, std::vector<double>& dy) {
        for (std::size_t i = 0; i < y.size(); ++i) *slots[i] = y[i];
        for (std::size_t i = 0; i < y.size(); ++i) dy[i] = coeffs[i].fn(work);
    };
    auto res = integrate_dopri5(rhs, 0.0, std::move(y0), lambda, cfg);

    Point out = start;
    for (std::size_t i = 0; i < coeffs.size(); ++i) out.set(coeffs[i].var, res.y[i]);
    return out;
}

double compose_residual(const VectorField& field, const Point& start, double l1, double l2,
                        const IntegratorConfig& cfg) {
    const Point two_step = flow(field, flow(field, start, l1, cfg), l2, cfg);
    const Point one_step = flow(field, start, l1 + l2, cfg);
    double r = 0;
    for (const auto& [k, v] : one_step.coords()) r = std::max(r, std::abs(two_step.at(k) - v));
    return r;
}

double SolutionSampler::derivative(const Point& p, std::string_view var, std::size_t dep, int order,
                                   const NumDiffConfig& nd) const {
    require(dep < dependents.size(), ErrorKind::InvalidArgument, "dependent index out of range");
    require(order == 1 || order == 2, ErrorKind::DerivativeUnavailable, "derivative order must be 1 or 2");
    if (!p.has(var))
        fail(ErrorKind::DerivativeUnavailable, "sampler point has no variable '" + std::string(var) + "'");
    if (mode == Mode::Analytic && partial) return partial(p, var, dep, order);
    if (!value) fail(ErrorKind::DerivativeUnavailable, "sampler has no value function");
    auto comp = [&](const Point& q) { return value(q)[dep]; };
    return numdiff(comp, p, var, order, nd);
}

SolutionSampler SolutionSampler::scalar(std::string dependent, ScalarFn f) {
    SolutionSampler s;
    s.dependents = {std::move(dependent)};
    s.value = [f = std::move(f)](const Point& p) { return std::vector<double>{f(p)}; };
    return s;
}

namespace {
bool is_dependent(const SolutionSampler& sol, const std::string& var) {
    return std::find(sol.dependents.begin(), sol.dependents.end(), var) != sol.dependents.end();
}
}  // namespace

std::vector<double> canonical_residual(const VectorField& field, const SolutionSampler& sol,
                                       const Point& p, const NumDiffConfig& nd) {
    const auto u = sol.value(p);
    require(u.size() == sol.dependents.size(), ErrorKind::InvalidArgument,
            "sampler value size does not match its dependents");
    Point q = p;
    for (std::size_t j = 0; j < u.size(); ++j) q.set(sol.dependents[j], u[j]);

    std::vector<double> kappa(u.size());
    for (std::size_t j = 0; j < u.size(); ++j) {
        double k = field.coefficient(sol.dependents[j], q);
        for (const auto& c : field.coefficients()) {
            if (is_dependent(sol, c.var)) continue;
            const double xi = c.fn(q);
            if (xi == 0.0) continue;
            k -= xi * sol.derivative(p, c.var, j, 1, nd);
        }
        kappa[j] = k;
    }
    return kappa;
}

double covariant_residual(const VectorField& field, const SolutionSampler& c, const ScalarFn& phi,
                          const Point& p, const NumDiffConfig& nd) {
    const double cv = c.value(p)[0];
    double r = 0;
    for (const auto& co : field.coefficients()) {
        if (is_dependent(c, co.var)) continue;
        const double xi = co.fn(p);
        if (xi == 0.0) continue;
        r += xi * c.derivative(p, co.var, 0, 1, nd);
    }
    return r - phi(p) * cv;
}

}  // namespace rgsslab
