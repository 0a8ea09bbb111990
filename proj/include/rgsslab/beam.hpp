#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "rgsslab/jet.hpp"

namespace rgsslab {

// Even transverse intensity N(x) with N(0) = max N, strictly decreasing on x >= 0.
struct BeamProfile {
    std::string name;
    // Taylor jet of N about x0 with `len` coefficients.
    std::function<Jet(double x0, std::size_t len)> jet;
    // Closed-form jet of the inverse H = (N restricted to x >= 0)^-1 about n0; empty when unknown.
    std::function<Jet(double n0, std::size_t len)> inverse_jet;
    // Jet of m(y) = N(sqrt y) about y0 >= 0; empty when unknown. Used by the cylindrical solver,
    // where expanding in y = x^2 avoids dividing by x.
    std::function<Jet(double y0, std::size_t len)> y_jet;
    // Coefficients beyond this index are not trustworthy (spline tables).
    std::size_t exact_len = 1000;

    double operator()(double x) const { return jet(x, 1)[0]; }
};

// N = cosh^-2(x).
BeamProfile sech2_beam();
// N = exp(-x^2).
BeamProfile gaussian_beam();
// Uniform samples of N on x >= 0 starting at 0, extended evenly; cubic B-spline, so jets carry
// two exact derivatives.
BeamProfile table_beam(const std::vector<double>& x, const std::vector<double>& n, std::string name = "table");

// Inverse of N on x >= 0. Closed form when the profile has one, otherwise a bracketed root.
std::function<double(double)> boundary_to_hodograph(const BeamProfile& p);

// Jet of H about n0 with `len` coefficients: closed form or series reversion of the N jet.
Jet hodograph_boundary_jet(const BeamProfile& p, double n0, std::size_t len);

}  // namespace rgsslab
