#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "rgsslab/beam.hpp"
#include "rgsslab/integrator.hpp"
#include "rgsslab/numdiff.hpp"
#include "rgsslab/parallel.hpp"
#include "rgsslab/vfield.hpp"

namespace rgsslab::nlo {

// v_t + v v_x - alpha n_x - beta d_x((x^(1-nu)/sqrt n) d_x(x^(nu-1) d_x sqrt n)) = 0,
// n_t + (n v)_x + (nu - 1) n v / x = 0, v(0, x) = -x/T, n(0, x) = N(x).
struct BeamBoundary {
    BeamProfile profile;
    // Front curvature scale; infinity for a flat front.
    double T = std::numeric_limits<double>::infinity();
    double alpha = 0;
    double beta = 0;
    int nu_geom = 1;

    void validate() const;
    double V(double x) const { return std::isinf(T) ? 0.0 : -x / T; }
};

// ---- Hodograph plane: tau = n t, chi = x - v t, w = v / alpha.
// tau_w = n chi_n, chi_w = -alpha tau_n, tau(0, n) = 0, chi(0, n) = H(n).

struct SeriesConfig {
    // Order of the power series in w.
    int order = 60;
    // Largest accepted magnitude of the last two series terms, relative to the field scale.
    double tail_tol = 1e-12;
};

// Fields and their n-derivatives at one hodograph point.
struct HodographPoint {
    double w = 0, n = 0;
    double tau = 0, tau_n = 0, tau_nn = 0;
    double chi = 0, chi_n = 0, chi_nn = 0;
};

// Power series in w with Taylor jets in n about the node; n-derivatives are exact to order 2.
HodographPoint hodograph_point(const BeamProfile& p, double alpha, double w, double n, const SeriesConfig& s = {});

struct HodographGridSpec {
    double w_lo = 0, w_hi = 0.5;
    std::size_t nw = 11;
    double n_min = 0.05, n_max = 0.95;
    std::size_t nn = 91;
    SeriesConfig series;
};

class HodographGrid {
public:
    HodographGrid(std::vector<double> w, std::vector<double> n, std::vector<HodographPoint> pts)
        : w_(std::move(w)), n_(std::move(n)), pts_(std::move(pts)) {}

    const std::vector<double>& w_nodes() const noexcept { return w_; }
    const std::vector<double>& n_nodes() const noexcept { return n_; }
    // Series values and exact n-derivatives.
    const HodographPoint& at(std::size_t iw, std::size_t in) const { return pts_.at(iw * n_.size() + in); }
    // Values from the series, n-derivatives from 5-point centred differences on the n grid.
    HodographPoint at_fd(std::size_t iw, std::size_t in) const;

private:
    std::vector<double> w_, n_;
    std::vector<HodographPoint> pts_;
};

// One series per n node, evaluated at every w node. Nodes are independent; Exec::Serial is the
// reference ordering and yields identical values.
HodographGrid solve_hodograph(const BeamProfile& p, double alpha, const HodographGridSpec& spec,
                              Exec exec = Exec::Parallel);

struct PhysicalState {
    double t, x, v, n;
};

// t = tau/n, v = alpha w, x = chi + v t.
PhysicalState hodograph_to_physical(const HodographPoint& h, double alpha);

// ---- Lie-Backlund coordinates R = f d_tau + g d_chi.

struct LBCoordPair {
    double f = 0, g = 0;
    // Largest magnitude among the terms summed into f and g.
    double scale = 0;
    double relative() const { return scale > 0 ? std::max(std::abs(f), std::abs(g)) / scale : 0.0; }
};

// The alpha-proportional term of f multiplies tau_nn (default) or tau_n.
enum class R7Reading { TauNN, TauN };

LBCoordPair lb_coordinates_r7(const HodographPoint& h, double alpha, R7Reading reading = R7Reading::TauNN);

// How the v in the third operator's g coordinate is read: v = alpha w or v = w.
enum class VReading { AlphaW, W };

// f1 + 2(f2 + f3), g1 + 2(g2 + g3).
LBCoordPair combined_operator(const HodographPoint& h, double alpha, VReading reading = VReading::AlphaW);

enum class Approx { SolitonA, SolitonB, GaussA, GaussB };

Approx approx_from_string(const std::string& s);
const char* to_string(Approx a);

// f = f0 + alpha f1, g = g0 + alpha g1. tau_alpha and chi_alpha are used by GaussB only.
LBCoordPair approx_coeffs(Approx which, const HodographPoint& h, double alpha, double tau_alpha = 0,
                          double chi_alpha = 0);

// Evaluates the point and, for GaussB, the alpha-derivatives by central differences with
// delta = max(1e-3, 0.05 alpha).
LBCoordPair approx_coeffs(Approx which, const BeamProfile& p, double alpha, double w, double n,
                          const SeriesConfig& s = {});

struct OrderFit {
    double slope = 0;
    // Max over probes of max(|f|, |g|), one per alpha.
    std::vector<double> residuals;
};

struct WNPoint {
    double w, n;
};

// Least-squares slope of log residual against log alpha. Raises ResidualBelowNoiseFloor when every
// residual is below 1e-11, PreconditionFailed for fewer than three alphas or a non-geometric list.
OrderFit order_check(Approx which, const BeamProfile& p, const std::vector<double>& alphas,
                     const std::vector<WNPoint>& probes, const SeriesConfig& s = {});

// ---- Cylindrical operator.

struct SourceTerms {
    double S, S_chi, S_chichi;
};

// S = alpha N + beta (chi sqrt N)^-1 d_chi(chi d_chi sqrt N) and two chi-derivatives. Below
// |chi| = 1e-3 the removable singularity is resolved by a Taylor expansion about 0.
SourceTerms source_terms(const BeamBoundary& b, double chi);
// The direct quotient form, without the small-chi expansion; for consistency checks.
SourceTerms source_terms_direct(const BeamBoundary& b, double chi);

// Field over (t, x, v, n) with group parameter "s".
VectorField r9_field(const BeamBoundary& b);

// States along the R9 trajectory from (0, x0, V(x0), N(x0)) at increasing parameter values.
std::vector<Point> propagate_r9(const BeamBoundary& b, double x0, const std::vector<double>& s_values,
                                const IntegratorConfig& cfg = {});

struct BeamState {
    double v, n;
};

// The surface swept by R9 trajectories, evaluated at (t, x): the trajectory is followed in t and
// its starting x0 is found by a bracketed root.
BeamState r9_surface(const BeamBoundary& b, double t, double x, const IntegratorConfig& cfg = {});
SolutionSampler r9_surface_sampler(const BeamBoundary& b, const IntegratorConfig& cfg = {});

struct DirectConfig {
    // Order of the power series in t.
    int order = 48;
    double tail_tol = 1e-13;
};

// beta = 0 only. alpha = 0: closed-form characteristics. alpha > 0: power series in t with Taylor
// jets in x; a diverging tail raises CharacteristicsCross.
BeamState direct_nlo_state(const BeamBoundary& b, double t, double x, const DirectConfig& cfg = {});
// Sampler over (t, x) with dependents (v, n).
SolutionSampler direct_nlo_solver(const BeamBoundary& b, const DirectConfig& cfg = {});

// Residuals of the two beam equations for a sampler over (t, x) with dependents (v, n), beta = 0.
std::pair<double, double> beam_residual(const BeamBoundary& b, const SolutionSampler& sol, double t, double x,
                                        const NumDiffConfig& nd);

}  // namespace rgsslab::nlo
