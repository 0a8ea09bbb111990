#pragma once

#include <functional>
#include <limits>
#include <vector>

namespace rgsslab {

struct IntegratorConfig {
    double rel_tol = 1e-12;
    double abs_tol = 1e-14;
    double max_step = std::numeric_limits<double>::infinity();
    long max_steps = 1'000'000;
    // Any state coordinate above this magnitude counts as blow-up.
    double blowup_bound = 1e12;

    void validate() const;
};

using OdeRhs = std::function<void(double t, const std::vector<double>& y, std::vector<double>& dydt)>;

struct OdeResult {
    std::vector<double> y;
    long accepted = 0;
    long rejected = 0;
};

// Dormand-Prince 5(4) with FSAL and standard step control. Throws BlowUpError with the
// reached time, or Error(StepLimit).
OdeResult integrate_dopri5(const OdeRhs& rhs, double t0, std::vector<double> y0, double t1,
                           const IntegratorConfig& cfg);

// Classical fixed-step RK4; the independent oracle for the adaptive pair.
std::vector<double> integrate_rk4(const OdeRhs& rhs, double t0, std::vector<double> y0, double t1,
                                  long steps);

}  // namespace rgsslab
