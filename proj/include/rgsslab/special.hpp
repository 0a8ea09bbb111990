#pragma once

#include <vector>

namespace rgsslab::special {

// Evaluators are accurate on [-20, 20]; outside they raise AccuracyWindowExceeded.
constexpr double kWindow = 20;

double airy_ai(double mu);
double airy_ai_prime(double mu);

// Scorer Gi, the solution of y'' - mu y = -1/pi that stays bounded as mu -> -infinity.
// Taylor-recurrence table on [-20, 8]; asymptotic series beyond 8, where the relative accuracy is
// only ~5e-7 at mu = 8 and improves rapidly with mu.
class ScorerTable {
public:
    // `perturb` adds a relative error to every stored node value; for fault-injection checks only.
    explicit ScorerTable(double perturb = 0);

    double gi(double mu) const;
    double gi_prime(double mu) const;

private:
    void eval(double mu, double& y, double& dy) const;
    std::vector<double> y_, dy_;
};

const ScorerTable& default_scorer_table();

double scorer_gi(double mu);
double scorer_gi_prime(double mu);

// Independent oracles.
// Maclaurin series: Ai = c1 f - c2 g, Bi = sqrt3 (c1 f + c2 g), Gi = Bi - Hi with the Hi power
// series. Roundoff grows like exp((2/3)|mu|^1.5); fine on [-5, 5].
double airy_ai_maclaurin(double mu);
double scorer_gi_maclaurin(double mu);
// The cubic-phase integrals (1/pi) int_0^inf cos|sin(xi^3/3 + mu xi) dxi, with the contour rotated
// onto the rays arg = +-pi/3 where the integrands decay like exp(-s^3/3). Adaptive quadrature.
double airy_ai_contour(double mu);
double scorer_gi_contour(double mu);

}  // namespace rgsslab::special
