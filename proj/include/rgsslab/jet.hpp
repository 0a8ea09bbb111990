#pragma once

#include <cstddef>
#include <vector>

namespace rgsslab {

// Truncated Taylor series sum_k c[k] h^k about a base point. Binary operations truncate to the
// shorter operand.
class Jet {
public:
    Jet() = default;
    explicit Jet(std::vector<double> c) : c_(std::move(c)) {}

    static Jet constant(double v, std::size_t len);
    // The identity x0 + h.
    static Jet variable(double x0, std::size_t len);

    std::size_t size() const noexcept { return c_.size(); }
    double operator[](std::size_t k) const { return c_[k]; }
    double& operator[](std::size_t k) { return c_[k]; }
    const std::vector<double>& coeffs() const noexcept { return c_; }

    double value() const { return c_.at(0); }
    // k-th derivative at the base point, k! c[k].
    double derivative(std::size_t k) const;
    // Polynomial value at offset h.
    double eval(double h) const;
    Jet truncated(std::size_t len) const;
    // The same polynomial re-expanded about base + h.
    Jet shifted(double h) const;

    Jet& operator+=(const Jet& o);
    Jet& operator-=(const Jet& o);
    Jet& operator*=(double s);

private:
    std::vector<double> c_;
};

Jet operator+(Jet a, const Jet& b);
Jet operator-(Jet a, const Jet& b);
Jet operator-(Jet a);
Jet operator*(Jet a, double s);
Jet operator*(double s, Jet a);
Jet operator+(Jet a, double s);
Jet operator*(const Jet& a, const Jet& b);
Jet operator/(const Jet& a, const Jet& b);

Jet exp(const Jet& a);
// Requires a[0] > 0.
Jet log(const Jet& a);
Jet pow(const Jet& a, double p);
Jet sqrt(const Jet& a);
Jet cosh(const Jet& a);
Jet tanh(const Jet& a);
// d/dh; one coefficient shorter.
Jet der(const Jet& a);
// a / h for a with a[0] == 0; one coefficient shorter.
Jet div_by_h(const Jet& a);

// f(g(h)) for f expanded about g(0): the series sum_k f[k] (g(h) - g(0))^k.
Jet compose(const Jet& f, const Jet& g);

// For y(h) = a[0] + sum_{k>=1} a[k] h^k with a[1] != 0, the jet of the inverse offset h(d),
// h(0) = 0, with y(h(d)) = a[0] + d. Lagrange inversion.
Jet revert(const Jet& a);

}  // namespace rgsslab
