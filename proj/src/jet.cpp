#include "rgsslab/jet.hpp"

#include <algorithm>
#include <cmath>

#include "rgsslab/errors.hpp"

namespace rgsslab {

Jet Jet::constant(double v, std::size_t len) {
    std::vector<double> c(len, 0.0);
    if (len > 0) c[0] = v;
    return Jet(std::move(c));
}

Jet Jet::variable(double x0, std::size_t len) {
    auto j = constant(x0, len);
    if (len > 1) j.c_[1] = 1;
    return j;
}

double Jet::derivative(std::size_t k) const {
    double f = 1;
    for (std::size_t i = 2; i <= k; ++i) f *= static_cast<double>(i);
    return k < c_.size() ? f * c_[k] : 0.0;
}

double Jet::eval(double h) const {
    double s = 0;
    for (std::size_t k = c_.size(); k-- > 0;) s = s * h + c_[k];
    return s;
}

Jet Jet::truncated(std::size_t len) const {
    return Jet(std::vector<double>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(std::min(len, c_.size()))));
}

Jet Jet::shifted(double h) const {
    // Repeated synthetic division: the k-th remainder is the k-th coefficient about base + h.
    std::vector<double> a = c_;
    const std::size_t n = a.size();
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = n - 1; i > k; --i) a[i - 1] += h * a[i];
    return Jet(std::move(a));
}

Jet& Jet::operator+=(const Jet& o) {
    c_.resize(std::min(c_.size(), o.c_.size()));
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

Jet& Jet::operator-=(const Jet& o) {
    c_.resize(std::min(c_.size(), o.c_.size()));
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
}

Jet& Jet::operator*=(double s) {
    for (auto& v : c_) v *= s;
    return *this;
}

Jet operator+(Jet a, const Jet& b) { return a += b; }
Jet operator-(Jet a, const Jet& b) { return a -= b; }
Jet operator-(Jet a) { return a *= -1.0; }
Jet operator*(Jet a, double s) { return a *= s; }
Jet operator*(double s, Jet a) { return a *= s; }

Jet operator+(Jet a, double s) {
    if (a.size() > 0) a[0] += s;
    return a;
}

Jet operator*(const Jet& a, const Jet& b) {
    const std::size_t n = std::min(a.size(), b.size());
    std::vector<double> c(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        double s = 0;
        for (std::size_t i = 0; i <= k; ++i) s += a[i] * b[k - i];
        c[k] = s;
    }
    return Jet(std::move(c));
}

Jet operator/(const Jet& a, const Jet& b) {
    const std::size_t n = std::min(a.size(), b.size());
    require(n == 0 || b[0] != 0, ErrorKind::InvalidArgument, "jet division by a series with zero constant term");
    std::vector<double> c(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        double s = a[k];
        for (std::size_t i = 0; i < k; ++i) s -= c[i] * b[k - i];
        c[k] = s / b[0];
    }
    return Jet(std::move(c));
}

Jet exp(const Jet& a) {
    const std::size_t n = a.size();
    std::vector<double> c(n, 0.0);
    if (n == 0) return Jet{};
    c[0] = std::exp(a[0]);
    for (std::size_t k = 1; k < n; ++k) {
        double s = 0;
        for (std::size_t j = 1; j <= k; ++j) s += static_cast<double>(j) * a[j] * c[k - j];
        c[k] = s / static_cast<double>(k);
    }
    return Jet(std::move(c));
}

Jet log(const Jet& a) {
    const std::size_t n = a.size();
    if (n == 0) return Jet{};
    require(a[0] > 0, ErrorKind::InvalidArgument, "jet log needs a positive constant term");
    std::vector<double> c(n, 0.0);
    c[0] = std::log(a[0]);
    for (std::size_t k = 1; k < n; ++k) {
        double s = 0;
        for (std::size_t j = 1; j < k; ++j) s += static_cast<double>(j) * c[j] * a[k - j];
        c[k] = (a[k] - s / static_cast<double>(k)) / a[0];
    }
    return Jet(std::move(c));
}

Jet pow(const Jet& a, double p) {
    const std::size_t n = a.size();
    if (n == 0) return Jet{};
    require(a[0] > 0, ErrorKind::InvalidArgument, "jet pow needs a positive constant term");
    std::vector<double> c(n, 0.0);
    c[0] = std::pow(a[0], p);
    for (std::size_t k = 1; k < n; ++k) {
        double s = 0;
        for (std::size_t j = 1; j <= k; ++j)
            s += (p * static_cast<double>(j) - static_cast<double>(k - j)) * a[j] * c[k - j];
        c[k] = s / (static_cast<double>(k) * a[0]);
    }
    return Jet(std::move(c));
}

Jet sqrt(const Jet& a) { return pow(a, 0.5); }

Jet cosh(const Jet& a) { return 0.5 * (exp(a) + exp(-a)); }

Jet tanh(const Jet& a) {
    // 1 - 2/(exp(2a) + 1) stays finite for large |a|.
    const Jet e = exp(2.0 * a);
    return Jet::constant(1.0, a.size()) - 2.0 * (Jet::constant(1.0, a.size()) / (e + 1.0));
}

Jet der(const Jet& a) {
    if (a.size() < 2) return Jet{};
    std::vector<double> c(a.size() - 1);
    for (std::size_t k = 1; k < a.size(); ++k) c[k - 1] = static_cast<double>(k) * a[k];
    return Jet(std::move(c));
}

Jet div_by_h(const Jet& a) {
    if (a.size() < 2) return Jet{};
    require(a[0] == 0, ErrorKind::InvalidArgument, "div_by_h needs a vanishing constant term");
    return Jet(std::vector<double>(a.coeffs().begin() + 1, a.coeffs().end()));
}

Jet compose(const Jet& f, const Jet& g) {
    const std::size_t n = std::min(f.size(), g.size());
    if (n == 0) return Jet{};
    Jet s = g.truncated(n);
    s[0] = 0;
    Jet r = Jet::constant(f[n - 1], n);
    for (std::size_t k = n - 1; k-- > 0;) r = r * s + f[k];
    return r;
}

Jet revert(const Jet& a) {
    const std::size_t n = a.size();
    require(n >= 2 && a[1] != 0, ErrorKind::NotInvertible, "series reversion needs a nonzero linear term");
    // phi(h) = h / (y(h) - y0); d_k = [h^(k-1)] phi^k / k.
    const Jet phi = Jet::constant(1.0, n - 1) / div_by_h(a - Jet::constant(a[0], n));
    std::vector<double> d(n, 0.0);
    Jet pk = Jet::constant(1.0, n - 1);
    for (std::size_t k = 1; k < n; ++k) {
        pk = pk * phi;
        d[k] = pk[k - 1] / static_cast<double>(k);
    }
    return Jet(std::move(d));
}

}  // namespace rgsslab
