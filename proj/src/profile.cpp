#include "rgsslab/profile.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <boost/math/interpolators/cardinal_cubic_b_spline.hpp>

#include "rgsslab/errors.hpp"

namespace rgsslab {

Profile1D gaussian_profile(double amplitude, double width) {
    require(width > 0, ErrorKind::InvalidArgument, "gaussian width must be positive");
    Profile1D p;
    p.name = "gaussian";
    const double w2 = width * width;
    p.f = [amplitude, w2](double x) { return amplitude * std::exp(-x * x / w2); };
    p.fx = [amplitude, w2](double x) { return -2 * x / w2 * amplitude * std::exp(-x * x / w2); };
    p.fxx = [amplitude, w2](double x) { return (4 * x * x / w2 - 2) / w2 * amplitude * std::exp(-x * x / w2); };
    // exp(-r^2) < 1e-17 beyond r = 6.3.
    p.support_radius = 6.3 * width;
    return p;
}

Profile1D constant_profile(double c0) {
    Profile1D p;
    p.name = "constant";
    p.f = [c0](double) { return c0; };
    p.fx = [](double) { return 0.0; };
    p.fxx = [](double) { return 0.0; };
    return p;
}

Profile1D shifted(const Profile1D& p, double s) {
    Profile1D q = p;
    q.f = [f = p.f, s](double x) { return f(x - s); };
    q.fx = [f = p.fx, s](double x) { return f(x - s); };
    q.fxx = [f = p.fxx, s](double x) { return f(x - s); };
    q.support_radius = p.support_radius + std::abs(s);
    return q;
}

Profile1D table_profile(const std::vector<double>& x, const std::vector<double>& y, std::string name) {
    require(x.size() == y.size() && x.size() >= 4, ErrorKind::InvalidArgument, "table needs >= 4 (x, y) rows");
    const double h = (x.back() - x.front()) / static_cast<double>(x.size() - 1);
    require(h > 0, ErrorKind::InvalidArgument, "table abscissae must increase");
    for (std::size_t i = 0; i < x.size(); ++i)
        require(std::abs(x[i] - (x.front() + h * static_cast<double>(i))) <= 1e-9 * std::max(1.0, std::abs(x[i])),
                ErrorKind::InvalidArgument, "table abscissae must be uniformly spaced");
    using Spline = boost::math::interpolators::cardinal_cubic_b_spline<double>;
    auto spline = std::make_shared<Spline>(y.begin(), y.end(), x.front(), h);
    const double lo = x.front(), hi = x.back(), ylo = y.front(), yhi = y.back();
    Profile1D p;
    p.name = std::move(name);
    p.f = [spline, lo, hi, ylo, yhi](double s) { return s <= lo ? ylo : s >= hi ? yhi : (*spline)(s); };
    p.fx = [spline, lo, hi](double s) { return s <= lo || s >= hi ? 0.0 : spline->prime(s); };
    p.fxx = [spline, lo, hi](double s) { return s <= lo || s >= hi ? 0.0 : spline->double_prime(s); };
    p.support_radius = std::max(std::abs(lo), std::abs(hi));
    return p;
}

void read_table(const std::string& path, std::vector<double>& x, std::vector<double>& y) {
    std::ifstream in(path);
    require(static_cast<bool>(in), ErrorKind::InvalidArgument, "cannot open table '" + path + "'");
    x.clear();
    y.clear();
    std::string line;
    while (std::getline(in, line)) {
        line = line.substr(0, line.find('#'));
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ss(line);
        double a, b;
        if (!(ss >> a)) continue;
        require(static_cast<bool>(ss >> b), ErrorKind::InvalidArgument, "table row needs two columns: " + line);
        x.push_back(a);
        y.push_back(b);
    }
}

}  // namespace rgsslab
