#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace rgsslab {

// A real profile x -> f(x) with first and second derivatives.
struct Profile1D {
    std::string name;
    std::function<double(double)> f, fx, fxx;
    // |x| beyond which f is flat to double precision.
    double support_radius = 0;
};

Profile1D gaussian_profile(double amplitude, double width);
Profile1D constant_profile(double c0);
Profile1D shifted(const Profile1D& p, double s);

// Uniformly spaced samples interpolated by a cubic B-spline; constant beyond the ends.
Profile1D table_profile(const std::vector<double>& x, const std::vector<double>& y, std::string name = "table");

// Two whitespace- or comma-separated columns; '#' starts a comment.
void read_table(const std::string& path, std::vector<double>& x, std::vector<double>& y);

}  // namespace rgsslab
