#pragma once

#include <functional>
#include <string_view>

#include "rgsslab/point.hpp"

namespace rgsslab {

// Central differences. Truncation error O(h^scheme_order); roundoff O(eps/h^order).
// Second derivatives use 10h to balance the larger roundoff term.
struct NumDiffConfig {
    int scheme_order = 4;
    double base_step = 1e-4;
    int richardson_levels = 1;

    void validate() const;
    double step_for(double x, int order) const;
};

double numdiff(const std::function<double(double)>& f, double x, int order, const NumDiffConfig& nd);

double numdiff(const std::function<double(const Point&)>& f, const Point& p, std::string_view var,
               int order, const NumDiffConfig& nd);

}  // namespace rgsslab
