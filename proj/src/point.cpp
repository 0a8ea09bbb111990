#include "rgsslab/point.hpp"

#include <cmath>

#include "rgsslab/errors.hpp"

namespace rgsslab {

namespace {
void check_finite(std::string_view name, double v) {
    if (!std::isfinite(v))
        fail(ErrorKind::InvalidArgument, "non-finite value for coordinate '" + std::string(name) + "'");
}
}  // namespace

Point::Point(std::initializer_list<std::pair<const std::string, double>> init) {
    for (const auto& [k, v] : init) {
        check_finite(k, v);
        if (!coords_.emplace(k, v).second)
            fail(ErrorKind::InvalidArgument, "duplicate coordinate '" + k + "'");
    }
}

double Point::at(std::string_view name) const {
    auto it = coords_.find(name);
    if (it == coords_.end())
        fail(ErrorKind::InvalidArgument, "point has no coordinate '" + std::string(name) + "'");
    return it->second;
}

double Point::get_or(std::string_view name, double fallback) const {
    auto it = coords_.find(name);
    return it == coords_.end() ? fallback : it->second;
}

void Point::set(std::string_view name, double value) {
    check_finite(name, value);
    auto it = coords_.find(name);
    if (it == coords_.end())
        coords_.emplace(std::string(name), value);
    else
        it->second = value;
}

double& Point::slot(std::string_view name) {
    auto it = coords_.find(name);
    if (it == coords_.end())
        fail(ErrorKind::InvalidArgument, "point has no coordinate '" + std::string(name) + "'");
    return it->second;
}

Point Point::with(std::string_view name, double value) const {
    Point p = *this;
    p.set(name, value);
    return p;
}

}  // namespace rgsslab
