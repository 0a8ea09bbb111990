#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace rgsslab {

// Named coordinates in the extended group space. Values are always finite.
class Point {
public:
    using Map = std::map<std::string, double, std::less<>>;

    Point() = default;
    Point(std::initializer_list<std::pair<const std::string, double>> init);

    double at(std::string_view name) const;
    double get_or(std::string_view name, double fallback) const;
    bool has(std::string_view name) const { return coords_.find(name) != coords_.end(); }

    void set(std::string_view name, double value);
    Point with(std::string_view name, double value) const;
    // Unchecked slot access for hot loops; the caller keeps the value finite.
    double& slot(std::string_view name);

    const Map& coords() const noexcept { return coords_; }
    std::size_t size() const noexcept { return coords_.size(); }

    friend bool operator==(const Point&, const Point&) = default;

private:
    Map coords_;
};

}  // namespace rgsslab
