#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ecsk::exprkit {

using Point = std::array<double, 4>;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool operator==(const Interval&) const = default;
};

class ChartError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A coordinate patch: four named coordinates, each ranging over a closed
// interval. Construction validates the names and bounds.
class Chart {
 public:
  static constexpr int kDim = 4;

  Chart(std::array<std::string, kDim> names, std::array<Interval, kDim> domain);

  const std::array<std::string, kDim>& coord_names() const { return names_; }
  const std::array<Interval, kDim>& domain() const { return domain_; }

  // -1 if `name` is not a coordinate.
  int coordinate_index(std::string_view name) const;
  bool contains(const Point& x) const;

  bool operator==(const Chart&) const = default;

 private:
  std::array<std::string, kDim> names_;
  std::array<Interval, kDim> domain_;
};

std::string format_point(const Point& x);

}  // namespace ecsk::exprkit
