#include "extendkit/point.hpp"

#include <cmath>

namespace extendkit {

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw InputError("point must have at least one coordinate");
  for (double c : coords_) {
    if (!std::isfinite(c)) throw InputError("point coordinates must be finite");
  }
}

Point::Point(std::initializer_list<double> coords) : Point(std::vector<double>(coords)) {}

}  // namespace extendkit
