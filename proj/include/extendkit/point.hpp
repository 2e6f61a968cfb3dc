#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace extendkit {

// Thrown for rejected inputs: malformed files, domain violations, mismatched
// sets. The CLI maps it to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A point of the ambient space. Coordinates are finite; a point of an
// explicit-distance-matrix space is a 1-D point holding its row index.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<double> coords);
  Point(std::initializer_list<double> coords);

  static Point scalar(double x) { return Point{x}; }

  std::size_t dimension() const { return coords_.size(); }
  std::span<const double> coords() const { return coords_; }
  double operator[](std::size_t k) const { return coords_[k]; }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<double> coords_;
};

}  // namespace extendkit
