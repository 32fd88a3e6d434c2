#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "borderidx/exponent_vector.hpp"

namespace borderidx {

// Dense row-major addressing of the box {alpha : alpha <= bounds}, first
// coordinate slowest. A 0-dimensional box holds the single empty point.
class BoxIndexer {
 public:
  explicit BoxIndexer(ExponentVector bounds);

  std::size_t size() const { return size_; }
  const ExponentVector& bounds() const { return bounds_; }

  std::size_t offset(const ExponentVector& point) const;
  ExponentVector point(std::size_t offset) const;

 private:
  ExponentVector bounds_;
  std::vector<std::size_t> strides_;
  std::size_t size_;
};

// All points of the box in row-major (odometer) order.
std::vector<ExponentVector> box_points(const ExponentVector& bounds);

}  // namespace borderidx
