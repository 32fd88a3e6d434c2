#include "borderidx/box.hpp"

#include <stdexcept>

namespace borderidx {

BoxIndexer::BoxIndexer(ExponentVector bounds)
    : bounds_(std::move(bounds)), strides_(bounds_.dim(), 1), size_(1) {
  // Row-major, first coordinate slowest.
  for (std::size_t i = bounds_.dim(); i-- > 0;) {
    strides_[i] = size_;
    size_ *= static_cast<std::size_t>(bounds_[i]) + 1;
  }
}

std::size_t BoxIndexer::offset(const ExponentVector& point) const {
  if (point.dim() != bounds_.dim()) {
    throw std::invalid_argument("box point dimension mismatch");
  }
  std::size_t off = 0;
  for (std::size_t i = 0; i < point.dim(); ++i) {
    if (point[i] > bounds_[i]) {
      throw std::out_of_range("point outside box: " + point.to_string());
    }
    off += point[i] * strides_[i];
  }
  return off;
}

ExponentVector BoxIndexer::point(std::size_t offset) const {
  std::vector<std::uint32_t> coords(bounds_.dim());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    coords[i] = static_cast<std::uint32_t>(offset / strides_[i]);
    offset %= strides_[i];
  }
  return ExponentVector(std::move(coords));
}

std::vector<ExponentVector> box_points(const ExponentVector& bounds) {
  BoxIndexer indexer(bounds);
  std::vector<ExponentVector> points;
  points.reserve(indexer.size());
  for (std::size_t off = 0; off < indexer.size(); ++off) {
    points.push_back(indexer.point(off));
  }
  return points;
}

}  // namespace borderidx
