#pragma once

#include <vector>

#include "borderidx/box.hpp"
#include "borderidx/rational.hpp"

namespace borderidx {

// Dense table of exact series coefficients over a box.
class SeriesTable {
 public:
  explicit SeriesTable(ExponentVector bounds)
      : indexer_(std::move(bounds)), coeffs_(indexer_.size(), Rational(0)) {}

  const ExponentVector& bounds() const { return indexer_.bounds(); }
  std::size_t size() const { return indexer_.size(); }
  const Rational& at(const ExponentVector& point) const {
    return coeffs_[indexer_.offset(point)];
  }
  Rational& at(const ExponentVector& point) {
    return coeffs_[indexer_.offset(point)];
  }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  std::vector<Rational>& coeffs() { return coeffs_; }
  const BoxIndexer& indexer() const { return indexer_; }

  friend bool operator==(const SeriesTable& a, const SeriesTable& b) {
    return a.bounds() == b.bounds() && a.coeffs_ == b.coeffs_;
  }

 private:
  BoxIndexer indexer_;
  std::vector<Rational> coeffs_;
};

}  // namespace borderidx
