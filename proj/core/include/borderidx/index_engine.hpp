#pragma once

#include <cstdint>
#include <vector>

#include "borderidx/box.hpp"
#include "borderidx/order_ideal.hpp"

namespace borderidx {

// First border {alpha + e_i : alpha in O} \ O, graded-lex sorted.
std::vector<ExponentVector> border(const OrderIdeal& ideal);

// O together with its border; again an order ideal.
OrderIdeal closed_border(const OrderIdeal& ideal);

// k-th border layer. Computed twice, by iterating `border` on closed borders
// and by the degree-k product formula T_k*O \ T_{<k}*O; throws
// std::logic_error if the two disagree.
std::vector<ExponentVector> higher_border(const OrderIdeal& ideal,
                                          unsigned k);

// ind_O(t) as a divisor minimization: min |t| - |s| over s in O dividing t.
std::uint64_t index_by_divisor(const OrderIdeal& ideal,
                               const ExponentVector& t);

// Dense table of ind_O over a box.
class IndexTable {
 public:
  IndexTable(ExponentVector bounds, std::vector<std::uint64_t> values)
      : indexer_(std::move(bounds)), values_(std::move(values)) {}

  const ExponentVector& bounds() const { return indexer_.bounds(); }
  std::size_t size() const { return indexer_.size(); }
  std::uint64_t at(const ExponentVector& point) const {
    return values_[indexer_.offset(point)];
  }
  const std::vector<std::uint64_t>& values() const { return values_; }
  const BoxIndexer& indexer() const { return indexer_; }

 private:
  BoxIndexer indexer_;
  std::vector<std::uint64_t> values_;
};

// Dynamic program over the box in increasing total degree:
// ind(t) = 0 on O, else 1 + min ind(t/x_i).
IndexTable index_table(const OrderIdeal& ideal, const ExponentVector& bounds);

}  // namespace borderidx
