#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "borderidx/exponent_vector.hpp"

namespace borderidx {

// A finite division-closed set of exponent vectors (a staircase). Immutable;
// keeps a hashed membership set plus a graded-lex sorted element list for
// deterministic iteration. A nonempty order ideal always contains the origin.
class OrderIdeal {
 public:
  // Downward closure of a generator set. Empty gens yield the empty ideal.
  static OrderIdeal from_generators(std::size_t dim,
                                    const std::vector<ExponentVector>& gens);

  // Dimension-2 ideal of a weakly decreasing positive partition
  // (lambda_1,...,lambda_m): (a,b) lies in the ideal iff a < m and
  // b < lambda_{a+1}.
  static OrderIdeal from_partition(const std::vector<std::uint32_t>& lambda);

  // Accepts the element set as-is if division-closed, otherwise throws
  // InvalidIdealError naming a witness pair.
  static OrderIdeal validated(std::size_t dim,
                              std::vector<ExponentVector> elements);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return sorted_.size(); }
  bool empty() const { return sorted_.empty(); }
  bool contains(const ExponentVector& point) const {
    return members_.count(point) != 0;
  }
  // Elements in graded-lex order.
  const std::vector<ExponentVector>& elements() const { return sorted_; }

 private:
  OrderIdeal(std::size_t dim, ExponentSet members);

  std::size_t dim_ = 0;
  ExponentSet members_;
  std::vector<ExponentVector> sorted_;
};

// Minimal axis-parallel box containing the ideal; corner holds the
// componentwise maxima (m_1,...,m_n).
struct BoundingBox {
  ExponentVector corner;
};

// Throws std::invalid_argument on an empty ideal.
BoundingBox bounding_box(const OrderIdeal& ideal);

struct ClosureViolation {
  ExponentVector element;        // present
  ExponentVector missing;       // element - e_i, absent
  std::size_t direction;
};

// Division-closure check; nullopt means the set is a valid order ideal.
std::optional<ClosureViolation> find_closure_violation(
    std::size_t dim, const std::vector<ExponentVector>& elements);

// The unique finite antichain G outside the ideal such that a point lies
// outside the ideal iff some g in G divides it.
std::vector<ExponentVector> minimal_complement_generators(
    const OrderIdeal& ideal);

// {i : u + e_i not in C}, 0-based. Throws if u is not an element of C.
std::vector<std::size_t> free_directions(const OrderIdeal& C,
                                         const ExponentVector& u);

// Column heights of a nonempty dimension-2 ideal as a partition
// (lambda_1 >= ... >= lambda_m >= 1).
std::vector<std::uint32_t> partition_of(const OrderIdeal& ideal);

}  // namespace borderidx
