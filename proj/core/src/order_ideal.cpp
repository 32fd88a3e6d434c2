#include "borderidx/order_ideal.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "borderidx/box.hpp"
#include "borderidx/errors.hpp"

namespace borderidx {

OrderIdeal::OrderIdeal(std::size_t dim, ExponentSet members)
    : dim_(dim), members_(std::move(members)) {
  sorted_.assign(members_.begin(), members_.end());
  std::sort(sorted_.begin(), sorted_.end(), GradedLexLess{});
}

OrderIdeal OrderIdeal::from_generators(
    std::size_t dim, const std::vector<ExponentVector>& gens) {
  if (dim == 0) throw std::invalid_argument("dimension must be positive");
  for (const auto& g : gens) {
    if (g.dim() != dim) {
      throw InvalidIdealError("generator " + g.to_string() +
                              " does not have dimension " +
                              std::to_string(dim));
    }
  }
  ExponentSet members;
  std::deque<ExponentVector> work(gens.begin(), gens.end());
  while (!work.empty()) {
    ExponentVector current = std::move(work.front());
    work.pop_front();
    if (!members.insert(current).second) continue;
    for (std::size_t i = 0; i < dim; ++i) {
      if (current[i] > 0) work.push_back(current.minus_unit(i));
    }
  }
  return OrderIdeal(dim, std::move(members));
}

OrderIdeal OrderIdeal::from_partition(
    const std::vector<std::uint32_t>& lambda) {
  if (lambda.empty()) {
    throw InvalidIdealError("partition must have at least one part");
  }
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] == 0) {
      throw InvalidIdealError("partition parts must be positive");
    }
    if (i > 0 && lambda[i] > lambda[i - 1]) {
      throw InvalidIdealError("partition must be weakly decreasing");
    }
  }
  ExponentSet members;
  for (std::uint32_t a = 0; a < lambda.size(); ++a) {
    for (std::uint32_t b = 0; b < lambda[a]; ++b) {
      members.insert(ExponentVector{a, b});
    }
  }
  return OrderIdeal(2, std::move(members));
}

OrderIdeal OrderIdeal::validated(std::size_t dim,
                                 std::vector<ExponentVector> elements) {
  if (dim == 0) throw std::invalid_argument("dimension must be positive");
  if (auto violation = find_closure_violation(dim, elements)) {
    throw InvalidIdealError("not division-closed: contains " +
                            violation->element.to_string() + " but not " +
                            violation->missing.to_string());
  }
  ExponentSet members(elements.begin(), elements.end());
  return OrderIdeal(dim, std::move(members));
}

std::optional<ClosureViolation> find_closure_violation(
    std::size_t dim, const std::vector<ExponentVector>& elements) {
  ExponentSet members;
  for (const auto& e : elements) {
    if (e.dim() != dim) {
      throw InvalidIdealError("element " + e.to_string() +
                              " does not have dimension " +
                              std::to_string(dim));
    }
    members.insert(e);
  }
  for (const auto& e : elements) {
    for (std::size_t i = 0; i < dim; ++i) {
      if (e[i] == 0) continue;
      auto pred = e.minus_unit(i);
      if (!members.count(pred)) {
        return ClosureViolation{e, pred, i};
      }
    }
  }
  return std::nullopt;
}

BoundingBox bounding_box(const OrderIdeal& ideal) {
  if (ideal.empty()) {
    throw std::invalid_argument("bounding box of an empty order ideal");
  }
  ExponentVector corner = ExponentVector::zero(ideal.dim());
  for (const auto& e : ideal.elements()) {
    corner = componentwise_max(corner, e);
  }
  return BoundingBox{std::move(corner)};
}

std::vector<ExponentVector> minimal_complement_generators(
    const OrderIdeal& ideal) {
  if (ideal.empty()) {
    throw std::invalid_argument("complement generators of an empty ideal");
  }
  const std::size_t n = ideal.dim();
  // Minimal generators have every coordinate <= m_i + 1, so the enlarged box
  // is an exhaustive search space. A point outside the ideal is a minimal
  // generator iff all its immediate predecessors lie inside.
  ExponentVector corner = bounding_box(ideal).corner;
  std::vector<std::uint32_t> enlarged(n);
  for (std::size_t i = 0; i < n; ++i) enlarged[i] = corner[i] + 1;

  std::vector<ExponentVector> gens;
  for (const auto& candidate : box_points(ExponentVector(enlarged))) {
    if (ideal.contains(candidate)) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < n && minimal; ++i) {
      if (candidate[i] > 0 && !ideal.contains(candidate.minus_unit(i))) {
        minimal = false;
      }
    }
    if (minimal) gens.push_back(candidate);
  }
  std::sort(gens.begin(), gens.end(), GradedLexLess{});
  return gens;
}

std::vector<std::size_t> free_directions(const OrderIdeal& C,
                                         const ExponentVector& u) {
  if (!C.contains(u)) {
    throw std::invalid_argument("free_directions: " + u.to_string() +
                                " is not in the order ideal");
  }
  std::vector<std::size_t> dirs;
  for (std::size_t i = 0; i < C.dim(); ++i) {
    if (!C.contains(u.plus_unit(i))) dirs.push_back(i);
  }
  return dirs;
}

std::vector<std::uint32_t> partition_of(const OrderIdeal& ideal) {
  if (ideal.dim() != 2) {
    throw std::invalid_argument("partition encoding needs dimension 2");
  }
  if (ideal.empty()) {
    throw std::invalid_argument("partition encoding of an empty ideal");
  }
  const std::uint32_t m = bounding_box(ideal).corner[0] + 1;
  std::vector<std::uint32_t> lambda(m, 0);
  for (const auto& e : ideal.elements()) lambda[e[0]] += 1;
  return lambda;
}

}  // namespace borderidx
