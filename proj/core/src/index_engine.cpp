#include "borderidx/index_engine.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace borderidx {

namespace {

std::vector<ExponentVector> sorted(ExponentSet points) {
  std::vector<ExponentVector> out(points.begin(), points.end());
  std::sort(out.begin(), out.end(), GradedLexLess{});
  return out;
}

ExponentSet border_set(const OrderIdeal& ideal) {
  ExponentSet result;
  for (const auto& e : ideal.elements()) {
    for (std::size_t i = 0; i < ideal.dim(); ++i) {
      auto up = e.plus_unit(i);
      if (!ideal.contains(up)) result.insert(std::move(up));
    }
  }
  return result;
}

// All exponent vectors of total degree exactly `degree`.
void degree_points_rec(std::size_t dim, std::uint32_t degree,
                       std::vector<std::uint32_t>& prefix,
                       std::vector<ExponentVector>& out) {
  if (prefix.size() + 1 == dim) {
    prefix.push_back(degree);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (std::uint32_t v = 0; v <= degree; ++v) {
    prefix.push_back(v);
    degree_points_rec(dim, degree - v, prefix, out);
    prefix.pop_back();
  }
}

std::vector<ExponentVector> degree_points(std::size_t dim,
                                          std::uint32_t degree) {
  std::vector<ExponentVector> out;
  std::vector<std::uint32_t> prefix;
  degree_points_rec(dim, degree, prefix, out);
  return out;
}

// T([n])_k * O: every product of a degree-k power product with an element.
ExponentSet degree_product(const OrderIdeal& ideal, std::uint32_t k) {
  ExponentSet result;
  for (const auto& shift : degree_points(ideal.dim(), k)) {
    for (const auto& e : ideal.elements()) {
      result.insert(e + shift);
    }
  }
  return result;
}

}  // namespace

std::vector<ExponentVector> border(const OrderIdeal& ideal) {
  if (ideal.empty()) {
    throw std::invalid_argument("border of an empty order ideal");
  }
  return sorted(border_set(ideal));
}

OrderIdeal closed_border(const OrderIdeal& ideal) {
  auto members = border_set(ideal);
  auto elements = ideal.elements();
  elements.insert(elements.end(), members.begin(), members.end());
  // The closed border of an order ideal is again an order ideal.
  return OrderIdeal::validated(ideal.dim(), std::move(elements));
}

std::vector<ExponentVector> higher_border(const OrderIdeal& ideal,
                                          unsigned k) {
  if (ideal.empty()) {
    throw std::invalid_argument("higher border of an empty order ideal");
  }
  if (k == 0) return ideal.elements();

  // Route 1: iterate the border of the closed border.
  OrderIdeal current = ideal;
  std::vector<ExponentVector> layer;
  for (unsigned step = 0; step < k; ++step) {
    layer = border(current);
    if (step + 1 < k) current = closed_border(current);
  }

  // Route 2: T_k * O minus T_{<k} * O.
  ExponentSet reached;
  for (std::uint32_t j = 0; j < k; ++j) {
    auto level = degree_product(ideal, j);
    reached.insert(level.begin(), level.end());
  }
  ExponentSet formula;
  for (auto& p : degree_product(ideal, k)) {
    if (!reached.count(p)) formula.insert(std::move(p));
  }
  auto formula_sorted = sorted(std::move(formula));

  if (layer != formula_sorted) {
    throw std::logic_error(
        "higher_border: iterative and product-formula layers disagree");
  }
  return layer;
}

std::uint64_t index_by_divisor(const OrderIdeal& ideal,
                               const ExponentVector& t) {
  if (ideal.empty()) {
    throw std::invalid_argument("index relative to an empty order ideal");
  }
  if (t.dim() != ideal.dim()) {
    throw std::invalid_argument("index point dimension mismatch");
  }
  const std::uint64_t deg = t.total_degree();
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for (const auto& s : ideal.elements()) {
    if (s.divides(t)) best = std::min(best, deg - s.total_degree());
  }
  return best;  // 0 is in every nonempty ideal, so best is defined
}

IndexTable index_table(const OrderIdeal& ideal, const ExponentVector& bounds) {
  if (ideal.empty()) {
    throw std::invalid_argument("index table of an empty order ideal");
  }
  if (bounds.dim() != ideal.dim()) {
    throw std::invalid_argument("index table bounds dimension mismatch");
  }
  BoxIndexer indexer(bounds);
  auto points = box_points(bounds);
  // Total-degree order guarantees every predecessor t/x_i is already filled.
  std::stable_sort(points.begin(), points.end(),
                   [](const ExponentVector& a, const ExponentVector& b) {
                     return a.total_degree() < b.total_degree();
                   });
  std::vector<std::uint64_t> values(indexer.size(), 0);
  for (const auto& p : points) {
    if (ideal.contains(p)) continue;
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (std::size_t i = 0; i < p.dim(); ++i) {
      if (p[i] == 0) continue;
      best = std::min(best, values[indexer.offset(p.minus_unit(i))] + 1);
    }
    if (best == std::numeric_limits<std::uint64_t>::max()) {
      // Only the origin has no predecessors, and the origin is in the ideal.
      throw std::logic_error("index recursion hit a point with no divisor");
    }
    values[indexer.offset(p)] = best;
  }
  return IndexTable(bounds, std::move(values));
}

}  // namespace borderidx
