#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <unordered_set>
#include <vector>

namespace borderidx {

// A point of N^n: the exponent of a monomial x^alpha. Immutable value type.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<std::uint32_t> coords)
      : coords_(std::move(coords)) {}
  ExponentVector(std::initializer_list<std::uint32_t> coords)
      : coords_(coords) {}

  static ExponentVector zero(std::size_t dim) {
    return ExponentVector(std::vector<std::uint32_t>(dim, 0));
  }
  static ExponentVector unit(std::size_t dim, std::size_t i);

  std::size_t dim() const { return coords_.size(); }
  std::uint32_t operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<std::uint32_t>& coords() const { return coords_; }

  std::uint64_t total_degree() const;

  // Componentwise <=, i.e. x^this divides x^other.
  bool divides(const ExponentVector& other) const;

  ExponentVector plus_unit(std::size_t i) const;
  ExponentVector minus_unit(std::size_t i) const;  // requires coords_[i] > 0
  ExponentVector operator+(const ExponentVector& other) const;
  // Componentwise difference; requires other.divides(*this).
  ExponentVector operator-(const ExponentVector& other) const;

  friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator!=(const ExponentVector& a, const ExponentVector& b) {
    return !(a == b);
  }

  std::string to_string() const;  // "(a_1,...,a_n)"

 private:
  std::vector<std::uint32_t> coords_;
};

ExponentVector componentwise_max(const ExponentVector& a,
                                 const ExponentVector& b);

// Canonical term order: by total degree, ties broken lexicographically with
// the first coordinate most significant and larger entries first. Sorting
// ascending under this comparator lists a degree block as y1^d, y1^{d-1}y2,
// ..., yn^d, the usual reading order.
struct GradedLexLess {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

struct ExponentVectorHash {
  std::size_t operator()(const ExponentVector& v) const;
};

using ExponentSet = std::unordered_set<ExponentVector, ExponentVectorHash>;

}  // namespace borderidx
