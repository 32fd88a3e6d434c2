#include "borderidx/exponent_vector.hpp"

#include <sstream>
#include <stdexcept>

namespace borderidx {

ExponentVector ExponentVector::unit(std::size_t dim, std::size_t i) {
  std::vector<std::uint32_t> coords(dim, 0);
  coords.at(i) = 1;
  return ExponentVector(std::move(coords));
}

std::uint64_t ExponentVector::total_degree() const {
  std::uint64_t sum = 0;
  for (auto c : coords_) sum += c;
  return sum;
}

bool ExponentVector::divides(const ExponentVector& other) const {
  if (dim() != other.dim()) return false;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] > other.coords_[i]) return false;
  }
  return true;
}

ExponentVector ExponentVector::plus_unit(std::size_t i) const {
  auto coords = coords_;
  coords.at(i) += 1;
  return ExponentVector(std::move(coords));
}

ExponentVector ExponentVector::minus_unit(std::size_t i) const {
  auto coords = coords_;
  if (coords.at(i) == 0) {
    throw std::invalid_argument("minus_unit: coordinate already zero");
  }
  coords[i] -= 1;
  return ExponentVector(std::move(coords));
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
  if (dim() != other.dim()) {
    throw std::invalid_argument("exponent vector dimension mismatch");
  }
  auto coords = coords_;
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += other[i];
  return ExponentVector(std::move(coords));
}

ExponentVector ExponentVector::operator-(const ExponentVector& other) const {
  if (!other.divides(*this)) {
    throw std::invalid_argument("exponent vector difference would be negative");
  }
  auto coords = coords_;
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= other[i];
  return ExponentVector(std::move(coords));
}

std::string ExponentVector::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i > 0) out << ',';
    out << coords_[i];
  }
  out << ')';
  return out.str();
}

ExponentVector componentwise_max(const ExponentVector& a,
                                 const ExponentVector& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("exponent vector dimension mismatch");
  }
  std::vector<std::uint32_t> coords(a.dim());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    coords[i] = std::max(a[i], b[i]);
  }
  return ExponentVector(std::move(coords));
}

bool GradedLexLess::operator()(const ExponentVector& a,
                               const ExponentVector& b) const {
  const auto da = a.total_degree();
  const auto db = b.total_degree();
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.dim() && i < b.dim(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

std::size_t ExponentVectorHash::operator()(const ExponentVector& v) const {
  // FNV-1a over the coordinates.
  std::uint64_t h = 14695981039346656037ull;
  for (auto c : v.coords()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace borderidx
