#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "borderidx/exponent_vector.hpp"
#include "borderidx/rational.hpp"

namespace borderidx {

// Sparse multivariate polynomial with exact rational coefficients. Terms are
// kept in graded-lex order and zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<ExponentVector, Rational, GradedLexLess>;

  explicit Polynomial(std::size_t dim) : dim_(dim) {}

  static Polynomial constant(std::size_t dim, const Rational& c);
  static Polynomial monomial(std::size_t dim, const ExponentVector& exponent,
                             const Rational& c);
  // 1 - y_i
  static Polynomial one_minus_var(std::size_t dim, std::size_t i);

  std::size_t dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Rational coefficient(const ExponentVector& exponent) const;

  // Adds c*y^exponent, erasing the term if the sum cancels.
  void add_term(const ExponentVector& exponent, const Rational& c);

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Rational& scalar) const;
  // y^shift * c * this
  Polynomial scaled(const ExponentVector& shift, const Rational& c) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  // Reinterprets variable l as variable coord_map[l] of an ambient
  // new_dim-variable ring; coord_map must be injective.
  Polynomial embed(std::size_t new_dim,
                   const std::vector<std::size_t>& coord_map) const;

  // Exact quotient by (1 - y_i), or nullopt when not divisible.
  std::optional<Polynomial> divide_by_one_minus(std::size_t i) const;

  std::string to_latex(const std::string& var = "y") const;

 private:
  std::size_t dim_;
  TermMap terms_;
};

}  // namespace borderidx
