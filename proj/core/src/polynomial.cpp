#include "borderidx/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace borderidx {

Polynomial Polynomial::constant(std::size_t dim, const Rational& c) {
  Polynomial p(dim);
  p.add_term(ExponentVector::zero(dim), c);
  return p;
}

Polynomial Polynomial::monomial(std::size_t dim,
                                const ExponentVector& exponent,
                                const Rational& c) {
  Polynomial p(dim);
  p.add_term(exponent, c);
  return p;
}

Polynomial Polynomial::one_minus_var(std::size_t dim, std::size_t i) {
  Polynomial p(dim);
  p.add_term(ExponentVector::zero(dim), 1);
  p.add_term(ExponentVector::unit(dim, i), -1);
  return p;
}

Rational Polynomial::coefficient(const ExponentVector& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const ExponentVector& exponent, const Rational& c) {
  if (exponent.dim() != dim_) {
    throw std::invalid_argument("term dimension mismatch");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  if (dim_ != other.dim_) {
    throw std::invalid_argument("polynomial dimension mismatch");
  }
  Polynomial result = *this;
  for (const auto& [e, c] : other.terms_) result.add_term(e, c);
  return result;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  if (dim_ != other.dim_) {
    throw std::invalid_argument("polynomial dimension mismatch");
  }
  Polynomial result = *this;
  for (const auto& [e, c] : other.terms_) result.add_term(e, -c);
  return result;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (dim_ != other.dim_) {
    throw std::invalid_argument("polynomial dimension mismatch");
  }
  Polynomial result(dim_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      result.add_term(ea + eb, ca * cb);
    }
  }
  return result;
}

Polynomial Polynomial::operator*(const Rational& scalar) const {
  Polynomial result(dim_);
  if (scalar == 0) return result;
  for (const auto& [e, c] : terms_) result.add_term(e, c * scalar);
  return result;
}

Polynomial Polynomial::scaled(const ExponentVector& shift,
                              const Rational& c) const {
  if (shift.dim() != dim_) {
    throw std::invalid_argument("monomial shift dimension mismatch");
  }
  Polynomial result(dim_);
  if (c == 0) return result;
  for (const auto& [e, coeff] : terms_) result.add_term(e + shift, coeff * c);
  return result;
}

Polynomial Polynomial::embed(std::size_t new_dim,
                             const std::vector<std::size_t>& coord_map) const {
  if (coord_map.size() != dim_) {
    throw std::invalid_argument("embed: coordinate map has wrong length");
  }
  for (auto target : coord_map) {
    if (target >= new_dim) {
      throw std::invalid_argument("embed: coordinate out of range");
    }
  }
  Polynomial result(new_dim);
  for (const auto& [e, c] : terms_) {
    std::vector<std::uint32_t> coords(new_dim, 0);
    for (std::size_t l = 0; l < dim_; ++l) coords[coord_map[l]] = e[l];
    result.add_term(ExponentVector(std::move(coords)), c);
  }
  return result;
}

std::optional<Polynomial> Polynomial::divide_by_one_minus(std::size_t i) const {
  if (i >= dim_) throw std::invalid_argument("variable index out of range");
  // Group terms by the exponents away from variable i; within each group the
  // quotient coefficients are the running partial sums, and the division is
  // exact iff each group's coefficients sum to zero.
  std::map<ExponentVector, std::map<std::uint32_t, Rational>, GradedLexLess>
      groups;
  for (const auto& [e, c] : terms_) {
    auto profile = e.coords();
    std::uint32_t k = profile[i];
    profile[i] = 0;
    groups[ExponentVector(std::move(profile))][k] = c;
  }
  Polynomial quotient(dim_);
  for (const auto& [profile, column] : groups) {
    const std::uint32_t top = column.rbegin()->first;
    Rational running(0);
    for (std::uint32_t k = 0; k <= top; ++k) {
      auto it = column.find(k);
      if (it != column.end()) running += it->second;
      if (k == top) {
        if (running != 0) return std::nullopt;
      } else if (running != 0) {
        auto coords = profile.coords();
        coords[i] = k;
        quotient.add_term(ExponentVector(std::move(coords)), running);
      }
    }
  }
  return quotient;
}

std::string Polynomial::to_latex(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    Rational mag = negative ? Rational(-c) : c;
    const bool constant_term = e.total_degree() == 0;
    if (mag != 1 || constant_term) out << format_rational(mag);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (e[i] == 0) continue;
      out << var << "_" << (i + 1);
      if (e[i] > 1) out << "^{" << e[i] << "}";
    }
  }
  return out.str();
}

}  // namespace borderidx
