#pragma once

#include <string>

#include "borderidx/polynomial.hpp"
#include "borderidx/series_table.hpp"

namespace borderidx {

// Rational generating function numerator / prod_i (1-y_i)^{e_i}. Only this
// structured denominator shape exists; operations never leave it.
class RationalGF {
 public:
  RationalGF(Polynomial numerator, ExponentVector denom_exponents);

  static RationalGF zero(std::size_t dim);
  static RationalGF from_polynomial(Polynomial p);

  std::size_t dim() const { return numerator_.dim(); }
  const Polynomial& numerator() const { return numerator_; }
  const ExponentVector& denom_exponents() const { return denom_exponents_; }

  // Canonical form: strips every (1-y_i) factor common to numerator and
  // denominator; the zero function gets an all-zero denominator.
  RationalGF reduced() const;

  // c * y^shift * this
  RationalGF scaled_by_monomial(const ExponentVector& shift,
                                const Rational& c) const;

  // Reduce-then-compare equality.
  bool equals(const RationalGF& other) const;

  // True iff this * prod (1-y_i)^{e_i} has no denominator left.
  bool clears_denominator(const ExponentVector& e) const;

  std::string to_latex(const std::string& var = "y") const;

 private:
  Polynomial numerator_;
  ExponentVector denom_exponents_;
};

// Exact sum over the componentwise-max common denominator, canonicalized.
RationalGF gf_add(const RationalGF& a, const RationalGF& b);
RationalGF gf_sub(const RationalGF& a, const RationalGF& b);

// Taylor coefficients for all alpha <= bounds, via the binomial expansion of
// each 1/(1-y_i)^{e_i} and exact convolution along the axis.
SeriesTable expand(const RationalGF& gf, const ExponentVector& bounds);

}  // namespace borderidx
