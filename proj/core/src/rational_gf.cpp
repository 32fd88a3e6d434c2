#include "borderidx/rational_gf.hpp"

#include <sstream>
#include <stdexcept>

namespace borderidx {

namespace {

Polynomial one_minus_power(std::size_t dim, std::size_t i, std::uint32_t e) {
  Polynomial result = Polynomial::constant(dim, 1);
  const Polynomial factor = Polynomial::one_minus_var(dim, i);
  for (std::uint32_t k = 0; k < e; ++k) result = result * factor;
  return result;
}

}  // namespace

RationalGF::RationalGF(Polynomial numerator, ExponentVector denom_exponents)
    : numerator_(std::move(numerator)),
      denom_exponents_(std::move(denom_exponents)) {
  if (numerator_.dim() != denom_exponents_.dim()) {
    throw std::invalid_argument("numerator/denominator dimension mismatch");
  }
}

RationalGF RationalGF::zero(std::size_t dim) {
  return RationalGF(Polynomial(dim), ExponentVector::zero(dim));
}

RationalGF RationalGF::from_polynomial(Polynomial p) {
  auto dim = p.dim();
  return RationalGF(std::move(p), ExponentVector::zero(dim));
}

RationalGF RationalGF::reduced() const {
  if (numerator_.is_zero()) return zero(dim());
  Polynomial num = numerator_;
  auto den = denom_exponents_.coords();
  for (std::size_t i = 0; i < den.size(); ++i) {
    while (den[i] > 0) {
      auto quotient = num.divide_by_one_minus(i);
      if (!quotient) break;
      num = std::move(*quotient);
      den[i] -= 1;
    }
  }
  return RationalGF(std::move(num), ExponentVector(std::move(den)));
}

RationalGF RationalGF::scaled_by_monomial(const ExponentVector& shift,
                                          const Rational& c) const {
  return RationalGF(numerator_.scaled(shift, c), denom_exponents_);
}

bool RationalGF::equals(const RationalGF& other) const {
  if (dim() != other.dim()) return false;
  RationalGF a = reduced();
  RationalGF b = other.reduced();
  return a.numerator_ == b.numerator_ &&
         a.denom_exponents_ == b.denom_exponents_;
}

bool RationalGF::clears_denominator(const ExponentVector& e) const {
  if (e.dim() != dim()) {
    throw std::invalid_argument("clears_denominator dimension mismatch");
  }
  RationalGF r = reduced();
  for (std::size_t i = 0; i < dim(); ++i) {
    if (r.denom_exponents_[i] > e[i]) return false;
  }
  return true;
}

std::string RationalGF::to_latex(const std::string& var) const {
  bool trivial = true;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (denom_exponents_[i] > 0) trivial = false;
  }
  if (trivial) return numerator_.to_latex(var);
  std::ostringstream out;
  out << "\\frac{" << numerator_.to_latex(var) << "}{";
  for (std::size_t i = 0; i < dim(); ++i) {
    if (denom_exponents_[i] == 0) continue;
    out << "(1-" << var << "_" << (i + 1) << ")";
    if (denom_exponents_[i] > 1) out << "^{" << denom_exponents_[i] << "}";
  }
  out << "}";
  return out.str();
}

RationalGF gf_add(const RationalGF& a, const RationalGF& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("generating function dimension mismatch");
  }
  const auto common =
      componentwise_max(a.denom_exponents(), b.denom_exponents());
  Polynomial num_a = a.numerator();
  Polynomial num_b = b.numerator();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (auto lift = common[i] - a.denom_exponents()[i]) {
      num_a = num_a * one_minus_power(a.dim(), i, lift);
    }
    if (auto lift = common[i] - b.denom_exponents()[i]) {
      num_b = num_b * one_minus_power(b.dim(), i, lift);
    }
  }
  return RationalGF(num_a + num_b, common).reduced();
}

RationalGF gf_sub(const RationalGF& a, const RationalGF& b) {
  return gf_add(a, b.scaled_by_monomial(ExponentVector::zero(b.dim()), -1));
}

SeriesTable expand(const RationalGF& gf, const ExponentVector& bounds) {
  if (bounds.dim() != gf.dim()) {
    throw std::invalid_argument("expand bounds dimension mismatch");
  }
  SeriesTable table(bounds);
  // Numerator terms beyond the box cannot influence coefficients inside it.
  for (const auto& [e, c] : gf.numerator().terms()) {
    bool inside = true;
    for (std::size_t i = 0; i < e.dim(); ++i) {
      if (e[i] > bounds[i]) inside = false;
    }
    if (inside) table.at(e) = c;
  }
  const auto& indexer = table.indexer();
  for (std::size_t i = 0; i < gf.dim(); ++i) {
    const std::uint32_t e = gf.denom_exponents()[i];
    if (e == 0) continue;
    // 1/(1-y_i)^e = sum_k binom(k+e-1, e-1) y_i^k, convolved along axis i.
    std::vector<Rational> weights(bounds[i] + 1);
    for (std::uint32_t k = 0; k <= bounds[i]; ++k) {
      mpz_class w;
      mpz_bin_uiui(w.get_mpz_t(), k + e - 1, e - 1);
      weights[k] = Rational(w);
    }
    std::vector<Rational> next(indexer.size(), Rational(0));
    for (std::size_t off = 0; off < indexer.size(); ++off) {
      const Rational& c = table.coeffs()[off];
      if (c == 0) continue;
      const auto point = indexer.point(off);
      for (std::uint32_t k = 0; point[i] + k <= bounds[i]; ++k) {
        auto shifted = point.coords();
        shifted[i] += k;
        next[indexer.offset(ExponentVector(std::move(shifted)))] +=
            c * weights[k];
      }
    }
    table.coeffs() = std::move(next);
  }
  return table;
}

}  // namespace borderidx
