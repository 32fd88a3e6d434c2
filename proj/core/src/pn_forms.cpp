#include "borderidx/pn_forms.hpp"

#include <map>
#include <stdexcept>

namespace borderidx {

RationalGF pn_closed(const LinearWeight& w) {
  const std::size_t n = w.dim();
  if (n > 31) throw std::invalid_argument("pn_closed: dimension too large");
  Polynomial numerator(n);
  for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
    Rational coeff = w.b;
    std::vector<std::uint32_t> exponent(n, 0);
    int parity = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (subset & (1u << j)) {
        coeff -= w.a[j];
        exponent[j] = 1;
        parity = -parity;
      }
    }
    numerator.add_term(ExponentVector(std::move(exponent)), coeff * parity);
  }
  return RationalGF(std::move(numerator),
                    ExponentVector(std::vector<std::uint32_t>(n, 2)));
}

SeriesTable pn_series_oracle(const LinearWeight& w,
                             const ExponentVector& bounds) {
  if (bounds.dim() != w.dim()) {
    throw std::invalid_argument("pn_series_oracle bounds dimension mismatch");
  }
  SeriesTable table(bounds);
  const auto& indexer = table.indexer();
  for (std::size_t off = 0; off < indexer.size(); ++off) {
    const auto point = indexer.point(off);
    Rational value = w.b;
    for (std::size_t i = 0; i < w.dim(); ++i) {
      value += w.a[i] * static_cast<unsigned long>(point[i]);
    }
    table.coeffs()[off] = value;
  }
  return table;
}

SeriesTable pn_derivative_oracle(const LinearWeight& w,
                                 const ExponentVector& bounds) {
  if (bounds.dim() != w.dim()) {
    throw std::invalid_argument(
        "pn_derivative_oracle bounds dimension mismatch");
  }
  std::vector<std::uint64_t> a(w.dim());
  for (std::size_t i = 0; i < w.dim(); ++i) {
    if (w.a[i].get_den() != 1 || w.a[i] < 0) {
      throw std::invalid_argument(
          "pn_derivative_oracle needs nonnegative integer weights");
    }
    a[i] = mpz_class(w.a[i].get_num()).get_ui();
  }
  if (w.b.get_den() != 1 || w.b < 0) {
    throw std::invalid_argument(
        "pn_derivative_oracle needs nonnegative integer offset");
  }
  const std::uint64_t b = mpz_class(w.b.get_num()).get_ui();

  // Truncated expansion of t^b * prod_i (1 - t^{a_i} x_i)^{-1}: one sparse
  // univariate polynomial in t per x-coefficient.
  using TPoly = std::map<std::uint64_t, Rational>;
  BoxIndexer indexer(bounds);
  std::vector<TPoly> coeffs(indexer.size());
  coeffs[0][b] = 1;
  for (std::size_t i = 0; i < w.dim(); ++i) {
    std::vector<TPoly> next(indexer.size());
    for (std::size_t off = 0; off < indexer.size(); ++off) {
      if (coeffs[off].empty()) continue;
      const auto point = indexer.point(off);
      for (std::uint32_t k = 0; point[i] + k <= bounds[i]; ++k) {
        auto shifted = point.coords();
        shifted[i] += k;
        auto& target = next[indexer.offset(ExponentVector(std::move(shifted)))];
        for (const auto& [deg, c] : coeffs[off]) {
          target[deg + a[i] * k] += c;
        }
      }
    }
    coeffs = std::move(next);
  }

  // d/dt at t=1 sends sum c_d t^d to sum d*c_d.
  SeriesTable table(bounds);
  for (std::size_t off = 0; off < indexer.size(); ++off) {
    Rational value(0);
    for (const auto& [deg, c] : coeffs[off]) {
      value += c * Rational(static_cast<unsigned long>(deg));
    }
    table.coeffs()[off] = value;
  }
  return table;
}

}  // namespace borderidx
