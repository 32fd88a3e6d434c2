#pragma once

#include <cstddef>
#include <vector>

#include "borderidx/rational_gf.hpp"

namespace borderidx {

// The linear form a_1*alpha_1 + ... + a_n*alpha_n + b attached to a cone sum
// P_n. n = 0 (constant b) is allowed.
struct LinearWeight {
  std::vector<Rational> a;
  Rational b;

  std::size_t dim() const { return a.size(); }
};

// Closed form of P_n(y;a;b) = sum_alpha (a.alpha + b) y^alpha: the 2^n-term
// alternating numerator over prod (1-y_i)^2. P_0 is the constant b.
RationalGF pn_closed(const LinearWeight& w);

// Direct evaluation a.alpha + b on every point of the box.
SeriesTable pn_series_oracle(const LinearWeight& w,
                             const ExponentVector& bounds);

// Independent oracle through d/dt [ t^b prod (1-t^{a_i} y_i)^{-1} ] at t=1,
// carried out as truncated series arithmetic with polynomial coefficients in
// t. Requires nonnegative integer a_i and b.
SeriesTable pn_derivative_oracle(const LinearWeight& w,
                                 const ExponentVector& bounds);

}  // namespace borderidx
