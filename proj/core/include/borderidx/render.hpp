#pragma once

#include <string>
#include <vector>

#include "borderidx/index_engine.hpp"

namespace borderidx {

// Index table as aligned integer rows. Dimension 2 prints rows top-down by
// decreasing second coordinate with (0,0) at the bottom left; dimension 1 is
// a single row; higher dimensions print one such block per tail-coordinate
// slice, each preceded by a "x3=... :" header.
std::string render_index_matrix(const IndexTable& table);

// One exponent vector per line, coordinates space-separated, graded-lex
// order.
std::string render_exponents_text(const std::vector<ExponentVector>& points);

// "\{x_1^{3}, x_1x_2, ...\}" style monomial set.
std::string render_exponents_latex(const std::vector<ExponentVector>& points,
                                   const std::string& var = "x");

}  // namespace borderidx
