#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "borderidx/decomposition.hpp"
#include "borderidx/errors.hpp"
#include "borderidx/index_engine.hpp"
#include "borderidx/order_ideal.hpp"
#include "borderidx/rational_gf.hpp"

namespace borderidx {

// Accepted order-ideal schemas:
//   {"dim": n, "generators": [[...], ...]}
//   {"dim": n, "elements":   [[...], ...]}
//   {"partition": [l1, ..., lm]}            (dimension-2 shorthand)
// Exactly one of the three keys; unknown keys are rejected. Throws ParseError
// for schema problems, InvalidIdealError when the data is not an order ideal.
OrderIdeal order_ideal_from_json(const std::string& text);

// {"cones": [{"anchor": [...], "free": [i, ...]}, ...]}, free 1-based.
StanleyDecomposition decomposition_from_json(const std::string& text,
                                             std::size_t expect_dim);
std::string decomposition_to_json(const StanleyDecomposition& d);

// {"num": [[e1, ..., en, "p/q"], ...], "den": [d1, ..., dn]}, terms in
// graded-lex order.
std::string gf_to_json(const RationalGF& gf);
RationalGF gf_from_json(const std::string& text);

// {"dim": n, "bounds": [...], "entries": [[a1, ..., an, v], ...]} in
// graded-lex order of the exponent.
std::string index_table_to_json(const IndexTable& table);
IndexTable index_table_from_json(const std::string& text);

std::string read_file(const std::string& path);  // throws ParseError

}  // namespace borderidx
