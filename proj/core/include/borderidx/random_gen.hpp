#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "borderidx/order_ideal.hpp"
#include "borderidx/pn_forms.hpp"

namespace borderidx {

// Deterministic generators for randomized verification sweeps. Distributions
// are hand-rolled on top of mt19937_64 so streams are reproducible across
// standard libraries.
class RandomGen {
 public:
  explicit RandomGen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n);           // uniform in [0, n)
  std::int64_t between(std::int64_t lo, std::int64_t hi);  // inclusive

  // Downward closure of a few random generators; nonempty, at most
  // max_elements elements.
  OrderIdeal order_ideal(std::size_t dim, std::size_t max_elements = 60);

  // Weakly decreasing positive partition with at most max_parts parts and
  // entries at most max_part.
  std::vector<std::uint32_t> partition(std::uint32_t max_parts,
                                       std::uint32_t max_part);

  // Random rational with numerator/denominator magnitudes <= limit.
  Rational rational(std::int64_t limit);

  // Weight with `dim` rational entries; integral = nonnegative integers only.
  LinearWeight weight(std::size_t dim, bool integral, std::int64_t limit);

 private:
  std::mt19937_64 rng_;
};

}  // namespace borderidx
