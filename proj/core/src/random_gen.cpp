#include "borderidx/random_gen.hpp"

namespace borderidx {

std::uint64_t RandomGen::below(std::uint64_t n) {
  // Modulo bias is irrelevant at test-sized ranges.
  return n == 0 ? 0 : rng_() % n;
}

std::int64_t RandomGen::between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(
                  below(static_cast<std::uint64_t>(hi - lo + 1)));
}

OrderIdeal RandomGen::order_ideal(std::size_t dim, std::size_t max_elements) {
  // Coordinate caps per dimension keep the downward closure small.
  static constexpr std::uint32_t kCoordCap[] = {0, 9, 6, 4, 3, 2, 2};
  const std::uint32_t cap =
      dim < std::size(kCoordCap) ? kCoordCap[dim] : 2;
  for (;;) {
    const std::size_t gen_count = 1 + below(3);
    std::vector<ExponentVector> gens;
    for (std::size_t g = 0; g < gen_count; ++g) {
      std::vector<std::uint32_t> coords(dim);
      for (auto& c : coords) {
        c = static_cast<std::uint32_t>(below(cap + 1));
      }
      gens.emplace_back(std::move(coords));
    }
    OrderIdeal ideal = OrderIdeal::from_generators(dim, gens);
    if (!ideal.empty() && ideal.size() <= max_elements) return ideal;
  }
}

std::vector<std::uint32_t> RandomGen::partition(std::uint32_t max_parts,
                                                std::uint32_t max_part) {
  const std::uint32_t parts =
      1 + static_cast<std::uint32_t>(below(max_parts));
  std::vector<std::uint32_t> lambda(parts);
  std::uint32_t current = 1 + static_cast<std::uint32_t>(below(max_part));
  for (auto& part : lambda) {
    part = current;
    current = 1 + static_cast<std::uint32_t>(below(current));
  }
  return lambda;
}

Rational RandomGen::rational(std::int64_t limit) {
  const std::int64_t num = between(-limit, limit);
  const std::int64_t den = between(1, limit);
  Rational r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

LinearWeight RandomGen::weight(std::size_t dim, bool integral,
                               std::int64_t limit) {
  LinearWeight w;
  w.a.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    w.a.push_back(integral
                      ? Rational(static_cast<unsigned long>(below(limit + 1)))
                      : rational(limit));
  }
  w.b = integral ? Rational(static_cast<unsigned long>(below(limit + 1)))
                 : rational(limit);
  return w;
}

}  // namespace borderidx
