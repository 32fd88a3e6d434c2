#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "borderidx/decomposition.hpp"
#include "borderidx/pn_forms.hpp"
#include "borderidx/random_gen.hpp"
#include "test_util.hpp"

using namespace borderidx;
using borderidx::testing::staircase_311;

namespace {

// The five-cone decomposition of the staircase complement:
// x2^3 T({1,2}), x1x2^2 T({1}), x1x2 T({}), x1^2x2 T({1}), x1^3 T({1}).
StanleyDecomposition economic_decomposition() {
  StanleyDecomposition d;
  d.dim = 2;
  d.cones = {
      {ExponentVector{0, 3}, {0, 1}},
      {ExponentVector{1, 2}, {0}},
      {ExponentVector{1, 1}, {}},
      {ExponentVector{2, 1}, {0}},
      {ExponentVector{3, 0}, {0}},
  };
  return d;
}

// Same complement, but the (1,1) singleton is absorbed into a cone with a
// free direction; the index is not strictly increasing along it.
StanleyDecomposition inadmissible_decomposition() {
  StanleyDecomposition d;
  d.dim = 2;
  d.cones = {
      {ExponentVector{0, 3}, {0, 1}},
      {ExponentVector{1, 2}, {0}},
      {ExponentVector{1, 1}, {0}},
      {ExponentVector{3, 0}, {0}},
  };
  return d;
}

// Quadrant cones anchored on the border with free directions measured in the
// closed border. Overlapping quadrants make this fail as a partition.
StanleyDecomposition quadrant_decomposition(const OrderIdeal& ideal) {
  const auto closed = closed_border(ideal);
  StanleyDecomposition d;
  d.dim = ideal.dim();
  for (const auto& u : border(ideal)) {
    d.cones.push_back(Cone{u, free_directions(closed, u)});
  }
  return d;
}

ExponentVector padded_corner(const OrderIdeal& ideal, std::uint32_t pad) {
  auto coords = bounding_box(ideal).corner.coords();
  for (auto& c : coords) c += pad;
  return ExponentVector(std::move(coords));
}

}  // namespace

TEST_CASE("cone disjointness") {
  CHECK(cone_disjoint(Cone{ExponentVector{3, 0}, {0}},
                      Cone{ExponentVector{0, 3}, {1}}));
  // Both quadrants contain (3,3).
  CHECK(!cone_disjoint(Cone{ExponentVector{3, 2}, {0, 1}},
                       Cone{ExponentVector{2, 3}, {0, 1}}));
  const Cone c{ExponentVector{1, 2}, {0}};
  CHECK(!cone_disjoint(c, c));
  CHECK_THROWS_AS(cone_disjoint(c, Cone{ExponentVector{1}, {}}),
                  std::invalid_argument);
}

TEST_CASE("partition validation") {
  const auto ideal = staircase_311();
  CHECK(validate_partition(economic_decomposition(), ideal).ok);

  // Dropping the singleton leaves (1,1) uncovered.
  auto gap = economic_decomposition();
  gap.cones.erase(gap.cones.begin() + 2);
  const auto uncovered = validate_partition(gap, ideal);
  CHECK(!uncovered.ok);
  CHECK(uncovered.failure == PartitionFailure::coverage);
  CHECK(*uncovered.witness == ExponentVector{1, 1});
  CHECK(uncovered.witness_excess == -1);

  // A duplicated cone trips the pairwise disjointness check.
  auto doubled = economic_decomposition();
  doubled.cones.push_back(doubled.cones.back());
  const auto overlap = validate_partition(doubled, ideal);
  CHECK(!overlap.ok);
  CHECK(overlap.failure == PartitionFailure::overlap);

  // Anchors must avoid the ideal.
  StanleyDecomposition inside;
  inside.dim = 2;
  inside.cones = {{ExponentVector{0, 0}, {0, 1}}};
  const auto bad = validate_partition(inside, ideal);
  CHECK(!bad.ok);
  CHECK(bad.failure == PartitionFailure::anchor_in_ideal);
}

TEST_CASE("admissibility verdicts") {
  const auto ideal = staircase_311();

  // Every free anchor coordinate of the box decomposition clears the corner.
  const auto box = enlarged_box_decomposition(ideal);
  CHECK(check_admissible(box, ideal, ExponentVector{8, 8}).tier ==
        AdmissibilityTier::proved);
  // A cone whose free anchor coordinate stays inside the box falls back to
  // sampling; ind(3, 1+k) = 2+k, so the check still passes pointwise.
  auto relaxed = box;
  relaxed.cones.push_back(Cone{ExponentVector{3, 1}, {1}});
  CHECK(check_admissible(relaxed, ideal, ExponentVector{8, 8}).tier ==
        AdmissibilityTier::sampled_ok);

  // Economic cones sit on the box boundary, so only sampling is available.
  CHECK(check_admissible(economic_decomposition(), ideal,
                         ExponentVector{8, 8})
            .tier == AdmissibilityTier::sampled_ok);

  // ind(1,1) = 1 but ind(2,1) = 1, so the embedded cone is falsified.
  const auto verdict = check_admissible(inadmissible_decomposition(), ideal,
                                        ExponentVector{8, 8});
  CHECK(verdict.tier == AdmissibilityTier::falsified);
  CHECK(inadmissible_decomposition().cones[verdict.cone].anchor ==
        ExponentVector{1, 1});
  CHECK(*verdict.beta == ExponentVector{1, 0});

  // Singleton cones carry no growth condition at all.
  StanleyDecomposition singles;
  singles.dim = 2;
  singles.cones = {{ExponentVector{1, 1}, {}}, {ExponentVector{3, 0}, {}}};
  CHECK(check_admissible(singles, ideal, ExponentVector{4, 4}).tier ==
        AdmissibilityTier::proved);
}

TEST_CASE("enlarged box decomposition") {
  const auto ideal = staircase_311();
  const auto d = enlarged_box_decomposition(ideal);
  CHECK(d.cones.size() == 11);

  std::set<std::vector<std::uint32_t>> quadrant, vertical, horizontal,
      singleton;
  for (const auto& cone : d.cones) {
    if (cone.free == std::vector<std::size_t>{0, 1}) {
      quadrant.insert(cone.anchor.coords());
    } else if (cone.free == std::vector<std::size_t>{0}) {
      vertical.insert(cone.anchor.coords());
    } else if (cone.free == std::vector<std::size_t>{1}) {
      horizontal.insert(cone.anchor.coords());
    } else {
      singleton.insert(cone.anchor.coords());
    }
  }
  CHECK(quadrant == std::set<std::vector<std::uint32_t>>{{3, 3}});
  CHECK(vertical ==
        std::set<std::vector<std::uint32_t>>{{3, 0}, {3, 1}, {3, 2}});
  CHECK(horizontal ==
        std::set<std::vector<std::uint32_t>>{{0, 3}, {1, 3}, {2, 3}});
  CHECK(singleton == std::set<std::vector<std::uint32_t>>{
                         {1, 1}, {2, 1}, {1, 2}, {2, 2}});

  const auto tiny =
      enlarged_box_decomposition(OrderIdeal::validated(2, {ExponentVector{0, 0}}));
  CHECK(tiny.cones.size() == 3);

  const auto line = enlarged_box_decomposition(OrderIdeal::from_generators(
      1, {ExponentVector{4}}));
  CHECK(line.cones.size() == 1);
  CHECK(line.cones[0].anchor == ExponentVector{5});
  CHECK(line.cones[0].free == std::vector<std::size_t>{0});

  CHECK(validate_partition(d, ideal).ok);
  CHECK(validate_partition(tiny, OrderIdeal::validated(
                                     2, {ExponentVector{0, 0}})).ok);
}

TEST_CASE("assembling the index generating function") {
  const auto ideal = staircase_311();

  // The economic decomposition assembles to the expression
  // y2^3 P2(1,1;1) + y1y2^2 P1(1;1) + y1y2 + y1^2y2 P1(1;1) + y1^3 P1(1;1).
  const auto assembled = assemble_ind_gf(economic_decomposition(), ideal);
  auto embed1 = [](const RationalGF& gf, std::size_t coord) {
    std::vector<std::uint32_t> den(2, 0);
    den[coord] = 2;
    return RationalGF(gf.numerator().embed(2, {coord}),
                      ExponentVector(std::move(den)));
  };
  const auto p2 = pn_closed(LinearWeight{{1, 1}, 1});
  const auto p1 = pn_closed(LinearWeight{{1}, 1});
  RationalGF expected = p2.scaled_by_monomial(ExponentVector{0, 3}, 1);
  expected = gf_add(expected, embed1(p1, 0).scaled_by_monomial(
                                  ExponentVector{1, 2}, 1));
  expected = gf_add(expected, RationalGF::from_polynomial(Polynomial::monomial(
                                  2, ExponentVector{1, 1}, 1)));
  expected = gf_add(expected, embed1(p1, 0).scaled_by_monomial(
                                  ExponentVector{2, 1}, 1));
  expected = gf_add(expected, embed1(p1, 0).scaled_by_monomial(
                                  ExponentVector{3, 0}, 1));
  CHECK(assembled.gf.equals(expected));

  // Single variable: O = {1}, one cone, ind(x) = 1, so y/(1-y)^2.
  const auto line = OrderIdeal::validated(1, {ExponentVector{0}});
  const auto line_gf = assemble_ind_gf(enlarged_box_decomposition(line), line);
  CHECK(line_gf.gf.equals(RationalGF(
      Polynomial::monomial(1, ExponentVector{1}, 1), ExponentVector{2})));

  // Origin in two variables reduces to the total-degree series.
  const auto origin = OrderIdeal::validated(2, {ExponentVector{0, 0}});
  const auto origin_gf =
      assemble_ind_gf(enlarged_box_decomposition(origin), origin);
  CHECK(origin_gf.gf.equals(pn_closed(LinearWeight{{1, 1}, 0})));
}

TEST_CASE("index generating function") {
  const auto ideal = staircase_311();
  const auto gf = ind_gf(ideal);
  CHECK(gf.gf.equals(assemble_ind_gf(economic_decomposition(), ideal).gf));
  CHECK(gf.gf.clears_denominator(ExponentVector{2, 2}));

  // ind is the total degree when the ideal is just the origin.
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto origin =
        OrderIdeal::validated(n, {ExponentVector::zero(n)});
    CHECK(ind_gf(origin).gf.equals(
        pn_closed(LinearWeight{std::vector<Rational>(n, 1), 0})));
  }

  // O = {1, x, x^2}: the series starts 0,0,0,1,2,3,...
  const auto segment = OrderIdeal::from_generators(1, {ExponentVector{2}});
  const auto series = expand(ind_gf(segment).gf, ExponentVector{6});
  for (std::uint32_t k = 0; k <= 6; ++k) {
    CHECK(series.at(ExponentVector{k}) == (k <= 2 ? 0 : k - 2));
  }
}

TEST_CASE("dimension-2 closed form") {
  CHECK(ind_gf_2d({3, 1, 1}).gf.equals(ind_gf(staircase_311()).gf));
  CHECK(ind_gf_2d({1}).gf.equals(pn_closed(LinearWeight{{1, 1}, 0})));

  const auto square = ind_gf_2d({2, 2});
  const auto table = index_table(OrderIdeal::from_partition({2, 2}),
                                 ExponentVector{5, 5});
  const auto series = expand(square.gf, ExponentVector{5, 5});
  for (const auto& p : box_points(ExponentVector{5, 5})) {
    CHECK(series.at(p) == table.at(p));
  }

  RandomGen gen(64);
  for (int trial = 0; trial < 15; ++trial) {
    const auto lambda = gen.partition(6, 6);
    CHECK(ind_gf_2d(lambda).gf.equals(
        ind_gf(OrderIdeal::from_partition(lambda)).gf));
  }
}

TEST_CASE("series verification") {
  const auto ideal = staircase_311();
  const auto gf = ind_gf(ideal);
  CHECK(!verify_ind_gf(gf.gf, ideal, ExponentVector{7, 7}).has_value());

  // A perturbed numerator coefficient is caught with a witness.
  Polynomial bumped = gf.gf.numerator();
  bumped.add_term(ExponentVector{1, 1}, 1);
  const auto mismatch = verify_ind_gf(
      RationalGF(bumped, gf.gf.denom_exponents()), ideal, ExponentVector{7, 7});
  REQUIRE(mismatch.has_value());
  CHECK(mismatch->point == ExponentVector{1, 1});
  CHECK(mismatch->expected == 1);
  CHECK(mismatch->actual == 2);

  RandomGen gen(12);
  for (int trial = 0; trial < 10; ++trial) {
    const auto sample = gen.order_ideal(1 + gen.below(4));
    CHECK(!verify_ind_gf(ind_gf(sample).gf, sample, padded_corner(sample, 3))
               .has_value());
  }
}

TEST_CASE("border-anchored quadrants double-count") {
  const auto ideal = staircase_311();
  const auto quadrants = quadrant_decomposition(ideal);
  const auto check = validate_partition(quadrants, ideal);
  CHECK(!check.ok);
  CHECK(check.failure == PartitionFailure::overlap);
}

TEST_CASE("index grows linearly outside the bounding box") {
  RandomGen gen(83);
  for (int trial = 0; trial < 8; ++trial) {
    const std::size_t dim = 1 + gen.below(3);
    const auto ideal = gen.order_ideal(dim, 40);
    const auto corner = bounding_box(ideal).corner;
    const auto bounds = padded_corner(ideal, 4);
    const auto table = index_table(ideal, bounds);

    for (std::uint32_t mask = 1; mask < (1u << dim); ++mask) {
      for (const auto& alpha : box_points(bounds)) {
        bool beyond = true;
        for (std::size_t i = 0; i < dim; ++i) {
          if ((mask >> i) & 1) {
            if (alpha[i] <= corner[i]) beyond = false;
          }
        }
        if (!beyond) continue;
        std::vector<std::uint32_t> room(dim, 0);
        for (std::size_t i = 0; i < dim; ++i) {
          if ((mask >> i) & 1) room[i] = bounds[i] - alpha[i];
        }
        for (const auto& beta : box_points(ExponentVector(room))) {
          CHECK(table.at(alpha + beta) ==
                table.at(alpha) + beta.total_degree());
        }
      }
    }
  }
}

TEST_CASE("strip growth in dimension 2") {
  RandomGen gen(15);
  for (int trial = 0; trial < 10; ++trial) {
    const auto lambda = gen.partition(5, 5);
    const auto ideal = OrderIdeal::from_partition(lambda);
    const std::uint32_t m = static_cast<std::uint32_t>(lambda.size());
    const std::uint32_t top = lambda[0];
    const ExponentVector bounds{m + 4, top + 4};
    const auto table = index_table(ideal, bounds);
    for (std::uint32_t i = 0; i <= bounds[0]; ++i) {
      for (std::uint32_t j = 0; j <= bounds[1]; ++j) {
        if (i >= m) {
          for (std::uint32_t k = 0; i + k <= bounds[0]; ++k) {
            CHECK(table.at(ExponentVector{i + k, j}) ==
                  table.at(ExponentVector{i, j}) + k);
          }
        }
        if (j >= top) {
          for (std::uint32_t k = 0; j + k <= bounds[1]; ++k) {
            CHECK(table.at(ExponentVector{i, j + k}) ==
                  table.at(ExponentVector{i, j}) + k);
          }
        }
      }
    }
  }
}

TEST_CASE("denominator bound on produced functions") {
  RandomGen gen(77);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t dim = 1 + gen.below(4);
    const auto ideal = gen.order_ideal(dim, 40);
    const ExponentVector squares(std::vector<std::uint32_t>(dim, 2));
    CHECK(ind_gf(ideal).gf.clears_denominator(squares));
  }
}
