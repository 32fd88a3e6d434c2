#include "borderidx/decomposition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "borderidx/pn_forms.hpp"

namespace borderidx {

namespace {

bool is_free(const Cone& cone, std::size_t i) {
  return std::find(cone.free.begin(), cone.free.end(), i) != cone.free.end();
}

std::string cone_to_string(const Cone& cone) {
  std::ostringstream out;
  out << cone.anchor.to_string() << "+N^{";
  for (std::size_t k = 0; k < cone.free.size(); ++k) {
    if (k > 0) out << ',';
    out << cone.free[k] + 1;
  }
  out << "}";
  return out.str();
}

void check_cone(const StanleyDecomposition& d, const Cone& cone) {
  if (cone.anchor.dim() != d.dim) {
    throw std::invalid_argument("cone anchor dimension mismatch");
  }
  for (auto i : cone.free) {
    if (i >= d.dim) {
      throw std::invalid_argument("cone free direction out of range");
    }
  }
}

}  // namespace

bool cone_disjoint(const Cone& a, const Cone& b) {
  if (a.anchor.dim() != b.anchor.dim()) {
    throw std::invalid_argument("cone dimension mismatch");
  }
  // The cones share a point iff the per-coordinate constraints are jointly
  // satisfiable: fixed/fixed needs equality, fixed/free needs the fixed value
  // to reach the free anchor, free/free always works.
  for (std::size_t i = 0; i < a.anchor.dim(); ++i) {
    const bool fa = is_free(a, i);
    const bool fb = is_free(b, i);
    if (!fa && !fb) {
      if (a.anchor[i] != b.anchor[i]) return true;
    } else if (!fa && fb) {
      if (a.anchor[i] < b.anchor[i]) return true;
    } else if (fa && !fb) {
      if (b.anchor[i] < a.anchor[i]) return true;
    }
  }
  return false;
}

RationalGF cone_gf(std::size_t dim, const Cone& cone) {
  std::vector<std::uint32_t> den(dim, 0);
  for (auto i : cone.free) den[i] = 1;
  return RationalGF(Polynomial::monomial(dim, cone.anchor, 1),
                    ExponentVector(std::move(den)));
}

std::string PartitionCheck::describe() const {
  if (ok) return "partition valid";
  std::ostringstream out;
  switch (*failure) {
    case PartitionFailure::anchor_in_ideal:
      out << "anchor of cone " << cone_a << " lies inside the order ideal";
      break;
    case PartitionFailure::overlap:
      out << "cones " << cone_a << " and " << cone_b << " intersect";
      break;
    case PartitionFailure::coverage:
      out << "coverage fails at " << witness->to_string() << " (excess "
          << format_rational(witness_excess) << ")";
      break;
  }
  return out.str();
}

PartitionCheck validate_partition(const StanleyDecomposition& d,
                                  const OrderIdeal& ideal) {
  if (d.dim != ideal.dim()) {
    throw std::invalid_argument("decomposition dimension mismatch");
  }
  PartitionCheck result;
  for (std::size_t j = 0; j < d.cones.size(); ++j) {
    check_cone(d, d.cones[j]);
    if (ideal.contains(d.cones[j].anchor)) {
      result.ok = false;
      result.failure = PartitionFailure::anchor_in_ideal;
      result.cone_a = j;
      result.witness = d.cones[j].anchor;
      return result;
    }
  }
  for (std::size_t j = 0; j < d.cones.size(); ++j) {
    for (std::size_t k = j + 1; k < d.cones.size(); ++k) {
      if (!cone_disjoint(d.cones[j], d.cones[k])) {
        result.ok = false;
        result.failure = PartitionFailure::overlap;
        result.cone_a = j;
        result.cone_b = k;
        return result;
      }
    }
  }
  // Coverage as an exact identity: sum of cone GFs minus
  // (1/prod(1-y_i) - sum_O y^alpha) must vanish.
  const std::size_t n = d.dim;
  RationalGF sum = RationalGF::zero(n);
  for (const auto& cone : d.cones) sum = gf_add(sum, cone_gf(n, cone));
  Polynomial ideal_poly(n);
  for (const auto& e : ideal.elements()) ideal_poly.add_term(e, 1);
  RationalGF orthant(Polynomial::constant(n, 1),
                     ExponentVector(std::vector<std::uint32_t>(n, 1)));
  RationalGF residual =
      gf_add(gf_sub(sum, orthant), RationalGF::from_polynomial(ideal_poly));
  residual = residual.reduced();
  if (!residual.numerator().is_zero()) {
    result.ok = false;
    result.failure = PartitionFailure::coverage;
    // The graded-least numerator term of the reduced residual is the least
    // lattice point covered a wrong number of times; its coefficient is the
    // multiplicity excess (negative = uncovered).
    const auto& [point, excess] = *residual.numerator().terms().begin();
    result.witness = point;
    result.witness_excess = excess;
    return result;
  }
  return result;
}

std::string AdmissibilityVerdict::describe() const {
  switch (tier) {
    case AdmissibilityTier::proved:
      return "proved";
    case AdmissibilityTier::sampled_ok:
      return "sampled_ok";
    case AdmissibilityTier::falsified:
      break;
  }
  std::ostringstream out;
  out << "falsified: cone " << cone << " at offset " << beta->to_string();
  return out.str();
}

AdmissibilityVerdict check_admissible(const StanleyDecomposition& d,
                                      const OrderIdeal& ideal,
                                      const ExponentVector& sample_bounds) {
  if (d.dim != ideal.dim()) {
    throw std::invalid_argument("decomposition dimension mismatch");
  }
  if (sample_bounds.dim() != ideal.dim()) {
    throw std::invalid_argument("sample bounds dimension mismatch");
  }
  const ExponentVector corner = bounding_box(ideal).corner;

  bool all_proved = true;
  for (const auto& cone : d.cones) {
    check_cone(d, cone);
    for (auto i : cone.free) {
      if (cone.anchor[i] <= corner[i]) all_proved = false;
    }
  }
  if (all_proved) {
    // Every free anchor coordinate clears the bounding box, so the index
    // grows exactly linearly along each cone.
    return AdmissibilityVerdict{AdmissibilityTier::proved};
  }

  const IndexTable table = index_table(ideal, sample_bounds);
  for (std::size_t j = 0; j < d.cones.size(); ++j) {
    const auto& cone = d.cones[j];
    bool inside = true;
    for (std::size_t i = 0; i < d.dim; ++i) {
      if (cone.anchor[i] > sample_bounds[i]) inside = false;
    }
    if (!inside) continue;  // no cone point falls in the sample box
    const std::uint64_t base = table.at(cone.anchor);
    // All beta supported on the free set with anchor + beta in the box.
    std::vector<std::uint32_t> room(cone.free.size());
    for (std::size_t k = 0; k < cone.free.size(); ++k) {
      room[k] = sample_bounds[cone.free[k]] - cone.anchor[cone.free[k]];
    }
    for (const auto& offsets : box_points(ExponentVector(room))) {
      auto coords = cone.anchor.coords();
      std::uint64_t beta_degree = 0;
      for (std::size_t k = 0; k < cone.free.size(); ++k) {
        coords[cone.free[k]] += offsets[k];
        beta_degree += offsets[k];
      }
      const ExponentVector point(std::move(coords));
      if (table.at(point) != base + beta_degree) {
        std::vector<std::uint32_t> beta(d.dim, 0);
        for (std::size_t k = 0; k < cone.free.size(); ++k) {
          beta[cone.free[k]] = offsets[k];
        }
        return AdmissibilityVerdict{AdmissibilityTier::falsified, j,
                                    ExponentVector(std::move(beta))};
      }
    }
  }
  return AdmissibilityVerdict{AdmissibilityTier::sampled_ok};
}

StanleyDecomposition enlarged_box_decomposition(const OrderIdeal& ideal) {
  if (ideal.empty()) {
    throw std::invalid_argument("decomposition of an empty order ideal");
  }
  const std::size_t n = ideal.dim();
  const ExponentVector corner = bounding_box(ideal).corner;
  std::vector<std::uint32_t> enlarged(n);
  for (std::size_t i = 0; i < n; ++i) enlarged[i] = corner[i] + 1;

  StanleyDecomposition d;
  d.dim = n;
  for (const auto& u : box_points(ExponentVector(enlarged))) {
    if (ideal.contains(u)) continue;
    Cone cone{u, {}};
    for (std::size_t i = 0; i < n; ++i) {
      if (u[i] == corner[i] + 1) cone.free.push_back(i);
    }
    d.cones.push_back(std::move(cone));
  }
  std::sort(d.cones.begin(), d.cones.end(),
            [](const Cone& a, const Cone& b) {
              return GradedLexLess{}(a.anchor, b.anchor);
            });
  return d;
}

IndGF assemble_ind_gf(const StanleyDecomposition& d, const OrderIdeal& ideal) {
  if (d.dim != ideal.dim()) {
    throw std::invalid_argument("decomposition dimension mismatch");
  }
  const std::size_t n = d.dim;
  RationalGF sum = RationalGF::zero(n);
  for (const auto& cone : d.cones) {
    const std::uint64_t base = index_by_divisor(ideal, cone.anchor);
    LinearWeight w{std::vector<Rational>(cone.free.size(), Rational(1)),
                   Rational(static_cast<unsigned long>(base))};
    RationalGF part(pn_closed(w).numerator().embed(n, cone.free),
                    [&] {
                      std::vector<std::uint32_t> den(n, 0);
                      for (auto i : cone.free) den[i] = 2;
                      return ExponentVector(std::move(den));
                    }());
    sum = gf_add(sum, part.scaled_by_monomial(cone.anchor, 1));
  }
  std::ostringstream source;
  source << "decomposition with " << d.cones.size() << " cones";
  return IndGF{std::move(sum), source.str()};
}

IndGF ind_gf(const OrderIdeal& ideal) {
  const auto d = enlarged_box_decomposition(ideal);
  IndGF result = assemble_ind_gf(d, ideal);
  result.gf = result.gf.reduced();
  std::ostringstream source;
  source << "enlarged-box decomposition with " << d.cones.size() << " cones";
  result.source = source.str();
  return result;
}

IndGF ind_gf_2d(const std::vector<std::uint32_t>& lambda) {
  const OrderIdeal ideal = OrderIdeal::from_partition(lambda);
  const std::uint32_t m = static_cast<std::uint32_t>(lambda.size());
  const std::uint32_t top = lambda[0];
  auto ind = [&](std::uint32_t x, std::uint32_t y) {
    return Rational(static_cast<unsigned long>(
        index_by_divisor(ideal, ExponentVector{x, y})));
  };

  // Corner quadrant anchored at (m, lambda_1).
  RationalGF sum = pn_closed(LinearWeight{{1, 1}, ind(m, top)})
                       .scaled_by_monomial(ExponentVector{m, top}, 1);
  // Strip above the box: columns j < m, growing in y_2.
  for (std::uint32_t j = 0; j < m; ++j) {
    RationalGF strip(pn_closed(LinearWeight{{1}, ind(j, top)})
                         .numerator()
                         .embed(2, {1}),
                     ExponentVector{0, 2});
    sum = gf_add(sum, strip.scaled_by_monomial(ExponentVector{j, top}, 1));
  }
  // Strip right of the box: rows j < lambda_1, growing in y_1.
  for (std::uint32_t j = 0; j < top; ++j) {
    RationalGF strip(pn_closed(LinearWeight{{1}, ind(m, j)})
                         .numerator()
                         .embed(2, {0}),
                     ExponentVector{2, 0});
    sum = gf_add(sum, strip.scaled_by_monomial(ExponentVector{m, j}, 1));
  }
  // Singletons: box points outside the ideal.
  Polynomial singles(2);
  for (std::uint32_t a = 0; a < m; ++a) {
    for (std::uint32_t b = 0; b < top; ++b) {
      const ExponentVector point{a, b};
      if (!ideal.contains(point)) singles.add_term(point, ind(a, b));
    }
  }
  sum = gf_add(sum, RationalGF::from_polynomial(std::move(singles)));
  return IndGF{sum.reduced(), "dimension-2 partition formula"};
}

std::optional<VerifyMismatch> verify_ind_gf(const RationalGF& gf,
                                            const OrderIdeal& ideal,
                                            const ExponentVector& bounds) {
  const IndexTable table = index_table(ideal, bounds);
  const SeriesTable series = expand(gf, bounds);
  auto points = box_points(bounds);
  std::sort(points.begin(), points.end(), GradedLexLess{});
  for (const auto& p : points) {
    const Rational expected(static_cast<unsigned long>(table.at(p)));
    if (series.at(p) != expected) {
      return VerifyMismatch{p, expected, series.at(p)};
    }
  }
  return std::nullopt;
}

}  // namespace borderidx
