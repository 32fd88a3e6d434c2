#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "borderidx/index_engine.hpp"
#include "borderidx/order_ideal.hpp"
#include "borderidx/rational_gf.hpp"

namespace borderidx {

// Translated coordinate cone u + N^S: coordinates outside `free` are pinned
// to the anchor, coordinates in `free` range over all of N. free is sorted,
// 0-based, possibly empty (a singleton cone).
struct Cone {
  ExponentVector anchor;
  std::vector<std::size_t> free;
};

struct StanleyDecomposition {
  std::size_t dim = 0;
  std::vector<Cone> cones;
};

// Exact lattice disjointness, decided coordinatewise.
bool cone_disjoint(const Cone& a, const Cone& b);

// y^anchor / prod_{i in free} (1-y_i).
RationalGF cone_gf(std::size_t dim, const Cone& cone);

enum class PartitionFailure { anchor_in_ideal, overlap, coverage };

struct PartitionCheck {
  bool ok = true;
  std::optional<PartitionFailure> failure;
  // anchor_in_ideal: cone_a is the offending cone. overlap: cone_a, cone_b.
  // coverage: witness is the graded-least point covered != exactly once and
  // witness_excess its multiplicity minus one.
  std::size_t cone_a = 0;
  std::size_t cone_b = 0;
  std::optional<ExponentVector> witness;
  Rational witness_excess = 0;

  std::string describe() const;
};

// Checks that the cones partition the complement of the ideal: anchors lie
// outside the ideal, cones are pairwise disjoint, and the exact GF identity
// sum_j cone_gf = 1/prod(1-y_i) - sum_{alpha in O} y^alpha holds.
PartitionCheck validate_partition(const StanleyDecomposition& d,
                                  const OrderIdeal& ideal);

enum class AdmissibilityTier { proved, falsified, sampled_ok };

struct AdmissibilityVerdict {
  AdmissibilityTier tier;
  // For falsified: cone index and the offset beta with
  // ind(u + beta) != ind(u) + |beta|.
  std::size_t cone = 0;
  std::optional<ExponentVector> beta;

  std::string describe() const;
};

// `proved` when every cone has all free anchor coordinates strictly beyond
// the bounding-box corner (empty free sets are vacuous); otherwise the index
// growth law is tested exhaustively for cone points within sample_bounds.
AdmissibilityVerdict check_admissible(const StanleyDecomposition& d,
                                      const OrderIdeal& ideal,
                                      const ExponentVector& sample_bounds);

// Canonical admissible decomposition: anchors are the points of the enlarged
// box {u : u_i <= m_i + 1} outside the ideal, with direction i free exactly
// when u_i = m_i + 1.
StanleyDecomposition enlarged_box_decomposition(const OrderIdeal& ideal);

// Index generating function sum_alpha ind_O(alpha) y^alpha together with a
// note on which decomposition produced it.
struct IndGF {
  RationalGF gf;
  std::string source;
};

// sum_j y^{u_j} P_{|S_j|}(1,...,1; ind(u_j)) for an admissible decomposition.
// Garbage in, garbage out when d is not admissible; verify_ind_gf catches it.
IndGF assemble_ind_gf(const StanleyDecomposition& d, const OrderIdeal& ideal);

// Assembly over the enlarged-box decomposition, canonicalized.
IndGF ind_gf(const OrderIdeal& ideal);

// Dimension-2 closed form from a partition: corner quadrant + two boundary
// strips + box singletons. Equals ind_gf of the same ideal.
IndGF ind_gf_2d(const std::vector<std::uint32_t>& lambda);

struct VerifyMismatch {
  ExponentVector point;
  Rational expected;  // ind value from the table
  Rational actual;    // series coefficient
};

// Compares the series expansion of the GF against the index table over the
// box; nullopt means exact agreement everywhere.
std::optional<VerifyMismatch> verify_ind_gf(const RationalGF& gf,
                                            const OrderIdeal& ideal,
                                            const ExponentVector& bounds);

}  // namespace borderidx
