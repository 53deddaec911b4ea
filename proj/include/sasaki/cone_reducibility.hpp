#pragma once

#include <optional>
#include <vector>

#include "sasaki/cone.hpp"
#include "sasaki/labelled_polytope.hpp"
#include "sasaki/moment_cone.hpp"

namespace sasaki {

/// Label groups of a cone combinatorially equivalent to the cone over
/// Δ_{n1} x Δ_{n2}: every extreme ray is cut out by all labels but one
/// from each group.
struct SimplexProductPartition {
  std::vector<std::size_t> first;
  std::vector<std::size_t> second;
};

/// Searches groupings with label 0 in the first group, by increasing size
/// of that group and then lexicographically. Throws invalid-cone when C is
/// not good.
std::optional<SimplexProductPartition> find_simplex_product_partition(const Cone& C);

/// sum a1_i l_i (i in first) = sum a2_j l_j (j in second) = multiplier * b
/// with b primitive in Z^k and positive on every extreme ray; the slice at b
/// splits as a product of the two factor simplices.
struct SplittingCertificate {
  IntVector b;
  Integer multiplier;
  IntVector a1;
  IntVector a2;
  SimplexProductPartition partition;
  CharacteristicSlice slice;
  ProductFactors factors;
};

/// Throws invalid-partition when `part` is not a simplex-product grouping
/// of C, and internal-inconsistency if the sign or product checks fail.
SplittingCertificate find_splitting_reeb(const Cone& C, const SimplexProductPartition& part);

struct JoinWeights {
  IntVector first;
  IntVector second;
};

/// Primitive positive weight vectors of the two weighted projective factors.
JoinWeights decompose_as_join(const SplittingCertificate& cert);

}  // namespace sasaki
