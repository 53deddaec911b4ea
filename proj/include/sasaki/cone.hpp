#pragma once

#include <cstddef>
#include <vector>

#include "sasaki/exact_linalg.hpp"

namespace sasaki {

/// Rational polyhedral cone {x in Q^dim : <x, l_i> >= 0} described by its
/// integer inward normals (labels) in the standard lattice Z^dim.
struct Cone {
  std::size_t dim = 0;
  std::vector<IntVector> labels;
};

/// Checks shapes and that no label is zero. Primitivity is left to the
/// goodness test, which reports a non-primitive label as a failing facet.
Cone make_cone(std::size_t dim, std::vector<IntVector> labels);

/// Outcome of the goodness test. On failure `failing_face` holds the label
/// indices I_F (0-based, sorted) of the first face, in (size, lexicographic)
/// order, whose labels span a non-saturated sublattice.
struct GoodnessReport {
  bool good = true;
  std::vector<std::size_t> failing_face;
  IntVector smith_factors;
};

}  // namespace sasaki
