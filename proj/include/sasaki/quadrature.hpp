#pragma once

// Floating-point cubature on labelled polytopes. Coordinate products get the
// tensor product of their factors' rules; otherwise each simplex of the exact
// triangulation is pulled back to the unit cube by the collapsed (Duffy)
// coordinates and integrated with a tensor rule.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "sasaki/labelled_polytope.hpp"

namespace sasaki {

struct QuadratureRule {
  std::vector<std::vector<double>> points;
  std::vector<double> weights;

  double integrate(const std::function<double(const std::vector<double>&)>& f) const;
};

/// Coordinate product P = P1 x P2: the first n1 coordinates belong to P1.
struct ProductCoordinates {
  LabelledPolytope first;
  LabelledPolytope second;
  std::vector<std::size_t> first_facets;
  std::vector<std::size_t> second_facets;
};

/// Throws not-a-product unless P splits with each group's normals supported
/// on a leading/trailing block of coordinates.
ProductCoordinates coordinate_product(const LabelledPolytope& P);

/// Non-throwing form of coordinate_product.
std::optional<ProductCoordinates> coordinate_blocks(const LabelledPolytope& P);

enum class RuleKind { midpoint, gauss_legendre };

/// Gauss-Legendre nodes and weights on [0, 1].
void gauss_legendre(std::size_t n, std::vector<double>& nodes, std::vector<double>& weights);

/// Midpoint: n cells per (collapsed) axis, second order. Gauss-Legendre: n
/// nodes per (collapsed) axis. All points are strictly interior. On a box the
/// midpoint rule is the plain n^dim cell-centre grid.
QuadratureRule polytope_rule(const LabelledPolytope& P, RuleKind kind, std::size_t n);

/// Points (x, y) and weights w_a w_b over all pairs.
QuadratureRule tensor_rule(const QuadratureRule& first, const QuadratureRule& second);

}  // namespace sasaki
