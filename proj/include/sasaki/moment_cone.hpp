#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sasaki/cone.hpp"
#include "sasaki/labelled_polytope.hpp"

namespace sasaki {

/// b = rational + symbolic * tau, where tau_1..tau_m are declared
/// Q-linearly independent transcendentals. `symbolic` is dim x m (possibly
/// with zero columns). `tau` carries numeric values of the generators; it is
/// consulted only when the sign of <r, b> on a ray depends on them.
struct ReebVector {
  RatVector rational;
  RatMatrix symbolic;
  std::vector<long double> tau;

  static ReebVector from_rational(RatVector b);
  bool is_purely_rational() const;
};

bool is_strictly_convex(const Cone& C);

/// Primitive integer generators of the extreme rays of a strictly convex
/// cone, computed by double description and sorted lexicographically.
std::vector<IntVector> extreme_rays(const Cone& C);

/// zero_sets[r][i] is true iff label i vanishes on ray r.
std::vector<std::vector<bool>> ray_label_incidence(const Cone& C,
                                                   const std::vector<IntVector>& rays);

/// Faces other than the apex, each given by (I_F, ray indices), sorted by
/// (|I_F|, I_F). The whole cone (I_F empty) is included.
struct Face {
  std::vector<std::size_t> labels;
  std::vector<std::size_t> rays;
};
std::vector<Face> faces(const Cone& C, const std::vector<IntVector>& rays);

/// Throws invalid-cone if C is not strictly convex or some label does not
/// support a facet.
GoodnessReport is_good(const Cone& C);

bool sasaki_cone_contains(const Cone& C, const ReebVector& b);

bool is_quasi_regular(const Cone& C, const ReebVector& b);

/// P_b = C ∩ {<x, b> = 1} in coordinates y on the slice, with
/// x = origin + sum_j y_j directions[j]. The directions are a basis dual to
/// a lattice basis of Z^k / Z b_prim, so the new normals are the images of
/// the labels in the quotient lattice Λ_b ≅ Z^n.
struct CharacteristicSlice {
  LabelledPolytope polytope;
  RatVector origin;
  std::vector<IntVector> directions;
  IntVector primitive_reeb;
  bool normalized_direction = false;
};

/// Throws not-a-reeb-vector when b is outside the Sasaki cone and
/// invalid-argument when b has an irrational direction. A symbolic b with
/// rational direction is replaced by its primitive direction vector
/// (normalized_direction = true).
CharacteristicSlice characteristic_polytope(const Cone& C, const ReebVector& b);

}  // namespace sasaki
