#pragma once

// Symplectic potentials u = u0 + f on labelled polytopes, with
// u0 = 1/2 sum_i l_i log l_i, and the Abreu scalar curvature
// R_u = -sum_ij d_i d_j (Hess u)^{-1}_ij.

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sasaki/expression.hpp"
#include "sasaki/jet.hpp"
#include "sasaki/labelled_polytope.hpp"
#include "sasaki/polynomial.hpp"
#include "sasaki/quadrature.hpp"
#include "sasaki/spline.hpp"

namespace sasaki {

/// A smooth function given by its Taylor jets.
using JetFunction =
    std::function<Jet(const std::shared_ptr<const JetLayout>&, const std::vector<double>&)>;

struct GuilleminValue {
  double value = 0;
  Eigen::VectorXd gradient;
  Eigen::MatrixXd hessian;
};

/// Throws out-of-domain unless every l_i(x) > 0.
GuilleminValue guillemin_eval(const LabelledPolytope& P, const std::vector<double>& x);

class SymplecticPotential {
 public:
  enum class Relative { none, expression, grid, jets };

  explicit SymplecticPotential(LabelledPolytope P);
  SymplecticPotential(LabelledPolytope P, Expr f);
  SymplecticPotential(LabelledPolytope P, GridSpline f);
  SymplecticPotential(LabelledPolytope P, JetFunction f);

  const LabelledPolytope& polytope() const { return P_; }
  Relative relative_kind() const { return kind_; }
  /// 0 for closed forms, the spline degree for sampled potentials.
  unsigned interpolation_degree() const { return kind_ == Relative::grid ? GridSpline::degree : 0; }

  /// Jet of u0 + f at an interior point; order <= 4.
  Jet jet(const std::vector<double>& x, unsigned order) const;
  /// Jet of f alone (zero when there is no relative part).
  Jet relative_jet(const std::shared_ptr<const JetLayout>& layout, const std::vector<double>& x) const;

 private:
  LabelledPolytope P_;
  Relative kind_ = Relative::none;
  JetFunction f_;
};

/// Smallest pivot of the Cholesky factorization of Hess u at x, or a
/// non-positive number when the Hessian is not positive definite.
double convexity_pivot(const SymplecticPotential& u, const std::vector<double>& x);

/// Analytic fourth-order jets. Throws not-convex-here when Hess u(x) is not
/// positive definite.
double abreu_scalar_curvature(const SymplecticPotential& u, const std::vector<double>& x);

/// Same quantity from fourth-order central differences of (Hess u)^{-1} with
/// step h; the stencil is shrunk to stay inside the polytope.
double abreu_scalar_curvature_fd(const SymplecticPotential& u, const std::vector<double>& x,
                                 double h = 1e-3);

/// (Hess u)^{-1} at x.
Eigen::MatrixXd inverse_hessian(const SymplecticPotential& u, const std::vector<double>& x);

/// The affine R_E with int_P f R_E dmu = 2 int_dP f dsigma for affine f,
/// from exact moments.
AffineFunction extremal_affine_function(const LabelledPolytope& P);

struct DonaldsonTerms {
  double lhs = 0;           // int R_u f dmu
  double boundary = 0;      // 2 int_dP f dsigma (exact)
  double hessian_term = 0;  // int u^{ij} f_ij dmu
  double residual = 0;      // |lhs - boundary + hessian_term|
};

DonaldsonTerms donaldson_identity_check(const SymplecticPotential& u, const Polynomial& f,
                                        RuleKind kind = RuleKind::midpoint, std::size_t n = 16);

/// Points per axis on the bounding box, pulled in by margin_cells cell
/// widths, keeping points whose distance to every facet is at least that
/// margin.
struct GridSpec {
  std::size_t points_per_axis = 64;
  double margin_cells = 4;
};

std::vector<std::vector<double>> interior_grid(const LabelledPolytope& P, const GridSpec& spec);

struct ExtremalReport {
  AffineFunction extremal;
  double residual_sup = 0;
  double residual_l2 = 0;
  double min_pivot = 0;
  std::size_t grid_points = 0;
  GridSpec grid;
  unsigned interpolation_degree = 0;
};

ExtremalReport extremality_residual(const SymplecticPotential& u, const GridSpec& grid);

struct SplitResult {
  ProductCoordinates product;
  JetFunction f1;
  JetFunction f2;
  double min_pivot_first = 0;
  double min_pivot_second = 0;
};

/// f1(x) = average of f(x, .) over P2 and f2(y) = average of f(., y) over
/// P1, by Gauss-Legendre cubature with `nodes` points per collapsed axis.
/// The pivots are the convexity checks of u0 + f_e on interior test points
/// of each factor.
SplitResult average_split(const LabelledPolytope& P, const JetFunction& f, std::size_t nodes = 10);

using ScalarFunction = std::function<double(const std::vector<double>&)>;

/// L2 distance from f(x, y) - f1(x) - f2(y) to the affine functions on P,
/// with the projection taken in the exact moment Gram matrix.
double split_defect(const LabelledPolytope& P, const ScalarFunction& f, const ScalarFunction& f1,
                    const ScalarFunction& f2, std::size_t nodes = 10);

/// Value-only view of a jet function.
ScalarFunction values_of(const JetFunction& f, std::size_t nvars);

JetFunction jets_of(const Expr& e);

}  // namespace sasaki
