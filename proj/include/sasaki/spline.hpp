#pragma once

// Tensor-product quintic B-spline interpolation of samples on a rectilinear
// grid. Interior knots are averages of consecutive sites, so the collocation
// system along each axis is square and nonsingular.

#include <cstddef>
#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "sasaki/jet.hpp"

namespace sasaki {

class GridSpline {
 public:
  static constexpr unsigned degree = 5;

  /// `axes[d]` are strictly increasing sites (at least degree + 1 of them);
  /// `values` is row-major with the last axis varying fastest.
  GridSpline(std::vector<std::vector<double>> axes, std::vector<double> values);

  /// Builds the grid from scattered rows (x_1, ..., x_n, value). The rows
  /// must cover a full tensor grid exactly once.
  static GridSpline from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t dim() const { return axes_.size(); }
  const std::vector<std::vector<double>>& axes() const { return axes_; }

  double operator()(const std::vector<double>& x) const;
  /// Throws out-of-domain outside the grid's bounding box.
  Jet jet(const std::shared_ptr<const JetLayout>& layout, const std::vector<double>& x) const;

 private:
  std::vector<std::vector<double>> axes_;
  std::vector<std::vector<double>> knots_;
  std::vector<double> coef_;
};

}  // namespace sasaki
