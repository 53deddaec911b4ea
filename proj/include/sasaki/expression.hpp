#pragma once

// Closed-form scalar functions built from constants, coordinates, sums,
// products, real powers and logarithms. Evaluation returns a Taylor jet,
// so every derivative up to the jet order is analytic.

#include <cstddef>
#include <memory>
#include <vector>

#include "sasaki/jet.hpp"

namespace sasaki {

class Expr {
 public:
  enum class Kind { constant, coord, add, mul, pow, log };

  static Expr constant(double c);
  static Expr coord(std::size_t i);
  static Expr add(std::vector<Expr> terms);
  static Expr mul(std::vector<Expr> factors);
  static Expr pow(Expr base, double exponent);
  static Expr log(Expr arg);

  Kind kind() const { return node_->kind; }
  double value() const { return node_->value; }
  std::size_t index() const { return node_->index; }
  const std::vector<Expr>& children() const { return node_->children; }

  /// Largest coordinate index used plus one.
  std::size_t arity() const;

  double operator()(const std::vector<double>& x) const;
  Jet jet(const std::vector<double>& x, unsigned order) const;
  /// Same, on a caller-provided layout (its nvars must cover the arity).
  Jet jet(const std::shared_ptr<const JetLayout>& layout, const std::vector<double>& x) const;

  friend Expr operator+(Expr a, Expr b) { return add({std::move(a), std::move(b)}); }
  friend Expr operator*(Expr a, Expr b) { return mul({std::move(a), std::move(b)}); }

 private:
  struct Node {
    Kind kind;
    double value = 0;
    std::size_t index = 0;
    std::vector<Expr> children;
  };
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace sasaki
