#pragma once

// Truncated multivariate Taylor polynomials in floating point. A Jet of
// order K in n variables stores the coefficients c_a of h^a for |a| <= K, so
// the partial derivative d^a f(x) equals a! c_a.

#include <cstddef>
#include <memory>
#include <vector>

namespace sasaki {

struct JetLayout {
  std::size_t nvars;
  unsigned order;
  std::vector<std::vector<unsigned>> exponents;  // graded lexicographic
  // product table: (i, j, k) with exponents[i] + exponents[j] = exponents[k]
  std::vector<std::size_t> prod_i, prod_j, prod_k;

  std::size_t index_of(const std::vector<unsigned>& e) const;
  static std::shared_ptr<const JetLayout> get(std::size_t nvars, unsigned order);
};

class Jet {
 public:
  Jet() = default;
  /// The constant c.
  Jet(std::shared_ptr<const JetLayout> layout, double c);

  /// x_i + h_i around the point x, i.e. coordinate i.
  static Jet variable(std::shared_ptr<const JetLayout> layout, std::size_t i, double xi);

  const JetLayout& layout() const { return *layout_; }
  std::shared_ptr<const JetLayout> layout_ptr() const { return layout_; }
  double value() const { return c_[0]; }
  const std::vector<double>& coefficients() const { return c_; }
  double& operator[](std::size_t k) { return c_[k]; }
  double operator[](std::size_t k) const { return c_[k]; }

  /// d^a f at the expansion point.
  double derivative(const std::vector<unsigned>& a) const;

  /// The Taylor jet of d f / d x_i, one order lower.
  Jet differentiate(std::size_t i) const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(double s);
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, double s) { return a *= s; }
  friend Jet operator*(double s, Jet a) { return a *= s; }
  friend Jet operator*(const Jet& a, const Jet& b);
  Jet operator-() const { return *this * -1.0; }

 private:
  std::shared_ptr<const JetLayout> layout_;
  std::vector<double> c_;
};

/// g(f) for a univariate g given by its derivatives g^(k)(f(x)), k <= order.
Jet compose(const Jet& f, const std::vector<double>& g_derivs);

/// Throws out-of-domain when the value is not positive.
Jet log(const Jet& f);
/// f^p; non-integer p requires a positive value.
Jet pow(const Jet& f, double p);
/// f log f, with value > 0.
Jet xlogx(const Jet& f);

}  // namespace sasaki
