#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "sasaki/exact_linalg.hpp"

namespace sasaki {

/// Sparse multivariate polynomial with rational coefficients.
class Polynomial {
 public:
  using Exponent = std::vector<unsigned>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t i);
  /// <a, x> + c
  static Polynomial affine(std::span<const Rational> a, const Rational& c);
  static Polynomial monomial(const Exponent& e, const Rational& c = 1);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::map<Exponent, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  unsigned degree() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial pow(unsigned k) const;
  Polynomial derivative(std::size_t i) const;

  /// Replaces x_i by images[i]; all images share one variable count.
  Polynomial substitute(const std::vector<Polynomial>& images) const;

  Rational operator()(std::span<const Rational> x) const;
  double operator()(std::span<const double> x) const;

  void add_term(const Exponent& e, const Rational& c);

 private:
  std::size_t nvars_;
  std::map<Exponent, Rational> terms_;
};

/// Integral of f over the simplex conv(vertices) against the measure that
/// gives the simplex total mass `mass`. The simplex may have any dimension
/// m <= nvars; it needs exactly m + 1 vertices.
Rational integrate_over_simplex(const Polynomial& f, const std::vector<RatVector>& vertices,
                                const Rational& mass);

}  // namespace sasaki
