#include "sasaki/polynomial.hpp"

#include <cmath>

namespace sasaki {

namespace {

Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw Error(ErrorCode::invalid_argument, "variable index out of range");
  Exponent e(nvars, 0);
  e[i] = 1;
  Polynomial p(nvars);
  p.add_term(e, 1);
  return p;
}

Polynomial Polynomial::affine(std::span<const Rational> a, const Rational& c) {
  Polynomial p = constant(a.size(), c);
  for (std::size_t i = 0; i < a.size(); ++i) p += variable(a.size(), i) * a[i];
  return p;
}

Polynomial Polynomial::monomial(const Exponent& e, const Rational& c) {
  Polynomial p(e.size());
  p.add_term(e, c);
  return p;
}

unsigned Polynomial::degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    unsigned s = 0;
    for (auto x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != nvars_) throw Error(ErrorCode::invalid_argument, "exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.nvars_ != nvars_) throw Error(ErrorCode::invalid_argument, "variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.nvars_ != nvars_) throw Error(ErrorCode::invalid_argument, "variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw Error(ErrorCode::invalid_argument, "variable count mismatch");
  Polynomial p(a.nvars_);
  Polynomial::Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      p.add_term(e, ca * cb);
    }
  return p;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(nvars_, 1), base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t i) const {
  if (i >= nvars_) throw Error(ErrorCode::invalid_argument, "variable index out of range");
  Polynomial p(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponent f = e;
    --f[i];
    p.add_term(f, c * e[i]);
  }
  return p;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != nvars_)
    throw Error(ErrorCode::invalid_argument, "substitution needs one image per variable");
  const std::size_t m = images.empty() ? 0 : images[0].nvars();
  std::vector<std::vector<Polynomial>> powers(nvars_);
  Polynomial result(m);
  for (const auto& [e, c] : terms_) {
    Polynomial term = constant(m, c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(m, 1));
      while (pw.size() <= e[i]) pw.push_back(pw.back() * images[i]);
      term = term * pw[e[i]];
    }
    result += term;
  }
  return result;
}

Rational Polynomial::operator()(std::span<const Rational> x) const {
  if (x.size() != nvars_) throw Error(ErrorCode::invalid_argument, "point dimension mismatch");
  Rational s = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) t *= x[i];
    s += t;
  }
  return s;
}

double Polynomial::operator()(std::span<const double> x) const {
  if (x.size() != nvars_) throw Error(ErrorCode::invalid_argument, "point dimension mismatch");
  double s = 0;
  for (const auto& [e, c] : terms_) {
    double t = c.get_d();
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i]) t *= std::pow(x[i], static_cast<int>(e[i]));
    s += t;
  }
  return s;
}

Rational integrate_over_simplex(const Polynomial& f, const std::vector<RatVector>& vertices,
                                const Rational& mass) {
  if (vertices.empty()) throw Error(ErrorCode::invalid_argument, "simplex has no vertices");
  const std::size_t m = vertices.size() - 1, n = f.nvars();
  // barycentric substitution x = sum_i lambda_i v_i, then
  // int_{Delta_m} lambda^beta = beta! / (m + |beta|)! for the unit-mass-m! simplex
  std::vector<Polynomial> images;
  for (std::size_t j = 0; j < n; ++j) {
    Polynomial xj(m + 1);
    for (std::size_t i = 0; i <= m; ++i) {
      if (vertices[i].size() != n)
        throw Error(ErrorCode::invalid_argument, "vertex dimension mismatch");
      xj += Polynomial::variable(m + 1, i) * vertices[i][j];
    }
    images.push_back(std::move(xj));
  }
  const Polynomial g = f.substitute(images);
  Rational total = 0;
  for (const auto& [e, c] : g.terms()) {
    Integer num = 1;
    unsigned deg = 0;
    for (auto b : e) {
      num *= factorial(b);
      deg += b;
    }
    total += c * Rational(num * factorial(static_cast<unsigned>(m))) /
             Rational(factorial(static_cast<unsigned>(m) + deg));
  }
  total *= mass;
  total.canonicalize();
  return total;
}

}  // namespace sasaki
