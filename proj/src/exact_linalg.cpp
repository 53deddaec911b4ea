#include "sasaki/exact_linalg.hpp"

#include <algorithm>
#include <cctype>

namespace sasaki {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::invalid_argument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  auto valid_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.find('-') != std::string::npos)
    throw Error(ErrorCode::parse_error, "malformed rational '" + text + "'");
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  const Integer d(den);
  if (d == 0)
    throw Error(ErrorCode::parse_error, "zero denominator in '" + text + "'");
  return make_rational(Integer(num), d);
}

std::string to_string(const Rational& q) { return q.get_str(); }

GcdCertificate gcd_ext(const Integer& a, const Integer& b) {
  if (a == 0 && b == 0)
    throw Error(ErrorCode::invalid_argument, "gcd_ext of (0, 0) is undefined");
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), old_r.get_mpz_t(), r.get_mpz_t());
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

namespace {

// row_a <- x*row_a + y*row_b ; row_b <- u*row_a + v*row_b (old values)
void combine_rows(IntMatrix& M, std::size_t a, std::size_t b, const Integer& x,
                  const Integer& y, const Integer& u, const Integer& v) {
  for (std::size_t j = 0; j < M.cols(); ++j) {
    Integer ra = M(a, j), rb = M(b, j);
    M(a, j) = x * ra + y * rb;
    M(b, j) = u * ra + v * rb;
  }
}

void add_row_multiple(IntMatrix& M, std::size_t dst, std::size_t src,
                      const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < M.cols(); ++j) M(dst, j) += factor * M(src, j);
}

void add_col_multiple(IntMatrix& M, std::size_t dst, std::size_t src,
                      const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < M.rows(); ++i) M(i, dst) += factor * M(i, src);
}

void negate_row(IntMatrix& M, std::size_t r) {
  for (std::size_t j = 0; j < M.cols(); ++j) M(r, j) = -M(r, j);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer trunc_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HermiteForm hermite_normal_form(const IntMatrix& M) {
  IntMatrix H = M;
  IntMatrix U = IntMatrix::identity(M.rows());
  const std::size_t m = H.rows();
  std::size_t r = 0;
  for (std::size_t c = 0; c < H.cols() && r < m; ++c) {
    for (std::size_t i = r + 1; i < m; ++i) {
      if (H(i, c) == 0) continue;
      const Integer a = H(r, c), b = H(i, c);
      const auto [g, x, y] = gcd_ext(a, b);
      const Integer u = -b / g, v = a / g;
      combine_rows(H, r, i, x, y, u, v);
      combine_rows(U, r, i, x, y, u, v);
    }
    if (H(r, c) == 0) continue;
    if (H(r, c) < 0) {
      negate_row(H, r);
      negate_row(U, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      const Integer q = floor_div(H(i, c), H(r, c));
      if (q == 0) continue;
      add_row_multiple(H, i, r, -q);
      add_row_multiple(U, i, r, -q);
    }
    ++r;
  }
  return {std::move(H), std::move(U)};
}

IntVector smith_invariant_factors(const IntMatrix& M) {
  IntMatrix A = M;
  const std::size_t m = A.rows(), n = A.cols();
  IntVector factors;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // smallest nonzero entry of the trailing block becomes the pivot
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (A(i, j) != 0 &&
            (!best || abs(A(i, j)) < abs(A(best->first, best->second))))
          best = std::make_pair(i, j);
    if (!best) break;
    A.swap_rows(t, best->first);
    A.swap_cols(t, best->second);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (A(i, t) == 0) continue;
        add_row_multiple(A, i, t, -trunc_div(A(i, t), A(t, t)));
        if (A(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (A(t, j) == 0) continue;
        add_col_multiple(A, j, t, -trunc_div(A(t, j), A(t, t)));
        if (A(t, j) != 0) clean = false;
      }
      if (!clean) {
        // move a smaller remainder into the pivot slot and repeat
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (A(i, t) != 0 && abs(A(i, t)) < abs(A(bi, bj))) bi = i, bj = t;
        for (std::size_t j = t + 1; j < n; ++j)
          if (A(t, j) != 0 && abs(A(t, j)) < abs(A(bi, bj))) bi = t, bj = j;
        A.swap_rows(t, bi);
        A.swap_cols(t, bj);
        continue;
      }
      // divisibility of the trailing block by the pivot
      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i)
        for (std::size_t j = t + 1; j < n && !fixed; ++j)
          if (A(i, j) % A(t, t) != 0) {
            add_row_multiple(A, t, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
    factors.push_back(abs(A(t, t)));
  }
  return factors;
}

LatticeBasis integer_kernel_basis(const IntMatrix& M) {
  const auto [H, U] = hermite_normal_form(M.transpose());
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < H.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < H.cols() && zero; ++j) zero = H(i, j) == 0;
    if (zero) rows.push_back(U.row(i));
  }
  LatticeBasis basis{M.cols(), {}};
  if (rows.empty()) return basis;
  const IntMatrix canon =
      hermite_normal_form(IntMatrix::from_rows(rows, M.cols())).H;
  for (std::size_t i = 0; i < rows.size(); ++i) basis.vectors.push_back(canon.row(i));
  return basis;
}

IntMatrix saturation_basis(const IntMatrix& M) {
  const std::size_t n = M.cols();
  const LatticeBasis orth = integer_kernel_basis(M);
  const LatticeBasis sat =
      integer_kernel_basis(IntMatrix::from_rows(orth.vectors, n));
  return IntMatrix::from_rows(sat.vectors, n);
}

bool is_primitive(std::span<const Integer> v) {
  const Integer g = content(v);
  if (g == 0)
    throw Error(ErrorCode::invalid_argument, "zero vector has no primitivity");
  return g == 1;
}

Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

Integer lcm_of_denominators(std::span<const Rational> v) {
  Integer l = 1;
  for (const auto& q : v) l = lcm(l, Integer(q.get_den()));
  return l;
}

IntVector primitive_part(std::span<const Rational> v) {
  const Integer l = lcm_of_denominators(v);
  IntVector out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(Integer(q * l));
  return primitive_part(std::span<const Integer>(out));
}

IntVector primitive_part(std::span<const Integer> v) {
  const Integer g = content(v);
  if (g == 0)
    throw Error(ErrorCode::invalid_argument, "primitive part of zero vector");
  IntVector out(v.begin(), v.end());
  for (auto& x : out) x /= g;
  return out;
}

IntMatrix clear_denominators(const RatMatrix& M) {
  const Integer l = lcm_of_denominators(M.entries());
  IntMatrix out(M.rows(), M.cols());
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j)
      out(i, j) = Integer(M(i, j) * l);
  return out;
}

RatMatrix to_rational(const IntMatrix& M) {
  RatMatrix out(M.rows(), M.cols());
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) out(i, j) = M(i, j);
  return out;
}

RatVector to_rational(std::span<const Integer> v) {
  return RatVector(v.begin(), v.end());
}

namespace {

// Bareiss elimination in place; returns rank and the sign of the row
// permutation applied.
std::size_t bareiss(IntMatrix& A, int& sign) {
  const std::size_t m = A.rows(), n = A.cols();
  sign = 1;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && A(p, c) == 0) ++p;
    if (p == m) continue;
    if (p != r) {
      A.swap_rows(p, r);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        Integer num = A(r, c) * A(i, j) - A(i, c) * A(r, j);
        mpz_divexact(A(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      A(i, c) = 0;
    }
    prev = A(r, c);
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const IntMatrix& M) {
  IntMatrix A = M;
  int sign = 1;
  return bareiss(A, sign);
}

std::size_t rank(const RatMatrix& M) { return rank(clear_denominators(M)); }

Integer determinant(const IntMatrix& M) {
  if (M.rows() != M.cols())
    throw Error(ErrorCode::invalid_argument, "determinant of non-square matrix");
  if (M.rows() == 0) return 1;
  IntMatrix A = M;
  int sign = 1;
  if (bareiss(A, sign) < A.rows()) return 0;
  return sign * A(A.rows() - 1, A.cols() - 1);
}

Rational determinant(const RatMatrix& M) {
  if (M.rows() != M.cols())
    throw Error(ErrorCode::invalid_argument, "determinant of non-square matrix");
  Rational scale = 1;
  IntMatrix A(M.rows(), M.cols());
  for (std::size_t i = 0; i < M.rows(); ++i) {
    const RatVector row = M.row(i);
    const Integer l = lcm_of_denominators(row);
    scale *= l;
    for (std::size_t j = 0; j < M.cols(); ++j) A(i, j) = Integer(M(i, j) * l);
  }
  return Rational(determinant(A)) / scale;
}

std::vector<std::size_t> rref_in_place(RatMatrix& M) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
    std::size_t p = r;
    while (p < M.rows() && M(p, c) == 0) ++p;
    if (p == M.rows()) continue;
    M.swap_rows(p, r);
    const Rational inv = 1 / M(r, c);
    for (std::size_t j = c; j < M.cols(); ++j) M(r, j) *= inv;
    for (std::size_t i = 0; i < M.rows(); ++i) {
      if (i == r || M(i, c) == 0) continue;
      const Rational f = M(i, c);
      for (std::size_t j = c; j < M.cols(); ++j) M(i, j) -= f * M(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<RatVector> rational_kernel(const RatMatrix& M) {
  RatMatrix R = M;
  const auto pivots = rref_in_place(R);
  std::vector<bool> is_pivot(M.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < M.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector v(M.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -R(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVector> solve(const RatMatrix& A, const RatVector& b) {
  if (b.size() != A.rows())
    throw Error(ErrorCode::invalid_argument, "solve: rhs length mismatch");
  RatMatrix aug(A.rows(), A.cols() + 1);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) aug(i, j) = A(i, j);
    aug(i, A.cols()) = b[i];
  }
  const auto pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == A.cols()) return std::nullopt;
  RatVector x(A.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, A.cols());
  return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& M) {
  if (M.rows() != M.cols())
    throw Error(ErrorCode::invalid_argument, "inverse of non-square matrix");
  const std::size_t n = M.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = M(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = rref_in_place(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::invalid_argument, "dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::invalid_argument, "dot: length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(std::span<const Integer> a, std::span<const Rational> b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::invalid_argument, "dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace sasaki
