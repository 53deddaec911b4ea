#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "sasaki/exact_linalg.hpp"
#include "support.hpp"

using namespace sasaki;
using testing::uniform;

namespace {

IntMatrix rows(std::vector<std::vector<long>> r) {
  const std::size_t c = r.empty() ? 0 : r[0].size();
  IntMatrix M(r.size(), c);
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < c; ++j) M(i, j) = r[i][j];
  return M;
}

bool is_row_hnf(const IntMatrix& H) {
  std::size_t last_pivot_col = 0;
  bool seen_zero_row = false;
  for (std::size_t i = 0; i < H.rows(); ++i) {
    std::size_t p = 0;
    while (p < H.cols() && H(i, p) == 0) ++p;
    if (p == H.cols()) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row) return false;
    if (i > 0 && p <= last_pivot_col) return false;
    if (H(i, p) <= 0) return false;
    for (std::size_t r = 0; r < i; ++r)
      if (H(r, p) < 0 || H(r, p) >= H(i, p)) return false;
    last_pivot_col = p;
  }
  return true;
}

// gcd of all r x r minors, by brute force with cofactor determinants
Integer gcd_of_minors(const IntMatrix& M, std::size_t r) {
  Integer g = 0;
  std::vector<bool> rs(M.rows(), false), cs(M.cols(), false);
  std::fill(rs.begin(), rs.begin() + static_cast<std::ptrdiff_t>(r), true);
  do {
    std::fill(cs.begin(), cs.end(), false);
    std::fill(cs.begin(), cs.begin() + static_cast<std::ptrdiff_t>(r), true);
    do {
      IntMatrix sub(r, r);
      for (std::size_t i = 0, si = 0; i < M.rows(); ++i) {
        if (!rs[i]) continue;
        for (std::size_t j = 0, sj = 0; j < M.cols(); ++j)
          if (cs[j]) sub(si, sj++) = M(i, j);
        ++si;
      }
      g = gcd(g, testing::cofactor_det(sub));
    } while (std::prev_permutation(cs.begin(), cs.end()));
  } while (std::prev_permutation(rs.begin(), rs.end()));
  return g;
}

}  // namespace

TEST_CASE("gcd_ext certificates") {
  auto c = gcd_ext(3, 2);
  CHECK(c.g == 1);
  CHECK(c.x == 1);
  CHECK(c.y == -1);
  c = gcd_ext(2, 0);
  CHECK(c.g == 2);
  CHECK(c.x == 1);
  CHECK(c.y == 0);
  c = gcd_ext(6, 6);
  CHECK(c.g == 6);
  CHECK(6 * c.x + 6 * c.y == 6);
  CHECK_THROWS_AS(gcd_ext(0, 0), Error);
  c = gcd_ext(0, -4);
  CHECK(c.g == 4);
  CHECK(-4 * c.y == 4);
}

TEST_CASE("gcd_ext property") {
  for (int t = 0; t < 2000; ++t) {
    const Integer a = uniform(-10000, 10000), b = uniform(-10000, 10000);
    if (a == 0 && b == 0) continue;
    const auto c = gcd_ext(a, b);
    CHECK(c.g > 0);
    CHECK(a * c.x + b * c.y == c.g);
    CHECK(a % c.g == 0);
    CHECK(b % c.g == 0);
    CHECK(c.g == gcd(a, b));
  }
}

TEST_CASE("hermite normal form examples") {
  const auto I = IntMatrix::identity(3);
  auto hf = hermite_normal_form(I);
  CHECK(hf.H == I);
  CHECK(hf.U == I);
  hf = hermite_normal_form(rows({{2, 0}, {0, 3}}));
  CHECK(hf.H == rows({{2, 0}, {0, 3}}));
  CHECK(hf.U == IntMatrix::identity(2));
  hf = hermite_normal_form(rows({{1, 2}, {3, 4}}));
  CHECK(abs(determinant(hf.H)) == 2);
  CHECK(hf.H == rows({{1, 0}, {0, 2}}));
}

TEST_CASE("hermite normal form property") {
  for (int t = 0; t < 300; ++t) {
    const auto r = static_cast<std::size_t>(uniform(1, 5));
    const auto c = static_cast<std::size_t>(uniform(1, 5));
    const IntMatrix M = testing::random_int_matrix(r, c, -6, 6);
    const auto hf = hermite_normal_form(M);
    CHECK(hf.U * M == hf.H);
    CHECK(abs(testing::cofactor_det(hf.U)) == 1);
    CHECK(is_row_hnf(hf.H));
    // the form is a lattice invariant
    const IntMatrix V = testing::random_unimodular(r);
    CHECK(hermite_normal_form(V * M).H == hf.H);
  }
}

TEST_CASE("smith invariant factors examples") {
  CHECK(smith_invariant_factors(IntMatrix::identity(3)) == IntVector{1, 1, 1});
  CHECK(smith_invariant_factors(rows({{1, 0, 0}, {1, 2, 0}})) == IntVector{1, 2});
  CHECK(smith_invariant_factors(rows({{1, 0}, {0, 1}})) == IntVector{1, 1});
  CHECK(smith_invariant_factors(rows({{2, 4}, {6, 8}})) == IntVector{2, 4});
  CHECK(smith_invariant_factors(rows({{0, 0}})).empty());
}

TEST_CASE("smith invariant factors property") {
  for (int t = 0; t < 200; ++t) {
    const auto r = static_cast<std::size_t>(uniform(1, 4));
    const auto c = static_cast<std::size_t>(uniform(1, 4));
    const IntMatrix M = testing::random_int_matrix(r, c, -5, 5);
    const IntVector sf = smith_invariant_factors(M);
    CHECK(sf.size() == rank(M));
    for (std::size_t i = 0; i + 1 < sf.size(); ++i) CHECK(sf[i + 1] % sf[i] == 0);
    for (const auto& x : sf) CHECK(x > 0);
    // product of the first j factors equals the gcd of j x j minors
    Integer prod = 1;
    for (std::size_t j = 0; j < sf.size(); ++j) {
      prod *= sf[j];
      CHECK(prod == gcd_of_minors(M, j + 1));
    }
    const IntMatrix L = testing::random_unimodular(r), R = testing::random_unimodular(c);
    CHECK(smith_invariant_factors(L * M * R) == sf);
  }
}

TEST_CASE("integer kernel examples") {
  auto k = integer_kernel_basis(rows({{1, 1}}));
  REQUIRE(k.rank() == 1);
  CHECK(k.vectors[0] == IntVector{1, -1});
  // columns are the normals (1,0), (0,1), (-1,-1)
  k = integer_kernel_basis(rows({{1, 0, -1}, {0, 1, -1}}));
  REQUIRE(k.rank() == 1);
  CHECK(k.vectors[0] == IntVector{1, 1, 1});
  CHECK(integer_kernel_basis(IntMatrix::identity(3)).rank() == 0);
}

TEST_CASE("integer kernel property") {
  for (int t = 0; t < 200; ++t) {
    const auto r = static_cast<std::size_t>(uniform(1, 4));
    const auto c = static_cast<std::size_t>(uniform(1, 6));
    const IntMatrix M = testing::random_int_matrix(r, c, -4, 4);
    const auto k = integer_kernel_basis(M);
    CHECK(k.rank() == c - rank(M));
    for (const auto& v : k.vectors)
      for (const auto& x : M * v) CHECK(x == 0);
    if (k.rank() > 0) {
      // a kernel basis of a kernel lattice is saturated
      const auto sf = smith_invariant_factors(IntMatrix::from_rows(k.vectors, c));
      for (const auto& x : sf) CHECK(x == 1);
    }
  }
}

TEST_CASE("saturation basis") {
  const IntMatrix S = saturation_basis(rows({{2, 0, 0}, {0, 2, 0}}));
  CHECK(S == rows({{1, 0, 0}, {0, 1, 0}}));
  const IntMatrix T = saturation_basis(rows({{2, 4}}));
  CHECK(T == rows({{1, 2}}));
  CHECK(saturation_basis(rows({{1, 1}, {1, -1}})) == IntMatrix::identity(2));
}

TEST_CASE("primitivity") {
  CHECK(is_primitive(IntVector{1, 2}));
  CHECK_FALSE(is_primitive(IntVector{2, 4}));
  CHECK(is_primitive(IntVector{3, -2, 0}));
  CHECK_THROWS_AS(is_primitive(IntVector{0, 0}), Error);
  CHECK(primitive_part(RatVector{make_rational(1, 2), make_rational(-3, 4)}) == IntVector{2, -3});
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == make_rational(1, 2));
  CHECK(parse_rational("-7") == -7);
  CHECK_THROWS(parse_rational("4/-2"));
  CHECK_THROWS(parse_rational("0.5"));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational(""));
  CHECK(to_string(make_rational(-6, 4)) == "-3/2");
}

TEST_CASE("rank, determinant, solve, inverse") {
  for (int t = 0; t < 200; ++t) {
    const auto n = static_cast<std::size_t>(uniform(1, 5));
    const IntMatrix M = testing::random_int_matrix(n, n, -5, 5);
    CHECK(determinant(M) == testing::cofactor_det(M));
    const RatMatrix Q = to_rational(M);
    CHECK(determinant(Q) == Rational(testing::cofactor_det(M)));
    const auto inv = inverse(Q);
    CHECK(inv.has_value() == (testing::cofactor_det(M) != 0));
    if (inv) CHECK(*inv * Q == RatMatrix::identity(n));
    RatVector b(n);
    for (auto& x : b) x = make_rational(uniform(-5, 5), uniform(1, 3));
    if (const auto x = solve(Q, b)) CHECK(Q * *x == b);
  }
  // rank over Q agrees with the dimension of the rational kernel
  for (int t = 0; t < 100; ++t) {
    const IntMatrix M = testing::random_int_matrix(3, 5, -1, 1);
    CHECK(rank(M) + rational_kernel(to_rational(M)).size() == 5);
  }
}
