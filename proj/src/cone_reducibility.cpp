#include "sasaki/cone_reducibility.hpp"

#include <algorithm>
#include <set>

namespace sasaki {

namespace {

bool partition_matches(const std::vector<std::vector<bool>>& zeros,
                       const std::vector<std::size_t>& first,
                       const std::vector<std::size_t>& second) {
  if (zeros.size() != first.size() * second.size()) return false;
  const std::size_t d = first.size() + second.size();
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& z : zeros) {
    std::vector<std::size_t> miss1, miss2;
    for (auto i : first)
      if (!z[i]) miss1.push_back(i);
    for (auto j : second)
      if (!z[j]) miss2.push_back(j);
    if (miss1.size() != 1 || miss2.size() != 1) return false;
    if (!seen.insert({miss1[0], miss2[0]}).second) return false;
    std::size_t zero_count = 0;
    for (std::size_t i = 0; i < d; ++i) zero_count += z[i];
    if (zero_count != d - 2) return false;
  }
  return true;
}

void validate_partition(const Cone& C, const SimplexProductPartition& part) {
  const std::size_t d = C.labels.size();
  std::vector<int> seen(d, 0);
  for (auto i : part.first) {
    if (i >= d) throw Error(ErrorCode::invalid_partition, "label index out of range");
    ++seen[i];
  }
  for (auto i : part.second) {
    if (i >= d) throw Error(ErrorCode::invalid_partition, "label index out of range");
    ++seen[i];
  }
  if (std::any_of(seen.begin(), seen.end(), [](int s) { return s != 1; }))
    throw Error(ErrorCode::invalid_partition, "groups must partition the labels");
  if (part.first.size() < 2 || part.second.size() < 2 || d != C.dim + 1)
    throw Error(ErrorCode::invalid_partition, "group sizes do not fit a product of simplices");
  const auto rays = extreme_rays(C);
  if (!partition_matches(ray_label_incidence(C, rays), part.first, part.second))
    throw Error(ErrorCode::invalid_partition,
                "extreme rays are not cut out by one label missing from each group");
}

}  // namespace

std::optional<SimplexProductPartition> find_simplex_product_partition(const Cone& C) {
  const GoodnessReport good = is_good(C);
  if (!good.good) throw Error(ErrorCode::invalid_cone, "cone is not good");
  const std::size_t d = C.labels.size();
  if (d != C.dim + 1 || d < 4) return std::nullopt;
  const auto zeros = ray_label_incidence(C, extreme_rays(C));

  for (std::size_t size = 2; size + 2 <= d; ++size) {
    // subsets of {1..d-1} of size-1, lexicographic, joined with label 0
    std::vector<std::size_t> rest(size - 1);
    for (std::size_t i = 0; i < rest.size(); ++i) rest[i] = i + 1;
    for (;;) {
      SimplexProductPartition part;
      part.first.push_back(0);
      part.first.insert(part.first.end(), rest.begin(), rest.end());
      for (std::size_t i = 1; i < d; ++i)
        if (!std::binary_search(rest.begin(), rest.end(), i)) part.second.push_back(i);
      if (partition_matches(zeros, part.first, part.second)) return part;
      std::size_t i = rest.size();
      while (i > 0 && rest[i - 1] == d - 1 - (rest.size() - i)) --i;
      if (i == 0) break;
      ++rest[i - 1];
      for (std::size_t j = i; j < rest.size(); ++j) rest[j] = rest[j - 1] + 1;
    }
  }
  return std::nullopt;
}

SplittingCertificate find_splitting_reeb(const Cone& C, const SimplexProductPartition& part) {
  validate_partition(C, part);
  const std::size_t k = C.dim, d1 = part.first.size(), d2 = part.second.size();

  IntMatrix M(k, d1 + d2);
  for (std::size_t j = 0; j < d1; ++j)
    for (std::size_t i = 0; i < k; ++i) M(i, j) = C.labels[part.first[j]][i];
  for (std::size_t j = 0; j < d2; ++j)
    for (std::size_t i = 0; i < k; ++i) M(i, d1 + j) = -C.labels[part.second[j]][i];
  const LatticeBasis ker = integer_kernel_basis(M);
  if (ker.rank() != 1)
    throw Error(ErrorCode::internal_inconsistency, "relation space of the two groups is not a line");

  IntVector v = ker.vectors[0];
  const int s = sgn(v[0]);
  if (std::any_of(v.begin(), v.end(), [&](const Integer& x) { return sgn(x) != s; }))
    throw Error(ErrorCode::internal_inconsistency, "relation coefficients are not sign coherent");
  if (s < 0)
    for (auto& x : v) x = -x;

  IntVector a1(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(d1));
  IntVector a2(v.begin() + static_cast<std::ptrdiff_t>(d1), v.end());
  IntVector sum(k);
  for (std::size_t j = 0; j < d1; ++j)
    for (std::size_t i = 0; i < k; ++i) sum[i] += a1[j] * C.labels[part.first[j]][i];
  const Integer multiplier = content(sum);
  IntVector b = primitive_part(std::span<const Integer>(sum));

  for (const auto& r : extreme_rays(C))
    if (dot(std::span<const Integer>(r), std::span<const Integer>(b)) <= 0)
      throw Error(ErrorCode::internal_inconsistency, "splitting vector is not positive on the cone");

  CharacteristicSlice slice = characteristic_polytope(C, ReebVector::from_rational(to_rational(b)));
  ProductFactors factors = split_factors(slice.polytope, FacetPartition{part.first, part.second});
  if (!is_simplex(factors.first) || !is_simplex(factors.second))
    throw Error(ErrorCode::internal_inconsistency, "slice factors are not simplices");
  return SplittingCertificate{std::move(b), multiplier, std::move(a1), std::move(a2),
                              part, std::move(slice), std::move(factors)};
}

JoinWeights decompose_as_join(const SplittingCertificate& cert) {
  return {primitive_part(std::span<const Integer>(cert.a1)),
          primitive_part(std::span<const Integer>(cert.a2))};
}

}  // namespace sasaki
