#include "sasaki/labelled_polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "sasaki/moment_cone.hpp"

namespace sasaki {

Rational AffineFunction::operator()(std::span<const Rational> x) const {
  return dot(std::span<const Rational>(normal), x) + constant;
}

namespace {

// Calls f(indices) for every k-subset of {0..n-1} in lexicographic order.
// Stops early when f returns false.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    if (!f(std::as_const(idx))) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

RatMatrix normal_rows(const std::vector<AffineFunction>& facets,
                      std::span<const std::size_t> which, std::size_t dim) {
  RatMatrix M(which.size(), dim);
  for (std::size_t r = 0; r < which.size(); ++r)
    for (std::size_t j = 0; j < dim; ++j) M(r, j) = facets[which[r]].normal[j];
  return M;
}

std::size_t affine_rank(const std::vector<RatVector>& pts,
                        std::span<const std::size_t> which, std::size_t dim) {
  RatMatrix M(which.size(), dim + 1);
  for (std::size_t r = 0; r < which.size(); ++r) {
    for (std::size_t j = 0; j < dim; ++j) M(r, j) = pts[which[r]][j];
    M(r, dim) = 1;
  }
  return rank(M);
}

[[noreturn]] void bad_polytope(const std::string& why) {
  throw Error(ErrorCode::invalid_polytope, why);
}

}  // namespace

LabelledPolytope::LabelledPolytope(std::size_t dim, std::vector<AffineFunction> facets)
    : dim_(dim), facets_(std::move(facets)) {
  if (dim_ == 0) bad_polytope("polytope dimension must be positive");
  const std::size_t d = facets_.size();
  if (d < dim_ + 1) bad_polytope("too few facets for a compact polytope");
  for (const auto& f : facets_) {
    if (f.normal.size() != dim_) bad_polytope("normal length differs from dimension");
    if (std::all_of(f.normal.begin(), f.normal.end(),
                    [](const Rational& q) { return q == 0; }))
      bad_polytope("zero normal");
  }
  std::vector<std::size_t> all(d);
  std::iota(all.begin(), all.end(), 0);
  if (rank(normal_rows(facets_, all, dim_)) < dim_)
    bad_polytope("normals do not span: region contains a line");

  // bounded iff the recession cone {y : <n_i, y> >= 0} has no extreme ray
  bool unbounded = false;
  for_each_subset(d, dim_ - 1, [&](const std::vector<std::size_t>& s) {
    const auto ker = rational_kernel(normal_rows(facets_, s, dim_));
    if (ker.size() != 1) return true;
    for (int sign : {1, -1}) {
      bool ok = true;
      for (const auto& f : facets_) {
        const Rational v = sign * dot(std::span<const Rational>(f.normal),
                                      std::span<const Rational>(ker[0]));
        if (v < 0) {
          ok = false;
          break;
        }
      }
      if (ok) unbounded = true;
    }
    return !unbounded;
  });
  if (unbounded) bad_polytope("region is unbounded");

  std::set<RatVector> found;
  for_each_subset(d, dim_, [&](const std::vector<std::size_t>& s) {
    const RatMatrix N = normal_rows(facets_, s, dim_);
    if (rank(N) < dim_) return true;
    RatVector rhs(dim_);
    for (std::size_t r = 0; r < dim_; ++r) rhs[r] = -facets_[s[r]].constant;
    const auto v = solve(N, rhs);
    if (!v) return true;
    for (const auto& f : facets_)
      if (f(*v) < 0) return true;
    found.insert(*v);
    return true;
  });
  if (found.empty()) bad_polytope("region is empty");
  vertices_.assign(found.begin(), found.end());

  std::vector<std::size_t> vidx(vertices_.size());
  std::iota(vidx.begin(), vidx.end(), 0);
  if (affine_rank(vertices_, vidx, dim_) < dim_ + 1)
    bad_polytope("region has empty interior");

  incidence_.assign(vertices_.size(), std::vector<bool>(d, false));
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    for (std::size_t i = 0; i < d; ++i) incidence_[v][i] = facets_[i](vertices_[v]) == 0;

  std::set<std::vector<std::size_t>> facet_sets;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<std::size_t> on;
    for (std::size_t v = 0; v < vertices_.size(); ++v)
      if (incidence_[v][i]) on.push_back(v);
    if (affine_rank(vertices_, on, dim_) < dim_)
      bad_polytope("facet " + std::to_string(i) + " is redundant");
    if (!facet_sets.insert(on).second)
      bad_polytope("facet " + std::to_string(i) + " duplicates another facet");
  }
}

std::vector<std::size_t> LabelledPolytope::facets_through(
    std::span<const std::size_t> verts) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < facets_.size(); ++i)
    if (std::all_of(verts.begin(), verts.end(),
                    [&](std::size_t v) { return incidence_.at(v)[i]; }))
      out.push_back(i);
  return out;
}

const std::vector<RatVector>& vertices(const LabelledPolytope& P) {
  return P.vertices();
}

namespace {

// Canonical form of a bipartite incidence structure by colour refinement
// and individualization. Rows and columns are coloured separately.
class Canonizer {
 public:
  explicit Canonizer(const std::vector<std::vector<bool>>& inc)
      : inc_(inc), rows_(inc.size()), cols_(inc.empty() ? 0 : inc[0].size()) {}

  std::vector<std::vector<bool>> run() {
    search(std::vector<long>(rows_, 0), std::vector<long>(cols_, 0));
    return best_;
  }

 private:
  static std::vector<long> renumber(const std::vector<std::pair<long, std::vector<long>>>& sig) {
    std::vector<std::pair<long, std::vector<long>>> uniq = sig;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<long> out(sig.size());
    for (std::size_t i = 0; i < sig.size(); ++i)
      out[i] = std::lower_bound(uniq.begin(), uniq.end(), sig[i]) - uniq.begin();
    return out;
  }

  static std::size_t classes(const std::vector<long>& c) {
    return std::set<long>(c.begin(), c.end()).size();
  }

  void refine(std::vector<long>& rc, std::vector<long>& cc) const {
    for (;;) {
      const std::size_t before = classes(rc) + classes(cc);
      std::vector<std::pair<long, std::vector<long>>> rs(rows_), cs(cols_);
      for (std::size_t r = 0; r < rows_; ++r) {
        rs[r].first = rc[r];
        for (std::size_t c = 0; c < cols_; ++c)
          if (inc_[r][c]) rs[r].second.push_back(cc[c]);
        std::sort(rs[r].second.begin(), rs[r].second.end());
      }
      rc = renumber(rs);
      for (std::size_t c = 0; c < cols_; ++c) {
        cs[c].first = cc[c];
        for (std::size_t r = 0; r < rows_; ++r)
          if (inc_[r][c]) cs[c].second.push_back(rc[r]);
        std::sort(cs[c].second.begin(), cs[c].second.end());
      }
      cc = renumber(cs);
      if (classes(rc) + classes(cc) == before) return;
    }
  }

  void search(std::vector<long> rc, std::vector<long> cc) {
    refine(rc, cc);
    auto pick = [](const std::vector<long>& colours) -> std::optional<long> {
      std::map<long, int> count;
      for (long c : colours) ++count[c];
      for (const auto& [c, n] : count)
        if (n > 1) return c;
      return std::nullopt;
    };
    if (auto cell = pick(rc)) {
      for (std::size_t r = 0; r < rows_; ++r) {
        if (rc[r] != *cell) continue;
        std::vector<long> next(rows_);
        for (std::size_t i = 0; i < rows_; ++i) next[i] = 2 * rc[i] + (i == r ? 0 : 1);
        search(next, cc);
      }
      return;
    }
    if (auto cell = pick(cc)) {
      for (std::size_t c = 0; c < cols_; ++c) {
        if (cc[c] != *cell) continue;
        std::vector<long> next(cols_);
        for (std::size_t j = 0; j < cols_; ++j) next[j] = 2 * cc[j] + (j == c ? 0 : 1);
        search(rc, next);
      }
      return;
    }
    std::vector<std::size_t> rorder(rows_), corder(cols_);
    for (std::size_t r = 0; r < rows_; ++r) rorder[static_cast<std::size_t>(rc[r])] = r;
    for (std::size_t c = 0; c < cols_; ++c) corder[static_cast<std::size_t>(cc[c])] = c;
    std::vector<std::vector<bool>> m(rows_, std::vector<bool>(cols_));
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) m[r][c] = inc_[rorder[r]][corder[c]];
    if (!have_best_ || m < best_) {
      best_ = std::move(m);
      have_best_ = true;
    }
  }

  const std::vector<std::vector<bool>>& inc_;
  std::size_t rows_, cols_;
  std::vector<std::vector<bool>> best_;
  bool have_best_ = false;
};

}  // namespace

CombinatorialType combinatorial_type(const LabelledPolytope& P) {
  CombinatorialType t;
  t.num_vertices = P.vertices().size();
  t.num_facets = P.num_facets();
  t.incidence = Canonizer(P.incidence()).run();
  return t;
}

bool is_simplex(const LabelledPolytope& P) { return P.num_facets() == P.dim() + 1; }

std::optional<FacetPartition> product_split(const LabelledPolytope& P) {
  const std::size_t n = P.dim(), d = P.num_facets();
  RatMatrix N(n, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < n; ++j) N(j, i) = P.facet(i).normal[j];
  const auto pivots = rref_in_place(N);

  // components of the normals' matroid from fundamental circuits
  std::vector<std::size_t> parent(d);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t e = 0; e < d; ++e) {
    if (std::find(pivots.begin(), pivots.end(), e) != pivots.end()) continue;
    for (std::size_t k = 0; k < pivots.size(); ++k)
      if (N(k, e) != 0) parent[find(pivots[k])] = find(e);
  }
  FacetPartition part;
  for (std::size_t i = 0; i < d; ++i)
    (find(i) == find(0) ? part.first : part.second).push_back(i);
  if (part.second.empty()) return std::nullopt;
  return part;
}

namespace {

LabelledPolytope factor_of(const LabelledPolytope& P, const std::vector<std::size_t>& group,
                           IntMatrix& map) {
  const std::size_t n = P.dim();
  std::vector<IntVector> prim;
  for (auto i : group) prim.push_back(primitive_part(std::span<const Rational>(P.facet(i).normal)));
  map = saturation_basis(IntMatrix::from_rows(prim, n));
  const RatMatrix Gt = to_rational(map).transpose();
  std::vector<AffineFunction> fs;
  for (auto i : group) {
    auto gamma = solve(Gt, P.facet(i).normal);
    if (!gamma) throw Error(ErrorCode::internal_inconsistency, "normal outside its span");
    fs.push_back({std::move(*gamma), P.facet(i).constant});
  }
  return LabelledPolytope(map.rows(), std::move(fs));
}

}  // namespace

ProductFactors split_factors(const LabelledPolytope& P, const FacetPartition& part) {
  const std::size_t d = P.num_facets();
  std::vector<int> seen(d, 0);
  for (auto i : part.first) seen.at(i) += 1;
  for (auto i : part.second) seen.at(i) += 1;
  if (part.first.empty() || part.second.empty() ||
      std::any_of(seen.begin(), seen.end(), [](int s) { return s != 1; }))
    throw Error(ErrorCode::invalid_partition, "groups must partition the facets");
  const std::size_t r1 = rank(normal_rows(P.facets(), part.first, P.dim()));
  const std::size_t r2 = rank(normal_rows(P.facets(), part.second, P.dim()));
  if (r1 + r2 != P.dim())
    throw Error(ErrorCode::not_a_product, "normal dependencies do not split along the partition");
  IntMatrix A1, A2;
  LabelledPolytope P1 = factor_of(P, part.first, A1);
  LabelledPolytope P2 = factor_of(P, part.second, A2);
  return {std::move(P1), std::move(P2), std::move(A1), std::move(A2)};
}

LabelledPolytope product(const LabelledPolytope& P1, const LabelledPolytope& P2) {
  const std::size_t n1 = P1.dim(), n2 = P2.dim();
  std::vector<AffineFunction> fs;
  for (const auto& f : P1.facets()) {
    AffineFunction g{RatVector(n1 + n2), f.constant};
    std::copy(f.normal.begin(), f.normal.end(), g.normal.begin());
    fs.push_back(std::move(g));
  }
  for (const auto& f : P2.facets()) {
    AffineFunction g{RatVector(n1 + n2), f.constant};
    std::copy(f.normal.begin(), f.normal.end(), g.normal.begin() + static_cast<std::ptrdiff_t>(n1));
    fs.push_back(std::move(g));
  }
  return LabelledPolytope(n1 + n2, std::move(fs));
}

bool is_rational(const LabelledPolytope& P) {
  const std::size_t n = P.dim(), d = P.num_facets();
  RatMatrix M(n, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < n; ++j) M(j, i) = P.facet(i).normal[j];
  const std::size_t k = n + 1;
  return integer_kernel_basis(clear_denominators(M)).rank() + k >= d + 1;
}

CharacteristicReport is_characteristic(const LabelledPolytope& P) {
  const std::size_t n = P.dim(), d = P.num_facets(), k = n + 1;
  RatMatrix A(d, k);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < n; ++j) A(i, j) = P.facet(i).normal[j];
    A(i, n) = P.facet(i).constant;
  }
  CharacteristicReport rep;
  const IntMatrix L = clear_denominators(A);
  rep.lattice = integer_kernel_basis(L.transpose()).rank() == d - k;
  if (!rep.lattice) return rep;

  const Integer D = lcm_of_denominators(A.entries());
  const IntMatrix H = hermite_normal_form(L).H;
  RatMatrix Bt(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) Bt(j, i) = H(i, j);
  std::vector<IntVector> labels;
  for (std::size_t i = 0; i < d; ++i) {
    const auto c = solve(Bt, to_rational(L.row(i)));
    if (!c) throw Error(ErrorCode::internal_inconsistency, "label outside its own span");
    IntVector ci;
    for (const auto& q : *c) {
      if (q.get_den() != 1)
        throw Error(ErrorCode::internal_inconsistency, "non-integral lattice coordinates");
      ci.push_back(Integer(q));
    }
    labels.push_back(std::move(ci));
  }
  rep.cone = make_cone(k, std::move(labels));

  RatVector one(k);
  one[n] = Rational(D);
  const auto beta = solve(Bt, one);
  if (!beta) throw Error(ErrorCode::internal_inconsistency, "constant function outside lattice span");
  rep.reeb = *beta;

  rep.goodness = is_good(rep.cone);
  rep.characteristic = rep.goodness.good;
  return rep;
}

LabelledPolytope rescale(const LabelledPolytope& P, const Rational& r) {
  if (r <= 0) throw Error(ErrorCode::invalid_argument, "rescale factor must be positive");
  std::vector<AffineFunction> fs = P.facets();
  for (auto& f : fs) f.constant *= r;
  return LabelledPolytope(P.dim(), std::move(fs));
}

}  // namespace sasaki
