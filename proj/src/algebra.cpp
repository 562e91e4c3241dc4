#include "chevex/algebra.hpp"

#include <map>
#include <optional>
#include <random>

namespace chevex {

LieAlgebra::LieAlgebra(Field f, std::vector<std::string> labels)
    : field_(f),
      dim_(static_cast<int>(labels.size())),
      labels_(std::move(labels)),
      table_(static_cast<size_t>(dim_) * dim_) {}

void LieAlgebra::set_product(int i, int j, std::vector<Term> terms) {
  std::vector<Term> mirrored;
  mirrored.reserve(terms.size());
  for (const auto& t : terms) mirrored.push_back({t.k, -t.c});
  table_[static_cast<size_t>(i) * dim_ + j] = std::move(terms);
  table_[static_cast<size_t>(j) * dim_ + i] = std::move(mirrored);
}

Vec LieAlgebra::basis(int i) const {
  Vec v = zero();
  v[i] = field_.one();
  return v;
}

Vec LieAlgebra::bracket_basis_elem(int i, const Vec& v) const {
  Vec r = zero();
  for (int j = 0; j < dim_; ++j) {
    if (v[j].is_zero()) continue;
    for (const auto& t : product(i, j)) r[t.k] += t.c * v[j];
  }
  return r;
}

Vec LieAlgebra::bracket(const Vec& u, const Vec& v) const {
  if (u.size() != dim_ || v.size() != dim_) throw FieldError("bracket: dimension mismatch");
  Vec r = zero();
  for (int i = 0; i < dim_; ++i) {
    if (u[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (v[j].is_zero()) continue;
      const Scalar uv = u[i] * v[j];
      for (const auto& t : product(i, j)) r[t.k] += t.c * uv;
    }
  }
  return r;
}

Matrix LieAlgebra::ad(const Vec& x) const {
  Matrix m(field_, dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j)
      for (const auto& t : product(i, j)) m.at(t.k, j) += t.c * x[i];
  }
  return m;
}

bool LieAlgebra::check_anticommutative(std::string* witness) const {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      std::map<int, Scalar> sum;
      for (const auto& t : product(i, j)) {
        auto [it, fresh] = sum.emplace(t.k, t.c);
        if (!fresh) it->second += t.c;
      }
      for (const auto& t : product(j, i)) {
        auto [it, fresh] = sum.emplace(t.k, t.c);
        if (!fresh) it->second += t.c;
      }
      for (const auto& [k, c] : sum)
        if (!c.is_zero()) {
          if (witness) *witness = "[" + labels_[i] + "," + labels_[j] + "] not antisymmetric";
          return false;
        }
      if (i == j && !product(i, i).empty()) {
        if (witness) *witness = "[" + labels_[i] + "," + labels_[i] + "] != 0";
        return false;
      }
    }
  return true;
}

bool LieAlgebra::check_jacobi(std::string* witness) const {
  // Sparse evaluation of [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]].
  auto add_double = [&](std::map<int, Scalar>& acc, int a, int b, int c) {
    for (const auto& t : product(b, c))
      for (const auto& u : product(a, t.k)) {
        auto [it, fresh] = acc.emplace(u.k, u.c * t.c);
        if (!fresh) it->second += u.c * t.c;
      }
  };
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j)
      for (int k = j; k < dim_; ++k) {
        std::map<int, Scalar> acc;
        add_double(acc, i, j, k);
        add_double(acc, j, k, i);
        add_double(acc, k, i, j);
        for (const auto& [idx, c] : acc)
          if (!c.is_zero()) {
            if (witness)
              *witness =
                  "(" + labels_[i] + "," + labels_[j] + "," + labels_[k] + ") violates Jacobi";
            return false;
          }
      }
  return true;
}

LieAlgebra LieAlgebra::scaled(const Scalar& c) const {
  LieAlgebra s(field_, labels_);
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j) {
      std::vector<Term> terms = product(i, j);
      for (auto& t : terms) t.c *= c;
      if (!terms.empty()) s.set_product(i, j, std::move(terms));
    }
  return s;
}

bool LieAlgebra::operator==(const LieAlgebra& o) const {
  if (!(field_ == o.field_) || dim_ != o.dim_ || labels_ != o.labels_) return false;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      const auto &a = product(i, j), &b = o.product(i, j);
      if (a.size() != b.size()) return false;
      for (size_t t = 0; t < a.size(); ++t)
        if (a[t].k != b[t].k || a[t].c != b[t].c) return false;
    }
  return true;
}

RowSpan ideal_closure(const LieAlgebra& a, const Vec& x) {
  RowSpan span(a.field(), a.dim());
  span.insert(x);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Vec> current = span.rows();
    for (const Vec& s : current)
      for (int i = 0; i < a.dim(); ++i)
        if (span.insert(a.bracket_basis_elem(i, s))) grew = true;
  }
  return span;
}

namespace {

// module closure of v under the given matrices
RowSpan matrix_closure(Field f, int dim, const std::vector<Matrix>& action, const Vec& v) {
  RowSpan span(f, dim);
  span.insert(v);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Vec> current = span.rows();
    for (const Vec& s : current)
      for (const Matrix& m : action)
        if (span.insert(m.apply(s))) grew = true;
  }
  return span;
}

}  // namespace

bool is_simple(const LieAlgebra& a) {
  const int d = a.dim();
  if (d <= 1) return false;

  std::vector<Matrix> ads, ads_t;
  for (int i = 0; i < d; ++i) ads.push_back(a.ad(a.basis(i)));
  for (const Matrix& m : ads) ads_t.push_back(m.transpose());

  // center = common kernel of the ad matrices
  {
    Matrix stacked(a.field(), d * d, d);
    for (int i = 0; i < d; ++i)
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) stacked.at(i * d + r, c) = ads[i].at(r, c);
    if (mat_rank_nullspace(stacked).rank != d) return false;
  }
  // derived algebra must be everything
  {
    RowSpan derived(a.field(), d);
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) derived.insert(a.bracket(a.basis(i), a.basis(j)));
    if (derived.rank() != d) return false;
  }
  for (int i = 0; i < d; ++i)
    if (ideal_closure(a, a.basis(i)).rank() != d) return false;

  // Ideals are exactly the submodules of the adjoint module, so certify
  // irreducibility with Norton's criterion: for a singular element theta of
  // the enveloping matrix algebra, reducibility forces a proper closure from
  // null(theta) or from null(theta^T) on the transposed module.
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<int> coeff(-2, 2), pick(0, d - 1);
  for (int attempt = 0; attempt < 200; ++attempt) {
    Matrix theta(a.field(), d, d);
    for (int i = 0; i < d; ++i) {
      Scalar c = a.field().from_int(coeff(rng));
      if (c.is_zero()) continue;
      for (int r = 0; r < d; ++r)
        for (int s = 0; s < d; ++s) theta.at(r, s) += c * ads[i].at(r, s);
    }
    if (attempt > 50) {  // widen the search with a quadratic term
      Matrix prod = ads[pick(rng)] * ads[pick(rng)];
      for (int r = 0; r < d; ++r)
        for (int s = 0; s < d; ++s) theta.at(r, s) += prod.at(r, s);
    }
    auto null_theta = mat_rank_nullspace(theta);
    int k = static_cast<int>(null_theta.nullspace.size());
    if (k == 0 || k == d) continue;

    // enumerate kernel directions (all of them over a small field, the basis
    // alone only when the nullity is 1)
    auto directions = [&](const std::vector<Vec>& basis) -> std::optional<std::vector<Vec>> {
      if (basis.size() == 1) return basis;
      if (!a.field().is_prime_field()) return std::nullopt;
      std::int64_t q = a.field().characteristic(), total = 1;
      for (size_t t = 0; t < basis.size(); ++t) total *= q;
      if (total > 2048) return std::nullopt;
      std::vector<Vec> dirs;
      std::vector<std::int64_t> c(basis.size(), 0);
      while (true) {
        Vec v = a.zero();
        for (size_t t = 0; t < basis.size(); ++t)
          if (c[t]) v.add_scaled(basis[t], a.field().from_int(c[t]));
        if (!v.is_zero() && v.canonical_point() == v) dirs.push_back(v);
        size_t pos = 0;
        for (; pos < c.size() && ++c[pos] == q; ++pos) c[pos] = 0;
        if (pos == c.size()) break;
      }
      return dirs;
    };

    auto dirs = directions(null_theta.nullspace);
    if (!dirs) continue;
    bool proper = false;
    for (const Vec& v : *dirs)
      if (matrix_closure(a.field(), d, ads, v).rank() != d) proper = true;
    if (proper) return false;

    auto null_t = mat_rank_nullspace(theta.transpose());
    auto dirs_t = directions(null_t.nullspace);
    if (!dirs_t) continue;
    for (const Vec& w : *dirs_t)
      if (matrix_closure(a.field(), d, ads_t, w).rank() != d) proper = true;
    return !proper;
  }
  throw std::logic_error("is_simple: could not certify irreducibility of the adjoint module");
}

LieAlgebra quotient_by_ideal(const LieAlgebra& a, const std::vector<Vec>& ideal) {
  RowSpan span(a.field(), a.dim());
  for (const Vec& v : ideal) span.insert(v);
  for (const Vec& v : span.rows())
    for (int i = 0; i < a.dim(); ++i)
      if (!span.contains(a.bracket_basis_elem(i, v)))
        throw std::logic_error("quotient_by_ideal: span is not an ideal");

  // Complement coordinates: everything that is not a pivot of the ideal span.
  std::vector<bool> is_pivot(a.dim(), false);
  for (int p : span.pivots()) is_pivot[p] = true;
  std::vector<int> rep;  // quotient basis = images of e_{rep[t]}
  std::vector<std::string> labels;
  for (int i = 0; i < a.dim(); ++i)
    if (!is_pivot[i]) {
      rep.push_back(i);
      labels.push_back(a.label(i));
    }
  int qdim = static_cast<int>(rep.size());
  std::vector<int> coord_of(a.dim(), -1);
  for (int t = 0; t < qdim; ++t) coord_of[rep[t]] = t;

  auto project = [&](const Vec& v) {
    Vec red = span.reduce(v);  // kills pivot coordinates
    Vec q(a.field(), qdim);
    for (int t = 0; t < qdim; ++t) q[t] = red[rep[t]];
    return q;
  };

  LieAlgebra quot(a.field(), labels);
  for (int s = 0; s < qdim; ++s)
    for (int t = s + 1; t < qdim; ++t) {
      Vec q = project(a.bracket(a.basis(rep[s]), a.basis(rep[t])));
      std::vector<LieAlgebra::Term> terms;
      for (int k = 0; k < qdim; ++k)
        if (!q[k].is_zero()) terms.push_back({k, q[k]});
      if (!terms.empty()) quot.set_product(s, t, std::move(terms));
    }
  return quot;
}

}  // namespace chevex
