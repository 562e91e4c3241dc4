#include "chevex/models.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace chevex {

namespace {

// Expresses vectors in the span of a fixed independent family, tracking the
// coefficients through an identity tail on each inserted row.
class SpanExpressor {
 public:
  SpanExpressor(Field f, int width, const std::vector<Vec>& rows)
      : f_(f), width_(width), count_(static_cast<int>(rows.size())), span_(f, width + count_) {
    for (int i = 0; i < count_; ++i) {
      Vec aug(f, width_ + count_);
      for (int j = 0; j < width_; ++j) aug[j] = rows[i][j];
      aug[width_ + i] = f.one();
      if (!span_.insert(std::move(aug)))
        throw std::logic_error("SpanExpressor: rows are dependent");
    }
    for (int p : span_.pivots())
      if (p >= width_) throw std::logic_error("SpanExpressor: pivot escaped the data columns");
  }

  // c with v = sum c_i rows_i, or nullopt when v is outside the span.
  std::optional<Vec> express(const Vec& v) const {
    Vec aug(f_, width_ + count_);
    for (int j = 0; j < width_; ++j) aug[j] = v[j];
    Vec red = span_.reduce(std::move(aug));
    for (int j = 0; j < width_; ++j)
      if (!red[j].is_zero()) return std::nullopt;
    Vec c(f_, count_);
    for (int i = 0; i < count_; ++i) c[i] = -red[width_ + i];
    return c;
  }

 private:
  Field f_;
  int width_, count_;
  RowSpan span_;
};

Vec flatten(const Matrix& m) {
  Vec v(m.field(), m.rows() * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m.at(i, j);
  return v;
}

// Builds the bracket table of a matrix model on the given basis matrices.
LieAlgebra table_from_matrices(Field f, const std::vector<std::string>& labels,
                               const std::vector<Matrix>& mats) {
  int dim = static_cast<int>(mats.size());
  int nv = mats.front().rows();
  std::vector<Vec> rows;
  rows.reserve(dim);
  for (const Matrix& m : mats) rows.push_back(flatten(m));
  SpanExpressor expr(f, nv * nv, rows);

  LieAlgebra lie(f, labels);
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      Matrix comm = mats[i] * mats[j];
      Matrix ba = mats[j] * mats[i];
      for (int r = 0; r < nv; ++r)
        for (int c = 0; c < nv; ++c) comm.at(r, c) -= ba.at(r, c);
      auto coords = expr.express(flatten(comm));
      if (!coords)
        throw std::logic_error("model basis does not close under the bracket");
      std::vector<LieAlgebra::Term> terms;
      for (int k = 0; k < dim; ++k)
        if (!(*coords)[k].is_zero()) terms.push_back({k, (*coords)[k]});
      if (!terms.empty()) lie.set_product(i, j, std::move(terms));
    }
  return lie;
}

}  // namespace

Matrix ClassicalModel::to_matrix(const Vec& coords) const {
  Matrix m(lie.field(), nvec, nvec);
  for (int b = 0; b < lie.dim(); ++b) {
    if (coords[b].is_zero()) continue;
    for (int i = 0; i < nvec; ++i)
      for (int j = 0; j < nvec; ++j) {
        const Scalar& c = basis_mats[b].at(i, j);
        if (!c.is_zero()) m.at(i, j) += c * coords[b];
      }
  }
  return m;
}

ClassicalModel sl_model(int n, Field f) {
  if (n < 1) throw FieldError("sl_model needs n >= 1");
  RootSystem rs(RootType::A, n);
  int nv = n + 1;

  ClassicalModel model{LieAlgebra(f, {}), nv, {}, Matrix()};
  auto elementary = [&](int i, int j) {  // 0-based E_ij
    Matrix m(f, nv, nv);
    m.at(i, j) = f.one();
    return m;
  };
  // root coords of A_n are +-(indicator of an interval [i, j))
  for (int r = 0; r < rs.num_roots(); ++r) {
    RootCoords c = rs.root(r);
    bool neg = rs.height(r) < 0;
    if (neg)
      for (auto& x : c) x = -x;
    int first = -1, last = -1;
    for (int k = 0; k < n; ++k)
      if (c[k] != 0) {
        if (first < 0) first = k;
        last = k;
      }
    int i = first, j = last + 1;  // eps_{i+1} - eps_{j+1}, 0-based matrix slots
    model.basis_mats.push_back(neg ? elementary(j, i) : elementary(i, j));
  }
  for (int k = 0; k < n; ++k) {
    Matrix h(f, nv, nv);
    h.at(k, k) = f.one();
    h.at(k + 1, k + 1) = -f.one();
    model.basis_mats.push_back(h);
  }
  model.lie = table_from_matrices(f, chevalley_labels(rs), model.basis_mats);
  return model;
}

Matrix siegel_matrix(const Matrix& bform, const Vec& v, const Vec& w) {
  int nv = bform.rows();
  Vec bv = bform.apply(v), bw = bform.apply(w);
  Matrix s(v.field(), nv, nv);
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nv; ++j) s.at(i, j) = v[i] * bw[j] - w[i] * bv[j];
  return s;
}

Scalar hyperbolic_q(const Vec& v) {
  Scalar q = v.field().zero();
  for (int k = 0; k + 1 < v.size(); k += 2) q += v[k] * v[k + 1];
  return q;
}

ClassicalModel so_model(int m, Field f) {
  if (f.characteristic() == 2) throw FieldError("so_model requires characteristic != 2");
  RootSystem rs(RootType::D, m);  // rejects m < 4
  int nv = 2 * m;

  ClassicalModel model{LieAlgebra(f, {}), nv, {}, Matrix(f, nv, nv)};
  for (int k = 0; k < m; ++k) {
    model.bform.at(2 * k, 2 * k + 1) = f.one();
    model.bform.at(2 * k + 1, 2 * k) = f.one();
  }
  auto unit = [&](int idx) {
    Vec v(f, nv);
    v[idx] = f.one();
    return v;
  };
  // eps_i with sign +1 is carried by e_{2i}, with sign -1 by e_{2i+1} (0-based pairs)
  auto weight_vector = [&](int i, int sign) { return unit(2 * i + (sign > 0 ? 0 : 1)); };

  for (int r = 0; r < rs.num_roots(); ++r) {
    const RootCoords& c = rs.root(r);
    // simple-root coords -> eps coords: alpha_k = eps_k - eps_{k+1} (k < m-1),
    // alpha_m = eps_{m-1} + eps_m
    std::vector<int> eps(m, 0);
    for (int k = 0; k < m - 1; ++k) {
      eps[k] += c[k];
      eps[k + 1] -= c[k];
    }
    eps[m - 2] += c[m - 1];
    eps[m - 1] += c[m - 1];
    int i = -1, j = -1;
    for (int k = 0; k < m; ++k)
      if (eps[k] != 0) (i < 0 ? i : j) = k;
    model.basis_mats.push_back(
        siegel_matrix(model.bform, weight_vector(i, eps[i]), weight_vector(j, eps[j])));
  }
  for (int k = 0; k < m; ++k) {
    // h_k = [x_{alpha_k}, x_{-alpha_k}]
    int pos = rs.simple_root_index(k);
    int neg = rs.negative_of(pos);
    Matrix a = model.basis_mats[pos] * model.basis_mats[neg];
    Matrix b = model.basis_mats[neg] * model.basis_mats[pos];
    for (int r = 0; r < nv; ++r)
      for (int c2 = 0; c2 < nv; ++c2) a.at(r, c2) -= b.at(r, c2);
    model.basis_mats.push_back(a);
  }
  // skew check: s^T B + B s = 0 for every basis matrix
  for (const Matrix& s : model.basis_mats) {
    Matrix lhs = s.transpose() * model.bform;
    Matrix rhs = model.bform * s;
    for (int r = 0; r < nv; ++r)
      for (int c2 = 0; c2 < nv; ++c2)
        if (lhs.at(r, c2) != -rhs.at(r, c2))
          throw std::logic_error("so model element is not skew for b");
  }
  model.lie = table_from_matrices(f, chevalley_labels(rs), model.basis_mats);
  return model;
}

Flag point_to_flag(const ClassicalModel& sl, const Vec& rep) {
  Matrix m = sl.to_matrix(rep);
  int nv = sl.nvec;
  const Field& f = sl.lie.field();
  int j0 = -1, i0 = -1;
  for (int j = 0; j < nv && j0 < 0; ++j)
    for (int i = 0; i < nv; ++i)
      if (!m.at(i, j).is_zero()) {
        j0 = j;
        i0 = i;
        break;
      }
  if (j0 < 0) throw FieldError("point_to_flag: zero element");
  Vec v = m.col(j0);
  Vec phi(f, nv);
  Scalar inv = v[i0].inverse();
  for (int j = 0; j < nv; ++j) phi[j] = m.at(i0, j) * inv;
  // rank-one check: m == v phi^T
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nv; ++j)
      if (m.at(i, j) != v[i] * phi[j])
        throw FieldError("point_to_flag: element is not a pure tensor");
  if (!dot(phi, v).is_zero()) throw FieldError("point_to_flag: tensor is not singular");
  return {v.canonical_point(), phi.canonical_point()};
}

IsotropicLine point_to_isotropic_line(const ClassicalModel& so, const Vec& rep) {
  Matrix m = so.to_matrix(rep);
  RowSpan image(so.lie.field(), so.nvec);
  for (int j = 0; j < so.nvec; ++j) image.insert(m.col(j));
  if (image.rank() != 2)
    throw FieldError("point_to_isotropic_line: element does not have rank 2");
  const Vec& u = image.rows()[0];
  const Vec& w = image.rows()[1];
  if (!hyperbolic_q(u).is_zero() || !hyperbolic_q(w).is_zero() ||
      !dot(so.bform.apply(u), w).is_zero())
    throw FieldError("point_to_isotropic_line: image plane is not totally isotropic");
  Matrix basis(so.lie.field(), 2, so.nvec);
  for (int j = 0; j < so.nvec; ++j) {
    basis.at(0, j) = u[j];
    basis.at(1, j) = w[j];
  }
  return {basis};
}

std::string isotropic_line_key(const IsotropicLine& l) {
  std::ostringstream os;
  for (int i = 0; i < l.basis.rows(); ++i)
    for (int j = 0; j < l.basis.cols(); ++j) os << l.basis.at(i, j).str() << ",";
  return os.str();
}

std::vector<std::string> enumerate_isotropic_2spaces(int n, Field f, bool parabolic) {
  if (!f.is_prime_field()) throw FieldError("isotropic enumeration needs a finite field");
  const std::int64_t q = f.characteristic();
  auto qform = [&](const Vec& v) {
    Scalar s = f.zero();
    int pairs = parabolic ? (n - 1) / 2 : n / 2;
    for (int k = 0; k < pairs; ++k) s += v[2 * k] * v[2 * k + 1];
    if (parabolic) s += v[n - 1] * v[n - 1];
    return s;
  };
  auto bilinear = [&](const Vec& x, const Vec& y) {
    return qform(x + y) - qform(x) - qform(y);
  };

  // canonical projective representatives on the quadric
  std::vector<Vec> quadric;
  Vec rep(f, n);
  for (int lead = 0; lead < n; ++lead) {
    for (int i = 0; i < n; ++i) rep[i] = f.zero();
    rep[lead] = f.one();
    std::vector<std::int64_t> free(n - lead - 1, 0);
    while (true) {
      if (qform(rep).is_zero()) quadric.push_back(rep);
      int pos = 0;
      for (; pos < static_cast<int>(free.size()); ++pos) {
        if (++free[pos] < q) {
          rep[lead + 1 + pos] = f.from_int(free[pos]);
          break;
        }
        free[pos] = 0;
        rep[lead + 1 + pos] = f.zero();
      }
      if (pos == static_cast<int>(free.size())) break;
    }
  }

  std::set<std::string> keys;
  for (size_t a = 0; a < quadric.size(); ++a)
    for (size_t b = a + 1; b < quadric.size(); ++b) {
      if (!bilinear(quadric[a], quadric[b]).is_zero()) continue;
      RowSpan span(f, n);
      span.insert(quadric[a]);
      span.insert(quadric[b]);
      if (span.rank() != 2) continue;
      std::ostringstream os;
      for (const Vec& r : span.rows())
        for (int j = 0; j < n; ++j) os << r[j].str() << ",";
      keys.insert(os.str());
    }
  return {keys.begin(), keys.end()};
}

RescaleResult rescale_match(const LieAlgebra& model, const ChevalleyAlgebra& target) {
  RescaleResult out;
  const LieAlgebra& tgt = target.lie();
  const Field& f = tgt.field();
  if (model.dim() != tgt.dim() || !(model.field() == f)) {
    out.witness = "model and target have different shapes";
    return out;
  }
  const RootSystem& rs = target.roots();
  const int nr = rs.num_roots();
  const int dim = tgt.dim();
  std::vector<Scalar> u(dim, f.zero());  // zero means "not yet assigned"
  for (int i = nr; i < dim; ++i) u[i] = f.one();

  // ratio of the first matching term of the two product lists
  auto first_ratio = [&](int i, int j) -> std::optional<Scalar> {
    const auto& t = tgt.product(i, j);
    const auto& mo = model.product(i, j);
    if (t.empty() || mo.empty()) return std::nullopt;
    for (const auto& tt : t)
      for (const auto& mt : mo)
        if (tt.k == mt.k) return tt.c / mt.c;
    return std::nullopt;
  };

  for (int r = 0; r < nr; ++r) {
    if (!rs.is_positive(r)) continue;
    if (rs.height(r) == 1) {
      u[r] = f.one();
    } else {
      // extraspecial decomposition: minimal first summand
      int a1 = -1, b1 = -1;
      for (int a = 0; a < rs.num_positive(); ++a) {
        RootCoords diff = rs.root(r);
        for (int k = 0; k < rs.rank(); ++k) diff[k] -= rs.root(a)[k];
        int b = rs.index_of(diff);
        if (b >= 0 && rs.is_positive(b)) {
          a1 = a;
          b1 = b;
          break;
        }
      }
      Scalar tc = f.zero(), mc = f.zero();
      for (const auto& t : tgt.product(a1, b1))
        if (t.k == r) tc = t.c;
      for (const auto& t : model.product(a1, b1))
        if (t.k == r) mc = t.c;
      if (tc.is_zero() || mc.is_zero()) {
        out.witness = "extraspecial product missing for " + tgt.label(r);
        return out;
      }
      u[r] = u[a1] * u[b1] * mc / tc;
    }
    // the opposite root from [x_r, x_{-r}] = h_r
    int nr_idx = rs.negative_of(r);
    auto ratio = first_ratio(r, nr_idx);
    if (!ratio) {
      out.witness = "missing coroot product for " + tgt.label(r);
      return out;
    }
    u[nr_idx] = *ratio / u[r];
  }

  // full verification on every stored pair
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      const auto& t = tgt.product(i, j);
      const auto& mo = model.product(i, j);
      auto mismatch = [&]() {
        out.witness = "structure constants disagree at (" + tgt.label(i) + "," + tgt.label(j) + ")";
      };
      if (t.size() != mo.size()) {
        mismatch();
        return out;
      }
      for (const auto& tt : t) {
        bool found = false;
        for (const auto& mt : mo)
          if (mt.k == tt.k) {
            found = true;
            if (u[i] * u[j] * mt.c != u[tt.k] * tt.c) {
              mismatch();
              return out;
            }
          }
        if (!found) {
          mismatch();
          return out;
        }
      }
    }

  out.ok = true;
  out.factors = std::move(u);
  return out;
}

}  // namespace chevex
