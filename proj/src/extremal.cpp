#include "chevex/extremal.hpp"

#include <deque>
#include <map>

namespace chevex {

namespace {

// mu with w = mu x, or nullopt when w is not a multiple of x (x != 0).
std::optional<Scalar> proportionality(const Vec& w, const Vec& x, int x_lead) {
  if (w.is_zero()) return x.field().zero();
  Scalar mu = w[x_lead] / x[x_lead];
  Vec diff = w;
  diff.add_scaled(x, -mu);
  if (!diff.is_zero()) return std::nullopt;
  return mu;
}

bool premet_holds(const LieAlgebra& a, const Vec& x, const Vec& g, std::string* witness) {
  const int d = a.dim();
  std::vector<Vec> xe(d, a.zero());  // [x, e_b]
  for (int b = 0; b < d; ++b) xe[b] = a.bracket(x, a.basis(b));
  for (int s = 0; s < d; ++s)
    for (int t = 0; t < d; ++t) {
      Vec w = a.bracket(a.basis(s), a.basis(t));
      Scalar gw = dot(g, w);
      // P1: [[x,y],[x,z]] = g([y,z])x + g(z)[x,y] - g(y)[x,z]
      Vec lhs1 = a.bracket(xe[s], xe[t]);
      Vec rhs1 = x * gw;
      rhs1.add_scaled(xe[s], g[t]);
      rhs1.add_scaled(xe[t], -g[s]);
      if (!(lhs1 == rhs1)) {
        if (witness) *witness = "Premet P1 fails at (" + a.label(s) + "," + a.label(t) + ")";
        return false;
      }
      // P2: [x,[y,[x,z]]] = g([y,z])x - g(z)[x,y] - g(y)[x,z]
      Vec lhs2 = a.bracket(x, a.bracket(a.basis(s), xe[t]));
      Vec rhs2 = x * gw;
      rhs2.add_scaled(xe[s], -g[t]);
      rhs2.add_scaled(xe[t], -g[s]);
      if (!(lhs2 == rhs2)) {
        if (witness) *witness = "Premet P2 fails at (" + a.label(s) + "," + a.label(t) + ")";
        return false;
      }
    }
  return true;
}

// Characteristic-2 path: find some linear form g satisfying P1 and P2 given
// that [x,[x,.]] vanishes. Returns (solution, unique) or nullopt.
std::optional<std::pair<Vec, bool>> solve_char2_form(const LieAlgebra& a, const Vec& x) {
  const int d = a.dim();
  const Field& f = a.field();
  std::vector<Vec> xe(d, a.zero());
  for (int b = 0; b < d; ++b) xe[b] = a.bracket(x, a.basis(b));

  RowSpan rows(f, d + 1);  // augmented [coeffs | rhs]
  auto add_equation = [&](const std::map<int, Scalar>& coeffs, const Scalar& rhs) {
    Vec row(f, d + 1);
    for (const auto& [k, c] : coeffs) row[k] = c;
    row[d] = rhs;
    rows.insert(std::move(row));
  };

  for (int s = 0; s < d; ++s)
    for (int t = 0; t < d; ++t) {
      Vec w = a.bracket(a.basis(s), a.basis(t));
      Vec lhs1 = a.bracket(xe[s], xe[t]);
      Vec lhs2 = a.bracket(x, a.bracket(a.basis(s), xe[t]));
      for (int r = 0; r < d; ++r) {
        // P1 row r:  sum_k w_k x_r g_k + xe[s]_r g_t - xe[t]_r g_s = lhs1_r
        std::map<int, Scalar> c1;
        if (!x[r].is_zero())
          for (int k = 0; k < d; ++k)
            if (!w[k].is_zero()) c1[k] = w[k] * x[r];
        if (!xe[s][r].is_zero()) {
          auto [it, fresh] = c1.emplace(t, xe[s][r]);
          if (!fresh) it->second += xe[s][r];
        }
        if (!xe[t][r].is_zero()) {
          auto [it, fresh] = c1.emplace(s, -xe[t][r]);
          if (!fresh) it->second -= xe[t][r];
        }
        if (!c1.empty() || !lhs1[r].is_zero()) add_equation(c1, lhs1[r]);
        // P2 row r:  sum_k w_k x_r g_k - xe[s]_r g_t - xe[t]_r g_s = lhs2_r
        std::map<int, Scalar> c2;
        if (!x[r].is_zero())
          for (int k = 0; k < d; ++k)
            if (!w[k].is_zero()) c2[k] = w[k] * x[r];
        if (!xe[s][r].is_zero()) {
          auto [it, fresh] = c2.emplace(t, -xe[s][r]);
          if (!fresh) it->second -= xe[s][r];
        }
        if (!xe[t][r].is_zero()) {
          auto [it, fresh] = c2.emplace(s, -xe[t][r]);
          if (!fresh) it->second -= xe[t][r];
        }
        if (!c2.empty() || !lhs2[r].is_zero()) add_equation(c2, lhs2[r]);
      }
    }

  // Inconsistent iff some pivot sits in the rhs column.
  for (int p : rows.pivots())
    if (p == d) return std::nullopt;
  Vec g(f, d);
  const auto& rr = rows.rows();
  for (size_t i = 0; i < rr.size(); ++i) g[rows.pivots()[i]] = rr[i][d];
  bool unique = rows.rank() == d;
  // Free coordinates were set to 0; re-check the particular solution.
  std::string why;
  if (!premet_holds(a, x, g, &why)) return std::nullopt;
  return std::make_pair(g, unique);
}

}  // namespace

ExtremalCertificate is_extremal(const LieAlgebra& a, const Vec& x, const ExtremalOptions& opts) {
  if (x.is_zero()) throw FieldError("is_extremal: x must be nonzero");
  ExtremalCertificate cert;
  cert.element = x;
  cert.g = a.zero();
  const int d = a.dim();
  const bool char2 = a.field().characteristic() == 2;
  const int lead = x.leading_index();

  Matrix adx = a.ad(x);
  Matrix sq = adx * adx;
  Scalar two_inv = a.field().zero();
  if (!char2) two_inv = a.field().from_int(2).inverse();
  for (int b = 0; b < d; ++b) {
    Vec w = sq.col(b);
    auto mu = proportionality(w, x, lead);
    if (!mu || (char2 && !mu->is_zero())) {
      cert.witness = "[x,[x," + a.label(b) + "]] is not in Fx";
      return cert;
    }
    if (!char2) cert.g[b] = *mu * two_inv;
  }

  if (char2) {
    auto solved = solve_char2_form(a, x);
    if (!solved) {
      cert.witness = "no linear form satisfies the Premet identities";
      return cert;
    }
    cert.g = solved->first;
    cert.g_unique = solved->second;
    cert.premet_checked = true;
    cert.extremal = true;
    cert.sandwich = is_sandwich(a, x);
    return cert;
  }
  if (opts.check_premet) {
    std::string why;
    if (!premet_holds(a, x, cert.g, &why)) {
      cert.witness = why;
      return cert;
    }
    cert.premet_checked = true;
  }

  cert.extremal = true;
  // Outside characteristic 2 the form is determined, so sandwich <=> g = 0.
  cert.sandwich = cert.g.is_zero();
  return cert;
}

bool is_sandwich(const LieAlgebra& a, const Vec& x) {
  if (x.is_zero()) throw FieldError("is_sandwich: x must be nonzero");
  const int d = a.dim();
  Matrix adx = a.ad(x);
  Matrix sq = adx * adx;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (!sq.at(i, j).is_zero()) return false;
  // [x,[y,[x,z]]] = 0: columns of ad(x) ad(e_a) ad(x).
  for (int s = 0; s < d; ++s) {
    for (int b = 0; b < d; ++b) {
      Vec w = adx.col(b);
      if (w.is_zero()) continue;
      Vec v = a.bracket_basis_elem(s, w);
      if (v.is_zero()) continue;
      if (!adx.apply(v).is_zero()) return false;
    }
  }
  return true;
}

Matrix exp_map(const LieAlgebra& a, const ExtremalCertificate& cert, const Scalar& lambda) {
  if (!cert.extremal) throw FieldError("exp_map: element is not certified extremal");
  const int d = a.dim();
  Matrix m = Matrix::identity(a.field(), d);
  Scalar l2 = lambda * lambda;
  for (int j = 0; j < d; ++j) {
    Vec img = a.bracket(cert.element, a.basis(j));
    for (int i = 0; i < d; ++i) {
      if (!img[i].is_zero()) m.at(i, j) += lambda * img[i];
      if (!cert.element[i].is_zero() && !cert.g[j].is_zero())
        m.at(i, j) += l2 * cert.g[j] * cert.element[i];
    }
  }
  return m;
}

std::string pair_rel_name(PairRel r) {
  switch (r) {
    case PairRel::kProportional: return "E-2";
    case PairRel::kCollinear: return "E-1";
    case PairRel::kCommuting: return "E0";
    case PairRel::kPolar: return "E1";
    case PairRel::kSl2: return "E2";
  }
  return "?";
}

PairRel classify_pair(const LieAlgebra& a, const ExtremalCertificate& cx,
                      const ExtremalCertificate& cy, const ClassifyOptions& opts) {
  if (!cx.extremal || !cy.extremal) throw FieldError("classify_pair: inputs must be extremal");
  const Vec& x = cx.element;
  const Vec& y = cy.element;
  int lead = x.leading_index();
  if (auto mu = proportionality(y, x, lead)) {
    (void)mu;
    return PairRel::kProportional;
  }

  Vec b = a.bracket(x, y);
  if (b.is_zero()) {
    auto probe = [&](const Vec& v) { return is_extremal(a, v).extremal; };
    bool coll = probe(x + y);
    if (opts.exhaustive_collinearity && a.field().is_prime_field()) {
      // The two-generator dichotomy says the x+y probe decides; cross-check.
      for (std::int64_t t = 1; t < a.field().characteristic(); ++t) {
        Vec v = x;
        v.add_scaled(y, a.field().from_int(t));
        if (probe(v) != coll)
          throw std::logic_error("collinearity dichotomy violated on a lambda/mu sweep");
      }
    }
    return coll ? PairRel::kCollinear : PairRel::kCommuting;
  }

  if (a.field().characteristic() == 2) {
    if (!opts.allow_char2_g)
      throw FieldError("E1/E2 separation is unavailable in characteristic 2");
    if (!cx.g_unique)
      throw FieldError("characteristic-2 form is not unique; cannot separate E1/E2");
  }
  return cx.g_value(y).is_zero() ? PairRel::kPolar : PairRel::kSl2;
}

SpanningSet long_root_spanning_set(const ChevalleyAlgebra& a) {
  SpanningSet out;
  const RootSystem& rs = a.roots();
  RowSpan span(a.field(), a.dim());
  std::vector<int> longs;
  for (int r = 0; r < rs.num_roots(); ++r)
    if (rs.is_long(r)) longs.push_back(r);
  for (int r : longs) {
    out.elements.push_back(a.x(r));
    span.insert(a.x(r));
  }
  if (span.rank() < a.dim()) {
    // images of long root vectors under unipotent automorphisms are long
    // root elements; exponentials along short roots are needed to reach the
    // short root spaces (the lemma's proof uses exp(x_{-alpha-beta}, 1))
    const Scalar one = a.field().one();
    for (int g = 0; g < rs.num_roots() && span.rank() < a.dim(); ++g) {
      Matrix e = a.root_exp(g, one);
      for (int r : longs) {
        Vec img = e.col(a.x_index(r));
        if (span.insert(img)) out.elements.push_back(img);
        if (span.rank() == a.dim()) break;
      }
    }
  }
  out.complete = span.rank() == a.dim();
  return out;
}

bool long_root_span_check(const ChevalleyAlgebra& a) {
  if (a.field().characteristic() == 2)
    throw FieldError("long_root_span_check requires characteristic != 2");
  return long_root_spanning_set(a).complete;
}

GramForm extremal_gram(const ChevalleyAlgebra& a, const GramOptions& opts) {
  if (a.field().characteristic() == 2)
    throw FieldError("extremal form extraction requires characteristic != 2");
  SpanningSet s = long_root_spanning_set(a);
  if (!s.complete)
    throw std::logic_error("long root elements fail to span; cannot assemble the form");

  const int d = a.dim();
  std::vector<Vec> coeff_rows, g_rows;
  for (const Vec& e : s.elements) {
    ExtremalCertificate cert = is_extremal(a.lie(), e);
    if (!cert.extremal)
      throw std::logic_error("spanning element failed the extremality sweep: " + cert.witness);
    coeff_rows.push_back(e);
    g_rows.push_back(cert.g);
  }
  Matrix m = Matrix::from_rows(a.field(), coeff_rows);
  Matrix r = Matrix::from_rows(a.field(), g_rows);

  GramForm out;
  out.gram = Matrix(a.field(), d, d);
  for (int j = 0; j < d; ++j) {
    auto coljs = solve(m, r.col(j));
    if (!coljs) throw std::logic_error("inconsistent extremal-form system");
    for (int i = 0; i < d; ++i) out.gram.at(i, j) = (*coljs)[i];
  }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (out.gram.at(i, j) != out.gram.at(j, i))
        throw std::logic_error("extremal form is not symmetric");
  if (opts.verify_associativity) {
    std::string why;
    if (!gram_associative(a.lie(), out.gram, &why)) throw std::logic_error(why);
  }
  out.radical = mat_rank_nullspace(out.gram).nullspace;
  return out;
}

bool gram_associative(const LieAlgebra& a, const Matrix& gram, std::string* witness) {
  const int d = a.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        Scalar lhs = a.field().zero(), rhs = a.field().zero();
        for (const auto& t : a.product(i, j)) lhs += t.c * gram.at(t.k, k);
        for (const auto& t : a.product(j, k)) rhs += gram.at(i, t.k) * t.c;
        if (lhs != rhs) {
          if (witness)
            *witness = "associativity fails at (" + a.label(i) + "," + a.label(j) + "," +
                       a.label(k) + ")";
          return false;
        }
      }
  return true;
}

RadicalQuotient form_radical_quotient(const ChevalleyAlgebra& a) {
  GramForm g = extremal_gram(a);
  RadicalQuotient out{g.radical, quotient_by_ideal(a.lie(), g.radical)};
  return out;
}

ProductRatioResult product_ratio(const LieAlgebra& a1, const LieAlgebra& a2,
                                 const std::vector<Vec>& points) {
  ProductRatioResult out;
  out.lambda = a1.field().zero();
  if (!(a1.field() == a2.field()) || a1.dim() != a2.dim())
    throw FieldError("product_ratio: algebras live on different spaces");

  RowSpan span(a1.field(), a1.dim());
  for (const Vec& p : points) span.insert(p);
  if (span.rank() != a1.dim())
    throw FieldError("product_ratio: the extremal point set must span the algebra");

  const int n = static_cast<int>(points.size());
  std::vector<ExtremalCertificate> certs;
  certs.reserve(n);
  for (const Vec& p : points) {
    ExtremalCertificate c = is_extremal(a1, p);
    if (!c.extremal) throw FieldError("product_ratio: point is not extremal: " + c.witness);
    certs.push_back(std::move(c));
  }

  // Seed on the first E2 pair in index order.
  int si = -1, sj = -1;
  for (int i = 0; i < n && si < 0; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!certs[i].g_value(points[j]).is_zero()) {
        si = i;
        sj = j;
        break;
      }
  if (si < 0) throw FieldError("product_ratio: no E2 pair available in the point set");

  Vec v1 = a1.bracket(points[si], points[sj]);
  Vec v2 = a2.bracket(points[si], points[sj]);
  int lead = v1.leading_index();
  if (lead < 0 || v2[lead].is_zero()) {
    out.witness = "seed pair (" + std::to_string(si) + "," + std::to_string(sj) +
                  "): brackets are not proportional";
    return out;
  }
  Scalar lambda = v2[lead] / v1[lead];
  auto pair_ok = [&](int i, int j) {
    Vec b1 = a1.bracket(points[i], points[j]);
    Vec b2 = a2.bracket(points[i], points[j]);
    b2.add_scaled(b1, -lambda);
    return b2.is_zero();
  };
  auto fail_at = [&](int i, int j) {
    out.witness = "pair (" + std::to_string(i) + "," + std::to_string(j) +
                  "): [x,y]_2 != lambda [x,y]_1 with lambda = " + lambda.str();
  };

  // Walk the E2 / E-1 incidence structure breadth-first from the seed; check
  // each discovered point against all previously settled points, then sweep
  // any remaining pairs in index order.
  std::vector<std::vector<int>> nbrs(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      PairRel r = classify_pair(a1, certs[i], certs[j],
                                {.allow_char2_g = a1.field().characteristic() == 2});
      if (r == PairRel::kSl2 || r == PairRel::kCollinear) {
        nbrs[i].push_back(j);
        nbrs[j].push_back(i);
      }
    }
  std::vector<bool> settled(n, false);
  std::vector<int> order;
  std::deque<int> queue{si, sj};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (settled[u]) continue;
    for (int w : order)
      if (!pair_ok(u, w)) {
        fail_at(std::min(u, w), std::max(u, w));
        return out;
      }
    settled[u] = true;
    order.push_back(u);
    for (int w : nbrs[u])
      if (!settled[w]) queue.push_back(w);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (settled[i] && settled[j]) continue;
      if (!pair_ok(i, j)) {
        fail_at(i, j);
        return out;
      }
    }

  out.consistent = true;
  out.lambda = lambda;
  return out;
}

}  // namespace chevex
