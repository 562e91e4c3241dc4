#include "chevex/geometry.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace chevex {

namespace {

std::string point_key(const Vec& rep) {
  // residues fit in one char each (q <= 7 in practice; fall back to str())
  if (rep.field().is_prime_field() && rep.field().characteristic() < 36) {
    std::string k(rep.size(), '0');
    for (int i = 0; i < rep.size(); ++i)
      k[i] = static_cast<char>('0' + rep[i].residue());
    return k;
  }
  std::string k;
  for (int i = 0; i < rep.size(); ++i) k += rep[i].str() + ",";
  return k;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<ExtremalPoint> enumerate_points_brute(const LieAlgebra& a,
                                                  const EnumerateOptions& opts) {
  if (!a.field().is_prime_field())
    throw FieldError(
        "brute-force enumeration needs a finite field (infinite point sets); use the orbit "
        "method on a finite field instead");
  const std::int64_t q = a.field().characteristic();
  const int d = a.dim();
  mpz_class count = 0, qk = 1;
  for (int i = 0; i < d; ++i) {
    count += qk;
    qk *= q;
  }
  if (count > opts.budget)
    throw FieldError("brute-force enumeration over " + count.get_str() +
                     " candidate 1-spaces exceeds the budget (" + std::to_string(opts.budget) +
                     "); use the orbit method");

  std::vector<ExtremalPoint> points;
  Vec rep(a.field(), d);
  for (int lead = 0; lead < d; ++lead) {
    for (int i = 0; i < d; ++i) rep[i] = a.field().zero();
    rep[lead] = a.field().one();
    // odometer over the coordinates after the leading 1
    std::vector<std::int64_t> free(d - lead - 1, 0);
    while (true) {
      ExtremalCertificate cert = is_extremal(a, rep);
      // sandwiches (central points in the degenerate cases) carry no
      // geometry; the point set is the pure extremal 1-spaces
      if (cert.extremal && !cert.sandwich) points.push_back({rep, std::move(cert)});
      int pos = 0;
      for (; pos < static_cast<int>(free.size()); ++pos) {
        if (++free[pos] < q) {
          rep[lead + 1 + pos] = a.field().from_int(free[pos]);
          break;
        }
        free[pos] = 0;
        rep[lead + 1 + pos] = a.field().zero();
      }
      if (pos == static_cast<int>(free.size())) break;
    }
  }
  std::sort(points.begin(), points.end(), [](const ExtremalPoint& x, const ExtremalPoint& y) {
    return point_key(x.rep) < point_key(y.rep);
  });
  return points;
}

std::vector<ExtremalPoint> enumerate_points_orbit(const ChevalleyAlgebra& a,
                                                  const EnumerateOptions& opts) {
  if (!a.field().is_prime_field())
    throw FieldError("orbit enumeration needs a finite field");
  const std::int64_t q = a.field().characteristic();
  const RootSystem& rs = a.roots();

  std::vector<Matrix> gens;
  for (int r = 0; r < rs.num_roots(); ++r)
    for (std::int64_t l = 1; l < q; ++l) gens.push_back(a.root_exp(r, a.field().from_int(l)));

  std::unordered_map<std::string, int> seen;
  std::vector<Vec> reps;
  std::deque<int> queue;
  auto push = [&](const Vec& v) {
    Vec c = v.canonical_point();
    std::string k = point_key(c);
    if (seen.emplace(k, static_cast<int>(reps.size())).second) {
      reps.push_back(std::move(c));
      queue.push_back(static_cast<int>(reps.size()) - 1);
    }
  };
  for (int r = 0; r < rs.num_roots(); ++r)
    if (rs.is_long(r)) push(a.x(r));

  while (!queue.empty()) {
    int idx = queue.front();
    queue.pop_front();
    if (static_cast<std::int64_t>(reps.size()) > opts.budget)
      throw FieldError("orbit enumeration exceeded the point budget");
    Vec v = reps[idx];
    for (const Matrix& g : gens) push(g.apply(v));
  }

  std::sort(reps.begin(), reps.end(),
            [](const Vec& x, const Vec& y) { return point_key(x) < point_key(y); });
  std::vector<ExtremalPoint> points;
  points.reserve(reps.size());
  for (Vec& r : reps) {
    ExtremalCertificate cert = is_extremal(a.lie(), r);
    if (!cert.extremal)
      throw std::logic_error("orbit produced a non-extremal point: " + cert.witness);
    if (cert.sandwich)
      throw std::logic_error("orbit of pure long-root points reached a sandwich");
    points.push_back({std::move(r), std::move(cert)});
  }
  return points;
}

Geometry build_geometry(const LieAlgebra& a, std::vector<ExtremalPoint> points,
                        const GeometryOptions& opts) {
  Geometry g;
  std::sort(points.begin(), points.end(), [](const ExtremalPoint& x, const ExtremalPoint& y) {
    return point_key(x.rep) < point_key(y.rep);
  });
  g.points = std::move(points);
  const int n = g.num_points();
  const bool char2 = a.field().characteristic() == 2;
  if (static_cast<std::int64_t>(n) * (n - 1) / 2 > opts.pair_budget)
    throw FieldError("geometry pair classification exceeds the budget");

  std::unordered_map<std::string, int> index;
  for (int i = 0; i < n; ++i) index[point_key(g.points[i].rep)] = i;

  g.relation.assign(n, std::vector<std::int8_t>(n, 0));
  g.adj.assign(n, {});
  for (int i = 0; i < n; ++i) g.relation[i][i] = -2;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::int8_t code;
      if (char2) {
        // E1/E2 split needs the form; classify what is available.
        const Vec& x = g.points[i].rep;
        const Vec& y = g.points[j].rep;
        if (a.bracket(x, y).is_zero()) {
          code = is_extremal(a, x + y).extremal ? -1 : 0;
        } else {
          code = kRelUnresolved;
          g.char2_limited = true;
        }
      } else {
        PairRel r = classify_pair(a, g.points[i].cert, g.points[j].cert);
        code = static_cast<std::int8_t>(r);
      }
      g.relation[i][j] = g.relation[j][i] = code;
      if (code == -1) {
        g.adj[i].push_back(j);
        g.adj[j].push_back(i);
      }
    }

  // Lines: the full projective line through each collinear pair, deduplicated.
  g.lines_through.assign(n, {});
  std::set<std::vector<int>> line_set;
  const std::int64_t q = a.field().characteristic();
  for (int i = 0; i < n; ++i)
    for (int j : g.adj[i]) {
      if (j < i) continue;
      bool shared = false;
      for (int li : g.lines_through[i])
        if (std::find(g.lines[li].begin(), g.lines[li].end(), j) != g.lines[li].end()) {
          shared = true;
          break;
        }
      if (shared) continue;
      std::vector<int> line;
      line.push_back(i);
      line.push_back(j);
      for (std::int64_t t = 1; t < q; ++t) {
        Vec v = g.points[i].rep;
        v.add_scaled(g.points[j].rep, a.field().from_int(t));
        auto it = index.find(point_key(v.canonical_point()));
        if (it == index.end())
          throw std::logic_error("a point of a line through a collinear pair is not extremal");
        line.push_back(it->second);
      }
      std::sort(line.begin(), line.end());
      line.erase(std::unique(line.begin(), line.end()), line.end());
      if (line_set.insert(line).second) {
        int li = g.num_lines();
        g.lines.push_back(line);
        for (int p : line) g.lines_through[p].push_back(li);
      }
    }

  // Distances by BFS over the collinearity graph.
  g.dist.assign(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    auto& ds = g.dist[s];
    ds[s] = 0;
    std::deque<int> bfs{s};
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop_front();
      for (int w : g.adj[u])
        if (ds[w] < 0) {
          ds[w] = ds[u] + 1;
          bfs.push_back(w);
        }
    }
  }
  return g;
}

std::string Geometry::fingerprint() const {
  std::ostringstream os;
  os << "points " << num_points() << "\n";
  for (const auto& p : points) os << point_key(p.rep) << "\n";
  os << "lines " << num_lines() << "\n";
  for (const auto& l : lines) {
    for (size_t i = 0; i < l.size(); ++i) os << (i ? " " : "") << l[i];
    os << "\n";
  }
  os << "relations\n";
  for (const auto& row : relation) {
    for (size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << static_cast<int>(row[i]);
    os << "\n";
  }
  return os.str();
}

bool AxiomReport::all_pass() const {
  if (!has_lines) return true;  // reduced report
  bool ok = partial_linear && diameter_ok && hyperplane_check && distance_correspondence &&
            polarized && e2_components >= 1;
  if (embedding_radical_dim >= 0) ok = ok && embedding_radical_matches;
  return ok;
}

namespace {

// Maximal linear dimension of a subspace all of whose points are pairwise
// collinear: depth-first extension with backtracking.
int singular_rank(const Geometry& g, const LieAlgebra& a, std::int64_t budget) {
  const int n = g.num_points();
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < n; ++i) index[point_key(g.points[i].rep)] = i;
  const std::int64_t q = a.field().characteristic();

  int best = g.num_points() > 0 ? 1 : 0;
  std::int64_t steps = 0;

  // All projective points of span(current + candidate); -1 when one of them
  // is not an extremal point.
  auto span_points = [&](const std::vector<int>& members, int cand) -> std::vector<int> {
    std::vector<Vec> basis;
    for (int m : members) basis.push_back(g.points[m].rep);
    basis.push_back(g.points[cand].rep);
    int k = static_cast<int>(basis.size());
    std::vector<int> pts;
    std::vector<std::int64_t> coef(k, 0);
    // canonical reps: first nonzero coefficient = 1
    for (int leadpos = 0; leadpos < k; ++leadpos) {
      std::fill(coef.begin(), coef.end(), 0);
      coef[leadpos] = 1;
      while (true) {
        Vec v = basis[leadpos];
        for (int t = leadpos + 1; t < k; ++t)
          if (coef[t] != 0) v.add_scaled(basis[t], a.field().from_int(coef[t]));
        auto it = index.find(point_key(v.canonical_point()));
        if (it == index.end()) return {};
        pts.push_back(it->second);
        int pos = leadpos + 1;
        for (; pos < k; ++pos) {
          if (++coef[pos] < q) break;
          coef[pos] = 0;
        }
        if (pos == k) break;
      }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
  };

  std::vector<int> gens;
  auto extend = [&](auto&& self, const std::vector<int>& members, int depth) -> void {
    best = std::max(best, depth);
    int last = gens.empty() ? -1 : gens.back();
    for (int c = last + 1; c < n; ++c) {
      if (++steps > budget) throw FieldError("rank search exceeded its budget");
      bool coll = true;
      for (int m : members)
        if (g.relation[m][c] != -1) {
          coll = false;
          break;
        }
      if (!coll) continue;
      std::vector<int> next = span_points(members, c);
      if (next.empty()) continue;
      bool pairwise = true;
      for (size_t i = 0; i < next.size() && pairwise; ++i)
        for (size_t j = i + 1; j < next.size(); ++j)
          if (next[i] != next[j] && g.relation[next[i]][next[j]] != -1) {
            pairwise = false;
            break;
          }
      if (!pairwise) continue;
      gens.push_back(c);
      self(self, next, depth + 1);
      gens.pop_back();
    }
  };

  for (int s = 0; s < n; ++s) {
    gens = {s};
    extend(extend, {s}, 1);
  }
  return best;
}

}  // namespace

AxiomReport axiom_report(const Geometry& g, const LieAlgebra& a, const Matrix* gram,
                         const AxiomOptions& opts) {
  AxiomReport rep;
  const int n = g.num_points();
  rep.num_points = n;
  rep.num_lines = g.num_lines();

  // (viii) components of the (E,E2) graph
  {
    UnionFind uf(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (g.relation[i][j] == 2) uf.unite(i, j);
    std::set<int> roots;
    for (int i = 0; i < n; ++i) roots.insert(uf.find(i));
    rep.e2_components = static_cast<int>(roots.size());
  }

  if (g.num_lines() == 0) return rep;  // reduced report
  rep.has_lines = true;

  // (i) partial linearity
  rep.partial_linear = true;
  for (int i = 0; i < n && rep.partial_linear; ++i)
    for (int j = i + 1; j < n; ++j) {
      int shared = 0;
      for (int li : g.lines_through[i])
        for (int lj : g.lines_through[j])
          if (li == lj) ++shared;
      if (shared > 1) {
        rep.partial_linear = false;
        rep.witness = "points " + std::to_string(i) + "," + std::to_string(j) +
                      " lie on " + std::to_string(shared) + " common lines";
        break;
      }
    }

  // collinearity components
  UnionFind comp(n);
  for (int i = 0; i < n; ++i)
    for (int j : g.adj[i]) comp.unite(i, j);
  std::unordered_map<int, int> comp_diam;  // root -> diameter
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g.dist[i][j] >= 0) {
        int r = comp.find(i);
        comp_diam[r] = std::max(comp_diam[r], g.dist[i][j]);
      }

  // (ii) diameter <= 3; equals 3 exactly when the component has an E2 pair
  rep.diameter_ok = true;
  rep.diameter = 0;
  for (auto& [root, dia] : comp_diam) rep.diameter = std::max(rep.diameter, dia);
  {
    std::unordered_map<int, bool> has_e2;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (g.relation[i][j] == 2 && comp.find(i) == comp.find(j)) has_e2[comp.find(i)] = true;
    for (auto& [root, dia] : comp_diam) {
      bool ok = dia <= 3 && (has_e2[root] ? dia == 3 : dia <= 2);
      if (!ok) {
        rep.diameter_ok = false;
        rep.witness = "component diameter " + std::to_string(dia) + " violates the bound";
      }
    }
  }

  // (iii) p-perp is a geometric hyperplane of p's component
  rep.hyperplane_check = true;
  for (int p = 0; p < n && rep.hyperplane_check; ++p) {
    int d = comp_diam[comp.find(p)];
    for (const auto& line : g.lines) {
      if (comp.find(line[0]) != comp.find(p)) continue;
      int inside = 0;
      for (int pt : line)
        if (g.dist[p][pt] >= 0 && g.dist[p][pt] < d) ++inside;
      if (inside != 1 && inside != static_cast<int>(line.size())) {
        rep.hyperplane_check = false;
        rep.witness = "perp of point " + std::to_string(p) + " meets a line in " +
                      std::to_string(inside) + " points";
        break;
      }
    }
  }

  // (iv) distance <-> relation
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < n; ++i) index[point_key(g.points[i].rep)] = i;
  rep.distance_correspondence = true;
  for (int i = 0; i < n && rep.distance_correspondence; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (comp.find(i) != comp.find(j)) continue;
      int dij = g.dist[i][j];
      int common = 0, common_pt = -1;
      if (dij == 2) {
        for (int w : g.adj[i])
          if (g.relation[w][j] == -1) {
            ++common;
            common_pt = w;
          }
      }
      int rel = g.relation[i][j];
      bool ok = true;
      switch (rel) {
        case -1: ok = dij == 1; break;
        case 0: ok = dij == 2 && common >= 2; break;
        case 1: {
          ok = dij == 2 && common == 1;
          if (ok) {
            Vec b = a.bracket(g.points[i].rep, g.points[j].rep);
            auto it = index.find(point_key(b.canonical_point()));
            ok = it != index.end() && it->second == common_pt;
          }
          break;
        }
        case 2: ok = dij == 3; break;
        default: ok = false; break;  // unresolved relations cannot be checked
      }
      if (!ok) {
        rep.distance_correspondence = false;
        rep.witness = "pair (" + std::to_string(i) + "," + std::to_string(j) + ") relation E" +
                      std::to_string(rel) + " vs distance " + std::to_string(dij);
      }
    }

  // (v) polarization: span of each perp has codimension >= 1
  rep.polarized = true;
  std::vector<std::vector<int>> perps(n);
  for (int p = 0; p < n; ++p) {
    int d = comp_diam[comp.find(p)];
    for (int q2 = 0; q2 < n; ++q2)
      if (g.dist[p][q2] >= 0 && g.dist[p][q2] < d) perps[p].push_back(q2);
    RowSpan span(a.field(), a.dim());
    for (int q2 : perps[p]) span.insert(g.points[q2].rep);
    if (span.rank() >= a.dim()) {
      rep.polarized = false;
      rep.witness = "perp of point " + std::to_string(p) + " spans the whole space";
      break;
    }
  }

  // (vi) embedding radical = intersection of the perp spans; compare to rad(g)
  if (gram != nullptr) {
    std::vector<Vec> annihilators;
    for (int p = 0; p < n; ++p) {
      std::vector<Vec> rows;
      for (int q2 : perps[p]) rows.push_back(g.points[q2].rep);
      for (Vec& v : mat_rank_nullspace(Matrix::from_rows(a.field(), rows)).nullspace)
        annihilators.push_back(std::move(v));
    }
    auto emb_rad = mat_rank_nullspace(Matrix::from_rows(a.field(), annihilators)).nullspace;
    rep.embedding_radical_dim = static_cast<int>(emb_rad.size());
    auto form_rad = mat_rank_nullspace(*gram).nullspace;
    bool match = emb_rad.size() == form_rad.size();
    if (match) {
      RowSpan span(a.field(), a.dim());
      for (const Vec& v : emb_rad) span.insert(v);
      for (const Vec& v : form_rad)
        if (!span.contains(v)) {
          match = false;
          break;
        }
    }
    rep.embedding_radical_matches = match;
    if (!match) rep.witness = "embedding radical differs from rad(g)";
  }

  // (vii) rank by exhaustive singular-subspace search
  rep.rank = singular_rank(g, a, opts.rank_budget);
  return rep;
}

int long_root_e2_components(const ChevalleyAlgebra& a, int max_rounds,
                            std::int64_t vertex_budget) {
  if (a.field().characteristic() == 2)
    throw FieldError("E2 connectivity needs the extremal form (characteristic != 2)");
  Matrix gram = extremal_gram(a, {.verify_associativity = false}).gram;
  const RootSystem& rs = a.roots();

  std::vector<Vec> verts, gram_times;  // reps and G * rep
  std::unordered_set<std::string> seen;
  std::vector<int> long_pts;
  UnionFind uf(static_cast<int>(vertex_budget));

  auto add_vertex = [&](const Vec& v) -> int {
    Vec c = v.canonical_point();
    std::string k = point_key(c);
    if (!seen.insert(k).second) return -1;
    int idx = static_cast<int>(verts.size());
    if (idx >= vertex_budget) throw FieldError("connectivity search exceeded the vertex budget");
    Vec gv = gram.apply(c);
    for (int u = 0; u < idx; ++u)
      if (!dot(verts[u], gv).is_zero()) uf.unite(u, idx);
    verts.push_back(std::move(c));
    gram_times.push_back(std::move(gv));
    return idx;
  };

  for (int r = 0; r < rs.num_roots(); ++r)
    if (rs.is_long(r)) long_pts.push_back(add_vertex(a.x(r)));

  auto long_components = [&]() {
    std::set<int> roots;
    for (int p : long_pts) roots.insert(uf.find(p));
    return static_cast<int>(roots.size());
  };

  const std::int64_t q = a.field().characteristic();
  std::vector<std::int64_t> lambdas;
  if (a.field().is_prime_field())
    for (std::int64_t l = 1; l < q; ++l) lambdas.push_back(l);
  else
    lambdas = {1, 2};  // over Q a couple of unipotent parameters suffice

  size_t frontier_begin = 0;
  for (int round = 0; round < max_rounds && long_components() > 1; ++round) {
    size_t frontier_end = verts.size();
    for (int r = 0; r < rs.num_roots(); ++r) {
      for (std::int64_t l : lambdas) {
        Matrix e = a.root_exp(r, a.field().from_int(l));
        for (size_t v = frontier_begin; v < frontier_end; ++v) add_vertex(e.apply(verts[v]));
        if (long_components() == 1) return 1;
      }
    }
    frontier_begin = frontier_end;
  }
  return long_components();
}

}  // namespace chevex
