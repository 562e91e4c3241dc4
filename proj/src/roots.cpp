#include "chevex/roots.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

namespace chevex {

std::string root_type_name(RootType t, int rank) {
  static const char* letters = "ABCDEFG";
  return std::string(1, letters[static_cast<int>(t)]) + std::to_string(rank);
}

std::pair<RootType, int> parse_root_type(const std::string& s) {
  static const std::string supported =
      "supported types: An (n>=1), Bn (n>=2), Cn (n>=2), Dn (n>=4), E6, E7, E8, F4, G2";
  if (s.size() < 2 || !std::isalpha(static_cast<unsigned char>(s[0])))
    throw FieldError("cannot parse root type '" + s + "'; " + supported);
  char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  for (size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw FieldError("cannot parse root type '" + s + "'; " + supported);
  int rank = std::atoi(s.c_str() + 1);
  auto fail = [&]() -> std::pair<RootType, int> {
    throw FieldError("unsupported root type '" + s + "'; " + supported);
  };
  switch (letter) {
    case 'A': return rank >= 1 ? std::make_pair(RootType::A, rank) : fail();
    case 'B': return rank >= 2 ? std::make_pair(RootType::B, rank) : fail();
    case 'C': return rank >= 2 ? std::make_pair(RootType::C, rank) : fail();
    case 'D': return rank >= 4 ? std::make_pair(RootType::D, rank) : fail();
    case 'E': return (rank >= 6 && rank <= 8) ? std::make_pair(RootType::E, rank) : fail();
    case 'F': return rank == 4 ? std::make_pair(RootType::F, rank) : fail();
    case 'G': return rank == 2 ? std::make_pair(RootType::G, rank) : fail();
    default: return fail();
  }
}

namespace {

// Bourbaki Cartan matrix C[i][j] = <alpha_i, alpha_j^vee> and the norm
// halves d[i] = (alpha_i, alpha_i)/2 (short roots normalized to norm 2).
void cartan_data(RootType t, int n, std::vector<std::vector<int>>& c, std::vector<long>& d) {
  c.assign(n, std::vector<int>(n, 0));
  d.assign(n, 1);
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto chain_edge = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
  switch (t) {
    case RootType::A:
      for (int i = 0; i + 1 < n; ++i) chain_edge(i, i + 1);
      break;
    case RootType::B:  // alpha_n short
      for (int i = 0; i + 1 < n; ++i) chain_edge(i, i + 1);
      c[n - 2][n - 1] = -2;
      for (int i = 0; i < n - 1; ++i) d[i] = 2;
      d[n - 1] = 1;
      break;
    case RootType::C:  // alpha_n long
      for (int i = 0; i + 1 < n; ++i) chain_edge(i, i + 1);
      c[n - 1][n - 2] = -2;
      for (int i = 0; i < n - 1; ++i) d[i] = 1;
      d[n - 1] = 2;
      break;
    case RootType::D:
      for (int i = 0; i + 1 < n - 1; ++i) chain_edge(i, i + 1);
      chain_edge(n - 3, n - 1);
      break;
    case RootType::E:
      // Bourbaki: chain 1-3-4-5-6(-7(-8)), node 2 attached to node 4.
      chain_edge(0, 2);
      for (int i = 2; i + 1 < n; ++i) chain_edge(i, i + 1);
      chain_edge(1, 3);
      break;
    case RootType::F:  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      chain_edge(0, 1);
      chain_edge(2, 3);
      c[1][2] = -2;
      c[2][1] = -1;
      d[0] = d[1] = 2;
      d[2] = d[3] = 1;
      break;
    case RootType::G:  // alpha_1 short, alpha_2 long
      c[0][1] = -1;
      c[1][0] = -3;
      d[0] = 1;
      d[1] = 3;
      break;
  }
}

int expected_root_count(RootType t, int n) {
  switch (t) {
    case RootType::A: return n * (n + 1);
    case RootType::B:
    case RootType::C: return 2 * n * n;
    case RootType::D: return 2 * n * (n - 1);
    case RootType::E: return n == 6 ? 72 : (n == 7 ? 126 : 240);
    case RootType::F: return 48;
    case RootType::G: return 12;
  }
  return 0;
}

int coords_height(const RootCoords& r) {
  return std::accumulate(r.begin(), r.end(), 0);
}

}  // namespace

RootSystem::RootSystem(RootType type, int rank) : type_(type), rank_(rank) {
  parse_root_type(root_type_name(type, rank));  // re-validate (type, rank)
  cartan_data(type, rank, cartan_, d_);

  // Reflection closure from the simple roots.
  std::set<RootCoords> closure;
  std::vector<RootCoords> work;
  for (int i = 0; i < rank; ++i) {
    RootCoords e(rank, 0);
    e[i] = 1;
    closure.insert(e);
    work.push_back(e);
  }
  while (!work.empty()) {
    RootCoords r = work.back();
    work.pop_back();
    for (int i = 0; i < rank; ++i) {
      int pairing = 0;
      for (int j = 0; j < rank; ++j) pairing += r[j] * cartan_[j][i];
      RootCoords s = r;
      s[i] -= pairing;
      if (closure.insert(s).second) work.push_back(s);
    }
  }

  std::vector<RootCoords> positives;
  for (const auto& r : closure) {
    int h = coords_height(r);
    if (h > 0) positives.push_back(r);
  }
  std::sort(positives.begin(), positives.end(), [](const RootCoords& a, const RootCoords& b) {
    int ha = coords_height(a), hb = coords_height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });

  roots_ = positives;
  for (const auto& r : positives) {
    RootCoords m(r);
    for (auto& x : m) x = -x;
    roots_.push_back(m);
  }
  for (int i = 0; i < num_roots(); ++i) index_[roots_[i]] = i;
  if (num_roots() != expected_root_count(type, rank))
    throw std::logic_error("root count mismatch for " + name());

  int np = num_positive();
  neg_.resize(num_roots());
  for (int i = 0; i < np; ++i) {
    neg_[i] = np + i;
    neg_[np + i] = i;
  }

  long max_norm = 0;
  for (const auto& r : roots_) max_norm = std::max(max_norm, norm(r));
  is_long_.resize(num_roots());
  for (int i = 0; i < num_roots(); ++i) is_long_[i] = norm(roots_[i]) == max_norm;

  highest_ = np - 1;  // positives sorted by height; the top one is the highest root
  if (type == RootType::C) {
    // buildings of type C_n are treated as BC_n, whose root set comes from
    // the B_n datum
    root_set_j_ = {2};
  } else {
    for (int i = 0; i < rank; ++i)
      if (inner(roots_[highest_], roots_[simple_root_index(i)]) != 0) root_set_j_.push_back(i + 1);
  }
}

int RootSystem::index_of(const RootCoords& r) const {
  auto it = index_.find(r);
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::height(int idx) const { return coords_height(roots_[idx]); }

long RootSystem::inner(const RootCoords& a, const RootCoords& b) const {
  long s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank_; ++j)
      if (b[j] != 0) s += static_cast<long>(a[i]) * b[j] * d_[j] * cartan_[i][j];
  }
  return s;
}

int RootSystem::cartan_pairing(const RootCoords& beta, const RootCoords& alpha) const {
  long num = 2 * inner(beta, alpha);
  long den = norm(alpha);
  if (num % den != 0) throw std::logic_error("non-integral Cartan pairing");
  return static_cast<int>(num / den);
}

int RootSystem::cartan_pairing(int beta_idx, int alpha_idx) const {
  if (beta_idx < 0 || beta_idx >= num_roots() || alpha_idx < 0 || alpha_idx >= num_roots())
    throw FieldError("cartan_pairing: index is not a root");
  return cartan_pairing(roots_[beta_idx], roots_[alpha_idx]);
}

int RootSystem::root_string_p(int alpha_idx, int beta_idx) const {
  if (beta_idx == alpha_idx || beta_idx == neg_[alpha_idx])
    throw FieldError("root_string_p: beta must differ from +-alpha");
  const RootCoords& a = roots_[alpha_idx];
  RootCoords cur = roots_[beta_idx];
  int p = 0;
  while (true) {
    for (int i = 0; i < rank_; ++i) cur[i] -= a[i];
    if (index_.count(cur) == 0) break;
    ++p;
  }
  return p;
}

std::vector<long> RootSystem::coroot_coords(int idx) const {
  const RootCoords& a = roots_[idx];
  long na = norm(a);
  std::vector<long> c(rank_);
  for (int j = 0; j < rank_; ++j) {
    long num = static_cast<long>(a[j]) * 2 * d_[j];
    if (num % na != 0) throw std::logic_error("non-integral coroot expansion");
    c[j] = num / na;
  }
  return c;
}

int RootSystem::simple_root_index(int i) const {
  RootCoords e(rank_, 0);
  e[i] = 1;
  return index_of(e);
}

//------------------------------------------------------------------------
// Structure constants
//------------------------------------------------------------------------

StructureTable::StructureTable(const RootSystem& rs) : rs_(&rs) {
  // Extraspecial pairs: for each non-simple positive root (ascending in the
  // height-then-lex order), the decomposition with minimal first summand.
  int np = rs.num_positive();
  for (int g = 0; g < np; ++g) {
    if (rs.height(g) == 1) continue;
    for (int a = 0; a < np; ++a) {
      RootCoords diff = rs.root(g);
      for (int i = 0; i < rs.rank(); ++i) diff[i] -= rs.root(a)[i];
      int b = rs.index_of(diff);
      if (b >= 0 && b < np) {
        extraspecial_[g] = {a, b};
        break;
      }
    }
    if (!extraspecial_.count(g)) throw std::logic_error("no decomposition for a composite root");
  }
  // Force every pair now so construction-time consistency checks all run.
  int nr = rs.num_roots();
  for (int a = 0; a < nr; ++a)
    for (int b = 0; b < nr; ++b)
      if (a != b && b != rs.negative_of(a)) (void)compute(a, b);
}

long StructureTable::n(int a, int b) const {
  auto it = n_.find({a, b});
  return it == n_.end() ? 0 : it->second;
}

long StructureTable::compute(int a, int b) {
  auto it = n_.find({a, b});
  if (it != n_.end()) return it->second;

  RootCoords sum = rs_->root(a);
  for (int i = 0; i < rs_->rank(); ++i) sum[i] += rs_->root(b)[i];
  int s = rs_->index_of(sum);
  long value = 0;
  if (s >= 0) {
    int np = rs_->num_positive();
    bool pa = a < np, pb = b < np;
    if (pa && pb) {
      value = a < b ? special_pair(a, b) : -special_pair(b, a);
    } else if (!pa && !pb) {
      value = -compute(rs_->negative_of(a), rs_->negative_of(b));
    } else if (!pa) {
      value = -compute(b, a);
    } else {
      // a positive, b negative; rotate within the zero-sum triple (a, b, g)
      // using N_{x,y}/(z,z) = N_{y,z}/(x,x) = N_{z,x}/(y,y).
      int g = rs_->negative_of(s);
      long ng = rs_->norm(rs_->root(g));
      if (s < np) {
        long t = compute(b, g);  // both negative
        long num = t * ng, den = rs_->norm(rs_->root(a));
        if (num % den != 0) throw std::logic_error("non-integral structure constant");
        value = num / den;
      } else {
        long t = compute(g, a);  // both positive
        long num = t * ng, den = rs_->norm(rs_->root(b));
        if (num % den != 0) throw std::logic_error("non-integral structure constant");
        value = num / den;
      }
    }
    long expect = rs_->root_string_p(a, b) + 1;
    if (std::abs(value) != expect)
      throw std::logic_error("sign propagation produced |N| != p+1 at (" + std::to_string(a) +
                             "," + std::to_string(b) + ")");
  }
  n_[{a, b}] = value;
  return value;
}

long StructureTable::special_pair(int a, int b) {
  RootCoords sum = rs_->root(a);
  for (int i = 0; i < rs_->rank(); ++i) sum[i] += rs_->root(b)[i];
  int g = rs_->index_of(sum);
  auto [a1, b1] = extraspecial_.at(g);
  if (a == a1 && b == b1) return rs_->root_string_p(a, b) + 1;

  // Jacobi on (x_a, x_b, x_{-a1}), whose labels sum to b1:
  //   N(b,-a1) N(a, b-a1) + N(-a1,a) N(b, a-a1) + N(a,b) N(-a1, a+b) = 0.
  auto diff_index = [&](int u, int v) {  // index of root(u) - root(v), or -1
    RootCoords d = rs_->root(u);
    for (int i = 0; i < rs_->rank(); ++i) d[i] -= rs_->root(v)[i];
    return rs_->index_of(d);
  };
  int na1 = rs_->negative_of(a1);
  long t1 = 0, t2 = 0;
  if (int ba1 = diff_index(b, a1); ba1 >= 0) t1 = compute(b, na1) * compute(a, ba1);
  if (int aa1 = diff_index(a, a1); aa1 >= 0) t2 = compute(na1, a) * compute(b, aa1);
  long denom = compute(na1, g);
  if (denom == 0) throw std::logic_error("extraspecial reduction hit a zero divisor");
  long num = -(t1 + t2);
  if (num % denom != 0) throw std::logic_error("non-integral special-pair constant");
  return num / denom;
}

}  // namespace chevex
