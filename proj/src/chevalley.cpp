#include "chevex/chevalley.hpp"

#include <sstream>

namespace chevex {

namespace {

std::string root_label(const RootCoords& r) {
  std::ostringstream os;
  os << "x(";
  for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
  os << ")";
  return os.str();
}

}  // namespace

std::vector<std::string> chevalley_labels(const RootSystem& rs) {
  std::vector<std::string> labels;
  labels.reserve(rs.num_roots() + rs.rank());
  for (int i = 0; i < rs.num_roots(); ++i) labels.push_back(root_label(rs.root(i)));
  for (int i = 0; i < rs.rank(); ++i) labels.push_back("h" + std::to_string(i + 1));
  return labels;
}

ChevalleyAlgebra::ChevalleyAlgebra(RootType type, int rank, Field f)
    : rs_(std::make_shared<RootSystem>(type, rank)),
      st_(std::make_shared<StructureTable>(*rs_)),
      lie_(Field::rationals(), {}) {
  coroots_.reserve(rs_->num_roots());
  for (int i = 0; i < rs_->num_roots(); ++i) coroots_.push_back(rs_->coroot_coords(i));
  lie_ = build(*rs_, *st_, coroots_, f);
  divided_cache_.resize(rs_->num_roots());
}

LieAlgebra ChevalleyAlgebra::build(const RootSystem& rs, const StructureTable& st,
                                   const std::vector<std::vector<long>>& coroots, Field f) {
  int nr = rs.num_roots();
  int n = rs.rank();
  LieAlgebra lie(f, chevalley_labels(rs));
  // [x_a, x_b]
  for (int a = 0; a < nr; ++a)
    for (int b = a + 1; b < nr; ++b) {
      std::vector<LieAlgebra::Term> terms;
      if (b == rs.negative_of(a)) {
        for (int i = 0; i < n; ++i) {
          Scalar c = f.from_int(coroots[a][i]);
          if (!c.is_zero()) terms.push_back({nr + i, c});
        }
      } else {
        long nab = st.n(a, b);
        if (nab != 0) {
          RootCoords sum = rs.root(a);
          for (int i = 0; i < n; ++i) sum[i] += rs.root(b)[i];
          Scalar c = f.from_int(nab);
          if (!c.is_zero()) terms.push_back({rs.index_of(sum), c});
        }
      }
      if (!terms.empty()) lie.set_product(a, b, std::move(terms));
    }
  // [h_i, x_b] = <b, alpha_i^vee> x_b ; [h_i, h_j] = 0
  for (int i = 0; i < n; ++i)
    for (int b = 0; b < nr; ++b) {
      int pairing = rs.cartan_pairing(b, rs.simple_root_index(i));
      Scalar c = f.from_int(pairing);
      if (!c.is_zero()) lie.set_product(nr + i, b, {{b, c}});
    }
  return lie;
}

const std::vector<std::vector<std::vector<long>>>& ChevalleyAlgebra::divided_ad(
    int root_idx) const {
  auto& slot = divided_cache_[root_idx];
  if (!slot.empty()) return slot;

  int d = dim();
  int nr = rs_->num_roots();
  // Integer ad matrix of x_alpha from the integral table.
  std::vector<std::vector<long>> ad(d, std::vector<long>(d, 0));
  int a = root_idx;
  for (int b = 0; b < nr; ++b) {
    if (b == a) continue;
    if (b == rs_->negative_of(a)) {
      for (int i = 0; i < rs_->rank(); ++i) ad[nr + i][b] = coroots_[a][i];
    } else {
      long nab = st_->n(a, b);
      if (nab != 0) {
        RootCoords sum = rs_->root(a);
        for (int i = 0; i < rs_->rank(); ++i) sum[i] += rs_->root(b)[i];
        ad[rs_->index_of(sum)][b] = nab;
      }
    }
  }
  for (int i = 0; i < rs_->rank(); ++i) {
    int pairing = rs_->cartan_pairing(a, rs_->simple_root_index(i));
    if (pairing != 0) ad[a][nr + i] = -pairing;  // [x_a, h_i] = -[h_i, x_a]
  }

  auto mul = [d](const std::vector<std::vector<long>>& x, const std::vector<std::vector<long>>& y) {
    std::vector<std::vector<long>> r(d, std::vector<long>(d, 0));
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k) {
        if (x[i][k] == 0) continue;
        for (int j = 0; j < d; ++j)
          if (y[k][j] != 0) r[i][j] += x[i][k] * y[k][j];
      }
    return r;
  };
  auto divide = [d](std::vector<std::vector<long>> m, long q) {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        if (m[i][j] % q != 0) throw std::logic_error("divided power of ad is not integral");
        m[i][j] /= q;
      }
    return m;
  };

  std::vector<std::vector<long>> id(d, std::vector<long>(d, 0));
  for (int i = 0; i < d; ++i) id[i][i] = 1;
  auto ad2 = mul(ad, ad);
  auto ad3 = mul(ad2, ad);
  auto ad4 = mul(ad3, ad);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (ad4[i][j] != 0) throw std::logic_error("ad^4 of a root vector is nonzero");

  slot = {std::move(id), std::move(ad), divide(std::move(ad2), 2), divide(std::move(ad3), 6)};
  return slot;
}

Matrix ChevalleyAlgebra::root_exp(int root_idx, const Scalar& lambda) const {
  const auto& pow = divided_ad(root_idx);
  const Field& f = field();
  int d = dim();
  Matrix m(f, d, d);
  Scalar lk = f.one();
  for (int k = 0; k < 4; ++k) {
    if (!lk.is_zero())
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          if (pow[k][i][j] != 0) m.at(i, j) += lk * f.from_int(pow[k][i][j]);
    lk *= lambda;
  }
  return m;
}

}  // namespace chevex
