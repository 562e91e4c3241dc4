#pragma once

#include <memory>

#include "chevex/algebra.hpp"
#include "chevex/roots.hpp"

namespace chevex {

/// Basis labels "x(coords...)" then "h1".."hn", in the root-system order.
std::vector<std::string> chevalley_labels(const RootSystem& rs);

/// A Chevalley Lie algebra ch_Phi(F): basis {x_alpha : alpha in Phi} followed
/// by {h_1..h_rank}, with the integral table reduced into F.
///
/// Basis index i < |Phi| is the root vector for root i of the RootSystem;
/// index |Phi|+k is the coroot of the k-th simple root.
class ChevalleyAlgebra {
 public:
  ChevalleyAlgebra(RootType type, int rank, Field f);

  const RootSystem& roots() const { return *rs_; }
  const StructureTable& constants() const { return *st_; }
  const LieAlgebra& lie() const { return lie_; }
  const Field& field() const { return lie_.field(); }
  int dim() const { return lie_.dim(); }

  int x_index(int root_idx) const { return root_idx; }
  int h_index(int simple_i) const { return rs_->num_roots() + simple_i; }
  Vec x(int root_idx) const { return lie_.basis(root_idx); }
  Vec h(int simple_i) const { return lie_.basis(h_index(simple_i)); }

  /// Integer coroot expansion of h_alpha in the h_i.
  const std::vector<long>& coroot(int root_idx) const { return coroots_[root_idx]; }

  /// The unipotent automorphism exp(lambda ad x_alpha), valid for every root
  /// (long or short): divided powers ad^k/k! computed over Z, then reduced.
  Matrix root_exp(int root_idx, const Scalar& lambda) const;

  /// Integer ad-matrix powers ad^k/k! of x_alpha, k = 0..3 (ad^4 = 0).
  const std::vector<std::vector<std::vector<long>>>& divided_ad(int root_idx) const;

 private:
  std::shared_ptr<RootSystem> rs_;
  std::shared_ptr<StructureTable> st_;
  std::vector<std::vector<long>> coroots_;
  LieAlgebra lie_;
  mutable std::vector<std::vector<std::vector<std::vector<long>>>> divided_cache_;

  static LieAlgebra build(const RootSystem& rs, const StructureTable& st,
                          const std::vector<std::vector<long>>& coroots, Field f);
};

}  // namespace chevex
