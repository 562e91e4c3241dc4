#pragma once

#include <map>
#include <string>
#include <vector>

#include "chevex/field.hpp"

namespace chevex {

enum class RootType { A, B, C, D, E, F, G };

std::string root_type_name(RootType t, int rank);
/// Parse "A2", "G2", "E6", ... ; throws FieldError when unsupported.
std::pair<RootType, int> parse_root_type(const std::string& s);

/// Root coordinates in the simple-root basis (always integral).
using RootCoords = std::vector<int>;

/// An irreducible crystallographic root system with a fixed base.
///
/// Roots are generated from the simple roots by reflection closure and kept
/// as integer vectors in the simple-root basis; inner products go through the
/// symmetrized Cartan matrix, so everything stays in Z.
class RootSystem {
 public:
  RootSystem(RootType type, int rank);

  RootType type() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const { return root_type_name(type_, rank_); }

  int num_roots() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return num_roots() / 2; }
  const RootCoords& root(int idx) const { return roots_[idx]; }
  /// Index of a root given its coordinates, or -1.
  int index_of(const RootCoords& r) const;
  int negative_of(int idx) const { return neg_[idx]; }
  bool is_positive(int idx) const { return idx < num_positive(); }
  bool is_long(int idx) const { return is_long_[idx]; }
  int height(int idx) const;

  /// Cartan integer <beta, alpha^vee> = 2(beta,alpha)/(alpha,alpha).
  int cartan_pairing(int beta_idx, int alpha_idx) const;
  int cartan_pairing(const RootCoords& beta, const RootCoords& alpha) const;

  /// Inner product (a, b) through the symmetrized Cartan matrix.
  long inner(const RootCoords& a, const RootCoords& b) const;
  long norm(const RootCoords& a) const { return inner(a, a); }

  /// Largest p >= 0 with beta - p*alpha a root. Requires beta != +-alpha.
  int root_string_p(int alpha_idx, int beta_idx) const;

  int highest_root_index() const { return highest_; }
  /// The root set J: simple-root indices (1-based) pairing nontrivially with
  /// the highest root.
  const std::vector<int>& root_set_j() const { return root_set_j_; }

  /// Expansion of the coroot alpha^vee in the simple coroot basis (integral).
  std::vector<long> coroot_coords(int idx) const;

  int simple_root_index(int i) const;  // i in [0, rank)

 private:
  RootType type_;
  int rank_;
  std::vector<std::vector<int>> cartan_;       // <alpha_i, alpha_j^vee>
  std::vector<long> d_;                        // (alpha_i, alpha_i)/2
  std::vector<RootCoords> roots_;              // positives (height,lex), then negatives mirrored
  std::map<RootCoords, int> index_;
  std::vector<int> neg_;
  std::vector<bool> is_long_;
  int highest_ = -1;
  std::vector<int> root_set_j_;
};

/// Chevalley structure constants N_{alpha,beta} = +-(p_{alpha,beta}+1) for all
/// root pairs with alpha+beta a root. Signs: N > 0 on extraspecial pairs, the
/// rest forced through Jacobi-derived relations.
class StructureTable {
 public:
  explicit StructureTable(const RootSystem& rs);

  /// N_{alpha,beta}; 0 when alpha+beta is not a root.
  long n(int alpha_idx, int beta_idx) const;
  const RootSystem& roots() const { return *rs_; }

 private:
  long compute(int a, int b);
  long special_pair(int a, int b);  // both positive, sum a root

  const RootSystem* rs_;
  std::map<std::pair<int, int>, long> n_;
  std::map<int, std::pair<int, int>> extraspecial_;  // sum root idx -> pair
};

}  // namespace chevex
