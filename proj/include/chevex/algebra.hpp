#pragma once

#include <string>
#include <vector>

#include "chevex/linalg.hpp"

namespace chevex {

/// A finite-dimensional algebra given by structure constants on a labeled
/// basis. Immutable once populated; brackets are bilinear extensions of the
/// table, antisymmetry is enforced at fill time.
class LieAlgebra {
 public:
  LieAlgebra(Field f, std::vector<std::string> labels);

  const Field& field() const { return field_; }
  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }

  struct Term {
    int k;
    Scalar c;
  };

  /// Set [e_i, e_j] = sum of terms; the mirrored entry (j,i) is set to the
  /// negation. Overwrites any previous value for the pair.
  void set_product(int i, int j, std::vector<Term> terms);
  const std::vector<Term>& product(int i, int j) const {
    return table_[static_cast<size_t>(i) * dim_ + j];
  }

  Vec zero() const { return Vec(field_, dim_); }
  Vec basis(int i) const;

  Vec bracket(const Vec& u, const Vec& v) const;
  Vec bracket_basis_elem(int i, const Vec& v) const;  // [e_i, v]
  Matrix ad(const Vec& x) const;

  /// Exhaustive [e_i,[e_j,e_k]] + cyclic = 0 over all basis triples;
  /// fills `witness` with the first offending triple when it fails.
  bool check_jacobi(std::string* witness = nullptr) const;
  /// [e_i,e_j] = -[e_j,e_i] and [e_i,e_i] = 0 on the stored table.
  bool check_anticommutative(std::string* witness = nullptr) const;

  /// The same algebra with every structure constant multiplied by c.
  LieAlgebra scaled(const Scalar& c) const;

  bool operator==(const LieAlgebra& o) const;

 private:
  Field field_;
  int dim_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Term>> table_;
};

/// Smallest ideal containing x: grow span of {x} by bracketing with the basis.
RowSpan ideal_closure(const LieAlgebra& a, const Vec& x);

/// Simple iff dim > 1 and every basis element generates the whole algebra
/// as an ideal.
bool is_simple(const LieAlgebra& a);

/// Quotient by the ideal spanned by `ideal` (must be bracket-closed); basis =
/// images of the non-pivot coordinates. Throws if the span is not an ideal.
LieAlgebra quotient_by_ideal(const LieAlgebra& a, const std::vector<Vec>& ideal);

}  // namespace chevex
