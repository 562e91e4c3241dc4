#pragma once

#include "chevex/chevalley.hpp"

namespace chevex {

/// A concrete matrix model whose bracket table is laid out on the same basis
/// order (and labels) as the abstract Chevalley algebra of the matching type,
/// so the two tables can be compared entry by entry.
struct ClassicalModel {
  LieAlgebra lie;
  int nvec = 0;                    // dimension of the natural module V
  std::vector<Matrix> basis_mats;  // matrix of each algebra basis vector
  Matrix bform;                    // Gram matrix of b (so model only)

  Matrix to_matrix(const Vec& coords) const;
};

/// sl(n+1): x_{eps_i - eps_j} = e_i (x) phi_j acting as E_ij; bracket =
/// commutator of the tensor action.
ClassicalModel sl_model(int n, Field f);

/// so(2m) for the hyperbolic form b(e_{2k-1}, e_{2k}) = 1: root vectors are
/// Siegel elements s_{v,w} = v (x) b_w - w (x) b_v on the pairing basis.
/// Requires characteristic != 2.
ClassicalModel so_model(int m, Field f);

/// s_{v,w} as a matrix for the form with Gram matrix `bform`.
Matrix siegel_matrix(const Matrix& bform, const Vec& v, const Vec& w);

/// Q for the hyperbolic pairs form: sum of v_{2k-1} v_{2k}.
Scalar hyperbolic_q(const Vec& v);

/// Incident (point, hyperplane) pair of P(V) attached to a singular rank-one
/// element of the sl model. Errors when rep is not a singular pure tensor.
struct Flag {
  Vec point;       // canonical
  Vec hyperplane;  // covector, canonical
};
Flag point_to_flag(const ClassicalModel& sl, const Vec& rep);

/// Totally isotropic 2-space attached to a Siegel 1-space of the so model.
struct IsotropicLine {
  Matrix basis;  // 2 x 2m, reduced echelon rows
};
IsotropicLine point_to_isotropic_line(const ClassicalModel& so, const Vec& rep);
std::string isotropic_line_key(const IsotropicLine& l);

/// All totally isotropic 2-spaces of (F^n, Q), as canonical echelon keys.
/// Q is given by its values on vectors; `parabolic` appends x_n^2 to the
/// hyperbolic-pairs form (odd n).
std::vector<std::string> enumerate_isotropic_2spaces(int n, Field f, bool parabolic);

/// Diagonal rescaling of the model basis making its table equal the abstract
/// one; factors fixed to 1 on the h's and the simple-root vectors, propagated
/// through extraspecial pairs, then verified on every structure constant.
struct RescaleResult {
  bool ok = false;
  std::vector<Scalar> factors;
  std::string witness;
};
RescaleResult rescale_match(const LieAlgebra& model, const ChevalleyAlgebra& target);

}  // namespace chevex
