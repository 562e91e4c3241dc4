#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chevex/chevalley.hpp"

namespace chevex {

/// Result of the extremality sweep on one element: the values g_x(e_b) for
/// every basis element b, plus status flags. Over characteristic 2 the form
/// is recovered by solving the Premet identities for g as a linear system.
struct ExtremalCertificate {
  Vec element;
  Vec g;  // g_x on the basis; zero-filled when not extremal
  bool extremal = false;
  bool sandwich = false;
  bool premet_checked = false;
  bool g_unique = true;
  std::string witness;  // first failing check, for reports

  /// g_x(y) by linear extension.
  Scalar g_value(const Vec& y) const { return dot(g, y); }
};

struct ExtremalOptions {
  bool check_premet = false;  // forced on in characteristic 2
};

/// Tests [x,[x,b]] in Fx on every basis b and extracts g_x; in characteristic
/// 2 requires [x,[x,b]] = 0 plus solvability of the Premet identities.
ExtremalCertificate is_extremal(const LieAlgebra& a, const Vec& x, const ExtremalOptions& opts = {});

/// [x,[x,y]] = 0 and [x,[y,[x,z]]] = 0 for all basis y, z.
bool is_sandwich(const LieAlgebra& a, const Vec& x);

/// y -> y + lambda [x,y] + lambda^2 g_x(y) x as a matrix. x must be certified.
Matrix exp_map(const LieAlgebra& a, const ExtremalCertificate& cert, const Scalar& lambda);

/// The five pair relations; numeric values match the E_i indices.
enum class PairRel : int {
  kProportional = -2,  // E_-2
  kCollinear = -1,     // E_-1: commuting, all of <x,y> extremal
  kCommuting = 0,      // E_0
  kPolar = 1,          // E_1: [x,y] extremal, g(x,y) = 0
  kSl2 = 2,            // E_2: g(x,y) != 0
};

std::string pair_rel_name(PairRel r);

struct ClassifyOptions {
  bool exhaustive_collinearity = false;  // sweep all lambda x + mu y over finite fields
  bool allow_char2_g = false;            // permit E1/E2 split from a solved char-2 form
};

PairRel classify_pair(const LieAlgebra& a, const ExtremalCertificate& cx,
                      const ExtremalCertificate& cy, const ClassifyOptions& opts = {});

/// Long-root basis vectors extended by exp-images until they span; `complete`
/// is false if the span stalls below the full dimension.
struct SpanningSet {
  std::vector<Vec> elements;  // each one extremal
  bool complete = false;
};
SpanningSet long_root_spanning_set(const ChevalleyAlgebra& a);

/// Rank test for the spanning lemma (characteristic != 2).
bool long_root_span_check(const ChevalleyAlgebra& a);

struct GramForm {
  Matrix gram;               // G[i][j] = g(e_i, e_j)
  std::vector<Vec> radical;  // nullspace basis of G
};

struct GramOptions {
  bool verify_associativity = true;  // exhaustive on basis triples
};

/// Assembles the extremal form from certificates on a spanning set of
/// extremal elements; verifies symmetry (and associativity unless disabled).
GramForm extremal_gram(const ChevalleyAlgebra& a, const GramOptions& opts = {});

/// g([x,y],z) = g(x,[y,z]) on every basis triple.
bool gram_associative(const LieAlgebra& a, const Matrix& gram, std::string* witness = nullptr);

struct RadicalQuotient {
  std::vector<Vec> radical;
  LieAlgebra quotient;
};
RadicalQuotient form_radical_quotient(const ChevalleyAlgebra& a);

/// Outcome of the ratio-recovery routine: the global scalar with
/// [.,.]_2 = lambda [.,.]_1, or the first inconsistent pair.
struct ProductRatioResult {
  bool consistent = false;
  Scalar lambda;
  std::string witness;
};

/// Seeds lambda on an E2 pair of `points` (which must span and be extremal
/// for both products), then checks every pair, walking the E2/E-1 incidence
/// structure breadth-first from the seed.
ProductRatioResult product_ratio(const LieAlgebra& a1, const LieAlgebra& a2,
                                 const std::vector<Vec>& points);

}  // namespace chevex
