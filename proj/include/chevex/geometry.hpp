#pragma once

#include <cstdint>

#include "chevex/extremal.hpp"

namespace chevex {

struct ExtremalPoint {
  Vec rep;  // first nonzero coordinate normalized to 1
  ExtremalCertificate cert;
};

struct EnumerateOptions {
  std::int64_t budget = 10'000'000;  // candidate 1-spaces (brute) / orbit size cap
};

/// All extremal 1-spaces by exhaustive sweep over canonical representatives.
/// Finite fields only; fails when (q^dim-1)/(q-1) exceeds the budget, telling
/// the caller to use the orbit method. Works on any bracket table (scaled
/// tables included).
std::vector<ExtremalPoint> enumerate_points_brute(const LieAlgebra& a,
                                                  const EnumerateOptions& opts = {});

/// Closure of the long-root points under exp(lambda ad x_alpha) for every
/// root alpha and lambda in F*. Every returned point re-passes the
/// extremality sweep. Points come back sorted, so the two enumerators are
/// directly comparable.
std::vector<ExtremalPoint> enumerate_points_orbit(const ChevalleyAlgebra& a,
                                                  const EnumerateOptions& opts = {});

/// Relation codes as stored in Geometry::relation; kUnresolved marks
/// noncommuting pairs whose E1/E2 split is unavailable (characteristic 2).
constexpr std::int8_t kRelUnresolved = 9;

struct Geometry {
  std::vector<ExtremalPoint> points;
  std::vector<std::vector<int>> lines;          // sorted point indices, q+1 each
  std::vector<std::vector<std::int8_t>> relation;  // -2..2 (or kRelUnresolved)
  std::vector<std::vector<int>> dist;           // collinearity-graph distance, -1 = unreachable
  std::vector<std::vector<int>> adj;            // E-1 adjacency lists
  std::vector<std::vector<int>> lines_through;  // line indices per point
  bool char2_limited = false;

  int num_points() const { return static_cast<int>(points.size()); }
  int num_lines() const { return static_cast<int>(lines.size()); }
  /// Canonical text form (points, lines, relations); used for bit-identity checks.
  std::string fingerprint() const;
};

struct GeometryOptions {
  std::int64_t pair_budget = 30'000'000;  // classify_pair invocations allowed
};

Geometry build_geometry(const LieAlgebra& a, std::vector<ExtremalPoint> points,
                        const GeometryOptions& opts = {});

struct AxiomReport {
  bool has_lines = false;       // false => reduced report, line checks skipped
  bool partial_linear = false;
  int diameter = -1;
  bool diameter_ok = false;     // <= 3, and == 3 when E2 pairs exist
  bool hyperplane_check = false;
  bool distance_correspondence = false;
  bool polarized = false;
  int embedding_radical_dim = -1;
  bool embedding_radical_matches = false;  // equals rad(g) as subspaces
  int rank = 0;
  int e2_components = 0;
  int num_points = 0;
  int num_lines = 0;
  std::string witness;  // first failing check
  bool all_pass() const;
};

struct AxiomOptions {
  std::int64_t rank_budget = 1'000'000;  // extension steps in the rank search
};

/// `gram` enables the embedding-radical comparison against rad(g); pass
/// nullptr to skip it (characteristic 2, or no form available).
AxiomReport axiom_report(const Geometry& g, const LieAlgebra& a, const Matrix* gram = nullptr,
                         const AxiomOptions& opts = {});

/// Verifies the long-root points land in one connected component of the
/// (E,E2) graph, growing the vertex set with exp-images as needed.
/// Returns the number of components holding long-root points (1 = pass).
int long_root_e2_components(const ChevalleyAlgebra& a, int max_rounds = 3,
                            std::int64_t vertex_budget = 20'000);

}  // namespace chevex
