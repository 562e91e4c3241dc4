#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chevex/field.hpp"

namespace chevex {

/// Dense vector over a fixed field. All entries stay canonical.
class Vec {
 public:
  Vec() : field_(Field::rationals()) {}
  Vec(Field f, int n) : field_(f), coords_(n, f.zero()) {}
  Vec(Field f, std::vector<Scalar> coords) : field_(f), coords_(std::move(coords)) {}

  const Field& field() const { return field_; }
  int size() const { return static_cast<int>(coords_.size()); }
  const Scalar& operator[](int i) const { return coords_[i]; }
  Scalar& operator[](int i) { return coords_[i]; }
  const std::vector<Scalar>& coords() const { return coords_; }

  bool is_zero() const;
  Vec operator+(const Vec& o) const;
  Vec operator-(const Vec& o) const;
  Vec operator*(const Scalar& c) const;
  Vec operator-() const;
  Vec& operator+=(const Vec& o);
  Vec& add_scaled(const Vec& o, const Scalar& c);
  bool operator==(const Vec& o) const;

  /// Index of the first nonzero coordinate, or -1 if zero.
  int leading_index() const;
  /// Scale so the first nonzero coordinate is 1 (identity on the zero vector).
  Vec canonical_point() const;

  std::string str() const;

 private:
  Field field_;
  std::vector<Scalar> coords_;
};

Scalar dot(const Vec& a, const Vec& b);

/// Dense matrix with exact entries; row-major.
class Matrix {
 public:
  Matrix() : field_(Field::rationals()), rows_(0), cols_(0) {}
  Matrix(Field f, int rows, int cols)
      : field_(f), rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, f.zero()) {}

  static Matrix identity(Field f, int n);
  static Matrix from_rows(Field f, const std::vector<Vec>& rows);

  const Field& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Scalar& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }
  Scalar& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }

  Vec row(int i) const;
  Vec col(int j) const;
  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Vec apply(const Vec& v) const;  // M v
  bool operator==(const Matrix& o) const;

  std::string str() const;

 private:
  Field field_;
  int rows_, cols_;
  std::vector<Scalar> data_;
};

struct RankNullspace {
  int rank = 0;
  std::vector<Vec> nullspace;  // basis, deterministic RREF form
};

/// Exact Gaussian elimination with first-nonzero pivoting.
RankNullspace mat_rank_nullspace(const Matrix& m);

/// One solution of M x = b, or nullopt if inconsistent (free variables set to 0).
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/// Incrementally maintained row space in reduced echelon form.
/// insert() returns true when the vector enlarged the span.
class RowSpan {
 public:
  explicit RowSpan(Field f, int dim) : field_(f), dim_(dim) {}

  bool insert(Vec v);
  bool contains(const Vec& v) const;
  /// Residue of v after reduction against the current rows.
  Vec reduce(Vec v) const;
  int rank() const { return static_cast<int>(rows_.size()); }
  int dim() const { return dim_; }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

 private:
  Field field_;
  int dim_;
  std::vector<Vec> rows_;    // unit leading coefficient, sorted by pivot
  std::vector<int> pivots_;  // pivot column per row
};

}  // namespace chevex
