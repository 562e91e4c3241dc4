#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chevex/linalg.hpp"

using namespace chevex;

namespace {

Matrix from_ints(Field f, const std::vector<std::vector<std::int64_t>>& rows) {
  Matrix m(f, static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = f.from_int(rows[i][j]);
  return m;
}

}  // namespace

TEST_CASE("identity over F3 has full rank and empty nullspace") {
  Field f3 = Field::prime(3);
  auto rn = mat_rank_nullspace(Matrix::identity(f3, 3));
  CHECK(rn.rank == 3);
  CHECK(rn.nullspace.empty());
}

TEST_CASE("zero 2x2 has rank 0 and 2-dimensional nullspace") {
  auto rn = mat_rank_nullspace(Matrix(Field::rationals(), 2, 2));
  CHECK(rn.rank == 0);
  CHECK(rn.nullspace.size() == 2);
}

TEST_CASE("dependent rows over Q") {
  Field q = Field::rationals();
  Matrix m = from_ints(q, {{1, 2}, {2, 4}});
  auto rn = mat_rank_nullspace(m);
  CHECK(rn.rank == 1);
  REQUIRE(rn.nullspace.size() == 1);
  // nullspace spanned by (-2, 1)
  Vec v = rn.nullspace[0];
  Vec expected(q, {q.from_int(-2), q.from_int(1)});
  CHECK(v == expected);
  CHECK(m.apply(v).is_zero());
}

TEST_CASE("rank-nullity on random matrices") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> entry(-4, 4), shape(1, 7);
  for (std::int64_t p : {0, 2, 3, 5, 7}) {
    Field f = p == 0 ? Field::rationals() : Field::prime(p);
    for (int trial = 0; trial < 25; ++trial) {
      int r = shape(rng), c = shape(rng);
      Matrix m(f, r, c);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = f.from_int(entry(rng));
      auto rn = mat_rank_nullspace(m);
      CHECK(rn.rank + static_cast<int>(rn.nullspace.size()) == c);
      for (const Vec& v : rn.nullspace) {
        CHECK(m.apply(v).is_zero());
        CHECK(!v.is_zero());
      }
      // nullspace vectors are independent by construction (distinct free columns)
      RowSpan span(f, c);
      for (const Vec& v : rn.nullspace) CHECK(span.insert(v));
    }
  }
}

TEST_CASE("solve finds exact solutions and detects inconsistency") {
  Field f5 = Field::prime(5);
  Matrix m = from_ints(f5, {{1, 2}, {3, 4}});
  Vec b(f5, {f5.from_int(1), f5.from_int(2)});
  auto x = solve(m, b);
  REQUIRE(x.has_value());
  CHECK(m.apply(*x) == b);

  Matrix sing = from_ints(f5, {{1, 2}, {2, 4}});
  Vec bad(f5, {f5.from_int(1), f5.from_int(3)});
  CHECK(!solve(sing, bad).has_value());
  Vec good(f5, {f5.from_int(1), f5.from_int(2)});
  auto y = solve(sing, good);
  REQUIRE(y.has_value());
  CHECK(sing.apply(*y) == good);
}

TEST_CASE("row span reduce and contains") {
  Field q = Field::rationals();
  RowSpan span(q, 3);
  CHECK(span.insert(Vec(q, {q.from_int(1), q.from_int(1), q.from_int(0)})));
  CHECK(span.insert(Vec(q, {q.from_int(0), q.from_int(1), q.from_int(1)})));
  CHECK(!span.insert(Vec(q, {q.from_int(1), q.from_int(2), q.from_int(1)})));
  CHECK(span.rank() == 2);
  CHECK(span.contains(Vec(q, {q.from_int(2), q.from_int(3), q.from_int(1)})));
  CHECK(!span.contains(Vec(q, {q.from_int(0), q.from_int(0), q.from_int(1)})));
}

TEST_CASE("canonical point representative") {
  Field f5 = Field::prime(5);
  Vec v(f5, {f5.zero(), f5.from_int(2), f5.from_int(3)});
  Vec c = v.canonical_point();
  CHECK(c[0].is_zero());
  CHECK(c[1].is_one());
  CHECK(c[2] == f5.from_int(4));  // 3 * inverse(2) = 3*3 = 9 = 4
}
