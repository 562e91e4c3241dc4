#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chevex/chevalley.hpp"

using namespace chevex;

namespace {

Vec random_element(const LieAlgebra& a, std::mt19937& rng) {
  std::uniform_int_distribution<int> entry(-3, 3);
  Vec v = a.zero();
  for (int i = 0; i < a.dim(); ++i) v[i] = a.field().from_int(entry(rng));
  return v;
}

}  // namespace

TEST_CASE("dimensions |Phi| + rank") {
  CHECK(ChevalleyAlgebra(RootType::A, 2, Field::rationals()).dim() == 8);
  CHECK(ChevalleyAlgebra(RootType::G, 2, Field::prime(3)).dim() == 14);
  CHECK(ChevalleyAlgebra(RootType::D, 4, Field::prime(3)).dim() == 28);
  CHECK(ChevalleyAlgebra(RootType::B, 3, Field::prime(5)).dim() == 21);
}

TEST_CASE("Jacobi and anticommutativity over Q: the sign-correctness oracle") {
  for (auto [t, rank] : {std::pair{RootType::A, 1}, {RootType::A, 2}, {RootType::A, 3},
                         {RootType::A, 4}, {RootType::B, 2}, {RootType::B, 3},
                         {RootType::C, 3}, {RootType::D, 4}, {RootType::G, 2},
                         {RootType::F, 4}}) {
    ChevalleyAlgebra a(t, rank, Field::rationals());
    std::string witness;
    CHECK_MESSAGE(a.lie().check_anticommutative(&witness), a.roots().name(), ": ", witness);
    CHECK_MESSAGE(a.lie().check_jacobi(&witness), a.roots().name(), ": ", witness);
  }
}

TEST_CASE("Jacobi over prime fields") {
  for (std::int64_t p : {2, 3, 5, 7}) {
    for (auto [t, rank] : {std::pair{RootType::B, 3}, {RootType::G, 2}}) {
      ChevalleyAlgebra a(t, rank, Field::prime(p));
      std::string witness;
      CHECK_MESSAGE(a.lie().check_jacobi(&witness), a.roots().name(), "/F", p, ": ", witness);
    }
  }
}

TEST_CASE("E6 constructs and satisfies Jacobi over Q") {
  ChevalleyAlgebra e6(RootType::E, 6, Field::rationals());
  CHECK(e6.dim() == 78);
  std::string witness;
  CHECK_MESSAGE(e6.lie().check_jacobi(&witness), witness);
}

TEST_CASE("bracket rules from the table") {
  ChevalleyAlgebra a(RootType::A, 2, Field::prime(5));
  const RootSystem& rs = a.roots();
  int alpha = rs.simple_root_index(0);
  int nalpha = rs.negative_of(alpha);

  // [x_alpha, x_{-alpha}] = h_alpha
  Vec h = a.lie().bracket(a.x(alpha), a.x(nalpha));
  Vec expect = a.h(0);  // coroot of a simple root is the matching h
  CHECK(h == expect);

  // [h_alpha, x_alpha] = 2 x_alpha
  Vec two_x = a.lie().bracket(a.h(0), a.x(alpha));
  CHECK(two_x == a.x(alpha) * a.field().from_int(2));

  // [u, u] = 0 for random u
  std::mt19937 rng(7);
  for (int i = 0; i < 20; ++i) {
    Vec u = random_element(a.lie(), rng);
    CHECK(a.lie().bracket(u, u).is_zero());
  }
}

TEST_CASE("h_{-alpha} = -h_alpha through antisymmetry") {
  ChevalleyAlgebra a(RootType::B, 2, Field::rationals());
  const RootSystem& rs = a.roots();
  for (int r = 0; r < rs.num_roots(); ++r) {
    int nr = rs.negative_of(r);
    Vec h1 = a.lie().bracket(a.x(r), a.x(nr));
    Vec h2 = a.lie().bracket(a.x(nr), a.x(r));
    CHECK(h1 == -h2);
  }
}

TEST_CASE("ad matrices") {
  ChevalleyAlgebra a(RootType::A, 2, Field::prime(5));
  // ad(0) = 0
  Matrix z = a.lie().ad(a.lie().zero());
  CHECK(z == Matrix(a.field(), a.dim(), a.dim()));

  // ad(h_1) is diagonal on the root-vector basis
  Matrix adh = a.lie().ad(a.h(0));
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (i != j) CHECK(adh.at(i, j).is_zero());

  // trace of ad(x_alpha) = 0
  for (int r = 0; r < a.roots().num_roots(); ++r) {
    Matrix adx = a.lie().ad(a.x(r));
    Scalar tr = a.field().zero();
    for (int i = 0; i < a.dim(); ++i) tr += adx.at(i, i);
    CHECK(tr.is_zero());
  }
}

TEST_CASE("ad and bracket agree") {
  ChevalleyAlgebra a(RootType::G, 2, Field::prime(7));
  std::mt19937 rng(11);
  for (int i = 0; i < 10; ++i) {
    Vec u = random_element(a.lie(), rng), v = random_element(a.lie(), rng);
    CHECK(a.lie().ad(u).apply(v) == a.lie().bracket(u, v));
  }
}

TEST_CASE("scaled table is still a Lie algebra and scales the bracket") {
  ChevalleyAlgebra a(RootType::A, 2, Field::prime(5));
  Scalar three = a.field().from_int(3);
  LieAlgebra s = a.lie().scaled(three);
  CHECK(s.check_jacobi());
  std::mt19937 rng(3);
  for (int i = 0; i < 10; ++i) {
    Vec u = random_element(s, rng), v = random_element(s, rng);
    CHECK(s.bracket(u, v) == a.lie().bracket(u, v) * three);
  }
}

TEST_CASE("ideal closure and simplicity") {
  // 1-dimensional abelian algebra: not simple by convention
  LieAlgebra trivial(Field::prime(5), {"z"});
  CHECK(!is_simple(trivial));

  // sl_2 over F_5 is simple
  ChevalleyAlgebra a1(RootType::A, 1, Field::prime(5));
  CHECK(is_simple(a1.lie()));

  // sl_3 over F_3 has a center: not simple
  ChevalleyAlgebra a2(RootType::A, 2, Field::prime(3));
  CHECK(!is_simple(a2.lie()));
  // the center is h_1 + 2 h_2
  Vec center = a2.h(0) + a2.h(1) * a2.field().from_int(2);
  RowSpan closure = ideal_closure(a2.lie(), center);
  CHECK(closure.rank() == 1);

  // sl_3 over F_5 is simple
  CHECK(is_simple(ChevalleyAlgebra(RootType::A, 2, Field::prime(5)).lie()));
}

TEST_CASE("quotient by an ideal") {
  ChevalleyAlgebra a2(RootType::A, 2, Field::prime(3));
  Vec center = a2.h(0) + a2.h(1) * a2.field().from_int(2);
  LieAlgebra q = quotient_by_ideal(a2.lie(), {center});
  CHECK(q.dim() == 7);
  CHECK(q.check_jacobi());
  CHECK(q.check_anticommutative());
  CHECK(is_simple(q));

  // non-ideals are rejected
  CHECK_THROWS_AS(quotient_by_ideal(a2.lie(), {a2.h(0)}), std::logic_error);
}

TEST_CASE("unipotent root exponentials are automorphisms for every root") {
  for (std::int64_t p : {0, 3, 5}) {
    Field f = p == 0 ? Field::rationals() : Field::prime(p);
    ChevalleyAlgebra a(RootType::G, 2, f);
    std::mt19937 rng(17);
    for (int r = 0; r < a.roots().num_roots(); ++r) {
      Matrix e = a.root_exp(r, f.from_int(1));
      for (int i = 0; i < 3; ++i) {
        Vec u = random_element(a.lie(), rng), v = random_element(a.lie(), rng);
        CHECK(e.apply(a.lie().bracket(u, v)) == a.lie().bracket(e.apply(u), e.apply(v)));
      }
    }
  }
}
