#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chevex/field.hpp"

using namespace chevex;

TEST_CASE("prime field construction") {
  Field f5 = Field::prime(5);
  CHECK(f5.is_prime_field());
  CHECK(f5.characteristic() == 5);

  Field q = Field::rationals();
  CHECK(q.is_rationals());
  CHECK(q.characteristic() == 0);

  CHECK_THROWS_WITH_AS(Field::prime(6), doctest::Contains("6 = 2·3"), FieldError);
  CHECK_THROWS_AS(Field::prime(1), FieldError);
  CHECK_THROWS_AS(Field::prime(91), FieldError);  // 7*13
  CHECK_NOTHROW(Field::prime(2));
  CHECK_NOTHROW(Field::prime(7));
}

TEST_CASE("residues are canonical") {
  Field f7 = Field::prime(7);
  CHECK(f7.from_int(-3) == f7.from_int(4));
  CHECK(f7.from_int(14).is_zero());
  CHECK(f7.from_int(8).is_one());
  CHECK(f7.from_int(3).str() == "3");
}

TEST_CASE("rational canonical form") {
  Field q = Field::rationals();
  Scalar a = q.from_int(2) / q.from_int(-4);
  CHECK(a.str() == "-1/2");
  CHECK(a == q.from_int(-1) / q.from_int(2));
  // canonicalization is idempotent: re-canonicalizing does not change anything
  Scalar b = a * q.one();
  CHECK(b.str() == a.str());
}

static void check_field_axioms(Field f, const std::vector<Scalar>& elems) {
  for (const Scalar& a : elems)
    for (const Scalar& b : elems)
      for (const Scalar& c : elems) {
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
      }
  for (const Scalar& a : elems) {
    CHECK(a + f.zero() == a);
    CHECK(a * f.one() == a);
    CHECK((a - a).is_zero());
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == f.one());
      CHECK((f.one() / a) * a == f.one());
    }
  }
}

TEST_CASE("field axioms exhaustive for p <= 7") {
  for (std::int64_t p : {2, 3, 5, 7}) {
    Field f = Field::prime(p);
    std::vector<Scalar> all;
    for (std::int64_t v = 0; v < p; ++v) all.push_back(f.from_int(v));
    check_field_axioms(f, all);
  }
}

TEST_CASE("field axioms on random rational triples") {
  Field q = Field::rationals();
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> num(-30, 30), den(1, 12);
  std::vector<Scalar> elems;
  for (int i = 0; i < 12; ++i) elems.push_back(q.from_int(num(rng)) / q.from_int(den(rng)));
  check_field_axioms(q, elems);
}

TEST_CASE("division by zero rejected") {
  Field f3 = Field::prime(3);
  CHECK_THROWS_AS(f3.one() / f3.zero(), FieldError);
  CHECK_THROWS_AS(Field::rationals().zero().inverse(), FieldError);
}

TEST_CASE("cross-field arithmetic rejected") {
  CHECK_THROWS_AS(Field::prime(3).one() + Field::prime(5).one(), FieldError);
  CHECK_THROWS_AS(Field::rationals().one() * Field::prime(2).one(), FieldError);
}
