#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <map>

#include "chevex/roots.hpp"

using namespace chevex;

TEST_CASE("root counts per type") {
  struct Case {
    RootType t;
    int rank, count;
  };
  for (auto [t, rank, count] : {Case{RootType::A, 1, 2}, Case{RootType::A, 2, 6},
                                Case{RootType::A, 4, 20}, Case{RootType::B, 2, 8},
                                Case{RootType::B, 3, 18}, Case{RootType::C, 3, 18},
                                Case{RootType::D, 4, 24}, Case{RootType::G, 2, 12},
                                Case{RootType::F, 4, 48}, Case{RootType::E, 6, 72}}) {
    RootSystem rs(t, rank);
    CHECK(rs.num_roots() == count);
  }
}

TEST_CASE("E7 and E8 sizes") {
  CHECK(RootSystem(RootType::E, 7).num_roots() == 126);
  CHECK(RootSystem(RootType::E, 8).num_roots() == 240);
}

TEST_CASE("unsupported types rejected with a diagnostic") {
  CHECK_THROWS_WITH_AS(parse_root_type("H9"), doctest::Contains("supported types"), FieldError);
  CHECK_THROWS_AS(parse_root_type("D3"), FieldError);
  CHECK_THROWS_AS(parse_root_type("E9"), FieldError);
  CHECK_THROWS_AS(parse_root_type("F5"), FieldError);
  CHECK_THROWS_AS(parse_root_type("x"), FieldError);
  CHECK(parse_root_type("a2") == std::make_pair(RootType::A, 2));
}

TEST_CASE("G2 length classes") {
  RootSystem g2(RootType::G, 2);
  int longs = 0, shorts = 0;
  for (int i = 0; i < g2.num_roots(); ++i) (g2.is_long(i) ? longs : shorts)++;
  CHECK(longs == 6);
  CHECK(shorts == 6);
}

TEST_CASE("reflection closure invariant") {
  for (auto [t, rank] : {std::pair{RootType::A, 3}, {RootType::B, 3}, {RootType::C, 3},
                         {RootType::D, 4}, {RootType::G, 2}, {RootType::F, 4}}) {
    RootSystem rs(t, rank);
    for (int a = 0; a < rs.num_roots(); ++a)
      for (int b = 0; b < rs.num_roots(); ++b) {
        RootCoords refl = rs.root(b);
        int pairing = rs.cartan_pairing(b, a);
        for (int k = 0; k < rs.rank(); ++k) refl[k] -= pairing * rs.root(a)[k];
        CHECK(rs.index_of(refl) >= 0);
      }
  }
}

TEST_CASE("cartan pairing values") {
  RootSystem a2(RootType::A, 2);
  int s0 = a2.simple_root_index(0), s1 = a2.simple_root_index(1);
  CHECK(a2.cartan_pairing(s0, s0) == 2);
  CHECK(a2.cartan_pairing(s0, s1) == -1);
  CHECK(a2.cartan_pairing(s1, s0) == -1);

  RootSystem g2(RootType::G, 2);
  bool saw_three = false;
  for (int a = 0; a < g2.num_roots(); ++a)
    for (int b = 0; b < g2.num_roots(); ++b) {
      int v = g2.cartan_pairing(b, a);
      CHECK(std::abs(v) <= 3);
      if (std::abs(v) == 3) saw_three = true;
    }
  CHECK(saw_three);

  for (int a = 0; a < g2.num_roots(); ++a) CHECK(g2.cartan_pairing(a, a) == 2);
}

TEST_CASE("root set J per type") {
  CHECK(RootSystem(RootType::A, 3).root_set_j() == std::vector<int>{1, 3});
  CHECK(RootSystem(RootType::A, 1).root_set_j() == std::vector<int>{1});
  CHECK(RootSystem(RootType::B, 3).root_set_j() == std::vector<int>{2});
  CHECK(RootSystem(RootType::C, 3).root_set_j() == std::vector<int>{2});
  CHECK(RootSystem(RootType::D, 4).root_set_j() == std::vector<int>{2});
  CHECK(RootSystem(RootType::G, 2).root_set_j() == std::vector<int>{2});
  CHECK(RootSystem(RootType::F, 4).root_set_j() == std::vector<int>{1});
  CHECK(RootSystem(RootType::E, 6).root_set_j() == std::vector<int>{2});
  CHECK(RootSystem(RootType::E, 7).root_set_j() == std::vector<int>{1});
  CHECK(RootSystem(RootType::E, 8).root_set_j() == std::vector<int>{8});
}

TEST_CASE("root strings") {
  RootSystem a2(RootType::A, 2);
  CHECK(a2.root_string_p(a2.simple_root_index(0), a2.simple_root_index(1)) == 0);
  CHECK_THROWS_AS(a2.root_string_p(0, 0), FieldError);

  RootSystem b2(RootType::B, 2);
  // along a long root every string has length <= 2, so p <= 1 and p = 1 occurs
  int maxp = 0;
  for (int a = 0; a < b2.num_roots(); ++a) {
    if (!b2.is_long(a)) continue;
    for (int b = 0; b < b2.num_roots(); ++b) {
      if (b == a || b == b2.negative_of(a)) continue;
      maxp = std::max(maxp, b2.root_string_p(a, b));
    }
  }
  CHECK(maxp == 1);

  // G2: strings of length 4 along a short root (p up to 3)
  RootSystem g2(RootType::G, 2);
  int maxg = 0;
  for (int a = 0; a < g2.num_roots(); ++a) {
    if (g2.is_long(a)) continue;
    for (int b = 0; b < g2.num_roots(); ++b) {
      if (b == a || b == g2.negative_of(a)) continue;
      maxg = std::max(maxg, g2.root_string_p(a, b));
    }
  }
  CHECK(maxg == 3);
}

TEST_CASE("structure constant magnitudes") {
  RootSystem a2(RootType::A, 2);
  StructureTable ta(a2);
  for (int a = 0; a < a2.num_roots(); ++a)
    for (int b = 0; b < a2.num_roots(); ++b) {
      long n = ta.n(a, b);
      if (n != 0) CHECK(std::abs(n) == 1);
    }

  RootSystem g2(RootType::G, 2);
  StructureTable tg(g2);
  bool saw2 = false, saw3 = false;
  for (int a = 0; a < g2.num_roots(); ++a)
    for (int b = 0; b < g2.num_roots(); ++b) {
      long n = tg.n(a, b);
      if (std::abs(n) == 2) saw2 = true;
      if (std::abs(n) == 3) saw3 = true;
    }
  CHECK(saw2);
  CHECK(saw3);
}

TEST_CASE("structure constant symmetries") {
  for (auto [t, rank] : {std::pair{RootType::A, 3}, {RootType::B, 3}, {RootType::G, 2},
                         {RootType::C, 3}, {RootType::D, 4}}) {
    RootSystem rs(t, rank);
    StructureTable st(rs);
    for (int a = 0; a < rs.num_roots(); ++a)
      for (int b = 0; b < rs.num_roots(); ++b) {
        CHECK(st.n(b, a) == -st.n(a, b));
        CHECK(std::abs(st.n(rs.negative_of(a), rs.negative_of(b))) == std::abs(st.n(a, b)));
        long n = st.n(a, b);
        if (n != 0 && b != rs.negative_of(a) && a != b)
          CHECK(std::abs(n) == rs.root_string_p(a, b) + 1);
      }
  }
}

TEST_CASE("extraspecial pairs carry positive sign") {
  // height-2 roots decompose uniquely into two simple roots; those pairs are
  // extraspecial, so their constants are +(p+1) > 0
  RootSystem b3(RootType::B, 3);
  StructureTable st(b3);
  for (int g = 0; g < b3.num_positive(); ++g) {
    if (b3.height(g) != 2) continue;
    for (int a = 0; a < b3.num_positive(); ++a) {
      if (b3.height(a) != 1) continue;
      RootCoords diff = b3.root(g);
      for (int k = 0; k < b3.rank(); ++k) diff[k] -= b3.root(a)[k];
      int b = b3.index_of(diff);
      if (b >= 0 && b3.is_positive(b) && a < b) CHECK(st.n(a, b) > 0);
    }
  }
}
