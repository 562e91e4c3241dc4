#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chevex/geometry.hpp"
#include "chevex/models.hpp"

using namespace chevex;

TEST_CASE("A2/F3: 52 points from both enumerators") {
  ChevalleyAlgebra a(RootType::A, 2, Field::prime(3));
  auto brute = enumerate_points_brute(a.lie());
  auto orbit = enumerate_points_orbit(a);
  CHECK(brute.size() == 52);
  REQUIRE(brute.size() == orbit.size());
  for (size_t i = 0; i < brute.size(); ++i) CHECK(brute[i].rep == orbit[i].rep);
}

TEST_CASE("A1/F3: four extremal points, no lines, orbit matches brute force") {
  ChevalleyAlgebra a(RootType::A, 1, Field::prime(3));
  auto brute = enumerate_points_brute(a.lie());
  auto orbit = enumerate_points_orbit(a);
  CHECK(brute.size() == 4);  // the projective conic a^2 + bc = 0 in P(sl_2)
  REQUIRE(brute.size() == orbit.size());
  for (size_t i = 0; i < brute.size(); ++i) CHECK(brute[i].rep == orbit[i].rep);

  Geometry g = build_geometry(a.lie(), brute);
  CHECK(g.num_lines() == 0);
  AxiomReport rep = axiom_report(g, a.lie());
  CHECK(!rep.has_lines);  // reduced report
  CHECK(rep.all_pass());
  CHECK(rep.e2_components == 1);
}

TEST_CASE("brute enumeration budget and infinite fields") {
  ChevalleyAlgebra aq(RootType::A, 2, Field::rationals());
  CHECK_THROWS_WITH_AS(enumerate_points_brute(aq.lie()), doctest::Contains("orbit"), FieldError);
  ChevalleyAlgebra a3(RootType::A, 2, Field::prime(3));
  EnumerateOptions tiny;
  tiny.budget = 10;
  CHECK_THROWS_WITH_AS(enumerate_points_brute(a3.lie(), tiny), doctest::Contains("budget"),
                       FieldError);
}

TEST_CASE("A2/F3 geometry and the full axiom report") {
  ChevalleyAlgebra a(RootType::A, 2, Field::prime(3));
  Geometry g = build_geometry(a.lie(), enumerate_points_brute(a.lie()));
  CHECK(g.num_points() == 52);
  CHECK(g.num_lines() == 26);
  for (const auto& line : g.lines) CHECK(line.size() == 4);
  for (int p = 0; p < g.num_points(); ++p) CHECK(g.lines_through[p].size() == 2);

  // every line through a collinear pair contains both members
  for (int i = 0; i < g.num_points(); ++i)
    for (int j : g.adj[i]) {
      bool found = false;
      for (int li : g.lines_through[i])
        if (std::find(g.lines[li].begin(), g.lines[li].end(), j) != g.lines[li].end())
          found = true;
      CHECK(found);
    }

  // relation matrix symmetric with E-2 diagonal
  for (int i = 0; i < g.num_points(); ++i) {
    CHECK(g.relation[i][i] == -2);
    for (int j = 0; j < g.num_points(); ++j) CHECK(g.relation[i][j] == g.relation[j][i]);
  }

  GramForm form = extremal_gram(a);
  AxiomReport rep = axiom_report(g, a.lie(), &form.gram);
  CHECK(rep.has_lines);
  CHECK(rep.partial_linear);
  CHECK(rep.diameter == 3);
  CHECK(rep.diameter_ok);
  CHECK(rep.hyperplane_check);
  CHECK(rep.distance_correspondence);
  CHECK(rep.polarized);
  CHECK(rep.embedding_radical_dim == 1);  // equals dim rad(g) for A2/F3
  CHECK(rep.embedding_radical_matches);
  CHECK(rep.rank == 2);
  CHECK(rep.e2_components == 1);
  CHECK(rep.all_pass());
}

TEST_CASE("line points are pairwise collinear and extremal post hoc") {
  ChevalleyAlgebra a(RootType::A, 2, Field::prime(3));
  Geometry g = build_geometry(a.lie(), enumerate_points_brute(a.lie()));
  for (const auto& line : g.lines)
    for (size_t s = 0; s < line.size(); ++s)
      for (size_t t = s + 1; t < line.size(); ++t)
        CHECK(g.relation[line[s]][line[t]] == -1);
}

TEST_CASE("scaling the product leaves the geometry bit-identical") {
  ChevalleyAlgebra a(RootType::A, 2, Field::prime(5));
  Geometry base = build_geometry(a.lie(), enumerate_points_brute(a.lie()));
  CHECK(base.num_points() == 186);  // flags of PG(2,5): 31*6
  std::string fp = base.fingerprint();
  for (std::int64_t l : {2, 3, 4}) {
    LieAlgebra scaled = a.lie().scaled(a.field().from_int(l));
    Geometry gs = build_geometry(scaled, enumerate_points_brute(scaled));
    CHECK(gs.fingerprint() == fp);
  }
}

TEST_CASE("B2/F3: forty points and no lines (symplectic-type geometry)") {
  ChevalleyAlgebra a(RootType::B, 2, Field::prime(3));
  auto pts = enumerate_points_brute(a.lie());
  auto orbit = enumerate_points_orbit(a);
  REQUIRE(pts.size() == orbit.size());
  for (size_t i = 0; i < pts.size(); ++i) CHECK(pts[i].rep == orbit[i].rep);
  CHECK(pts.size() == 40);  // lines of the generalized quadrangle Q(4,3)
  Geometry g = build_geometry(a.lie(), pts);
  CHECK(g.num_lines() == 0);
}

TEST_CASE("B3/F3 orbit count equals the isotropic 2-space count") {
  ChevalleyAlgebra a(RootType::B, 3, Field::prime(3));
  auto pts = enumerate_points_orbit(a);
  auto spaces = enumerate_isotropic_2spaces(7, Field::prime(3), true);
  CHECK(pts.size() == spaces.size());
  CHECK(pts.size() == 3640);
}

TEST_CASE("char-2 geometry: lines still build, E1/E2 flagged unresolved") {
  ChevalleyAlgebra a(RootType::A, 2, Field::prime(2));
  auto pts = enumerate_points_brute(a.lie());
  CHECK(pts.size() == 21);  // flags of PG(2,2): 7*3
  Geometry g = build_geometry(a.lie(), pts);
  CHECK(g.char2_limited);
  CHECK(g.num_lines() == 14);
  for (const auto& line : g.lines) CHECK(line.size() == 3);
}

TEST_CASE("long-root E2 connectivity across all desk types") {
  for (auto [t, rank] : {std::pair{RootType::A, 1}, {RootType::A, 2}, {RootType::A, 3},
                         {RootType::B, 2}, {RootType::B, 3}, {RootType::C, 3},
                         {RootType::D, 4}, {RootType::G, 2}}) {
    for (std::int64_t p : {3, 5}) {
      ChevalleyAlgebra a(t, rank, Field::prime(p));
      CHECK_MESSAGE(long_root_e2_components(a) == 1, a.roots().name(), "/F", p);
    }
  }
}
