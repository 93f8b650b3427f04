#include "prym/surface.hpp"

#include "doctest.h"
#include "fixtures.hpp"
#include "prym/canonical.hpp"

#include <random>

using namespace prym;
using namespace prym::fixtures;

TEST_CASE("unit square torus") {
  auto t = square_torus();
  CHECK(t.genus() == 1);
  CHECK(t.stratum_orders().empty());
  CHECK(t.vertex_count() == 1);
  CHECK(t.area2() == QuadNum(2));
  CHECK(t.complex().euler_characteristic() == 0);
}

TEST_CASE("mismatched gluing is rejected") {
  std::vector<std::vector<Vec2>> polys = {{Vec2(1, 0), Vec2(0, 1), Vec2(-1, 0), Vec2(0, -1)}};
  TranslationSurface::Gluing glue = {{{0, 0}, {0, 3}}, {{0, 1}, {0, 2}}};
  CHECK_THROWS_WITH_AS(TranslationSurface::build(polys, glue),
                       doctest::Contains("MismatchedEdge"), Error);
}

TEST_CASE("non-simple polygon is rejected") {
  // bowtie: crosses itself
  std::vector<std::vector<Vec2>> polys = {
      {Vec2(2, 0), Vec2(-2, 1), Vec2(2, 0), Vec2(-2, -1)}};
  TranslationSurface::Gluing glue = {{{0, 0}, {0, 2}}, {{0, 1}, {0, 3}}};
  CHECK_THROWS_AS(TranslationSurface::build(polys, glue), Error);
}

TEST_CASE("disconnected input is rejected") {
  std::vector<std::vector<Vec2>> polys = {
      {Vec2(1, 0), Vec2(0, 1), Vec2(-1, 0), Vec2(0, -1)},
      {Vec2(1, 0), Vec2(0, 1), Vec2(-1, 0), Vec2(0, -1)}};
  TranslationSurface::Gluing glue = {{{0, 0}, {0, 2}}, {{0, 1}, {0, 3}},
                                     {{1, 0}, {1, 2}}, {{1, 1}, {1, 3}}};
  CHECK_THROWS_WITH_AS(TranslationSurface::build(polys, glue),
                       doctest::Contains("Disconnected"), Error);
}

TEST_CASE("triangulation of the square torus has two faces") {
  auto t = square_torus();
  PolyComplex tri = t.complex();
  tri.triangulate();
  CHECK(tri.is_triangulated());
  CHECK(tri.num_faces() == 2);
  CHECK(tri.euler_characteristic() == 0);
  CHECK(tri.area2() == QuadNum(2));
  // re-triangulating a triangulation changes nothing
  PolyComplex again = tri;
  again.triangulate();
  CHECK(again.num_faces() == 2);
}

TEST_CASE("euler identity for triangulations") {
  for (auto s : {square_torus(), rect_torus(QuadNum(2), QuadNum(1))}) {
    PolyComplex tri = s.complex();
    tri.triangulate();
    int F = tri.num_faces(), E = tri.num_edges(), V = tri.num_vertices;
    CHECK(3 * F == 2 * E);
    CHECK(V - E + F == 2 - 2 * s.genus());
  }
}

TEST_CASE("delaunay of the square torus merges to one square cell") {
  auto t = square_torus();
  CHECK(t.tri().is_delaunay());
  CHECK(t.cells().num_faces() == 1);
  CHECK(t.cells().face_edges(0).size() == 4);
}

TEST_CASE("obtuse retriangulation flips back to delaunay") {
  // a skewed presentation of the square torus: one long diagonal forced
  std::vector<std::vector<Vec2>> polys = {
      {Vec2(1, 0), Vec2(1, 1), Vec2(-1, 0), Vec2(-1, -1)}};
  TranslationSurface::Gluing glue = {{{0, 0}, {0, 2}}, {{0, 1}, {0, 3}}};
  auto s = TranslationSurface::build(polys, glue);
  CHECK(s.tri().is_delaunay());
  for (int e : s.tri().live_halfedges()) CHECK(s.tri().delaunay_violation(e) <= 0);
  // the surface is the sheared square torus with area 1
  CHECK(s.area2() == QuadNum(2));
}

TEST_CASE("canonical codes separate tori of different moduli") {
  auto a = square_torus();
  auto b = rect_torus(QuadNum(2), QuadNum(1));
  CHECK(a.canonical_code() != b.canonical_code());
  CHECK(a.canonical_code() == square_torus().canonical_code());
}

TEST_CASE("canonical code is relabeling-invariant") {
  // same torus, polygon listed from a different starting edge
  std::vector<std::vector<Vec2>> polys = {{Vec2(0, 1), Vec2(-1, 0), Vec2(0, -1), Vec2(1, 0)}};
  TranslationSurface::Gluing glue = {{{0, 0}, {0, 2}}, {{0, 1}, {0, 3}}};
  auto rotated = TranslationSurface::build(polys, glue);
  CHECK(rotated.canonical_code() == square_torus().canonical_code());
}

TEST_CASE("isomorphism and automorphisms of the square torus") {
  auto t = square_torus();
  auto id = is_isomorphic(t, t);
  REQUIRE(id.has_value());
  auto autos = translation_automorphisms(t, +1);
  CHECK(autos.size() == 1);
  CHECK(is_identity(autos[0]));

  auto anti = translation_automorphisms(t, -1);
  REQUIRE(anti.size() >= 1);
  for (const auto& m : anti) {
    CHECK(is_involution(m));
    CHECK(count_fixed_points(t, m) == 4);
  }
  // composing two anti-automorphisms lands among the +1 automorphisms
  auto sq = compose(anti[0], anti[0]);
  CHECK(is_identity(sq));
}

TEST_CASE("apply_gl2") {
  auto t = square_torus();
  SUBCASE("identity gives an isomorphic surface") {
    auto s = apply_gl2(t, Mat2::identity());
    CHECK(is_isomorphic(s, t).has_value());
  }
  SUBCASE("rotation by 90 degrees is a lattice symmetry") {
    Mat2 rot{QuadNum(0), QuadNum(-1), QuadNum(1), QuadNum(0)};
    CHECK(is_isomorphic(apply_gl2(t, rot), t).has_value());
  }
  SUBCASE("non-positive determinant is rejected") {
    Mat2 flip{QuadNum(1), QuadNum(0), QuadNum(0), QuadNum(-1)};
    CHECK_THROWS_WITH_AS(apply_gl2(t, flip), doctest::Contains("NonPositiveDeterminant"), Error);
  }
  SUBCASE("composition law") {
    Mat2 m1{QuadNum(1), QuadNum(1), QuadNum(0), QuadNum(1)};
    Mat2 m2{QuadNum(2), QuadNum(0), QuadNum(0), QuadNum(1)};
    auto lhs = apply_gl2(apply_gl2(t, m2), m1);
    auto rhs = apply_gl2(t, m1.mul(m2));
    CHECK(is_isomorphic(lhs, rhs).has_value());
  }
  SUBCASE("stratum preserved") {
    Mat2 shear{QuadNum(1), QuadNum(Rat(1, 3)), QuadNum(0), QuadNum(1)};
    CHECK(apply_gl2(t, shear).stratum_orders() == t.stratum_orders());
  }
}

TEST_CASE("delaunay commutes with field rotations") {
  // 3-4-5 rotation has entries in Q
  Mat2 rot{QuadNum(Rat(3, 5)), QuadNum(Rat(-4, 5)), QuadNum(Rat(4, 5)), QuadNum(Rat(3, 5))};
  auto t = rect_torus(QuadNum(2), QuadNum(1));
  auto rt = apply_gl2(t, rot);
  // cells of the rotated surface = rotated cells of the original
  PolyComplex rotated_cells = t.cells().transformed(rot);
  // compare canonical codes of the two cell complexes
  std::string best1, best2;
  for (int e : rt.cells().live_halfedges()) {
    std::string c = traversal_code(rt.cells(), e);
    if (best1.empty() || c < best1) best1 = c;
  }
  for (int e : rotated_cells.live_halfedges()) {
    std::string c = traversal_code(rotated_cells, e);
    if (best2.empty() || c < best2) best2 = c;
  }
  CHECK(best1 == best2);
}
