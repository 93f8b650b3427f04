#include "prym/cylinder.hpp"

#include "doctest.h"
#include "fixtures.hpp"
#include "prym/eigenform.hpp"
#include "prym/threetori.hpp"

using namespace prym;
using namespace prym::fixtures;

namespace {

std::vector<std::pair<QuadNum, QuadNum>> wh_table(const std::vector<Cylinder>& cyls) {
  std::vector<std::pair<QuadNum, QuadNum>> out;
  for (const auto& c : cyls) out.push_back({c.width, c.height});
  return out;
}

}  // namespace

TEST_CASE("square torus horizontal decomposition") {
  auto t = square_torus();
  auto cyls = cylinder_decomposition(t, Vec2(1, 0));
  REQUIRE(cyls.size() == 1);
  CHECK(cyls[0].width == QuadNum(1));
  CHECK(cyls[0].height == QuadNum(1));
}

TEST_CASE("prototype cylinder tables") {
  SUBCASE("S_(2,2)(1,1,1): (2,2),(1,1),(1,1)") {
    auto ps = build_prototype_surface(Prototype(Kappa::odd22, 1, 1, 1));
    auto cyls = cylinder_decomposition(ps.surface, Vec2(1, 0));
    REQUIRE(cyls.size() == 3);
    auto t = wh_table(cyls);
    CHECK(t[0] == std::pair(QuadNum(1), QuadNum(1)));
    CHECK(t[1] == std::pair(QuadNum(1), QuadNum(1)));
    CHECK(t[2] == std::pair(QuadNum(2), QuadNum(2)));
  }
  SUBCASE("S_(2,2)(1,1,-1): three unit cylinders") {
    auto ps = build_prototype_surface(Prototype(Kappa::odd22, 1, 1, -1));
    auto cyls = cylinder_decomposition(ps.surface, Vec2(1, 0));
    REQUIRE(cyls.size() == 3);
    for (const auto& c : cyls) {
      CHECK(c.width == QuadNum(1));
      CHECK(c.height == QuadNum(1));
    }
  }
  SUBCASE("S_(2,2)(1,2,0): h0 = h1, l0 = 2 l1") {
    auto ps = build_prototype_surface(Prototype(Kappa::odd22, 1, 2, 0));
    auto cyls = cylinder_decomposition(ps.surface, Vec2(1, 0));
    REQUIRE(cyls.size() == 3);
    auto t = wh_table(cyls);
    CHECK(t[0] == std::pair(QuadNum(1), QuadNum(2)));
    CHECK(t[1] == std::pair(QuadNum(1), QuadNum(2)));
    CHECK(t[2] == std::pair(QuadNum(2), QuadNum(2)));
  }
  SUBCASE("S_(2,2)(2,1,0): h0 = 2 h1, l0 = l1") {
    auto ps = build_prototype_surface(Prototype(Kappa::odd22, 2, 1, 0));
    auto cyls = cylinder_decomposition(ps.surface, Vec2(1, 0));
    REQUIRE(cyls.size() == 3);
    auto t = wh_table(cyls);
    CHECK(t[0] == std::pair(QuadNum(2), QuadNum(1)));
    CHECK(t[1] == std::pair(QuadNum(2), QuadNum(1)));
    CHECK(t[2] == std::pair(QuadNum(2), QuadNum(2)));
  }
}

TEST_CASE("cylinder area identity on assorted fixtures and directions") {
  auto ps = build_prototype_surface(Prototype(Kappa::h112, 1, 1, 2));
  for (Vec2 dir : {Vec2(1, 0), Vec2(0, 1), Vec2(1, 1)}) {
    auto cyls = cylinder_decomposition(ps.surface, dir);
    QuadNum total(0);
    for (const auto& c : cyls) total += QuadNum(2) * c.width * c.height;
    // widths/heights live in the frame scaled by |dir|^2 under the rotation
    QuadNum scale = dir.norm2();
    CHECK(total == scale * ps.surface.area2());
  }
}

TEST_CASE("vertical decomposition of a rectangle torus") {
  auto t = rect_torus(QuadNum(3), QuadNum(2));
  auto cyls = cylinder_decomposition(t, Vec2(0, 1));
  REQUIRE(cyls.size() == 1);
  CHECK(cyls[0].width == QuadNum(2));
  CHECK(cyls[0].height == QuadNum(3));
}

TEST_CASE("irrational slope on the square torus is not periodic within budget") {
  auto t = square_torus();
  Vec2 dir(QuadNum(1), QuadNum(Rat(0), Rat(1, 2), 8));  // slope sqrt(2)
  CHECK_THROWS_WITH_AS(cylinder_decomposition(t, dir),
                       doctest::Contains("NotPeriodicWithinBudget"), Error);
}

TEST_CASE("three-tori decomposition of prototype surfaces") {
  for (auto kappa : {Kappa::odd22, Kappa::h112}) {
    for (const auto& p : {Prototype(kappa, 1, 1, 1), Prototype(kappa, 1, 2, 0),
                          Prototype(kappa, 2, 1, -1)}) {
      CAPTURE(p.str());
      auto ps = build_prototype_surface(p);
      auto dec = three_tori_decomposition(ps.surface, ps.tau);
      REQUIRE(dec.has_value());
      QuadNum lam = lambda_value(p);
      // fixed torus is lambda x lambda, the exchanged pair w x h
      CHECK(dec->areas2[0] == QuadNum(2) * lam * lam);
      CHECK(dec->areas2[1] == QuadNum(2 * p.w * p.h));
      CHECK(dec->areas2[2] == QuadNum(2 * p.w * p.h));
      REQUIRE(dec->tori[0].size() == 2);
      CHECK(cross(dec->tori[0][0], dec->tori[0][1]) == lam * lam);
      CHECK(cross(dec->tori[1][0], dec->tori[1][1]) == QuadNum(p.w * p.h));
    }
  }
}

TEST_CASE("three-tori slits are pairwise homologous") {
  auto ps = build_prototype_surface(Prototype(Kappa::odd22, 1, 2, 1));
  auto dec = three_tori_decomposition(ps.surface, ps.tau);
  REQUIRE(dec.has_value());
  REQUIRE(dec->slits.size() == 3);
  H1Data h = h1_basis(ps.surface);
  for (size_t i = 0; i + 1 < dec->slits.size(); ++i) {
    Chain a = connection_chain(ps.surface, dec->slits[i]);
    Chain b = connection_chain(ps.surface, dec->slits[i + 1]);
    Chain diff = a;
    for (const auto& [e, k] : b) {
      diff[e] -= k;
      if (diff[e] == 0) diff.erase(e);
    }
    CHECK(chain_is_cycle(ps.surface.cells(), diff));
    ZVec coords = cycle_coordinates(h, diff);
    for (const auto& c : coords) CHECK(c == 0);
  }
}

TEST_CASE("wrong stratum yields no three-tori decomposition") {
  auto t = square_torus();
  auto anti = translation_automorphisms(t, -1);
  REQUIRE(!anti.empty());
  CHECK(!three_tori_decomposition(t, anti[0]).has_value());
}
