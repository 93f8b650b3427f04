#include "prym/eigenform.hpp"

#include "doctest.h"

using namespace prym;

namespace {

PrototypeSurface make(Kappa k, long w, long h, long e) {
  return build_prototype_surface(Prototype(k, w, h, e));
}

}  // namespace

TEST_CASE("S_(2,2)(1,1,1) is a valid genus-3 surface in H(2,2)^odd") {
  auto ps = make(Kappa::odd22, 1, 1, 1);
  CHECK(ps.surface.genus() == 3);
  CHECK(ps.surface.stratum_orders() == std::vector<int>{2, 2});
  CHECK(compute_stratum(ps.surface).tag == Stratum::Tag::odd);
  CHECK(count_fixed_points(ps.surface, ps.tau) == 4);
  int P = ps.surface.vertex_named("P"), Q = ps.surface.vertex_named("Q");
  CHECK(ps.tau.vertex_map[P] == Q);
}

TEST_CASE("S_(1,1,2)(1,1,0) lands in H(1,1,2) with tau fixing the double zero") {
  auto ps = make(Kappa::h112, 1, 1, 0);
  CHECK(ps.surface.genus() == 3);
  CHECK(ps.surface.stratum_orders() == std::vector<int>{2, 1, 1});
  int Q = ps.surface.vertex_named("Q");
  CHECK(ps.surface.vertex_orders()[Q] == 2);
  CHECK(ps.tau.vertex_map[Q] == Q);
  CHECK(count_fixed_points(ps.surface, ps.tau) == 4);
}

TEST_CASE("slit out of range") {
  Prototype p(Kappa::odd22, 1, 1, 1);
  CHECK_THROWS_WITH_AS(build_prototype_surface(p, QuadNum(3)),
                       doctest::Contains("SlitOutOfRange"), Error);
  Prototype q(Kappa::h112, 1, 1, 0);
  // lambda = sqrt(2): slit must satisfy 2 slit < lambda, and 2*(3/4) > sqrt(2)
  CHECK_THROWS_WITH_AS(build_prototype_surface(q, QuadNum(Rat(3, 4))),
                       doctest::Contains("SlitOutOfRange"), Error);
}

TEST_CASE("anti-invariant lattice has divisors (1,2) and the periods verify RM") {
  for (auto kappa : {Kappa::odd22, Kappa::h112}) {
    for (long D : {8L, 9L, 12L, 16L, 17L}) {
      for (const auto& p : enumerate_prototypes(D, kappa)) {
        CAPTURE(p.str());
        auto ps = build_prototype_surface(p);
        H1Data h = h1_basis(ps.surface);
        CHECK(h.dim == 6);
        PrymLattice lat = anti_invariant_lattice(ps.surface, h, ps.tau);
        CHECK(zmat_equal(lat.gram, prym_polarization()));
        RmGenerator gen = adapted_generator(ps.surface, lat, p);
        auto rep = verify_real_multiplication(ps.surface, lat, gen, D);
        CHECK(rep.pass());
        CHECK(rep.recomputed_e == p.e);
        CHECK(rep.recomputed_c == 2 * p.w * p.h);
      }
    }
  }
}

TEST_CASE("verification failure modes") {
  auto p = Prototype(Kappa::odd22, 1, 2, 1);
  auto ps = build_prototype_surface(p);
  H1Data h = h1_basis(ps.surface);
  PrymLattice lat = anti_invariant_lattice(ps.surface, h, ps.tau);
  RmGenerator gen = adapted_generator(ps.surface, lat, p);

  SUBCASE("T + Id with e kept is caught through the recomputed polynomial") {
    RmGenerator shifted = gen;
    for (int i = 0; i < 4; ++i) shifted.matrix[i][i] += 1;
    auto rep = verify_real_multiplication(ps.surface, lat, shifted, p.disc());
    CHECK(!rep.pass());
    CHECK(rep.failure() == Err::WrongDiscriminant);
    CHECK(rep.eigenform_ok);  // the shifted matrix is an eigenform for its own lambda
    CHECK(rep.disc_ok);       // shift leaves the discriminant fixed
    // adjusting e (and c) passes: O_D is shift stable
    RmGenerator adjusted = shifted;
    adjusted.e = gen.e + 2;
    adjusted.c = gen.c - gen.e - 1;
    CHECK(verify_real_multiplication(ps.surface, lat, adjusted, p.disc()).pass());
  }

  SUBCASE("transposed generator is not an eigenform") {
    RmGenerator t = gen;
    t.matrix = zmat_transpose(gen.matrix);
    auto rep = verify_real_multiplication(ps.surface, lat, t, p.disc());
    CHECK(!rep.pass());
    CHECK(rep.failure() == Err::NotEigenform);
  }
}

TEST_CASE("involution census") {
  SUBCASE("S_(2,2)(1,1,-1) has three Prym involutions") {
    auto ps = make(Kappa::odd22, 1, 1, -1);
    auto invs = find_prym_involutions(ps.surface);
    CHECK(invs.size() == 3);
  }
  SUBCASE("S_(2,2)(1,1,1) has one") {
    auto ps = make(Kappa::odd22, 1, 1, 1);
    CHECK(find_prym_involutions(ps.surface).size() == 1);
  }
  SUBCASE("(1,1,2) prototypes have exactly one") {
    for (long D : {8L, 9L, 12L, 16L, 17L})
      for (const auto& p : enumerate_prototypes(D, Kappa::h112)) {
        CAPTURE(p.str());
        auto ps = build_prototype_surface(p);
        CHECK(find_prym_involutions(ps.surface).size() == 1);
      }
  }
}

TEST_CASE("constructor tau is reproduced by the census") {
  for (auto kappa : {Kappa::odd22, Kappa::h112}) {
    auto ps = build_prototype_surface(Prototype(kappa, 2, 1, 1));
    auto invs = find_prym_involutions(ps.surface);
    bool found = false;
    for (const auto& f : invs)
      if (f == ps.tau) found = true;
    CHECK(found);
  }
}

TEST_CASE("slit independence of the verification data") {
  Prototype p(Kappa::odd22, 1, 2, 0);
  for (Rat s : {Rat(1, 4), Rat(1, 2), Rat(3, 4)}) {
    auto ps = build_prototype_surface(p, QuadNum(s));
    H1Data h = h1_basis(ps.surface);
    PrymLattice lat = anti_invariant_lattice(ps.surface, h, ps.tau);
    RmGenerator gen = adapted_generator(ps.surface, lat, p);
    CHECK(verify_real_multiplication(ps.surface, lat, gen, p.disc()).pass());
  }
}
