#include "prym/homology.hpp"

#include "doctest.h"
#include "fixtures.hpp"

using namespace prym;
using namespace prym::fixtures;

namespace {

// the cell half-edge of the square torus with the given vector
int halfedge_with_vec(const PolyComplex& cx, const Vec2& v) {
  for (int e : cx.live_halfedges())
    if (cx.vec(e) == v) return e;
  REQUIRE(false);
  return -1;
}

}  // namespace

TEST_CASE("torus homology and the orientation pin") {
  auto t = square_torus();
  H1Data h = h1_basis(t);
  CHECK(h.dim == 2);
  CHECK(h.gram[0][1] == -h.gram[1][0]);
  CHECK(zmat_det(h.gram) == 1);

  // <horizontal, vertical> = +1 under the crossing convention
  const PolyComplex& cx = t.cells();
  Chain a, b;
  chain_add(cx, a, halfedge_with_vec(cx, Vec2(1, 0)), 1);
  chain_add(cx, b, halfedge_with_vec(cx, Vec2(0, 1)), 1);
  CHECK(chain_is_cycle(cx, a));
  CHECK(chain_is_cycle(cx, b));
  CHECK(intersection(h, a, b) == 1);
  CHECK(intersection(h, b, a) == -1);
  CHECK(intersection(h, a, a) == 0);
}

TEST_CASE("torus symplectic area identity") {
  for (auto t : {square_torus(), rect_torus(QuadNum(3), QuadNum(2))}) {
    H1Data h = h1_basis(t);
    auto nf = skew_normal_form(h.gram);
    REQUIRE(nf.divisors.size() == 1);
    CHECK(nf.divisors[0] == 1);
    // area = sum of cross(hol(alpha_i), hol(beta_i)) over symplectic pairs
    Chain alpha, beta;
    for (int p = 0; p < 2; ++p) {
      for (const auto& [e, k] : h.basis[p]) {
        chain_add(t.cells(), alpha, e, k * nf.basis[p][0]);
        chain_add(t.cells(), beta, e, k * nf.basis[p][1]);
      }
    }
    QuadNum area2 = QuadNum(2) * cross(holonomy(t, alpha), holonomy(t, beta));
    CHECK(area2 == t.area2());
  }
}

TEST_CASE("elliptic involution acts by -identity") {
  auto t = square_torus();
  H1Data h = h1_basis(t);
  auto anti = translation_automorphisms(t, -1);
  REQUIRE(anti.size() == 1);
  ZMat A = induced_action(t, h, anti[0]);
  CHECK(A[0][0] == -1);
  CHECK(A[1][1] == -1);
  CHECK(A[0][1] == 0);
  CHECK(A[1][0] == 0);
  CHECK(zmat_trace(A) == -2);
  // Lefschetz: fixed points = 2 - trace
  CHECK(count_fixed_points(t, anti[0]) == 2 - (-2));
}

TEST_CASE("identity action and functoriality") {
  auto t = square_torus();
  H1Data h = h1_basis(t);
  ZMat I = induced_action(t, h, identity_map(t));
  CHECK(zmat_equal(I, zmat_identity(2)));
  auto anti = translation_automorphisms(t, -1);
  ZMat A = induced_action(t, h, anti[0]);
  ZMat AA = induced_action(t, h, compose(anti[0], anti[0]));
  CHECK(zmat_equal(zmat_mul(A, A), AA));
}

TEST_CASE("skew normal form on a (1,2) polarized example") {
  ZMat g = zmat(4, 4);
  // a scrambled integral skew form with elementary divisors (1, 2)
  g[0][2] = 3; g[2][0] = -3;
  g[0][3] = 1; g[3][0] = -1;
  g[1][2] = 1; g[2][1] = -1;
  g[1][3] = 2; g[3][1] = -2;
  g[2][3] = 2; g[3][2] = -2;
  auto nf = skew_normal_form(g);
  REQUIRE(nf.divisors.size() == 2);
  CHECK(nf.divisors[0] == 1);
  // the second divisor is determined by det = (d1 d2)^2
  Int det = zmat_det(g);
  CHECK(nf.divisors[1] * nf.divisors[1] == det);
  ZMat check = zmat_mul(zmat_mul(zmat_transpose(nf.basis), g), nf.basis);
  CHECK(check[0][1] == nf.divisors[0]);
  CHECK(check[2][3] == nf.divisors[1]);
  CHECK(check[0][2] == 0);
  CHECK(check[0][3] == 0);
  CHECK(check[1][2] == 0);
  CHECK(check[1][3] == 0);
}
