#include "prym/prototype.hpp"

#include "doctest.h"
#include "prym/errors.hpp"
#include "prym/homology.hpp"

#include <random>
#include <set>

using namespace prym;

namespace {

// Independent F2 oracle: row-reduce the columns of T mod 2 to a basis of the
// range, then pair all basis vectors through the form mod 2.
int oracle_parity(const ZMat& tc) {
  auto mod2 = [](const Int& v) { return mpz_odd_p(v.get_mpz_t()) ? 1 : 0; };
  std::vector<std::array<int, 4>> basis;
  for (int j = 0; j < 4; ++j) {
    std::array<int, 4> col{};
    for (int i = 0; i < 4; ++i) col[i] = mod2(tc[i][j]);
    for (const auto& b : basis) {
      int lead = -1;
      for (int i = 0; i < 4; ++i)
        if (b[i]) {
          lead = i;
          break;
        }
      if (lead >= 0 && col[lead])
        for (int i = 0; i < 4; ++i) col[i] ^= b[i];
    }
    if (col != std::array<int, 4>{0, 0, 0, 0}) basis.push_back(col);
  }
  // form mod 2: only <a0,b0> = 1 survives
  for (const auto& u : basis)
    for (const auto& v : basis) {
      int pair = (u[0] * v[1] + u[1] * v[0]) % 2;
      if (pair) return 1;
    }
  return 0;
}

// random unimodular transvection products preserving diag(J, 2J)
ZMat random_symplectic12(std::mt19937_64& rng, int steps) {
  ZMat G = prym_polarization();
  ZMat U = zmat_identity(4);
  std::uniform_int_distribution<int> small(-2, 2);
  for (int s = 0; s < steps; ++s) {
    ZVec v(4);
    for (auto& x : v) x = small(rng);
    Int c = small(rng);
    // transvection x -> x + c <x, v> v preserves any skew form
    ZMat T = zmat_identity(4);
    for (int col = 0; col < 4; ++col) {
      Int pair = 0;
      for (int i = 0; i < 4; ++i) pair += G[col][i] * v[i];  // <e_col, v>
      for (int row = 0; row < 4; ++row) T[row][col] += c * pair * v[row];
    }
    U = zmat_mul(U, T);
  }
  return U;
}

}  // namespace

TEST_CASE("discriminants") {
  CHECK(Prototype(Kappa::odd22, 1, 1, 1).disc() == 9);
  CHECK(Prototype(Kappa::odd22, 1, 2, 0).disc() == 16);
  CHECK(Prototype(Kappa::odd22, 1, 1, 0).disc() == 8);
  for (long D : {8L, 9L, 12L, 16L, 17L, 24L, 25L, 32L, 33L})
    for (const auto& p : enumerate_prototypes(D, Kappa::odd22)) {
      long m = p.disc() % 8;
      CHECK((m == 0 || m == 1 || m == 4));
      CHECK(p.disc() >= 8);
    }
}

TEST_CASE("lambda values") {
  CHECK(lambda_value(Prototype(Kappa::odd22, 1, 1, 1)) == QuadNum(2));
  CHECK(lambda_value(Prototype(Kappa::odd22, 1, 1, -1)) == QuadNum(1));
  // sqrt(8)/2 = sqrt(2), carried in the D = 8 context
  CHECK(lambda_value(Prototype(Kappa::odd22, 1, 1, 0)) == QuadNum(Rat(0), Rat(1, 2), 8));
}

TEST_CASE("generator matrix matches the block formula") {
  RmGenerator t = rm_generator(Prototype(Kappa::odd22, 1, 1, 1));
  ZMat expect = {{Int(1), Int(0), Int(2), Int(0)},
                 {Int(0), Int(1), Int(0), Int(2)},
                 {Int(1), Int(0), Int(0), Int(0)},
                 {Int(0), Int(1), Int(0), Int(0)}};
  CHECK(zmat_equal(t.matrix, expect));

  RmGenerator t2 = rm_generator(Prototype(Kappa::odd22, 1, 2, 0));
  ZMat expect2 = {{Int(0), Int(0), Int(2), Int(0)},
                  {Int(0), Int(0), Int(0), Int(4)},
                  {Int(2), Int(0), Int(0), Int(0)},
                  {Int(0), Int(1), Int(0), Int(0)}};
  CHECK(zmat_equal(t2.matrix, expect2));
}

TEST_CASE("T^2 = eT + 2wh and self-adjointness, all D <= 100") {
  ZMat G = prym_polarization();
  for (long D = 8; D <= 100; ++D) {
    for (const auto& p : enumerate_prototypes(D, Kappa::h112)) {
      RmGenerator t = rm_generator(p);
      ZMat t2 = zmat_mul(t.matrix, t.matrix);
      ZMat rhs = t.matrix;
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) rhs[i][j] *= t.e;
        rhs[i][i] += t.c;
      }
      CHECK(zmat_equal(t2, rhs));
      CHECK(zmat_equal(zmat_mul(zmat_transpose(t.matrix), G), zmat_mul(G, t.matrix)));
      auto mq = minimal_quadratic(t.matrix);
      REQUIRE(mq.has_value());
      CHECK(mq->first == t.e);
      CHECK(mq->second == t.c);
      CHECK(t.disc() == D);
    }
  }
}

TEST_CASE("canonical generator normalization") {
  auto t1 = rm_generator(Prototype(Kappa::odd22, 1, 1, 1));
  CHECK(zmat_equal(canonical_generator(t1).matrix, t1.matrix));  // e = 1 unchanged

  auto tm1 = rm_generator(Prototype(Kappa::odd22, 1, 1, -1));
  auto cm1 = canonical_generator(tm1);
  ZMat shifted = tm1.matrix;
  for (int i = 0; i < 4; ++i) shifted[i][i] += 1;
  CHECK(zmat_equal(cm1.matrix, shifted));  // e = -1: T + Id
  CHECK(cm1.e == 1);

  auto t2 = rm_generator(Prototype(Kappa::h112, 1, 1, 2));
  auto c2 = canonical_generator(t2);
  ZMat down = t2.matrix;
  for (int i = 0; i < 4; ++i) down[i][i] -= 1;
  CHECK(zmat_equal(c2.matrix, down));  // e = 2: T - Id
  CHECK(c2.e == 0);

  // idempotent
  CHECK(zmat_equal(canonical_generator(c2).matrix, c2.matrix));
}

TEST_CASE("parity examples for D = 9 and D = 12") {
  CHECK(component_invariant(Prototype(Kappa::odd22, 1, 1, 1)).parity == 1);
  CHECK(component_invariant(Prototype(Kappa::odd22, 1, 1, -1)).parity == 0);
  int p1 = component_invariant(Prototype(Kappa::h112, 1, 1, 2)).parity;
  int p2 = component_invariant(Prototype(Kappa::h112, 1, 1, -2)).parity;
  CHECK(p1 == p2);
}

TEST_CASE("parity agrees with the F2 oracle for all D <= 200") {
  for (long D = 8; D <= 200; ++D) {
    for (const auto& p : enumerate_prototypes(D, Kappa::odd22)) {
      RmGenerator c = canonical_generator(rm_generator(p));
      int expected = oracle_parity(c.matrix);
      CHECK(component_invariant(p).parity == expected);
    }
  }
}

TEST_CASE("parity invariant under symplectic change of basis") {
  std::mt19937_64 rng(0);
  ZMat G = prym_polarization();
  for (const auto& p : {Prototype(Kappa::odd22, 1, 1, 1), Prototype(Kappa::odd22, 1, 2, 1),
                        Prototype(Kappa::odd22, 2, 1, -1), Prototype(Kappa::h112, 1, 1, 3)}) {
    int parity = component_invariant(p).parity;
    for (int trial = 0; trial < 20; ++trial) {
      ZMat U = random_symplectic12(rng, 4);
      ZMat check = zmat_mul(zmat_mul(zmat_transpose(U), G), U);
      REQUIRE(zmat_equal(check, G));
      ZMat conj = zmat_mul(zmat_mul(zmat_unimodular_inverse(U), rm_generator(p).matrix), U);
      auto mq = minimal_quadratic(conj);
      REQUIRE(mq.has_value());
      RmGenerator g{conj, mq->first, mq->second};
      CHECK(generator_parity(g) == parity);
    }
  }
}

TEST_CASE("prototype enumeration") {
  auto d9 = enumerate_prototypes(9, Kappa::odd22);
  REQUIRE(d9.size() == 2);
  CHECK(d9[0] == Prototype(Kappa::odd22, 1, 1, -1));
  CHECK(d9[1] == Prototype(Kappa::odd22, 1, 1, 1));

  CHECK(enumerate_prototypes(13, Kappa::odd22).empty());

  auto d17 = enumerate_prototypes(17, Kappa::odd22);
  CHECK(d17.size() == 6);
  std::set<std::tuple<long, long, long>> got;
  for (const auto& p : d17) got.insert({p.w, p.h, p.e});
  std::set<std::tuple<long, long, long>> want = {{1, 2, 1}, {1, 2, -1}, {2, 1, 1},
                                                 {2, 1, -1}, {1, 1, 3}, {1, 1, -3}};
  CHECK(got == want);

  // no duplicates, constraints hold
  for (long D = 8; D <= 300; ++D) {
    auto protos = enumerate_prototypes(D, Kappa::h112);
    std::set<std::tuple<long, long, long>> seen;
    for (const auto& p : protos) {
      CHECK(p.disc() == D);
      CHECK(seen.insert({p.w, p.h, p.e}).second);
    }
  }
}

TEST_CASE("classification counts") {
  auto r9 = classify_components(9, Kappa::odd22);
  CHECK(r9.classes.size() == 2);
  CHECK(r9.matches_expected);
  REQUIRE(r9.classes[0].prototypes.size() == 1);
  REQUIRE(r9.classes[1].prototypes.size() == 1);
  CHECK(r9.classes[0].parity.value() == 0);
  CHECK(r9.classes[0].prototypes[0].e == -1);
  CHECK(r9.classes[1].prototypes[0].e == 1);

  auto r16 = classify_components(16, Kappa::odd22);
  CHECK(r16.classes.size() == 1);
  CHECK(r16.classes[0].prototypes.size() == 2);  // (1,2,0), (2,1,0)

  auto r17 = classify_components(17, Kappa::h112);
  CHECK(r17.classes.size() == 2);
  CHECK(r17.classes[0].prototypes.size() == 3);
  CHECK(r17.classes[1].prototypes.size() == 3);
  // split by e mod 4
  for (const auto& p : r17.classes[0].prototypes) CHECK(((p.e % 4) + 4) % 4 == 3);
  for (const auto& p : r17.classes[1].prototypes) CHECK(((p.e % 4) + 4) % 4 == 1);

  CHECK_THROWS_WITH_AS(classify_components(13, Kappa::odd22), doctest::Contains("EmptyLocus"),
                       Error);
}

TEST_CASE("even discriminants have a single shared parity, D <= 200") {
  for (long D = 8; D <= 200; ++D) {
    if (D % 8 != 0 && D % 8 != 4) continue;
    auto protos = enumerate_prototypes(D, Kappa::odd22);
    REQUIRE(!protos.empty());
    int parity = component_invariant(protos[0]).parity;
    for (const auto& p : protos) CHECK(component_invariant(p).parity == parity);
  }
}

TEST_CASE("odd discriminants realize both parities, D <= 200") {
  for (long D = 9; D <= 200; D += 8) {
    auto protos = enumerate_prototypes(D, Kappa::odd22);
    REQUIRE(!protos.empty());
    std::set<int> parities;
    for (const auto& p : protos) parities.insert(component_invariant(p).parity);
    CHECK(parities == std::set<int>{0, 1});
  }
}
