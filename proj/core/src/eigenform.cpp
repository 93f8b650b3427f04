#include "prym/eigenform.hpp"

#include <algorithm>

namespace prym {

QuadNum default_slit(const Prototype& p) {
  QuadNum lam = lambda_value(p);
  QuadNum w(Rat(p.w));
  QuadNum m = (compare(w, lam) < 0) ? w : lam;
  QuadNum s = m / QuadNum(2);
  if (p.kappa == Kappa::h112) s = s / QuadNum(2);
  return s;
}

namespace {

// one slit torus: rectangle of size width x height with a bottom/top slit of
// length s starting at the left corner
std::vector<Vec2> slit_rectangle(const QuadNum& width, const QuadNum& height, const QuadNum& s) {
  QuadNum zero(0);
  return {
      Vec2(s, zero),           // 0 bottom slit
      Vec2(width - s, zero),   // 1 bottom rest
      Vec2(zero, height),      // 2 right
      Vec2(-(width - s), zero),// 3 top rest
      Vec2(-s, zero),          // 4 top slit
      Vec2(zero, -height),     // 5 left
  };
}

FlagMap pick_tau(const TranslationSurface& s, const Prototype& p) {
  H1Data h = h1_basis(s);
  auto anti = translation_automorphisms(s, -1);
  std::vector<FlagMap> good;
  for (const auto& f : anti) {
    if (!is_involution(f)) continue;
    if (zmat_trace(induced_action(s, h, f)) != -2) continue;
    if (count_fixed_points(s, f) != 4) continue;
    if (p.kappa == Kappa::odd22) {
      int P = s.vertex_named("P"), Q = s.vertex_named("Q");
      if (f.vertex_map[P] != Q || f.vertex_map[Q] != P) continue;
    } else {
      int R1 = s.vertex_named("R1"), R2 = s.vertex_named("R2"), Q = s.vertex_named("Q");
      if (f.vertex_map[Q] != Q || f.vertex_map[R1] != R2 || f.vertex_map[R2] != R1) continue;
    }
    good.push_back(f);
  }
  require(!good.empty(), Err::Internal, "prototype surface admits no Prym involution");
  return good.front();
}

}  // namespace

PrototypeSurface build_prototype_surface(const Prototype& p, std::optional<QuadNum> slit_opt) {
  QuadNum lam = lambda_value(p);
  QuadNum w(Rat(p.w)), h(Rat(p.h));
  QuadNum s = slit_opt.value_or(default_slit(p));

  require(s.sign() > 0 && compare(s, w) < 0 && compare(s, lam) < 0, Err::SlitOutOfRange,
          "slit must satisfy 0 < slit < min(w, lambda)");

  std::vector<std::vector<Vec2>> polys;
  TranslationSurface::Gluing glue;
  std::map<std::string, TranslationSurface::Side> labels;

  if (p.kappa == Kappa::odd22) {
    polys = {slit_rectangle(lam, lam, s), slit_rectangle(w, h, s), slit_rectangle(w, h, s)};
    for (int i = 0; i < 3; ++i) {
      glue.push_back({{i, 2}, {i, 5}});  // verticals
      glue.push_back({{i, 1}, {i, 3}});  // non-slit horizontal
    }
    // cyclic slit gluing T0 -> T1 -> T2 -> T0 (bottom of one to top of next)
    glue.push_back({{0, 0}, {1, 4}});
    glue.push_back({{1, 0}, {2, 4}});
    glue.push_back({{2, 0}, {0, 4}});
    labels["P"] = {0, 0};  // left slit endpoints
    labels["Q"] = {0, 1};  // right slit endpoints
  } else {
    require(compare(QuadNum(2) * s, lam) < 0, Err::SlitOutOfRange,
            "slit must satisfy 2 slit < lambda for (1,1,2)");
    QuadNum zero(0);
    std::vector<Vec2> base = {
        Vec2(s, zero),                      // 0 bottom slit A
        Vec2(s, zero),                      // 1 bottom slit B
        Vec2(lam - QuadNum(2) * s, zero),   // 2 bottom rest
        Vec2(zero, lam),                    // 3 right
        Vec2(-(lam - QuadNum(2) * s), zero),// 4 top rest
        Vec2(-s, zero),                     // 5 top slit B
        Vec2(-s, zero),                     // 6 top slit A
        Vec2(zero, -lam),                   // 7 left
    };
    polys = {base, slit_rectangle(w, h, s), slit_rectangle(w, h, s)};
    glue.push_back({{0, 3}, {0, 7}});
    glue.push_back({{0, 2}, {0, 4}});
    for (int i = 1; i < 3; ++i) {
      glue.push_back({{i, 2}, {i, 5}});
      glue.push_back({{i, 1}, {i, 3}});
    }
    // torus 1 into slit A, torus 2 into slit B
    glue.push_back({{0, 0}, {1, 4}});
    glue.push_back({{1, 0}, {0, 6}});
    glue.push_back({{0, 1}, {2, 4}});
    glue.push_back({{2, 0}, {0, 5}});
    labels["R1"] = {0, 0};
    labels["Q"] = {0, 1};
    labels["R2"] = {0, 2};
  }

  PrototypeSurface out{TranslationSurface::build(polys, glue, labels), FlagMap{}, p, s};

  // postconditions
  std::vector<int> want =
      (p.kappa == Kappa::odd22) ? std::vector<int>{2, 2} : std::vector<int>{2, 1, 1};
  require(out.surface.stratum_orders() == want, Err::Internal,
          "prototype surface lands in the wrong stratum");
  QuadNum expect_area2 = QuadNum(2) * (lam * lam + QuadNum(2) * w * h);
  require(out.surface.area2() == expect_area2, Err::Internal, "prototype surface area wrong");
  out.tau = pick_tau(out.surface, p);
  return out;
}

std::optional<Err> RmReport::failure() const {
  // eigenform violation reported first; shift-invariance makes the
  // discriminant checks purely about the claimed (e, c)
  if (!eigenform_ok) return Err::NotEigenform;
  if (!quadratic_ok || !disc_ok) return Err::WrongDiscriminant;
  if (!self_adjoint) return Err::NotSelfAdjoint;
  return std::nullopt;
}

RmReport verify_real_multiplication(const TranslationSurface& s, const PrymLattice& lat,
                                    const RmGenerator& gen, long claimed_disc) {
  RmReport rep;
  rep.claimed_disc = claimed_disc;
  ZMat G = prym_polarization();
  rep.self_adjoint = zmat_equal(zmat_mul(zmat_transpose(gen.matrix), G), zmat_mul(G, gen.matrix));

  auto mq = minimal_quadratic(gen.matrix);
  if (!mq) return rep;  // not an order generator at all
  rep.recomputed_e = mq->first;
  rep.recomputed_c = mq->second;
  rep.quadratic_ok = (mq->first == gen.e && mq->second == gen.c);
  long disc = mq->first * mq->first + 4 * mq->second;
  rep.disc_ok = (disc == claimed_disc);

  // eigenform identity with T's own eigenvalue lambda = (e + sqrt(disc)) / 2
  if (disc > 0) {
    QuadNum lam = (QuadNum(Rat(mq->first)) + QuadNum::sqrt_of(disc)) / QuadNum(2);
    auto v = period_vector(s, lat);
    bool ok = true;
    for (int k = 0; k < 4 && ok; ++k) {
      Vec2 sum(QuadNum(0), QuadNum(0));
      for (int j = 0; j < 4; ++j) {
        Rat coef(gen.matrix[j][k]);
        sum += Vec2(QuadNum(coef) * v[j].x, QuadNum(coef) * v[j].y);
      }
      Vec2 want(lam * v[k].x, lam * v[k].y);
      ok = (sum == want);
    }
    rep.eigenform_ok = ok;
  }
  return rep;
}

RmGenerator adapted_generator(const TranslationSurface& s, const PrymLattice& lat,
                              const Prototype& p) {
  long D = p.disc();
  QuadNum lam = lambda_value(p);
  auto v = period_vector(s, lat);

  // unknowns: 16 entries of M, row-major. constraints:
  //   M^T G = G M   (self-adjointness)
  //   v . M = lambda v  (split into rational and sqrt(D) parts)
  std::vector<std::vector<Rat>> A;
  std::vector<Rat> b;
  auto idx = [](int i, int j) { return 4 * i + j; };
  ZMat G = prym_polarization();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      // (M^T G - G M)[i][j] = sum_k M[k][i] G[k][j] - G[i][k] M[k][j] = 0
      std::vector<Rat> row(16, Rat(0));
      for (int k = 0; k < 4; ++k) {
        row[idx(k, i)] += Rat(G[k][j]);
        row[idx(k, j)] -= Rat(G[i][k]);
      }
      A.push_back(row);
      b.push_back(Rat(0));
    }
  auto push_field_eq = [&](const std::vector<QuadNum>& coeffs, const QuadNum& rhs) {
    // sum coeffs[j] * M[j][k] = rhs, split over 1 and sqrt(D)
    std::vector<Rat> row_a(16, Rat(0)), row_b(16, Rat(0));
    for (int j = 0; j < 16; ++j) {
      row_a[j] = coeffs[j].a;
      row_b[j] = coeffs[j].b;
    }
    A.push_back(row_a);
    b.push_back(rhs.a);
    bool irrational = false;
    for (const auto& q : coeffs)
      if (q.disc != 0) irrational = true;
    if (irrational || rhs.disc != 0) {
      A.push_back(row_b);
      b.push_back(rhs.b);
    }
  };
  for (int k = 0; k < 4; ++k) {
    std::vector<QuadNum> cx(16, QuadNum(0)), cy(16, QuadNum(0));
    for (int j = 0; j < 4; ++j) {
      cx[idx(j, k)] = v[j].x;
      cy[idx(j, k)] = v[j].y;
    }
    push_field_eq(cx, lam * v[k].x);
    push_field_eq(cy, lam * v[k].y);
  }

  std::vector<Rat> sol;
  std::vector<std::vector<Rat>> nullspace;
  bool ok = qmat_solve(A, b, sol, &nullspace);
  require(ok, Err::NotEigenform, "no self-adjoint generator with the demanded eigenvalue");

  auto to_matrix = [&](const std::vector<Rat>& flat) {
    ZMat M = zmat(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        const Rat& r = flat[idx(i, j)];
        require(r.get_den() == 1, Err::NotEigenform, "generator is not integral");
        M[i][j] = r.get_num();
      }
    return M;
  };

  if (!nullspace.empty()) {
    // square discriminant: one-parameter family; trace pins the member with
    // minimal polynomial X^2 - eX - 2wh
    require(nullspace.size() == 1, Err::Internal, "generator family has unexpected dimension");
    Rat tr0(0), trn(0);
    for (int i = 0; i < 4; ++i) {
      tr0 += sol[idx(i, i)];
      trn += nullspace[0][idx(i, i)];
    }
    require(trn != 0, Err::Internal, "degenerate trace direction in generator family");
    Rat t = (Rat(2 * p.e) - tr0) / trn;
    for (int j = 0; j < 16; ++j) sol[j] += t * nullspace[0][j];
  }

  ZMat M = to_matrix(sol);
  auto mq = minimal_quadratic(M);
  require(mq && mq->first == p.e && mq->second == 2 * p.w * p.h, Err::NotEigenform,
          "adapted generator has the wrong minimal polynomial");
  RmGenerator gen{M, p.e, 2 * p.w * p.h};
  return gen;
}

std::vector<FlagMap> find_prym_involutions(const TranslationSurface& s) {
  H1Data h = h1_basis(s);
  std::vector<FlagMap> invs;
  for (const auto& f : translation_automorphisms(s, -1)) {
    if (!is_involution(f)) continue;
    if (zmat_trace(induced_action(s, h, f)) != -2) continue;
    invs.push_back(f);
  }
  if (invs.size() >= 2) {
    require(s.stratum_orders() == std::vector<int>{2, 2}, Err::Internal,
            "multiple Prym involutions outside stratum (2,2)");
    for (size_t i = 0; i < invs.size(); ++i)
      for (size_t j = 0; j < invs.size(); ++j) {
        if (i == j) continue;
        FlagMap rho = compose(invs[i], invs[j]);
        require(!is_identity(rho), Err::Internal, "distinct involutions compose to identity");
        FlagMap rho3 = compose(rho, compose(rho, rho));
        require(is_identity(rho3), Err::Internal, "composite of Prym involutions not order 3");
        // torus quotient: branch points from the Lefschetz count
        Int tr = zmat_trace(induced_action(s, h, rho));
        Int branch = 2 - tr;
        Int genus6 = 10 - 2 * branch;  // 6 g(Y) from Riemann-Hurwitz
        require(genus6 == 6, Err::Internal, "degree-3 quotient is not a torus");
      }
  }
  return invs;
}

Stratum compute_stratum(const TranslationSurface& s) {
  Stratum st;
  st.orders = s.stratum_orders();
  if (st.orders == std::vector<int>{2, 2}) {
    st.tag = Stratum::Tag::odd;
    H1Data h = h1_basis(s);
    for (const auto& f : translation_automorphisms(s, -1)) {
      if (!is_involution(f)) continue;
      if (zmat_trace(induced_action(s, h, f)) == -6) {
        st.tag = Stratum::Tag::hyp;
        break;
      }
    }
  }
  return st;
}

}  // namespace prym
