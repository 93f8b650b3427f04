#include "prym/homology.hpp"

#include <algorithm>

namespace prym {

namespace {

// signed coefficient of a chain/cochain on the directed half-edge e
Int value_on(const PolyComplex& cx, const Chain& c, int e) {
  int key = std::min(e, cx.opp(e));
  auto it = c.find(key);
  if (it == c.end()) return 0;
  return (key == e) ? it->second : -it->second;
}

void chain_add_keyed(Chain& c, int key, const Int& coeff) {
  if (coeff == 0) return;
  c[key] += coeff;
  if (c[key] == 0) c.erase(key);
}

// Global orientation constant pinned by the square-torus requirement
// <horizontal, vertical> = +1 and positivity of the symplectic area.
constexpr int kOrientationSign = -1;

}  // namespace

H1Data h1_basis(const TranslationSurface& s) {
  const PolyComplex& cx = s.cells();
  H1Data h;

  std::vector<int> canon;
  std::map<int, int> canon_index;
  for (int e : cx.live_halfedges())
    if (e < cx.opp(e)) {
      canon_index[e] = canon.size();
      canon.push_back(e);
    }
  int E = canon.size();
  int V = cx.num_vertices;
  auto faces = cx.live_faces();
  int F = faces.size();

  ZMat d1 = zmat(V, E);  // boundary: edges -> vertices
  for (int i = 0; i < E; ++i) {
    d1[cx.head(canon[i])][i] += 1;
    d1[cx.tail(canon[i])][i] -= 1;
  }
  ZMat d2 = zmat(E, F);  // face boundaries in edge coordinates
  for (int j = 0; j < F; ++j)
    for (int e : cx.face_edges(faces[j])) {
      int key = std::min(e, cx.opp(e));
      d2[canon_index[key]][j] += (e == key) ? 1 : -1;
    }

  auto vec_to_chain = [&](const ZVec& v) {
    Chain c;
    for (int i = 0; i < E; ++i)
      if (v[i] != 0) c[canon[i]] = v[i];
    return c;
  };
  auto span_through = [&](const ZMat& K, const std::vector<ZVec>& quot) {
    std::vector<Chain> out;
    for (const auto& q : quot) {
      ZVec vec(E, Int(0));
      for (int i = 0; i < E; ++i)
        for (size_t k = 0; k < q.size(); ++k) vec[i] += K[i][k] * q[k];
      out.push_back(vec_to_chain(vec));
    }
    return out;
  };
  auto express_in = [&](const ZMat& K, const ZMat& B) {
    // integral coordinates of the columns of B in the saturated column span of K
    int r = B.empty() ? 0 : B[0].size();
    int cols = K.empty() ? 0 : K[0].size();
    ZMat X = zmat(cols, r);
    auto KQ = qmat_from(K);
    for (int j = 0; j < r; ++j) {
      std::vector<Rat> b;
      for (int i = 0; i < E; ++i) b.push_back(Rat(B[i][j]));
      std::vector<Rat> sol;
      require(qmat_solve(KQ, b, sol, nullptr), Err::Internal, "column not in kernel span");
      for (int k = 0; k < cols; ++k) {
        require(sol[k].get_den() == 1, Err::Internal, "non-integral kernel coordinates");
        X[k][j] = sol[k].get_num();
      }
    }
    return X;
  };

  // H_1 = ker d1 / im d2
  auto kernel = zmat_kernel(d1);
  ZMat K = zmat(E, kernel.size());
  for (size_t j = 0; j < kernel.size(); ++j)
    for (int i = 0; i < E; ++i) K[i][j] = kernel[j][i];
  h.basis = span_through(K, zmat_quotient_basis(express_in(K, d2), kernel.size()));
  h.dim = h.basis.size();
  require(h.dim == 2 * s.genus(), Err::Internal, "H_1 rank mismatch");
  for (const auto& c : h.basis)
    require(chain_is_cycle(cx, c), Err::Internal, "basis chain is not a cycle");

  // H^1 = ker d2^T / im d1^T
  auto cokernel = zmat_kernel(zmat_transpose(d2));
  ZMat CK = zmat(E, cokernel.size());
  for (size_t j = 0; j < cokernel.size(); ++j)
    for (int i = 0; i < E; ++i) CK[i][j] = cokernel[j][i];
  h.cocycles = span_through(
      CK, zmat_quotient_basis(express_in(CK, zmat_transpose(d1)), cokernel.size()));
  require((int)h.cocycles.size() == h.dim, Err::Internal, "H^1 rank mismatch");

  // Whitney pairing of cocycles via a fan subdivision of every cell:
  // each ccw triangle with values (f0, f1, f2) contributes (f0 g1 - f1 g0)/2.
  int n = h.dim;
  ZMat W = zmat(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Int twice = 0;
      for (int f : faces) {
        auto edges = cx.face_edges(f);
        Int Fa = 0, Fb = 0;  // cocycle values on the fan diagonal v0 -> vk
        for (size_t k = 0; k + 1 < edges.size(); ++k) {
          Int fa = value_on(cx, h.cocycles[a], edges[k]);
          Int fb = value_on(cx, h.cocycles[b], edges[k]);
          if (k >= 1) twice += Fa * fb - fa * Fb;
          Fa += fa;
          Fb += fb;
        }
      }
      require(mpz_even_p(twice.get_mpz_t()) != 0, Err::Internal, "Whitney pairing not even");
      W[a][b] = twice / 2;
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      require(W[i][j] == -W[j][i], Err::Internal, "cocycle pairing not skew");

  // evaluation pairing; intersection form on cycles G = sign * Ev^T W^-1 Ev
  ZMat Ev = zmat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Int v = 0;
      for (const auto& [e, coef] : h.basis[j]) v += coef * value_on(cx, h.cocycles[i], e);
      Ev[i][j] = v;
    }
  Int de = zmat_det(Ev);
  require(de == 1 || de == -1, Err::Internal, "evaluation pairing not unimodular");
  h.eval_inv = zmat_unimodular_inverse(Ev);

  ZMat Winv = zmat_unimodular_inverse(W);
  ZMat G = zmat_mul(zmat_mul(zmat_transpose(Ev), Winv), Ev);
  h.gram = zmat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h.gram[i][j] = Int(kOrientationSign) * G[i][j];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      require(h.gram[i][j] == -h.gram[j][i], Err::Internal, "intersection form not skew");
  require(zmat_det(h.gram) == 1, Err::Internal, "intersection form not unimodular");
  return h;
}

ZVec cycle_coordinates(const H1Data& h, const Chain& cycle) {
  ZVec pairing(h.dim, Int(0));
  for (int i = 0; i < h.dim; ++i) {
    Int v = 0;
    for (const auto& [e, coef] : cycle) {
      auto it = h.cocycles[i].find(e);
      if (it != h.cocycles[i].end()) v += coef * it->second;
    }
    pairing[i] = v;
  }
  return zmat_apply(h.eval_inv, pairing);
}

Int intersection(const H1Data& h, const Chain& c1, const Chain& c2) {
  ZVec x = cycle_coordinates(h, c1), y = cycle_coordinates(h, c2);
  Int out = 0;
  for (int i = 0; i < h.dim; ++i)
    for (int j = 0; j < h.dim; ++j) out += x[i] * h.gram[i][j] * y[j];
  return out;
}

Chain map_chain(const FlagMap& f, const Chain& c, const PolyComplex& target) {
  Chain out;
  for (const auto& [e, coef] : c) chain_add(target, out, f.he_map[e], coef);
  return out;
}

ZMat induced_action(const TranslationSurface& s, const H1Data& h, const FlagMap& f) {
  int n = h.dim;
  ZMat A = zmat(n, n);
  for (int j = 0; j < n; ++j) {
    Chain image = map_chain(f, h.basis[j], s.cells());
    ZVec coords = cycle_coordinates(h, image);
    for (int i = 0; i < n; ++i) A[i][j] = coords[i];
  }
  ZMat check = zmat_mul(zmat_mul(zmat_transpose(A), h.gram), A);
  require(zmat_equal(check, h.gram), Err::Internal, "induced action does not preserve the form");
  return A;
}

SkewNormalForm skew_normal_form(const ZMat& gram) {
  int n = gram.size();
  require(n % 2 == 0, Err::WrongDivisors, "odd rank skew form");
  ZMat U = zmat_identity(n);
  ZMat G = gram;

  auto recompute = [&]() {
    ZMat UG = zmat_mul(zmat_transpose(U), gram);
    G = zmat_mul(UG, U);
  };
  auto col_add = [&](int i, int j, const Int& q) {  // u_i += q * u_j
    for (int r = 0; r < n; ++r) U[r][i] += q * U[r][j];
    recompute();
  };
  auto col_swap = [&](int i, int j) {
    for (int r = 0; r < n; ++r) std::swap(U[r][i], U[r][j]);
    recompute();
  };

  SkewNormalForm out;
  for (int t = 0; t < n; t += 2) {
    while (true) {
      int bi = -1, bj = -1;
      for (int i = t; i < n; ++i)
        for (int j = t; j < n; ++j)
          if (G[i][j] != 0 && (bi < 0 || abs(G[i][j]) < abs(G[bi][bj]))) {
            bi = i;
            bj = j;
          }
      require(bi >= 0, Err::WrongDivisors, "degenerate skew form");
      if (bi == t) {
        if (bj != t + 1) col_swap(t + 1, bj);
      } else if (bj == t) {
        if (bi != t + 1) col_swap(t + 1, bi);
      } else {
        col_swap(t, bi);
        int bj2 = (bj == t) ? bi : bj;
        if (bj2 != t + 1) col_swap(t + 1, bj2);
      }
      if (G[t][t + 1] < 0) col_swap(t, t + 1);
      Int d = G[t][t + 1];
      require(d > 0, Err::Internal, "pivot lost during skew reduction");

      bool clean = true;
      for (int k = t + 2; k < n; ++k) {
        Int q1;
        mpz_fdiv_q(q1.get_mpz_t(), G[t][k].get_mpz_t(), d.get_mpz_t());
        if (q1 != 0) col_add(k, t + 1, -q1);
        if (G[t][k] != 0) clean = false;
        Int q2;
        mpz_fdiv_q(q2.get_mpz_t(), G[t + 1][k].get_mpz_t(), d.get_mpz_t());
        if (q2 != 0) col_add(k, t, q2);
        if (G[t + 1][k] != 0) clean = false;
      }
      if (clean) break;
    }
  }
  recompute();
  for (int t = 0; t < n; t += 2) out.divisors.push_back(G[t][t + 1]);
  out.basis = U;
  return out;
}

ZMat prym_polarization() {
  ZMat G = zmat(4, 4);
  G[0][1] = 1;
  G[1][0] = -1;
  G[2][3] = 2;
  G[3][2] = -2;
  return G;
}

PrymLattice anti_invariant_lattice(const TranslationSurface& s, const H1Data& h,
                                   const FlagMap& tau) {
  ZMat A = induced_action(s, h, tau);
  int n = h.dim;
  ZMat M = zmat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M[i][j] = A[i][j] + (i == j ? 1 : 0);
  auto ker = zmat_kernel(M);
  require((int)ker.size() == 4, Err::WrongDivisors,
          "anti-invariant rank is " + std::to_string(ker.size()) + ", expected 4");

  ZMat gramK = zmat(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Int v = 0;
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) v += ker[i][p] * h.gram[p][q] * ker[j][q];
      gramK[i][j] = v;
    }
  SkewNormalForm nf = skew_normal_form(gramK);
  require(nf.divisors.size() == 2 && nf.divisors[0] == 1 && nf.divisors[1] == 2,
          Err::WrongDivisors, "restricted form does not have elementary divisors (1, 2)");

  PrymLattice lat;
  lat.inclusion = zmat(n, 4);
  for (int c = 0; c < 4; ++c)
    for (int p = 0; p < n; ++p) {
      Int v = 0;
      for (int k = 0; k < 4; ++k) v += Int(ker[k][p]) * nf.basis[k][c];
      lat.inclusion[p][c] = v;
    }
  for (int c = 0; c < 4; ++c) {
    Chain combo;
    for (int p = 0; p < n; ++p) {
      if (lat.inclusion[p][c] == 0) continue;
      for (const auto& [e, coef] : h.basis[p])
        chain_add_keyed(combo, e, coef * lat.inclusion[p][c]);
    }
    lat.basis_cycles[c] = combo;
  }
  lat.gram = zmat(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Int v = 0;
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) v += lat.inclusion[p][i] * h.gram[p][q] * lat.inclusion[q][j];
      lat.gram[i][j] = v;
    }
  require(zmat_equal(lat.gram, prym_polarization()), Err::WrongDivisors,
          "normalized gram is not diag(J, 2J)");
  return lat;
}

Vec2 holonomy(const TranslationSurface& s, const Chain& c) { return chain_holonomy(s.cells(), c); }

std::array<Vec2, 4> period_vector(const TranslationSurface& s, const PrymLattice& lat) {
  std::array<Vec2, 4> out;
  for (int i = 0; i < 4; ++i) out[i] = holonomy(s, lat.basis_cycles[i]);
  return out;
}

}  // namespace prym
