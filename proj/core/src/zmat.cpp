#include "prym/zmat.hpp"

#include <cassert>
#include <stdexcept>

namespace prym {

ZMat zmat(int rows, int cols) { return ZMat(rows, ZVec(cols, Int(0))); }

ZMat zmat_identity(int n) {
  ZMat I = zmat(n, n);
  for (int i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

ZMat zmat_mul(const ZMat& A, const ZMat& B) {
  int n = A.size(), m = B[0].size(), k = B.size();
  ZMat C = zmat(n, m);
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < k; ++l) {
      if (A[i][l] == 0) continue;
      for (int j = 0; j < m; ++j) C[i][j] += A[i][l] * B[l][j];
    }
  return C;
}

ZVec zmat_apply(const ZMat& A, const ZVec& v) {
  ZVec out(A.size(), Int(0));
  for (size_t i = 0; i < A.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) out[i] += A[i][j] * v[j];
  return out;
}

ZMat zmat_transpose(const ZMat& A) {
  if (A.empty()) return A;
  ZMat T = zmat(A[0].size(), A.size());
  for (size_t i = 0; i < A.size(); ++i)
    for (size_t j = 0; j < A[0].size(); ++j) T[j][i] = A[i][j];
  return T;
}

bool zmat_equal(const ZMat& A, const ZMat& B) { return A == B; }

Int zmat_trace(const ZMat& A) {
  Int t = 0;
  for (size_t i = 0; i < A.size(); ++i) t += A[i][i];
  return t;
}

Int zmat_det(ZMat A) {
  int n = A.size();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (A[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (A[i][k] != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      std::swap(A[k], A[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) / prev;
      }
    prev = A[k][k];
  }
  return sign > 0 ? A[n - 1][n - 1] : -A[n - 1][n - 1];
}

ZMat zmat_unimodular_inverse(const ZMat& A) {
  int n = A.size();
  // Gauss-Jordan over Q, then check integrality.
  std::vector<std::vector<Rat>> M(n, std::vector<Rat>(2 * n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) M[i][j] = Rat(A[i][j]);
    M[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if (M[r][c] != 0) {
        p = r;
        break;
      }
    if (p < 0) throw std::runtime_error("matrix not invertible");
    std::swap(M[c], M[p]);
    Rat piv = M[c][c];
    for (int j = 0; j < 2 * n; ++j) M[c][j] /= piv;
    for (int r = 0; r < n; ++r) {
      if (r == c || M[r][c] == 0) continue;
      Rat f = M[r][c];
      for (int j = 0; j < 2 * n; ++j) M[r][j] -= f * M[c][j];
    }
  }
  ZMat inv = zmat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat v = M[i][n + j];
      if (v.get_den() != 1) throw std::runtime_error("matrix inverse not integral");
      inv[i][j] = v.get_num();
    }
  return inv;
}

SmithResult smith_normal_form(ZMat A) {
  int m = A.size();
  int n = m ? A[0].size() : 0;
  ZMat U = zmat_identity(m), V = zmat_identity(n);

  auto row_op = [&](int i, int j, const Int& f) {  // row_i -= f * row_j
    for (int c = 0; c < n; ++c) A[i][c] -= f * A[j][c];
    for (int c = 0; c < m; ++c) U[i][c] -= f * U[j][c];
  };
  auto col_op = [&](int i, int j, const Int& f) {  // col_i -= f * col_j
    for (int r = 0; r < m; ++r) A[r][i] -= f * A[r][j];
    for (int r = 0; r < n; ++r) V[r][i] -= f * V[r][j];
  };
  auto row_swap = [&](int i, int j) {
    std::swap(A[i], A[j]);
    std::swap(U[i], U[j]);
  };
  auto col_swap = [&](int i, int j) {
    for (int r = 0; r < m; ++r) std::swap(A[r][i], A[r][j]);
    for (int r = 0; r < n; ++r) std::swap(V[r][i], V[r][j]);
  };
  auto row_negate = [&](int i) {
    for (int c = 0; c < n; ++c) A[i][c] = -A[i][c];
    for (int c = 0; c < m; ++c) U[i][c] = -U[i][c];
  };

  int t = 0;
  while (t < m && t < n) {
    // Find a pivot of minimal absolute value in the remaining block.
    int pi = -1, pj = -1;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j)
        if (A[i][j] != 0 &&
            (pi < 0 || abs(A[i][j]) < abs(A[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    row_swap(t, pi);
    col_swap(t, pj);
    if (A[t][t] < 0) row_negate(t);

    bool clean = true;
    for (int i = t + 1; i < m; ++i) {
      if (A[i][t] == 0) continue;
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), A[i][t].get_mpz_t(), A[t][t].get_mpz_t());
      row_op(i, t, q);
      if (A[i][t] != 0) clean = false;
    }
    for (int j = t + 1; j < n; ++j) {
      if (A[t][j] == 0) continue;
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), A[t][j].get_mpz_t(), A[t][t].get_mpz_t());
      col_op(j, t, q);
      if (A[t][j] != 0) clean = false;
    }
    if (!clean) continue;  // smaller remainders appeared, redo this pivot

    // Divisibility: fold any entry not divisible by the pivot into its row.
    bool divisible = true;
    for (int i = t + 1; i < m && divisible; ++i)
      for (int j = t + 1; j < n && divisible; ++j)
        if (A[i][j] % A[t][t] != 0) {
          row_op(t, i, Int(-1));  // adds row i to row t
          divisible = false;
        }
    if (divisible) ++t;
  }
  return SmithResult{U, A, V};
}

std::vector<ZVec> zmat_kernel(const ZMat& A) {
  int m = A.size();
  int n = m ? A[0].size() : 0;
  if (m == 0) {
    std::vector<ZVec> basis;
    for (int j = 0; j < n; ++j) {
      ZVec e(n, Int(0));
      e[j] = 1;
      basis.push_back(e);
    }
    return basis;
  }
  SmithResult snf = smith_normal_form(A);
  int r = 0;
  int lim = std::min(m, n);
  while (r < lim && snf.S[r][r] != 0) ++r;
  std::vector<ZVec> basis;
  for (int j = r; j < n; ++j) {
    ZVec v(n, Int(0));
    for (int i = 0; i < n; ++i) v[i] = snf.V[i][j];
    basis.push_back(v);
  }
  return basis;
}

std::vector<ZVec> zmat_quotient_basis(const ZMat& B, int n) {
  int r = B.empty() ? 0 : B[0].size();
  if (r == 0) {
    std::vector<ZVec> basis;
    for (int j = 0; j < n; ++j) {
      ZVec e(n, Int(0));
      e[j] = 1;
      basis.push_back(e);
    }
    return basis;
  }
  SmithResult snf = smith_normal_form(B);
  // B = U^-1 S V^-1, quotient basis = columns of U^-1 at zero rows of S,
  // torsion shows up as diagonal entries > 1.
  ZMat Uinv = zmat_unimodular_inverse(snf.U);
  std::vector<ZVec> basis;
  int lim = std::min<int>(n, r);
  for (int i = 0; i < n; ++i) {
    Int d = (i < lim) ? snf.S[i][i] : Int(0);
    if (d == 0) {
      ZVec v(n, Int(0));
      for (int k = 0; k < n; ++k) v[k] = Uinv[k][i];
      basis.push_back(v);
    } else if (d != 1 && d != -1) {
      throw std::runtime_error("quotient lattice has torsion");
    }
  }
  return basis;
}

std::vector<std::vector<Rat>> qmat_from(const ZMat& A) {
  std::vector<std::vector<Rat>> Q(A.size());
  for (size_t i = 0; i < A.size(); ++i)
    for (const auto& v : A[i]) Q[i].push_back(Rat(v));
  return Q;
}

bool qmat_solve(std::vector<std::vector<Rat>> A, std::vector<Rat> b,
                std::vector<Rat>& solution, std::vector<std::vector<Rat>>* nullspace) {
  int m = A.size();
  int n = m ? A[0].size() : 0;
  std::vector<int> pivot_col;
  int row = 0;
  for (int c = 0; c < n && row < m; ++c) {
    int p = -1;
    for (int r = row; r < m; ++r)
      if (A[r][c] != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(A[row], A[p]);
    std::swap(b[row], b[p]);
    Rat piv = A[row][c];
    for (int j = 0; j < n; ++j) A[row][j] /= piv;
    b[row] /= piv;
    for (int r = 0; r < m; ++r) {
      if (r == row || A[r][c] == 0) continue;
      Rat f = A[r][c];
      for (int j = 0; j < n; ++j) A[r][j] -= f * A[row][j];
      b[r] -= f * b[row];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (int r = row; r < m; ++r)
    if (b[r] != 0) return false;

  solution.assign(n, Rat(0));
  for (int i = 0; i < (int)pivot_col.size(); ++i) solution[pivot_col[i]] = b[i];

  if (nullspace) {
    nullspace->clear();
    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[c] = true;
    for (int c = 0; c < n; ++c) {
      if (is_pivot[c]) continue;
      std::vector<Rat> v(n, Rat(0));
      v[c] = 1;
      for (int i = 0; i < (int)pivot_col.size(); ++i) v[pivot_col[i]] = -A[i][c];
      nullspace->push_back(v);
    }
  }
  return true;
}

}  // namespace prym
