#pragma once

#include "prym/qnum.hpp"

#include <vector>

namespace prym {

// Dense exact integer matrices, sized for homology of small cell complexes.
using ZMat = std::vector<std::vector<Int>>;
using ZVec = std::vector<Int>;

ZMat zmat(int rows, int cols);
ZMat zmat_identity(int n);
ZMat zmat_mul(const ZMat& A, const ZMat& B);
ZVec zmat_apply(const ZMat& A, const ZVec& v);
ZMat zmat_transpose(const ZMat& A);
Int zmat_det(ZMat A);  // Bareiss fraction-free elimination
bool zmat_equal(const ZMat& A, const ZMat& B);
Int zmat_trace(const ZMat& A);

// Inverse of a matrix with det = +-1; throws otherwise.
ZMat zmat_unimodular_inverse(const ZMat& A);

struct SmithResult {
  ZMat U, S, V;  // U*A*V == S, U and V unimodular, S diagonal d1 | d2 | ...
};
SmithResult smith_normal_form(ZMat A);

// Basis of the integer kernel {x : A x = 0}; the returned columns generate a
// saturated sublattice.
std::vector<ZVec> zmat_kernel(const ZMat& A);

// Basis of the free part of Z^n / <columns of B>, represented by lifts in Z^n
// (n = B.rows). Throws if the quotient has torsion.
std::vector<ZVec> zmat_quotient_basis(const ZMat& B, int n);

// Solve A x = b over the rationals; empty optional if inconsistent.
struct QMat {
  std::vector<std::vector<Rat>> m;
};
std::vector<std::vector<Rat>> qmat_from(const ZMat& A);
bool qmat_solve(std::vector<std::vector<Rat>> A, std::vector<Rat> b,
                std::vector<Rat>& solution, std::vector<std::vector<Rat>>* nullspace);

}  // namespace prym
