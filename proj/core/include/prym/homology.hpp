#pragma once

#include "prym/canonical.hpp"
#include "prym/zmat.hpp"

#include <array>

namespace prym {

// Integer first homology of the Delaunay cell complex with the symplectic
// intersection pairing. Cycles are edge chains; the pairing comes from the
// Whitney-form integral of dual cocycles: for a ccw triangle with cochain
// values (f0, f1, f2), the pairing density is (f0 g1 - f1 g0) / 2, summed
// over a fan subdivision of the cells. Convention pinned so that on the
// square torus <horizontal, vertical> = +1.
struct H1Data {
  int dim = 0;
  std::vector<Chain> basis;     // cycles on cells()
  ZMat gram;                    // gram[i][j] = <basis[i], basis[j]>
  std::vector<Chain> cocycles;  // integral cocycle basis (same key convention)
  ZMat eval_inv;                // inverse of cocycles[i](basis[j])
};

H1Data h1_basis(const TranslationSurface& s);

// Coordinates of a cycle (chain on cells()) in the H1 basis.
ZVec cycle_coordinates(const H1Data& h, const Chain& cycle);

Int intersection(const H1Data& h, const Chain& c1, const Chain& c2);

Chain map_chain(const FlagMap& f, const Chain& c, const PolyComplex& target);

// Matrix of the action of f on the basis: columns are coordinates of the
// images of the basis cycles. Satisfies A^T G A = G.
ZMat induced_action(const TranslationSurface& s, const H1Data& h, const FlagMap& f);

// Change of basis to a symplectic normal form diag(d1 J, d2 J, ...): returns
// the basis matrix U (columns) with U^T G U = normal form.
struct SkewNormalForm {
  ZMat basis;
  std::vector<Int> divisors;
};
SkewNormalForm skew_normal_form(const ZMat& gram);

// The tau-anti-invariant sublattice of H1 in the (1,2)-polarized basis
// (a0, b0, a, b): gram exactly [[0,1,0,0],[-1,0,0,0],[0,0,0,2],[0,0,-2,0]].
struct PrymLattice {
  ZMat inclusion;                     // 4 columns of H1-coordinates
  std::array<Chain, 4> basis_cycles;  // chains on cells()
  ZMat gram;
};

PrymLattice anti_invariant_lattice(const TranslationSurface& s, const H1Data& h, const FlagMap& tau);

std::array<Vec2, 4> period_vector(const TranslationSurface& s, const PrymLattice& lat);

// Holonomy of a cell-complex chain.
Vec2 holonomy(const TranslationSurface& s, const Chain& c);

ZMat prym_polarization();  // diag(J, 2J)

}  // namespace prym
