#pragma once

#include "prym/saddle.hpp"

namespace prym {

// Result of slicing the surface along a family of pairwise disjoint saddle
// connections: connected pieces with boundary, with enough invariants to
// recognize cylinders and slit tori.
struct CutPiece {
  int faces = 0, edges = 0, vertices = 0;
  int boundary_circles = 0;
  int euler() const { return vertices - edges + faces; }
  int genus() const { return (2 - euler() - boundary_circles) / 2; }
  QuadNum area2;
  // holonomies of the boundary circles (sum of their edge vectors)
  std::vector<Vec2> boundary_holonomies;
  // which input connections appear on this piece's boundary
  std::vector<int> cut_ids;
  // generators of the absolute-period lattice of the piece
  std::vector<Vec2> period_basis;
};

std::vector<CutPiece> cut_along(const TranslationSurface& s,
                                const std::vector<SaddleConnection>& cuts);

// Gauss-reduced basis of the group generated by the given vectors (rank <= 2).
std::vector<Vec2> lattice_basis(std::vector<Vec2> gens);

}  // namespace prym
