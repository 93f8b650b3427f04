#pragma once

#include "prym/surface.hpp"

namespace prym::fixtures {

// Torus from one parallelogram spanned by u, v (counterclockwise).
inline TranslationSurface lattice_torus(const Vec2& u, const Vec2& v) {
  std::vector<std::vector<Vec2>> polys = {{u, v, -u, -v}};
  TranslationSurface::Gluing glue = {{{0, 0}, {0, 2}}, {{0, 1}, {0, 3}}};
  return TranslationSurface::build(polys, glue);
}

inline TranslationSurface square_torus() { return lattice_torus(Vec2(1, 0), Vec2(0, 1)); }

inline TranslationSurface rect_torus(const QuadNum& w, const QuadNum& h) {
  return lattice_torus(Vec2(w, QuadNum(0)), Vec2(QuadNum(0), h));
}

}  // namespace prym::fixtures
