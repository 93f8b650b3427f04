#pragma once

#include "prym/cut.hpp"
#include "prym/homology.hpp"

namespace prym {

struct ThreeToriDecomposition {
  std::vector<SaddleConnection> slits;      // 3 for (2,2), 4 for (1,1,2)
  std::array<std::vector<Vec2>, 3> tori;    // lattice bases, [0] = fixed torus
  std::array<QuadNum, 3> areas2;            // twice the torus areas
};

// Searches saddle connections up to |hol|^2 <= bound2 (default: the surface
// area) for a defining family of homologous slits and verifies by exact
// cutting that the complement is three tori, one fixed and two exchanged by
// tau. Absence within the bound is a legitimate nullopt.
std::optional<ThreeToriDecomposition> three_tori_decomposition(
    const TranslationSurface& s, const FlagMap& tau,
    std::optional<QuadNum> bound2 = std::nullopt);

// Homology class machinery for connections: the chain of the boundary-detour
// path of sc on cells(); differences of connections with equal endpoints are
// cycles.
Chain connection_chain(const TranslationSurface& s, const SaddleConnection& sc);

}  // namespace prym
