#pragma once

#include "prym/surface.hpp"

namespace prym {

// Translation map between two surfaces, recorded on their Delaunay cell
// complexes. sign = -1 means the map pulls omega back to -omega (it is an
// isomorphism source -> negated target).
struct FlagMap {
  int sign = 1;
  std::vector<int> he_map;      // source cell half-edge -> target cell half-edge
  std::vector<int> vertex_map;  // source vertex id -> target vertex id
  bool operator==(const FlagMap& o) const { return sign == o.sign && he_map == o.he_map; }
};

// All translation isomorphisms a -> b (sign +1) or a -> -b (sign -1),
// deduplicated, in a deterministic order. Ignores labels.
std::vector<FlagMap> all_isomorphisms(const TranslationSurface& a, const TranslationSurface& b,
                                      int sign);

// Label-respecting isomorphism when both surfaces carry labels, otherwise any.
std::optional<FlagMap> is_isomorphic(const TranslationSurface& a, const TranslationSurface& b);

std::vector<FlagMap> translation_automorphisms(const TranslationSurface& s, int sign);

FlagMap identity_map(const TranslationSurface& s);
FlagMap compose(const FlagMap& f, const FlagMap& g);  // f after g
bool is_identity(const FlagMap& f);
bool is_involution(const FlagMap& f);
bool preserves_labels(const TranslationSurface& a, const TranslationSurface& b, const FlagMap& f);

// Isolated fixed points of an anti-invariant involution (sign -1): fixed
// vertices, midpoints of edges sent to their reverses, and centers of cells
// rotated onto themselves by pi.
int count_fixed_points(const TranslationSurface& s, const FlagMap& f);

}  // namespace prym
