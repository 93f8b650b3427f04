#pragma once

#include "prym/canonical.hpp"

namespace prym {

// Oriented geodesic segment between cone points with no cone point inside.
// Combinatorial data lives on tri(); the germ used for identity and for
// mapping under automorphisms lives on cells().
struct SaddleConnection {
  Vec2 holonomy;
  int start = -1, end = -1;  // vertex ids
  bool along_edge = false;   // the connection is a tri() edge
  int edge = -1;             // when along_edge: the directed tri half-edge
  int start_corner = -1;     // tri half-edge whose corner wedge emits the ray
  int end_corner = -1;       // tri half-edge at the arrival corner
  std::vector<int> crossings;  // tri half-edges whose face the segment enters

  // identity on the surface: start vertex + cell-level germ + holonomy
  struct Germ {
    int vertex;
    bool along;
    int cell_he;
    Vec2 direction;
    bool operator==(const Germ& o) const {
      return vertex == o.vertex && along == o.along && cell_he == o.cell_he &&
             parallel_same_direction(direction, o.direction);
    }
  };

  QuadNum length2() const { return holonomy.norm2(); }
};

SaddleConnection::Germ start_germ(const TranslationSurface& s, const SaddleConnection& sc);
SaddleConnection::Germ end_germ(const TranslationSurface& s, const SaddleConnection& sc);

bool same_connection(const TranslationSurface& s, const SaddleConnection& a,
                     const SaddleConnection& b);

// The image of sc under a translation (anti-)automorphism, located by its
// mapped germ among the enumerated connections of the same length.
SaddleConnection map_connection(const TranslationSurface& s, const FlagMap& f,
                                const SaddleConnection& sc);

SaddleConnection reverse_connection(const TranslationSurface& s, const SaddleConnection& sc);

// Complete list of oriented saddle connections with |holonomy|^2 <= len2,
// ordered by (length^2, holonomy, start). Exact breadth-first unfolding with
// sector pruning.
std::vector<SaddleConnection> saddle_connections(const TranslationSurface& s, const QuadNum& len2);

// Connections parallel to dir (same direction) with |holonomy|^2 <= len2.
std::vector<SaddleConnection> parallel_connections(const TranslationSurface& s, const Vec2& dir,
                                                   const QuadNum& len2);

struct TwinReport {
  std::vector<SaddleConnection> twins;
  std::vector<SaddleConnection> double_twins;  // (1,1,2) only
};

// Convention check: (2,2)^odd demands sigma0: P -> Q invariant under tau;
// (1,1,2) demands sigma0: R1 -> Q. Throws WrongEndpoints otherwise.
void check_convention(const TranslationSurface& s, const FlagMap& tau, const SaddleConnection& sc);

TwinReport twins(const TranslationSurface& s, const FlagMap& tau, const SaddleConnection& sigma0);

struct AdmissibilityReport {
  bool admissible;
  std::optional<SaddleConnection> certificate;  // violating connection
};

AdmissibilityReport is_admissible(const TranslationSurface& s, const FlagMap& tau,
                                  const SaddleConnection& sigma0);

// The connection from `from` to `to` with the given holonomy, if present
// within the enumeration bound.
std::optional<SaddleConnection> find_connection(const TranslationSurface& s,
                                                const std::string& from, const std::string& to,
                                                const Vec2& hol);

}  // namespace prym
