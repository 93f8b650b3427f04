#pragma once

#include "prym/errors.hpp"
#include "prym/vec2.hpp"

#include <map>
#include <string>
#include <vector>

namespace prym {

// Half-edge complex of Euclidean polygons glued by translations.
//
// Each half-edge is one directed polygon side; `opp` pairs it with the
// reversed side it is glued to, and vec(opp(e)) == -vec(e). Faces are
// counterclockwise cycles through `next`. Vertex ids label the cone points
// (orbits of e -> opp(prev(e))).
struct PolyComplex {
  struct HalfEdge {
    int next = -1;
    int opp = -1;
    int face = -1;
    int tail = -1;
    Vec2 vec;
    bool alive = true;
  };

  std::vector<HalfEdge> he;
  std::vector<int> face_anchor;  // one live half-edge per face, -1 for dead faces
  int num_vertices = 0;
  long disc = 0;

  int next(int e) const { return he[e].next; }
  int opp(int e) const { return he[e].opp; }
  int face(int e) const { return he[e].face; }
  int tail(int e) const { return he[e].tail; }
  int head(int e) const { return he[next(e)].tail; }
  const Vec2& vec(int e) const { return he[e].vec; }
  int prev(int e) const;
  // Next outgoing half-edge counterclockwise around tail(e).
  int rot_ccw(int e) const { return opp(prev(e)); }

  int num_faces() const;
  int num_live_halfedges() const;
  int num_edges() const { return num_live_halfedges() / 2; }
  int euler_characteristic() const { return num_vertices - num_edges() + num_faces(); }
  int genus() const { return (2 - euler_characteristic()) / 2; }

  std::vector<int> face_edges(int f) const;
  std::vector<int> live_faces() const;
  std::vector<int> live_halfedges() const;
  // Outgoing half-edges grouped per vertex, in ccw rotation order.
  std::vector<std::vector<int>> vertex_stars() const;

  // Cone angle at v in multiples of 2*pi. Requires every corner angle < pi
  // (true on triangulations).
  int vertex_winding(int v) const;

  QuadNum area2() const;  // twice the total area
  bool is_triangulated() const;

  void check_structure() const;  // internal consistency asserts
  void assign_vertices();        // recompute tail ids from rotation orbits
  bool connected() const;

  // Corner chart of a face: position of tail(e) for each boundary half-edge,
  // anchored at the face anchor.
  std::vector<Vec2> face_positions(int f) const;

  // Splits every face of size > 3 by exact ear clipping. Existing half-edge
  // ids and vertex ids survive; diagonals are appended.
  void triangulate();

  // Flips the diagonal of the quadrilateral formed by the two triangles at e.
  // Chains registered via `tracked` are rewritten through the substitution
  // e -> -(other two sides).
  void flip(int e, std::vector<std::map<int, Int>>* tracked = nullptr);
  bool flippable(int e) const;

  // Strict in-circle state of interior edge e: >0 means the opposite apex
  // breaks the Delaunay property, 0 cocircular.
  int delaunay_violation(int e) const;

  void make_delaunay(std::vector<std::map<int, Int>>* tracked = nullptr);
  bool is_delaunay() const;

  // Merges faces across cocircular (flat) edges; result is the canonical
  // Delaunay cell decomposition when called on a Delaunay triangulation.
  // he_map_out (optional) receives old-id -> new-id, -1 for removed edges.
  PolyComplex merge_flat_edges(std::vector<int>* he_map_out = nullptr) const;

  PolyComplex negated() const;
  PolyComplex transformed(const Mat2& m) const;

  // Drops dead half-edges/faces; old-id -> new-id maps returned.
  void compact(std::vector<int>* he_map_out = nullptr);
};

// Chain = integer combination of half-edges; the value on opp(e) is the
// negative of the value on e, stored once under the smaller id.
using Chain = std::map<int, Int>;

void chain_add(const PolyComplex& cx, Chain& c, int e, const Int& coeff);
Vec2 chain_holonomy(const PolyComplex& cx, const Chain& c);
bool chain_is_cycle(const PolyComplex& cx, const Chain& c);

// Builds a complex from raw polygons and a gluing of directed sides.
// side (p, i) = i-th edge vector of polygon p. Validates everything the
// construction contract demands.
PolyComplex build_complex(const std::vector<std::vector<Vec2>>& polygons,
                          const std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>& gluing);

}  // namespace prym
