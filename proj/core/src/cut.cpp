#include "prym/cut.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>

namespace prym {

namespace {

Int round_nearest(const QuadNum& x) {
  double d = x.to_double();
  Int n(static_cast<long>(std::llround(d)));
  while (compare(x - QuadNum(Rat(n)), QuadNum(Rat(1, 2))) > 0) n += 1;
  while (compare(x - QuadNum(Rat(n)), QuadNum(Rat(-1, 2))) < 0) n -= 1;
  return n;
}

struct DSU {
  std::vector<int> p;
  explicit DSU(int n) : p(n) {
    for (int i = 0; i < n; ++i) p[i] = i;
  }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

std::vector<Vec2> lattice_basis(std::vector<Vec2> gens) {
  std::vector<Vec2> basis;
  auto reduce_against = [&](Vec2& v, const Vec2& u) {
    Int n = round_nearest(dot(v, u) / u.norm2());
    if (n != 0) v -= QuadNum(Rat(n)) * u;
  };
  auto insert = [&](Vec2 g) {
    for (int pass = 0; pass < 200 && !g.is_zero(); ++pass) {
      for (const Vec2& u : basis) reduce_against(g, u);
      if (g.is_zero()) return;
      // place g, keeping the basis sorted by length
      size_t where = basis.size();
      for (size_t i = 0; i < basis.size(); ++i)
        if (compare(g.norm2(), basis[i].norm2()) < 0) {
          where = i;
          break;
        }
      if (where == basis.size()) {
        basis.push_back(g);
        require(basis.size() <= 2, Err::Internal, "period lattice rank exceeds 2");
        return;
      }
      std::swap(g, basis[where]);
      // the displaced vector needs re-reduction against the new entry
    }
    fail(Err::Internal, "lattice reduction did not settle");
  };
  for (const Vec2& g : gens) insert(g);
  if (basis.size() == 2 && cross(basis[0], basis[1]).sign() < 0) basis[1] = -basis[1];
  return basis;
}

std::vector<CutPiece> cut_along(const TranslationSurface& s,
                                const std::vector<SaddleConnection>& cuts) {
  const PolyComplex& tri = s.tri();

  std::vector<bool> edge_cut(tri.he.size(), false);
  std::vector<int> edge_cut_id(tri.he.size(), -1);
  struct NodeRef {       // endpoint of a chord, described combinatorially
    int corner = -1;     // corner half-edge
    int on_edge = -1;    // or a point inside this half-edge
    QuadNum t;
  };
  struct Chord {
    NodeRef a, b;
    int cut_id;
  };
  std::map<int, std::vector<Chord>> face_chords;
  std::map<int, std::vector<QuadNum>> edge_params;

  auto chart_pos_of_he = [&](int face, int he) {
    auto edges = tri.face_edges(face);
    auto pos = tri.face_positions(face);
    for (size_t i = 0; i < edges.size(); ++i)
      if (edges[i] == he) return pos[i];
    fail(Err::Internal, "half-edge not on face");
  };

  for (size_t k = 0; k < cuts.size(); ++k) {
    const auto& sc = cuts[k];
    if (sc.along_edge) {
      edge_cut[sc.edge] = edge_cut[tri.opp(sc.edge)] = true;
      edge_cut_id[sc.edge] = edge_cut_id[tri.opp(sc.edge)] = k;
      continue;
    }
    // develop the segment [0, hol] through its crossing sequence
    Vec2 hol = sc.holonomy;
    int f = tri.face(sc.start_corner);
    Vec2 gt(0, 0);               // global position of tail(anchor_he)
    int anchor_he = sc.start_corner;
    NodeRef prev{sc.start_corner, -1, QuadNum(0)};
    for (size_t i = 0; i < sc.crossings.size(); ++i) {
      int ce = sc.crossings[i];
      int exit_he = tri.opp(ce);
      Vec2 A = gt + (chart_pos_of_he(f, exit_he) - chart_pos_of_he(f, anchor_he));
      Vec2 B = A + tri.vec(exit_he);
      QuadNum denom = cross(hol, B - A);
      require(denom.sign() != 0, Err::Internal, "cut segment parallel to crossed edge");
      QuadNum tseg = cross(A, B - A) / denom;
      Vec2 q(tseg * hol.x, tseg * hol.y);
      QuadNum u = tri.vec(exit_he).x.is_zero() ? (q.y - A.y) / tri.vec(exit_he).y
                                               : (q.x - A.x) / tri.vec(exit_he).x;
      NodeRef here{-1, exit_he, u};
      face_chords[f].push_back({prev, here, (int)k});
      edge_params[exit_he].push_back(u);
      edge_params[tri.opp(exit_he)].push_back(QuadNum(1) - u);
      prev = NodeRef{-1, ce, QuadNum(1) - u};
      f = tri.face(ce);
      anchor_he = ce;
      gt = B;
    }
    face_chords[f].push_back({prev, NodeRef{sc.end_corner, -1, QuadNum(0)}, (int)k});
  }

  // subdivide each face into nodes / boundary subedges, then split by chords
  struct SubEdge {
    int from, to;       // node indices within the face
    int orig_he = -1;   // -1 for chords
    QuadNum t0, t1;     // interval on orig_he
    int cut_id = -1;
  };
  struct SubPoly {
    int face;
    std::vector<SubEdge> edges;
  };
  std::vector<SubPoly> polys;
  std::map<int, std::vector<Vec2>> face_node_pos;  // face -> node positions
  // gluing keys of edge pieces: (canonical pair he, interval on it)
  struct PieceKey {
    int canon_he;
    QuadNum t0, t1;
    bool operator<(const PieceKey& o) const {
      if (canon_he != o.canon_he) return canon_he < o.canon_he;
      int c = lex_compare(t0, o.t0);
      if (c != 0) return c < 0;
      return lex_compare(t1, o.t1) < 0;
    }
  };

  for (int f : tri.live_faces()) {
    auto edges = tri.face_edges(f);
    auto pos = tri.face_positions(f);
    std::vector<Vec2> node_pos;
    std::vector<NodeRef> node_ref;
    std::vector<SubEdge> boundary;
    std::vector<int> corner_node(edges.size());
    for (size_t j = 0; j < edges.size(); ++j) {
      corner_node[j] = node_pos.size();
      node_pos.push_back(pos[j]);
      node_ref.push_back({edges[j], -1, QuadNum(0)});
    }
    for (size_t j = 0; j < edges.size(); ++j) {
      int e = edges[j];
      std::vector<QuadNum> params =
          edge_params.count(e) ? edge_params[e] : std::vector<QuadNum>{};
      std::sort(params.begin(), params.end(),
                [](const QuadNum& a, const QuadNum& b) { return compare(a, b) < 0; });
      params.erase(std::unique(params.begin(), params.end()), params.end());
      int from = corner_node[j];
      QuadNum t_prev(0);
      for (const auto& t : params) {
        int mid = node_pos.size();
        node_pos.push_back(pos[j] + Vec2(t * tri.vec(e).x, t * tri.vec(e).y));
        node_ref.push_back({-1, e, t});
        boundary.push_back({from, mid, e, t_prev, t, edge_cut[e] ? edge_cut_id[e] : -1});
        from = mid;
        t_prev = t;
      }
      boundary.push_back({from, corner_node[(j + 1) % edges.size()], e, t_prev, QuadNum(1),
                          edge_cut[e] ? edge_cut_id[e] : -1});
    }
    auto node_of = [&](const NodeRef& n) -> int {
      for (size_t i = 0; i < node_ref.size(); ++i) {
        if (n.corner >= 0 && node_ref[i].corner == n.corner) return i;
        if (n.on_edge >= 0 && node_ref[i].on_edge == n.on_edge && node_ref[i].t == n.t) return i;
      }
      fail(Err::Internal, "chord endpoint not among face nodes");
    };
    struct FaceChord {
      int a, b, cut_id;
    };
    std::vector<FaceChord> fch;
    if (face_chords.count(f))
      for (const auto& ch : face_chords[f]) fch.push_back({node_of(ch.a), node_of(ch.b), ch.cut_id});

    std::deque<std::pair<std::vector<SubEdge>, std::vector<FaceChord>>> work;
    work.push_back({boundary, fch});
    while (!work.empty()) {
      auto [cycle, cs] = std::move(work.front());
      work.pop_front();
      if (cs.empty()) {
        polys.push_back({f, std::move(cycle)});
        continue;
      }
      FaceChord ch = cs.back();
      cs.pop_back();
      int ia = -1, ib = -1;
      for (size_t i = 0; i < cycle.size(); ++i) {
        if (cycle[i].from == ch.a) ia = i;
        if (cycle[i].from == ch.b) ib = i;
      }
      require(ia >= 0 && ib >= 0 && ia != ib, Err::Internal, "bad chord split");
      auto build_side = [&](int start, int stop, int close_from, int close_to) {
        std::vector<SubEdge> side;
        for (int i = start; i != stop; i = (i + 1) % (int)cycle.size()) side.push_back(cycle[i]);
        side.push_back({close_from, close_to, -1, QuadNum(0), QuadNum(0), ch.cut_id});
        return side;
      };
      auto side1 = build_side(ia, ib, ch.b, ch.a);  // a ... b closed by chord b->a
      auto side2 = build_side(ib, ia, ch.a, ch.b);
      auto contains_node = [](const std::vector<SubEdge>& side, int node) {
        for (const auto& e : side)
          if (e.from == node || e.to == node) return true;
        return false;
      };
      std::vector<FaceChord> cs1, cs2;
      for (const auto& c2 : cs) {
        if (contains_node(side1, c2.a) && contains_node(side1, c2.b) &&
            !(contains_node(side2, c2.a) && contains_node(side2, c2.b)))
          cs1.push_back(c2);
        else if (contains_node(side2, c2.a) && contains_node(side2, c2.b) &&
                 !(contains_node(side1, c2.a) && contains_node(side1, c2.b)))
          cs2.push_back(c2);
        else {
          // both endpoints on the splitting chord: decide by a midpoint test
          // (cannot happen for disjoint straight chords)
          fail(Err::Internal, "ambiguous chord distribution");
        }
      }
      work.push_back({std::move(side1), std::move(cs1)});
      work.push_back({std::move(side2), std::move(cs2)});
    }
    face_node_pos[f] = std::move(node_pos);
  }

  // instantiate piece half-edges and glue
  struct PHE {
    int poly, from_inst, to_inst;
    Vec2 vec;
    int partner = -1;
    int cut_id = -1;
  };
  std::vector<PHE> phe;
  std::map<std::pair<int, int>, int> inst_of;  // (poly, face-node) -> instance
  int n_inst = 0;
  auto instance = [&](int poly, int node) {
    auto key = std::make_pair(poly, node);
    auto it = inst_of.find(key);
    if (it != inst_of.end()) return it->second;
    inst_of[key] = n_inst;
    return n_inst++;
  };
  std::map<std::pair<PieceKey, int>, int> open_gluings;  // (key, side) -> phe
  for (size_t p = 0; p < polys.size(); ++p) {
    const auto& sp = polys[p];
    const auto& npos = face_node_pos[sp.face];
    for (const auto& e : sp.edges) {
      PHE h;
      h.poly = p;
      h.from_inst = instance(p, e.from);
      h.to_inst = instance(p, e.to);
      h.vec = npos[e.to] - npos[e.from];
      h.cut_id = e.cut_id;
      int id = phe.size();
      if (e.orig_he >= 0 && e.cut_id < 0) {
        // gluable piece of an original edge
        int canon = std::min(e.orig_he, tri.opp(e.orig_he));
        PieceKey key;
        if (e.orig_he == canon) {
          key = {canon, e.t0, e.t1};
        } else {
          key = {canon, QuadNum(1) - e.t1, QuadNum(1) - e.t0};
        }
        int side = (e.orig_he == canon) ? 0 : 1;
        auto it = open_gluings.find({key, 1 - side});
        if (it != open_gluings.end()) {
          h.partner = it->second;
          phe.push_back(h);
          phe[it->second].partner = id;
          open_gluings.erase(it);
        } else {
          open_gluings[{key, side}] = id;
          phe.push_back(h);
        }
      } else {
        phe.push_back(h);  // boundary: chord side or cut edge
      }
    }
  }
  require(open_gluings.empty(), Err::Internal, "unmatched edge pieces after cutting");

  // components of sub-polygons through gluings
  DSU comp(polys.size());
  for (const auto& h : phe)
    if (h.partner >= 0) comp.unite(h.poly, phe[h.partner].poly);
  // vertex instances identified through gluings
  DSU verts(n_inst);
  for (size_t i = 0; i < phe.size(); ++i) {
    if (phe[i].partner < 0) continue;
    const PHE& a = phe[i];
    const PHE& b = phe[a.partner];
    verts.unite(a.from_inst, b.to_inst);
    verts.unite(a.to_inst, b.from_inst);
  }

  std::map<int, int> piece_index;
  std::vector<CutPiece> pieces;
  auto piece_of_poly = [&](int poly) -> CutPiece& {
    int root = comp.find(poly);
    auto it = piece_index.find(root);
    if (it == piece_index.end()) {
      piece_index[root] = pieces.size();
      pieces.push_back(CutPiece{});
      return pieces.back();
    }
    return pieces[it->second];
  };
  // faces and area
  for (size_t p = 0; p < polys.size(); ++p) {
    CutPiece& pc = piece_of_poly(p);
    pc.faces += 1;
    const auto& npos = face_node_pos[polys[p].face];
    for (const auto& e : polys[p].edges) pc.area2 += cross(npos[e.from], npos[e.to]);
  }
  // edges
  for (size_t i = 0; i < phe.size(); ++i) {
    const PHE& h = phe[i];
    CutPiece& pc = piece_of_poly(h.poly);
    if (h.partner < 0 || (int)i < h.partner) pc.edges += 1;
    if (h.cut_id >= 0 &&
        std::find(pc.cut_ids.begin(), pc.cut_ids.end(), h.cut_id) == pc.cut_ids.end())
      pc.cut_ids.push_back(h.cut_id);
  }
  // vertices
  {
    std::map<int, std::vector<bool>> seen;  // piece root -> instance seen
    for (size_t i = 0; i < phe.size(); ++i) {
      int root = comp.find(phe[i].poly);
      auto& sv = seen[root];
      if (sv.empty()) sv.assign(n_inst, false);
      for (int inst : {phe[i].from_inst, phe[i].to_inst}) {
        int r = verts.find(inst);
        if (!sv[r]) {
          sv[r] = true;
          piece_of_poly(phe[i].poly).vertices += 1;
        }
      }
    }
  }
  // boundary circles and their holonomies: next-in-poly then hop gluings
  {
    std::vector<int> next_in_poly(phe.size());
    std::map<int, std::vector<int>> poly_edges;
    for (size_t i = 0; i < phe.size(); ++i) poly_edges[phe[i].poly].push_back(i);
    for (auto& [p, ids] : poly_edges)
      for (size_t k = 0; k < ids.size(); ++k) next_in_poly[ids[k]] = ids[(k + 1) % ids.size()];
    std::vector<bool> done(phe.size(), false);
    for (size_t i = 0; i < phe.size(); ++i) {
      if (phe[i].partner >= 0 || done[i]) continue;
      Vec2 hol(0, 0);
      int w = i;
      do {
        done[w] = true;
        hol += phe[w].vec;
        int x = next_in_poly[w];
        while (phe[x].partner >= 0) x = next_in_poly[phe[x].partner];
        w = x;
      } while (w != (int)i);
      CutPiece& pc = piece_of_poly(phe[i].poly);
      pc.boundary_circles += 1;
      pc.boundary_holonomies.push_back(hol);
    }
  }
  // absolute period lattice per piece: fundamental cycle holonomies
  {
    // graph on vertex classes: one edge per glued pair / boundary subedge
    struct GEdge {
      int u, v;
      Vec2 vec;
      int piece;
    };
    std::vector<GEdge> gedges;
    for (size_t i = 0; i < phe.size(); ++i) {
      const PHE& h = phe[i];
      if (h.partner >= 0 && (int)i > h.partner) continue;
      int root = comp.find(h.poly);
      gedges.push_back({verts.find(h.from_inst), verts.find(h.to_inst), h.vec,
                        piece_index.count(root) ? piece_index[root] : -1});
    }
    std::map<int, Vec2> pot;
    std::vector<bool> used(gedges.size(), false);
    bool progress = true;
    // BFS forest; roots get potential 0
    std::map<int, int> vert_piece;
    for (const auto& e : gedges) {
      vert_piece[e.u] = e.piece;
      vert_piece[e.v] = e.piece;
    }
    for (const auto& [v, p] : vert_piece)
      if (!pot.count(v)) {
        // BFS from v
        pot[v] = Vec2(0, 0);
        std::deque<int> q{v};
        while (!q.empty()) {
          int cur = q.front();
          q.pop_front();
          for (size_t i = 0; i < gedges.size(); ++i) {
            if (used[i]) continue;
            const auto& e = gedges[i];
            if (e.u == cur && !pot.count(e.v)) {
              pot[e.v] = pot[e.u] + e.vec;
              used[i] = true;
              q.push_back(e.v);
            } else if (e.v == cur && !pot.count(e.u)) {
              pot[e.u] = pot[e.v] - e.vec;
              used[i] = true;
              q.push_back(e.u);
            }
          }
        }
      }
    static_cast<void>(progress);
    std::map<int, std::vector<Vec2>> gens;
    for (size_t i = 0; i < gedges.size(); ++i) {
      if (used[i]) continue;
      const auto& e = gedges[i];
      Vec2 holo = pot[e.u] + e.vec - pot[e.v];
      if (!holo.is_zero()) gens[e.piece].push_back(holo);
    }
    for (auto& [piece, vecs] : gens)
      if (piece >= 0) pieces[piece].period_basis = lattice_basis(vecs);
  }

  return pieces;
}

}  // namespace prym
