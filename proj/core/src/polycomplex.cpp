#include "prym/polycomplex.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>

namespace prym {

const char* err_name(Err e) {
  switch (e) {
    case Err::MismatchedEdge: return "MismatchedEdge";
    case Err::Disconnected: return "Disconnected";
    case Err::NonSimplePolygon: return "NonSimplePolygon";
    case Err::NonPositiveDeterminant: return "NonPositiveDeterminant";
    case Err::WrongDivisors: return "WrongDivisors";
    case Err::NotSelfAdjoint: return "NotSelfAdjoint";
    case Err::NotEigenform: return "NotEigenform";
    case Err::WrongDiscriminant: return "WrongDiscriminant";
    case Err::SlitOutOfRange: return "SlitOutOfRange";
    case Err::EmptyLocus: return "EmptyLocus";
    case Err::WrongEndpoints: return "WrongEndpoints";
    case Err::NotPeriodicWithinBudget: return "NotPeriodicWithinBudget";
    case Err::CollisionDuringMove: return "CollisionDuringMove";
    case Err::NotAdmissible: return "NotAdmissible";
    case Err::ParallelObstruction: return "ParallelObstruction";
    case Err::VectorTooLarge: return "VectorTooLarge";
    case Err::StepFailed: return "StepFailed";
    case Err::AssertionFailed: return "AssertionFailed";
    case Err::InvalidInput: return "InvalidInput";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

int PolyComplex::prev(int e) const {
  int c = e;
  while (next(c) != e) c = next(c);
  return c;
}

int PolyComplex::num_faces() const {
  int n = 0;
  for (int a : face_anchor)
    if (a >= 0) ++n;
  return n;
}

int PolyComplex::num_live_halfedges() const {
  int n = 0;
  for (const auto& h : he)
    if (h.alive) ++n;
  return n;
}

std::vector<int> PolyComplex::face_edges(int f) const {
  std::vector<int> out;
  int start = face_anchor[f];
  int e = start;
  do {
    out.push_back(e);
    e = next(e);
  } while (e != start);
  return out;
}

std::vector<int> PolyComplex::live_faces() const {
  std::vector<int> out;
  for (int f = 0; f < (int)face_anchor.size(); ++f)
    if (face_anchor[f] >= 0) out.push_back(f);
  return out;
}

std::vector<int> PolyComplex::live_halfedges() const {
  std::vector<int> out;
  for (int e = 0; e < (int)he.size(); ++e)
    if (he[e].alive) out.push_back(e);
  return out;
}

std::vector<std::vector<int>> PolyComplex::vertex_stars() const {
  std::vector<std::vector<int>> stars(num_vertices);
  std::vector<bool> seen(he.size(), false);
  for (int e0 : live_halfedges()) {
    if (seen[e0]) continue;
    std::vector<int> orbit;
    int e = e0;
    do {
      seen[e] = true;
      orbit.push_back(e);
      e = rot_ccw(e);
    } while (e != e0);
    stars[tail(e0)] = orbit;
  }
  return stars;
}

int PolyComplex::vertex_winding(int v) const {
  auto stars = vertex_stars();
  const auto& star = stars[v];
  int w = 0;
  for (size_t i = 0; i < star.size(); ++i) {
    int e = star[i];
    int f = star[(i + 1) % star.size()];
    if (arc_crosses_pos_x(vec(e), vec(f))) ++w;
  }
  return w;
}

QuadNum PolyComplex::area2() const {
  QuadNum total(0);
  for (int f : live_faces()) {
    auto pos = face_positions(f);
    auto edges = face_edges(f);
    for (size_t i = 0; i < edges.size(); ++i) {
      const Vec2& p = pos[i];
      Vec2 q = p + vec(edges[i]);
      total += cross(p, q);
    }
  }
  return total;
}

bool PolyComplex::is_triangulated() const {
  for (int f : live_faces())
    if (face_edges(f).size() != 3) return false;
  return true;
}

void PolyComplex::check_structure() const {
  for (int e : live_halfedges()) {
    require(he[e].opp >= 0 && he[he[e].opp].alive && he[he[e].opp].opp == e, Err::Internal,
            "opp involution broken");
    require(vec(e) + vec(opp(e)) == Vec2(0, 0), Err::Internal, "opp vectors not opposite");
    require(!vec(e).is_zero(), Err::Internal, "zero edge vector");
    require(he[e].face >= 0 && face_anchor[he[e].face] >= 0, Err::Internal, "dead face ref");
  }
  for (int f : live_faces()) {
    Vec2 sum(0, 0);
    for (int e : face_edges(f)) {
      require(he[e].face == f, Err::Internal, "face id mismatch");
      sum += vec(e);
    }
    require(sum.is_zero(), Err::Internal, "face boundary does not close");
  }
}

void PolyComplex::assign_vertices() {
  std::vector<bool> seen(he.size(), false);
  int v = 0;
  for (int e0 : live_halfedges()) {
    if (seen[e0]) continue;
    int e = e0;
    do {
      seen[e] = true;
      he[e].tail = v;
      e = rot_ccw(e);
    } while (e != e0);
    ++v;
  }
  num_vertices = v;
}

bool PolyComplex::connected() const {
  auto faces = live_faces();
  if (faces.empty()) return false;
  std::vector<bool> vis(face_anchor.size(), false);
  std::deque<int> q{faces[0]};
  vis[faces[0]] = true;
  int count = 1;
  while (!q.empty()) {
    int f = q.front();
    q.pop_front();
    for (int e : face_edges(f)) {
      int g = he[opp(e)].face;
      if (!vis[g]) {
        vis[g] = true;
        ++count;
        q.push_back(g);
      }
    }
  }
  return count == (int)faces.size();
}

std::vector<Vec2> PolyComplex::face_positions(int f) const {
  std::vector<Vec2> pos;
  Vec2 p(0, 0);
  for (int e : face_edges(f)) {
    pos.push_back(p);
    p += vec(e);
  }
  return pos;
}

// ---------------------------------------------------------------------------
// construction

namespace {

bool on_closed_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
  if (orient(a, b, p) != 0) return false;
  return dot(p - a, p - b).sign() <= 0;
}

bool segments_properly_cross(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
  int o1 = orient(a, b, c), o2 = orient(a, b, d);
  int o3 = orient(c, d, a), o4 = orient(c, d, b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

void check_simple_polygon(const std::vector<Vec2>& edges) {
  int n = edges.size();
  require(n >= 3, Err::NonSimplePolygon, "polygon needs at least 3 edges");
  std::vector<Vec2> pos;
  Vec2 p(0, 0);
  for (const auto& v : edges) {
    require(!v.is_zero(), Err::NonSimplePolygon, "zero edge vector");
    pos.push_back(p);
    p += v;
  }
  require(p.is_zero(), Err::NonSimplePolygon, "edge vectors do not close up");
  auto at = [&](int i) { return pos[i % n]; };
  // signed area > 0: counterclockwise
  QuadNum a2(0);
  for (int i = 0; i < n; ++i) a2 += cross(at(i), at(i + 1));
  require(a2.sign() > 0, Err::NonSimplePolygon, "polygon not counterclockwise");

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      bool adj_next = (j == i + 1);
      bool adj_wrap = (i == 0 && j == n - 1);
      Vec2 A = at(i), B = at(i + 1), C = at(j), D = at(j + 1);
      if (adj_next || adj_wrap) {
        // shared endpoint: B == C (next) or D == A (wrap)
        Vec2 far_i = adj_next ? A : B;
        Vec2 far_j = adj_next ? D : C;
        bool bad = (on_closed_segment(far_j, A, B) && far_j != (adj_next ? B : A)) ||
                   (on_closed_segment(far_i, C, D) && far_i != (adj_next ? C : D));
        require(!bad, Err::NonSimplePolygon, "adjacent edges overlap");
      } else {
        bool touch = segments_properly_cross(A, B, C, D) || on_closed_segment(C, A, B) ||
                     on_closed_segment(D, A, B) || on_closed_segment(A, C, D) ||
                     on_closed_segment(B, C, D);
        require(!touch, Err::NonSimplePolygon, "polygon self-intersects");
      }
    }
  }
}

}  // namespace

PolyComplex build_complex(
    const std::vector<std::vector<Vec2>>& polygons,
    const std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>& gluing) {
  require(!polygons.empty(), Err::InvalidInput, "no polygons");
  PolyComplex cx;
  std::vector<std::vector<int>> side_ids(polygons.size());
  for (size_t p = 0; p < polygons.size(); ++p) {
    check_simple_polygon(polygons[p]);
    int base = cx.he.size();
    int n = polygons[p].size();
    int f = cx.face_anchor.size();
    for (int i = 0; i < n; ++i) {
      PolyComplex::HalfEdge h;
      h.vec = polygons[p][i];
      h.next = base + (i + 1) % n;
      h.face = f;
      cx.disc = merge_disc(cx.disc, h.vec.disc());
      cx.he.push_back(h);
      side_ids[p].push_back(base + i);
    }
    cx.face_anchor.push_back(base);
  }
  auto side = [&](std::pair<int, int> s) -> int {
    require(s.first >= 0 && s.first < (int)polygons.size(), Err::InvalidInput,
            "gluing references missing polygon");
    require(s.second >= 0 && s.second < (int)polygons[s.first].size(), Err::InvalidInput,
            "gluing references missing edge");
    return side_ids[s.first][s.second];
  };
  for (const auto& [s1, s2] : gluing) {
    int e1 = side(s1), e2 = side(s2);
    require(e1 != e2, Err::MismatchedEdge, "edge glued to itself");
    require(cx.he[e1].opp < 0 && cx.he[e2].opp < 0, Err::InvalidInput, "edge glued twice");
    require(cx.vec(e1) + cx.vec(e2) == Vec2(0, 0), Err::MismatchedEdge,
            "glued edges are not opposite translates");
    cx.he[e1].opp = e2;
    cx.he[e2].opp = e1;
  }
  for (int e = 0; e < (int)cx.he.size(); ++e)
    require(cx.he[e].opp >= 0, Err::InvalidInput, "unglued edge");
  cx.assign_vertices();
  require(cx.connected(), Err::Disconnected, "surface is not connected");
  cx.check_structure();
  return cx;
}

// ---------------------------------------------------------------------------
// triangulation

void PolyComplex::triangulate() {
  for (int f : live_faces()) {
    while ((int)face_edges(f).size() > 3) {
      auto edges = face_edges(f);
      auto pos = face_positions(f);
      int n = edges.size();
      auto at = [&](int i) { return pos[(i % n + n) % n]; };
      int ear = -1;
      for (int k = 0; k < n && ear < 0; ++k) {
        Vec2 A = at(k - 1), B = at(k), C = at(k + 1);
        if (orient(A, B, C) <= 0) continue;
        bool blocked = false;
        for (int m = 0; m < n && !blocked; ++m) {
          if (m == (k - 1 + n) % n || m == k || m == (k + 1) % n) continue;
          const Vec2& W = pos[m];
          bool inside = orient(A, B, W) > 0 && orient(B, C, W) > 0 && orient(C, A, W) > 0;
          bool on_base = on_closed_segment(W, C, A) && W != C && W != A;
          if (inside || on_base) blocked = true;
        }
        if (!blocked) ear = k;
      }
      require(ear >= 0, Err::Internal, "no ear found while triangulating");

      int k = ear;
      int e_in = edges[(k - 1 + n) % n];   // A -> B
      int e_out = edges[k];                // B -> C
      int e_before = edges[(k - 2 + n) % n];
      int e_after = edges[(k + 1) % n];
      // diagonal pair: d closes the ear triangle (C -> A), d2 stays in f (A -> C)
      int d = he.size(), d2 = d + 1;
      HalfEdge hd, hd2;
      hd.vec = at(k - 1) - at(k + 1);
      hd2.vec = at(k + 1) - at(k - 1);
      hd.opp = d2;
      hd2.opp = d;
      hd.tail = tail(e_after);
      hd2.tail = tail(e_in);
      int tri = face_anchor.size();
      hd.face = tri;
      hd.next = e_in;
      he[e_in].face = tri;
      he[e_out].face = tri;
      he[e_out].next = d;
      hd2.face = f;
      hd2.next = e_after;
      he[e_before].next = d2;
      he.push_back(hd);
      he.push_back(hd2);
      face_anchor.push_back(d);
      face_anchor[f] = d2;
    }
  }
  check_structure();
}

// ---------------------------------------------------------------------------
// flips and Delaunay

bool PolyComplex::flippable(int e) const {
  int e2 = opp(e);
  if (face(e) == face(e2)) return false;
  int a = next(e), b = next(a);
  int c = next(e2), d = next(c);
  return cross(vec(b), vec(c)).sign() > 0 && cross(vec(d), vec(a)).sign() > 0;
}

void PolyComplex::flip(int e, std::vector<std::map<int, Int>>* tracked) {
  int e2 = opp(e);
  int a = next(e), b = next(a);
  int c = next(e2), d = next(c);
  require(next(b) == e && next(d) == e2, Err::Internal, "flip on non-triangle");
  require(flippable(e), Err::Internal, "flip would invert a triangle");

  if (tracked) {
    // substitute [e] = -[a] - [b] before the id is reused
    for (auto& chain : *tracked) {
      int key = std::min(e, e2);
      auto it = chain.find(key);
      if (it == chain.end()) continue;
      Int coeff = it->second;  // coefficient of the directed edge `key`
      chain.erase(it);
      Int s = (key == e) ? Int(-1) : Int(1);
      chain_add(*this, chain, a, s * coeff);
      chain_add(*this, chain, b, s * coeff);
    }
  }

  int f1 = face(e), f2 = face(e2);
  // new diagonal: e becomes S->R in triangle (b, c, e); e2 becomes R->S in (d, a, e2)
  he[e].vec = -(vec(b) + vec(c));
  he[e2].vec = -he[e].vec;
  he[e].tail = tail(d);
  he[e2].tail = tail(b);

  he[b].face = f1;
  he[c].face = f1;
  he[b].next = c;
  he[c].next = e;
  he[e].next = b;
  he[e].face = f1;

  he[d].face = f2;
  he[a].face = f2;
  he[d].next = a;
  he[a].next = e2;
  he[e2].next = d;
  he[e2].face = f2;

  face_anchor[f1] = b;
  face_anchor[f2] = d;
}

int PolyComplex::delaunay_violation(int e) const {
  int e2 = opp(e);
  Vec2 A(0, 0);
  Vec2 B = vec(e);
  Vec2 C = B + vec(next(e));
  Vec2 D = vec(next(e2));
  return incircle(A, B, C, D);
}

void PolyComplex::make_delaunay(std::vector<std::map<int, Int>>* tracked) {
  require(is_triangulated(), Err::Internal, "make_delaunay needs a triangulation");
  std::deque<int> queue;
  for (int e : live_halfedges())
    if (e < opp(e)) queue.push_back(e);
  long guard = 0;
  while (!queue.empty()) {
    int e = queue.front();
    queue.pop_front();
    if (!he[e].alive) continue;
    if (delaunay_violation(e) <= 0) continue;
    require(++guard < 1000000, Err::Internal, "delaunay flip budget exceeded");
    flip(e, tracked);
    int e2 = opp(e);
    queue.push_back(next(e));
    queue.push_back(next(next(e)));
    queue.push_back(next(e2));
    queue.push_back(next(next(e2)));
  }
}

bool PolyComplex::is_delaunay() const {
  for (int e : live_halfedges())
    if (e < opp(e) && delaunay_violation(e) > 0) return false;
  return true;
}

PolyComplex PolyComplex::merge_flat_edges(std::vector<int>* he_map_out) const {
  PolyComplex out = *this;
  std::vector<bool> flat(he.size(), false);
  for (int e : live_halfedges())
    if (e < opp(e) && delaunay_violation(e) == 0) flat[e] = flat[opp(e)] = true;

  // next pointers of the merged cells: skip over flat edges
  auto next_cell = [&](int e) {
    int g = next(e);
    while (flat[g]) g = next(opp(g));
    return g;
  };
  std::vector<bool> done(he.size(), false);
  std::vector<int> new_anchor;
  for (int e0 : live_halfedges()) {
    if (flat[e0] || done[e0]) continue;
    int f = new_anchor.size();
    new_anchor.push_back(e0);
    int e = e0;
    do {
      done[e] = true;
      int g = next_cell(e);
      out.he[e].next = g;
      out.he[e].face = f;
      e = g;
    } while (e != e0);
  }
  for (int e = 0; e < (int)he.size(); ++e)
    if (!out.he[e].alive || flat[e]) out.he[e].alive = false;
  out.face_anchor = new_anchor;
  out.compact(he_map_out);
  out.check_structure();
  return out;
}

PolyComplex PolyComplex::negated() const {
  PolyComplex out = *this;
  for (auto& h : out.he) h.vec = -h.vec;
  return out;
}

PolyComplex PolyComplex::transformed(const Mat2& m) const {
  require(m.det().sign() > 0, Err::NonPositiveDeterminant, "matrix determinant must be positive");
  PolyComplex out = *this;
  out.disc = 0;
  for (auto& h : out.he) {
    h.vec = m.apply(h.vec);
    if (h.alive) out.disc = merge_disc(out.disc, h.vec.disc());
  }
  return out;
}

void PolyComplex::compact(std::vector<int>* he_map_out) {
  std::vector<int> he_map(he.size(), -1);
  std::vector<HalfEdge> nhe;
  for (int e = 0; e < (int)he.size(); ++e) {
    if (!he[e].alive) continue;
    he_map[e] = nhe.size();
    nhe.push_back(he[e]);
  }
  std::vector<int> face_map(face_anchor.size(), -1);
  std::vector<int> nfa;
  for (int f = 0; f < (int)face_anchor.size(); ++f) {
    if (face_anchor[f] < 0) continue;
    face_map[f] = nfa.size();
    nfa.push_back(he_map[face_anchor[f]]);
  }
  for (auto& h : nhe) {
    h.next = he_map[h.next];
    h.opp = he_map[h.opp];
    h.face = face_map[h.face];
  }
  he = std::move(nhe);
  face_anchor = std::move(nfa);
  // vertex ids are preserved so labels and cross-complex references survive
  if (he_map_out) *he_map_out = std::move(he_map);
}

// ---------------------------------------------------------------------------
// chains

void chain_add(const PolyComplex& cx, Chain& c, int e, const Int& coeff) {
  if (coeff == 0) return;
  int key = e;
  Int k = coeff;
  if (cx.opp(e) < e) {
    key = cx.opp(e);
    k = -coeff;
  }
  c[key] += k;
  if (c[key] == 0) c.erase(key);
}

Vec2 chain_holonomy(const PolyComplex& cx, const Chain& c) {
  Vec2 h(0, 0);
  for (const auto& [e, k] : c) {
    Vec2 v = cx.vec(e);
    Rat kr(k);
    h += Vec2(QuadNum(kr) * v.x, QuadNum(kr) * v.y);
  }
  return h;
}

bool chain_is_cycle(const PolyComplex& cx, const Chain& c) {
  std::map<int, Int> boundary;
  for (const auto& [e, k] : c) {
    boundary[cx.head(e)] += k;
    boundary[cx.tail(e)] -= k;
  }
  for (const auto& [v, k] : boundary)
    if (k != 0) return false;
  return true;
}

}  // namespace prym
