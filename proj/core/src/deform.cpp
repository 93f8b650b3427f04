#include "prym/deform.hpp"

#include <algorithm>

namespace prym {

namespace {

// per-half-edge vector adjustment under a joint vertex displacement
Vec2 he_adjust(const PolyComplex& tri, int e, const std::map<int, Vec2>& disp) {
  Vec2 adj(0, 0);
  auto it = disp.find(tri.tail(e));
  if (it != disp.end()) adj -= it->second;
  it = disp.find(tri.head(e));
  if (it != disp.end()) adj += it->second;
  return adj;
}

// Exact decision: do all faces stay positively oriented while the
// displacement ramps linearly over t in (0, 1]? Faces in `allowed_zero` must
// instead flatten exactly at t = 1 and stay positive before.
bool displacement_valid(const PolyComplex& tri, const std::map<int, Vec2>& disp,
                        const std::vector<int>& allowed_zero) {
  for (int f : tri.live_faces()) {
    auto edges = tri.face_edges(f);
    Vec2 u = tri.vec(edges[0]), w = tri.vec(edges[1]);
    Vec2 a = he_adjust(tri, edges[0], disp), b = he_adjust(tri, edges[1], disp);
    QuadNum c0 = cross(u, w);
    QuadNum c1 = cross(u, b) + cross(a, w);
    QuadNum c2 = cross(a, b);
    bool allowed = std::find(allowed_zero.begin(), allowed_zero.end(), f) != allowed_zero.end();
    QuadNum f1 = c0 + c1 + c2;  // area at t = 1
    if (allowed) {
      if (f1.sign() != 0) return false;
    } else {
      if (f1.sign() <= 0) return false;
    }
    // interior dip: only a convex-up parabola with vertex inside (0,1) can
    // dip below zero while both endpoints are fine
    if (c2.sign() > 0) {
      QuadNum tv = -c1 / (QuadNum(2) * c2);
      if (tv.sign() > 0 && compare(tv, QuadNum(1)) < 0) {
        QuadNum fv = c0 + c1 * tv + c2 * tv * tv;
        if (fv.sign() <= 0) return false;
      }
    }
  }
  return true;
}

void apply_displacement(PolyComplex& tri, const std::map<int, Vec2>& disp) {
  for (int e : tri.live_halfedges()) {
    Vec2 adj = he_adjust(tri, e, disp);
    if (!adj.is_zero()) tri.he[e].vec += adj;
  }
}

}  // namespace

Deformer::Deformer(const TranslationSurface& s) {
  tri = s.tri();
  labels = s.labels();
}

int Deformer::track(const TranslationSurface& s, const Chain& cells_chain) {
  const auto& to_cells = s.tri_to_cells();
  std::map<int, int> back;
  for (size_t e = 0; e < to_cells.size(); ++e)
    if (to_cells[e] >= 0) back[to_cells[e]] = e;
  Chain c;
  for (const auto& [key, coeff] : cells_chain) {
    auto it = back.find(key);
    require(it != back.end(), Err::Internal, "cells chain key missing in triangulation");
    chain_add(tri, c, it->second, coeff);
  }
  tracked.push_back(std::move(c));
  return tracked.size() - 1;
}

Vec2 Deformer::tracked_holonomy(int idx) const { return chain_holonomy(tri, tracked[idx]); }

TranslationSurface Deformer::finish() {
  tri.check_structure();
  return TranslationSurface::from_complex(tri, labels);
}

void Deformer::translate(int vertex, const Vec2& delta) {
  Vec2 rest = delta;
  for (int round = 0; round < 2048; ++round) {
    if (rest.is_zero()) return;
    // a zero hitting another cone point is a refused move
    for (int e : tri.live_halfedges()) {
      if (tri.tail(e) != vertex || tri.head(e) == vertex) continue;
      Vec2 w = tri.vec(e);
      if (cross(w, rest).sign() != 0 || dot(w, rest).sign() <= 0) continue;
      if (compare(w.norm2(), rest.norm2()) <= 0)
        fail(Err::CollisionDuringMove, "zero would hit another cone point");
    }
    Vec2 part = rest;
    int halvings = 0;
    while (!displacement_valid(tri, {{vertex, part}}, {})) {
      part = Vec2(part.x / QuadNum(2), part.y / QuadNum(2));
      require(++halvings < 64, Err::CollisionDuringMove, "move blocked: no valid sub-step");
    }
    apply_displacement(tri, {{vertex, part}});
    tri.make_delaunay(&tracked);
    rest -= part;
  }
  fail(Err::Internal, "vertex translation did not converge");
}

void Deformer::contract_edges(std::vector<int> edges, const std::map<int, Vec2>& disp) {
  std::vector<int> allowed;
  for (int e : edges) {
    require((tri.vec(e) + he_adjust(tri, e, disp)).is_zero(), Err::Internal,
            "contraction does not null the edge");
    allowed.push_back(tri.face(e));
    allowed.push_back(tri.face(tri.opp(e)));
  }
  require(displacement_valid(tri, disp, allowed), Err::Internal,
          "contraction blocked by an unrelated degeneracy");
  apply_displacement(tri, disp);

  for (int e : edges) {
    int e2 = tri.opp(e);
    require(tri.vec(e).is_zero(), Err::Internal, "edge not nulled");
    int a = tri.next(e), b = tri.next(a);   // face (e, a, b)
    int c = tri.next(e2), d = tri.next(c);  // face (e2, c, d)
    require(tri.next(b) == e && tri.next(d) == e2, Err::Internal, "contract on non-triangle");
    for (auto& chain : tracked) {
      auto take = [&](int he) {
        int key = std::min(he, tri.opp(he));
        auto it = chain.find(key);
        Int v = 0;
        if (it != chain.end()) {
          v = (key == he) ? it->second : -it->second;
          chain.erase(it);
        }
        return v;
      };
      take(e);  // the contracted edge carries no holonomy anymore
      Int ka = take(a), kb = take(b);
      Int kc = take(c), kd = take(d);
      if (ka - kb != 0) chain_add(tri, chain, tri.opp(b), ka - kb);
      if (kc - kd != 0) chain_add(tri, chain, tri.opp(d), kc - kd);
    }
    int oa = tri.opp(a), ob = tri.opp(b), oc = tri.opp(c), od = tri.opp(d);
    tri.he[oa].opp = ob;
    tri.he[ob].opp = oa;
    tri.he[oc].opp = od;
    tri.he[od].opp = oc;
    for (int dead : {e, e2, a, b, c, d}) {
      tri.face_anchor[tri.he[dead].face] = -1;
      tri.he[dead].alive = false;
    }
  }
  tri.assign_vertices();
  tri.make_delaunay(&tracked);
}

int Deformer::count_direction_rays(int vertex, const Vec2& v) const {
  auto stars = tri.vertex_stars();
  int count = 0;
  for (int h : stars[vertex]) {
    Vec2 lo = tri.vec(h);
    require(!parallel_same_direction(lo, v), Err::InvalidInput,
            "split direction runs along an edge at the zero");
    Vec2 hi = -tri.vec(tri.prev(h));
    if (dir_strictly_inside(lo, hi, v)) ++count;
  }
  return count;
}

int Deformer::split_vertex(int vertex, const Vec2& v, int ray_index, int turns,
                           const Vec2& delta_old, const Vec2& delta_new) {
  auto stars = tri.vertex_stars();
  const auto& star = stars[vertex];
  int m = star.size();
  std::vector<int> ray_corners;
  for (int i = 0; i < m; ++i) {
    Vec2 lo = tri.vec(star[i]);
    require(!parallel_same_direction(lo, v), Err::InvalidInput,
            "split direction runs along an edge at the zero");
    Vec2 hi = -tri.vec(tri.prev(star[i]));
    if (dir_strictly_inside(lo, hi, v)) ray_corners.push_back(i);
  }
  int rays = ray_corners.size();
  require(rays >= 2 && turns >= 1 && turns < rays, Err::InvalidInput, "bad split parameters");
  int ia = ray_corners[((ray_index % rays) + rays) % rays];
  int ib = ray_corners[((ray_index + turns) % rays + rays) % rays];
  int ha = star[ia], hb = star[ib];
  require(tri.face(ha) != tri.face(hb), Err::InvalidInput,
          "split corners share a face; choose another ray");

  // sectors strictly after corner ia up to and including corner ib's opening
  // half-edge move to the new vertex
  std::vector<bool> to_new(tri.he.size(), false);
  for (int k = ia + 1;; ++k) {
    int idx = k % m;
    to_new[star[idx]] = true;
    if (idx == ib) break;
  }

  int new_vertex = tri.num_vertices;
  for (int e : tri.live_halfedges()) {
    Vec2 adj(0, 0);
    if (tri.tail(e) == vertex) adj -= to_new[e] ? delta_new : delta_old;
    if (tri.head(e) == vertex) adj += to_new[tri.opp(e)] ? delta_new : delta_old;
    if (!adj.is_zero()) tri.he[e].vec += adj;
  }
  for (int e : tri.live_halfedges())
    if (tri.tail(e) == vertex && to_new[e]) tri.he[e].tail = new_vertex;
  tri.num_vertices += 1;

  // new edge pair: e1 old -> new, e2 new -> old
  Vec2 slit = delta_new - delta_old;
  require(!slit.is_zero(), Err::InvalidInput, "zero slit vector");
  int e1 = tri.he.size(), e2 = e1 + 1;
  {
    PolyComplex::HalfEdge h1, h2;
    h1.vec = slit;
    h2.vec = -slit;
    h1.opp = e2;
    h2.opp = e1;
    h1.tail = vertex;
    h2.tail = new_vertex;
    h1.next = h2.next = -1;
    h1.face = h2.face = -1;
    tri.he.push_back(h1);
    tri.he.push_back(h2);
  }

  // reroute tracked cycles across the slit: splitting the vertex can leave a
  // chain with boundary +-(new - old); closing it up through the slit edge
  // restores the cycle and its holonomy
  for (auto& chain : tracked) {
    Int b = 0;
    for (const auto& [key, coeff] : chain) {
      if (tri.head(key) == new_vertex) b += coeff;
      if (tri.tail(key) == new_vertex) b -= coeff;
    }
    if (b != 0) chain_add(tri, chain, e1, -b);
  }

  // Insert the closing half-edge into the corner triangle of h, splitting the
  // resulting quad (closing, h, n, p) into two triangles by a valid diagonal.
  auto split_corner = [&](int h, int closing) {
    int n = tri.next(h), p = tri.next(n);
    require(tri.next(p) == h, Err::Internal, "split corner is not on a triangle");
    tri.face_anchor[tri.he[h].face] = -1;
    Vec2 q0(0, 0);
    Vec2 q1 = tri.he[closing].vec;
    Vec2 q2 = q1 + tri.vec(h);
    Vec2 q3 = q2 + tri.vec(n);
    require((q3 + tri.vec(p)).is_zero(), Err::Internal, "slit quad does not close");
    int d1 = tri.he.size(), d2 = d1 + 1;
    PolyComplex::HalfEdge hd1, hd2;
    hd1.opp = d2;
    hd2.opp = d1;
    auto make_faces = [&](int fa0, int fa1, int fa2, int fb0, int fb1, int fb2) {
      int fa = tri.face_anchor.size();
      tri.face_anchor.push_back(fa0);
      for (int x : {fa0, fa1, fa2}) tri.he[x].face = fa;
      tri.he[fa0].next = fa1;
      tri.he[fa1].next = fa2;
      tri.he[fa2].next = fa0;
      int fb = tri.face_anchor.size();
      tri.face_anchor.push_back(fb0);
      for (int x : {fb0, fb1, fb2}) tri.he[x].face = fb;
      tri.he[fb0].next = fb1;
      tri.he[fb1].next = fb2;
      tri.he[fb2].next = fb0;
    };
    if (orient(q0, q1, q3) > 0 && orient(q1, q2, q3) > 0) {
      // diagonal q1 -> q3: triangles (closing, d1, p) and (h, n, d2)
      hd1.vec = q3 - q1;
      hd1.tail = tri.tail(h);
      hd2.vec = q1 - q3;
      hd2.tail = tri.tail(p);
      tri.he.push_back(hd1);
      tri.he.push_back(hd2);
      make_faces(closing, d1, p, h, n, d2);
    } else if (orient(q0, q1, q2) > 0 && orient(q0, q2, q3) > 0) {
      // diagonal q0 -> q2: triangles (closing, h, d2) and (d1, n, p)
      hd1.vec = q2 - q0;
      hd1.tail = tri.he[closing].tail;
      hd2.vec = q0 - q2;
      hd2.tail = tri.tail(n);
      tri.he.push_back(hd1);
      tri.he.push_back(hd2);
      make_faces(closing, h, d2, d1, n, p);
    } else {
      fail(Err::VectorTooLarge, "slit quad is not triangulable; vector too large");
    }
  };
  // at corner ha the incoming side moves to the new vertex: quad closed by
  // new -> old; at hb the outgoing side moved: closed by old -> new
  split_corner(ha, e2);
  split_corner(hb, e1);

  tri.check_structure();
  int order_sum = 0;
  for (int w = 0; w < tri.num_vertices; ++w) order_sum += tri.vertex_winding(w) - 1;
  require(order_sum == 2 * tri.genus() - 2, Err::Internal, "split broke the stratum count");
  tri.make_delaunay(&tracked);
  return new_vertex;
}

std::map<std::string, Vec2> rel_plan(const TranslationSurface& s, const Vec2& v) {
  auto orders = s.stratum_orders();
  Vec2 half(v.x / QuadNum(2), v.y / QuadNum(2));
  if (orders == std::vector<int>{2, 2}) return {{"P", -half}, {"Q", half}};
  if (orders == std::vector<int>{2, 1, 1}) return {{"R1", -v}, {"R2", v}};
  fail(Err::InvalidInput, "rel move needs a labelled (2,2) or (1,1,2) surface");
}

TranslationSurface rel_move(const TranslationSurface& s, const FlagMap& tau, const Vec2& v) {
  static_cast<void>(tau);  // anti-equivariance is built into the plan
  auto plan = rel_plan(s, v);
  Deformer d(s);
  H1Data h = h1_basis(s);
  std::vector<int> ids;
  std::vector<Vec2> before;
  for (const auto& c : h.basis) {
    ids.push_back(d.track(s, c));
    before.push_back(holonomy(s, c));
  }
  for (const auto& [name, delta] : plan) {
    if (delta.is_zero()) continue;
    d.translate(d.labels.at(name), delta);
  }
  for (size_t i = 0; i < ids.size(); ++i)
    require(d.tracked_holonomy(ids[i]) == before[i], Err::Internal,
            "rel move changed an absolute period");
  return d.finish();
}

TranslationSurface collapse(const TranslationSurface& s, const FlagMap& tau,
                            const SaddleConnection& sigma0) {
  auto adm = is_admissible(s, tau, sigma0);
  if (!adm.admissible) fail(Err::NotAdmissible, "sigma0 is not admissible");
  bool is22 = s.stratum_orders() == std::vector<int>{2, 2};

  // simplified collapse criterion: no other parallel connection between
  // distinct zeros (the tau-image collapses along for (1,1,2))
  {
    QuadNum bound = QuadNum(4) * sigma0.length2();
    SaddleConnection tau_rev;
    if (!is22) tau_rev = reverse_connection(s, map_connection(s, tau, sigma0));
    for (const auto& c : saddle_connections(s, bound)) {
      if (!parallel_same_direction(c.holonomy, sigma0.holonomy)) continue;
      if (c.start == c.end) continue;
      if (same_connection(s, c, sigma0)) continue;
      if (!is22 && same_connection(s, c, tau_rev)) continue;
      fail(Err::ParallelObstruction, "a parallel saddle connection joins distinct zeros");
    }
  }

  TranslationSurface cur = s;
  Vec2 hol = sigma0.holonomy;
  auto edge_with = [](const TranslationSurface& t, const std::string& from,
                      const std::string& to, const Vec2& target) -> int {
    const PolyComplex& x = t.tri();
    for (int e : x.live_halfedges())
      if (x.vec(e) == target && x.tail(e) == t.vertex_named(from) &&
          x.head(e) == t.vertex_named(to))
        return e;
    return -1;
  };
  for (int round = 0; round < 64; ++round) {
    Deformer d(cur);
    H1Data h = h1_basis(cur);
    std::vector<int> ids;
    std::vector<Vec2> before;
    auto track_all = [&]() {
      for (const auto& c : h.basis) {
        ids.push_back(d.track(cur, c));
        before.push_back(holonomy(cur, c));
      }
    };
    auto check_all = [&]() {
      for (size_t i = 0; i < ids.size(); ++i)
        require(d.tracked_holonomy(ids[i]) == before[i], Err::Internal,
                "collapse changed an absolute period");
    };
    if (is22) {
      int e = edge_with(cur, "P", "Q", hol);
      if (e >= 0) {
        track_all();
        Vec2 half(hol.x / QuadNum(2), hol.y / QuadNum(2));
        d.contract_edges({e}, {{d.labels.at("P"), half}, {d.labels.at("Q"), -half}});
        check_all();
        d.labels.clear();
        TranslationSurface out = d.finish();
        require(out.stratum_orders() == std::vector<int>{4}, Err::Internal,
                "collapse did not reach H(4)");
        return out;
      }
    } else {
      int e = edge_with(cur, "R1", "Q", hol);
      int f = edge_with(cur, "Q", "R2", hol);
      if (e >= 0 && f >= 0) {
        track_all();
        d.contract_edges({e, f}, {{d.labels.at("R1"), hol}, {d.labels.at("R2"), -hol}});
        check_all();
        d.labels.clear();
        TranslationSurface out = d.finish();
        require(out.stratum_orders() == std::vector<int>{4}, Err::Internal,
                "collapse did not reach H(4)");
        return out;
      }
    }
    Vec2 minus_half(-hol.x / QuadNum(2), -hol.y / QuadNum(2));
    cur = rel_move(cur, tau, minus_half);
    hol = Vec2(hol.x / QuadNum(2), hol.y / QuadNum(2));
  }
  fail(Err::Internal, "collapse did not converge");
}

TranslationSurface break_up_zero(const TranslationSurface& s4, const Vec2& v, Kappa split,
                                 const FlagMap* tau) {
  require(s4.stratum_orders() == std::vector<int>{4}, Err::InvalidInput,
          "break_up_zero needs a surface in H(4)");
  require(!v.is_zero(), Err::InvalidInput, "zero splitting vector");
  {
    const PolyComplex& t = s4.tri();
    QuadNum min2(-1);
    for (int e : t.live_halfedges()) {
      QuadNum n2 = t.vec(e).norm2();
      if (min2.sign() < 0 || compare(n2, min2) < 0) min2 = n2;
    }
    require(compare(QuadNum(4) * v.norm2(), min2) < 0, Err::VectorTooLarge,
            "splitting vector must be shorter than half the systole");
  }

  Vec2 half(v.x / QuadNum(2), v.y / QuadNum(2));
  if (split == Kappa::odd22) {
    for (int ray = 0; ray < 5; ++ray) {
      try {
        Deformer d(s4);
        require(d.count_direction_rays(0, v) == 5, Err::InvalidInput,
                "direction is degenerate at the zero");
        int q = d.split_vertex(0, v, ray, 3, -half, half);
        d.labels = {{"P", 0}, {"Q", q}};
        TranslationSurface out = d.finish();
        if (out.stratum_orders() != std::vector<int>{2, 2}) continue;
        bool ok = false;
        for (const auto& f : find_prym_involutions(out))
          if (f.vertex_map[out.vertex_named("P")] == out.vertex_named("Q")) ok = true;
        if (ok) return out;
      } catch (const Error& err) {
        if (err.code != Err::VectorTooLarge && err.code != Err::InvalidInput) throw;
      }
    }
    fail(Err::VectorTooLarge, "no splitting germ admits the (2,2) surgery for this vector");
  }

  require(tau != nullptr, Err::InvalidInput, "(1,1,2) split needs the Prym involution");
  for (int ray1 = 0; ray1 < 5; ++ray1) {
    for (int ray2 = 0; ray2 < 4; ++ray2) {
      try {
        Deformer d(s4);
        require(d.count_direction_rays(0, v) == 5, Err::InvalidInput,
                "direction is degenerate at the zero");
        int r1 = d.split_vertex(0, v, ray1, 2, Vec2(0, 0), -v);
        int r2 = d.split_vertex(0, v, ray2, 2, Vec2(0, 0), v);
        d.labels = {{"Q", 0}, {"R1", r1}, {"R2", r2}};
        TranslationSurface out = d.finish();
        if (out.stratum_orders() != std::vector<int>{2, 1, 1}) continue;
        if (out.vertex_orders()[out.vertex_named("Q")] != 2) continue;
        bool ok = false;
        for (const auto& f : find_prym_involutions(out))
          if (f.vertex_map[out.vertex_named("R1")] == out.vertex_named("R2") &&
              f.vertex_map[out.vertex_named("Q")] == out.vertex_named("Q"))
            ok = true;
        if (ok) return out;
      } catch (const Error& err) {
        if (err.code != Err::VectorTooLarge && err.code != Err::InvalidInput &&
            err.code != Err::WrongDivisors)
          throw;
      }
    }
  }
  fail(Err::VectorTooLarge, "no tau-symmetric splitting germs found for (1,1,2)");
}

}  // namespace prym
