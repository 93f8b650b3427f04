#include "prym/cylinder.hpp"

#include <algorithm>
#include <cmath>

namespace prym {

namespace {

long crossing_budget(const PolyComplex& tri, long scale) {
  double diam = 0;
  for (int e : tri.live_halfedges())
    if (e < tri.opp(e)) diam += std::sqrt(tri.vec(e).norm2().to_double());
  long t = tri.num_faces();
  return scale * t * (1 + (long)std::ceil(diam));
}

}  // namespace

std::vector<SaddleConnection> horizontal_connections(const TranslationSurface& s,
                                                     long budget_scale) {
  const PolyComplex& tri = s.tri();
  std::vector<SaddleConnection> out;
  long budget = crossing_budget(tri, budget_scale);

  for (int e : tri.live_halfedges()) {
    if (tri.vec(e).y.sign() == 0 && tri.vec(e).x.sign() > 0) {
      SaddleConnection sc;
      sc.holonomy = tri.vec(e);
      sc.start = tri.tail(e);
      sc.end = tri.head(e);
      sc.along_edge = true;
      sc.edge = e;
      sc.start_corner = e;
      sc.end_corner = tri.opp(e);
      out.push_back(sc);
    }
  }

  Vec2 east(1, 0);
  for (int h : tri.live_halfedges()) {
    Vec2 wedge_l = tri.vec(h);
    Vec2 wedge_r = -tri.vec(tri.prev(h));
    if (!dir_strictly_inside(wedge_l, wedge_r, east)) continue;

    SaddleConnection sc;
    sc.start = tri.tail(h);
    sc.start_corner = h;
    int ce = tri.opp(tri.next(h));
    Vec2 tail_pos = tri.vec(h) + tri.vec(tri.next(h));  // tail(ce) = far corner
    Vec2 head_pos = tri.vec(h);                         // head(ce) = head(h)
    long steps = 0;
    while (true) {
      require(++steps < budget, Err::NotPeriodicWithinBudget,
              "separatrix did not close up within the crossing budget");
      sc.crossings.push_back(ce);
      Vec2 apex = head_pos + tri.vec(tri.next(ce));
      if (apex.y.sign() == 0) {
        require(apex.x.sign() > 0, Err::Internal, "separatrix ran backwards");
        sc.holonomy = apex;
        sc.end = tri.tail(tri.prev(ce));
        sc.end_corner = tri.prev(ce);
        break;
      }
      int exit_he;
      Vec2 P, Q;
      if (apex.y.sign() == tail_pos.y.sign()) {
        exit_he = tri.next(ce);  // head(ce) -> apex
        P = head_pos;
        Q = apex;
      } else {
        exit_he = tri.prev(ce);  // apex -> tail(ce)
        P = apex;
        Q = tail_pos;
      }
      // crossing of y = 0 with (P, Q)
      QuadNum t = -P.y / (Q.y - P.y);
      Vec2 q(P.x + t * (Q.x - P.x), QuadNum(0));
      if (q == P || q == Q) {
        // the ray hits a vertex on this edge
        sc.holonomy = q;
        if (q == P) {
          sc.end = tri.tail(exit_he);
          sc.end_corner = exit_he;
        } else {
          sc.end = tri.head(exit_he);
          sc.end_corner = tri.next(exit_he);
        }
        break;
      }
      ce = tri.opp(exit_he);
      tail_pos = Q;  // tail(opp(exit)) = head(exit)
      head_pos = P;
    }
    out.push_back(sc);
  }
  return out;
}

std::vector<Cylinder> cylinder_decomposition(const TranslationSurface& s, const Vec2& dir,
                                             long budget_scale) {
  require(!dir.is_zero(), Err::InvalidInput, "direction must be nonzero");
  Mat2 rot{dir.x, dir.y, -dir.y, dir.x};  // takes dir to (|dir|^2, 0)
  Mat2 inv_scaled{dir.x, -dir.y, dir.y, dir.x};
  QuadNum n2 = dir.norm2();

  TranslationSurface sr = apply_gl2(s, rot);
  auto horiz = horizontal_connections(sr, budget_scale);
  auto pieces = cut_along(sr, horiz);

  std::vector<Cylinder> out;
  QuadNum area_total(0);
  for (const auto& p : pieces) {
    require(p.genus() == 0 && p.boundary_circles == 2, Err::Internal,
            "periodic direction produced a non-cylinder piece");
    // both boundary circles carry holonomy (+-w, 0)
    QuadNum w(0);
    for (const auto& b : p.boundary_holonomies) {
      require(b.y.is_zero(), Err::Internal, "cylinder boundary not horizontal");
      QuadNum absx = b.x.sign() >= 0 ? b.x : -b.x;
      if (w.is_zero()) w = absx;
      require(w == absx, Err::Internal, "cylinder boundary circles disagree");
    }
    require(w.sign() > 0, Err::Internal, "degenerate cylinder width");
    Cylinder c;
    c.direction = dir;
    c.width = w;
    c.height = p.area2 / (QuadNum(2) * w);
    for (int id : p.cut_ids) {
      SaddleConnection sc = horiz[id];
      // report the boundary holonomy in the original frame
      Vec2 h = sc.holonomy;
      sc.holonomy = Vec2((inv_scaled.a * h.x + inv_scaled.b * h.y) / n2,
                         (inv_scaled.c * h.x + inv_scaled.d * h.y) / n2);
      c.boundary.push_back(sc);
    }
    area_total += QuadNum(2) * c.width * c.height;
    out.push_back(c);
  }
  require(area_total == sr.area2(), Err::Internal, "cylinder areas do not sum to the surface");
  std::sort(out.begin(), out.end(), [](const Cylinder& a, const Cylinder& b) {
    int c = lex_compare(a.width, b.width);
    if (c != 0) return c < 0;
    return lex_compare(a.height, b.height) < 0;
  });
  return out;
}

}  // namespace prym
