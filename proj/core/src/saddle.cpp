#include "prym/saddle.hpp"

#include <algorithm>

namespace prym {

namespace {

// squared distance from the origin to the closed segment [a, b] compared
// against len2: true if the whole segment lies strictly beyond
bool segment_beyond(const Vec2& a, const Vec2& b, const QuadNum& len2) {
  Vec2 d = b - a;
  QuadNum dd = d.norm2();
  QuadNum q = -dot(a, d);
  if (q.sign() >= 0 && compare(q, dd) <= 0) {
    // projection falls inside: distance^2 = cross(d, a)^2 / |d|^2
    QuadNum c = cross(d, a);
    return compare(c * c, len2 * dd) > 0;
  }
  return compare(a.norm2(), len2) > 0 && compare(b.norm2(), len2) > 0;
}

struct WedgeState {
  int cross_he;  // the face being entered is face(cross_he)
  Vec2 eR, eL;   // positions of head/tail of cross_he (right/left of the rays)
  Vec2 sR, sL;   // open direction sector, ccw from sR to sL, angle < pi
  std::vector<int> crossings;
};

}  // namespace

std::vector<SaddleConnection> saddle_connections(const TranslationSurface& s,
                                                 const QuadNum& len2) {
  const PolyComplex& tri = s.tri();
  require(len2.sign() > 0, Err::InvalidInput, "enumeration bound must be positive");
  std::vector<SaddleConnection> out;

  // connections along triangulation edges
  for (int e : tri.live_halfedges()) {
    if (compare(tri.vec(e).norm2(), len2) > 0) continue;
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

  // wedge unfolding from every corner
  long guard = 0;
  for (int h : tri.live_halfedges()) {
    std::vector<WedgeState> stack;
    {
      WedgeState w;
      Vec2 A = tri.vec(h);
      Vec2 B = A + tri.vec(tri.next(h));
      w.cross_he = tri.opp(tri.next(h));
      w.eR = A;
      w.eL = B;
      w.sR = A;
      w.sL = B;
      w.crossings = {w.cross_he};
      stack.push_back(std::move(w));
    }
    while (!stack.empty()) {
      require(++guard < 80000000, Err::Internal, "saddle connection search exploded");
      WedgeState w = std::move(stack.back());
      stack.pop_back();
      if (cross(w.sR, w.sL).sign() <= 0) continue;
      if (segment_beyond(w.eR, w.eL, len2)) continue;

      int ce = w.cross_he;
      Vec2 X = w.eR + tri.vec(tri.next(ce));  // apex of the entered face
      int c1 = cross(w.sR, X).sign();
      int c2 = cross(X, w.sL).sign();

      auto recurse_left = [&](const Vec2& lo) {  // across prev(ce), segment (X, eL)
        WedgeState n;
        n.cross_he = tri.opp(tri.prev(ce));
        n.eR = X;
        n.eL = w.eL;
        n.sR = lo;
        n.sL = w.sL;
        n.crossings = w.crossings;
        n.crossings.push_back(n.cross_he);
        stack.push_back(std::move(n));
      };
      auto recurse_right = [&](const Vec2& hi) {  // across next(ce), segment (eR, X)
        WedgeState n;
        n.cross_he = tri.opp(tri.next(ce));
        n.eR = w.eR;
        n.eL = X;
        n.sR = w.sR;
        n.sL = hi;
        n.crossings = w.crossings;
        n.crossings.push_back(n.cross_he);
        stack.push_back(std::move(n));
      };

      if (c1 > 0 && c2 > 0) {
        if (compare(X.norm2(), len2) <= 0) {
          SaddleConnection sc;
          sc.holonomy = X;
          sc.start = tri.tail(h);
          sc.end = tri.tail(tri.prev(ce));
          sc.start_corner = h;
          sc.end_corner = tri.prev(ce);
          sc.crossings = w.crossings;
          out.push_back(sc);
        }
        recurse_left(X);
        recurse_right(X);
      } else if (c1 <= 0) {
        recurse_left(w.sR);
      } else {
        recurse_right(w.sL);
      }
    }
  }

  std::sort(out.begin(), out.end(), [&](const SaddleConnection& a, const SaddleConnection& b) {
    int c = lex_compare(a.length2(), b.length2());
    if (c != 0) return c < 0;
    c = lex_compare(a.holonomy, b.holonomy);
    if (c != 0) return c < 0;
    if (a.start != b.start) return a.start < b.start;
    if (a.start_corner != b.start_corner) return a.start_corner < b.start_corner;
    return false;
  });
  return out;
}

SaddleConnection::Germ start_germ(const TranslationSurface& s, const SaddleConnection& sc) {
  const PolyComplex& tri = s.tri();
  const auto& to_cells = s.tri_to_cells();
  SaddleConnection::Germ g;
  g.vertex = sc.start;
  g.direction = sc.holonomy;
  int h = sc.start_corner;
  if (sc.along_edge && to_cells[h] >= 0) {
    g.along = true;
    g.cell_he = to_cells[h];
    return g;
  }
  // rotate clockwise until the corner boundary is a cell edge
  g.along = false;
  while (to_cells[h] < 0) h = tri.next(tri.opp(h));
  g.cell_he = to_cells[h];
  return g;
}

SaddleConnection::Germ end_germ(const TranslationSurface& s, const SaddleConnection& sc) {
  const PolyComplex& tri = s.tri();
  const auto& to_cells = s.tri_to_cells();
  SaddleConnection::Germ g;
  g.vertex = sc.end;
  g.direction = -sc.holonomy;
  int h = sc.end_corner;
  if (sc.along_edge && to_cells[h] >= 0) {
    g.along = true;
    g.cell_he = to_cells[h];
    return g;
  }
  g.along = false;
  while (to_cells[h] < 0) h = tri.next(tri.opp(h));
  g.cell_he = to_cells[h];
  return g;
}

bool same_connection(const TranslationSurface& s, const SaddleConnection& a,
                     const SaddleConnection& b) {
  if (a.holonomy != b.holonomy || a.start != b.start || a.end != b.end) return false;
  return start_germ(s, a) == start_germ(s, b);
}

SaddleConnection reverse_connection(const TranslationSurface& s, const SaddleConnection& sc) {
  Vec2 hol = -sc.holonomy;
  for (const auto& c : saddle_connections(s, sc.length2())) {
    if (c.holonomy != hol || c.start != sc.end || c.end != sc.start) continue;
    if (start_germ(s, c) == end_germ(s, sc)) return c;
  }
  fail(Err::Internal, "reverse connection not found");
}

SaddleConnection map_connection(const TranslationSurface& s, const FlagMap& f,
                                const SaddleConnection& sc) {
  SaddleConnection::Germ g = start_germ(s, sc);
  SaddleConnection::Germ image;
  image.vertex = f.vertex_map[g.vertex];
  image.cell_he = f.he_map[g.cell_he];
  image.along = g.along;
  image.direction = (f.sign > 0) ? sc.holonomy : -sc.holonomy;
  Vec2 hol = image.direction;
  for (const auto& c : saddle_connections(s, sc.length2())) {
    if (c.holonomy != hol || c.start != image.vertex) continue;
    if (start_germ(s, c) == image) return c;
  }
  fail(Err::Internal, "image connection not found");
}

std::vector<SaddleConnection> parallel_connections(const TranslationSurface& s, const Vec2& dir,
                                                   const QuadNum& len2) {
  std::vector<SaddleConnection> out;
  for (const auto& c : saddle_connections(s, len2))
    if (parallel_same_direction(c.holonomy, dir)) out.push_back(c);
  return out;
}

void check_convention(const TranslationSurface& s, const FlagMap& tau,
                      const SaddleConnection& sc) {
  auto from = s.label_of(sc.start), to = s.label_of(sc.end);
  require(from && to, Err::WrongEndpoints, "connection endpoints are unlabeled");
  if (s.stratum_orders() == std::vector<int>{2, 2}) {
    require(*from == "P" && *to == "Q", Err::WrongEndpoints,
            "(2,2): sigma0 must run from P to Q");
    SaddleConnection img = map_connection(s, tau, sc);
    SaddleConnection rev = reverse_connection(s, sc);
    require(same_connection(s, img, rev), Err::WrongEndpoints,
            "(2,2): sigma0 must be invariant under tau");
  } else if (s.stratum_orders() == std::vector<int>{2, 1, 1}) {
    require(*from == "R1" && *to == "Q", Err::WrongEndpoints,
            "(1,1,2): sigma0 must run from R1 to Q");
  } else {
    fail(Err::WrongEndpoints, "surface is not in stratum (2,2) or (1,1,2)");
  }
}

TwinReport twins(const TranslationSurface& s, const FlagMap& tau, const SaddleConnection& sigma0) {
  check_convention(s, tau, sigma0);
  bool is22 = s.stratum_orders() == std::vector<int>{2, 2};
  TwinReport rep;
  QuadNum bound = QuadNum(4) * sigma0.length2();  // |2 hol|^2
  Vec2 twin_hol = sigma0.holonomy;
  Vec2 double_hol = QuadNum(2) * sigma0.holonomy;
  for (const auto& c : saddle_connections(s, bound)) {
    if (c.start != sigma0.start) continue;
    if (c.holonomy == twin_hol && c.end == sigma0.end && !same_connection(s, c, sigma0))
      rep.twins.push_back(c);
    if (!is22 && c.holonomy == double_hol) {
      auto to = s.label_of(c.end);
      if (to && *to == "R2") rep.double_twins.push_back(c);
    }
  }
  if (is22)
    require(rep.twins.size() <= 2, Err::Internal, "(2,2) connection with more than two twins");
  else
    require(rep.twins.size() + rep.double_twins.size() <= 1, Err::Internal,
            "(1,1,2) connection with more than one twin or double-twin");
  return rep;
}

AdmissibilityReport is_admissible(const TranslationSurface& s, const FlagMap& tau,
                                  const SaddleConnection& sigma0) {
  check_convention(s, tau, sigma0);
  bool is22 = s.stratum_orders() == std::vector<int>{2, 2};
  // ratio <= 1 (resp. <= 2 toward the second simple zero) within radius
  // 2 |sigma0| decides admissibility
  QuadNum bound = QuadNum(4) * sigma0.length2();
  AdmissibilityReport rep{true, std::nullopt};
  for (const auto& c : saddle_connections(s, bound)) {
    if (c.start != sigma0.start) continue;
    if (!parallel_same_direction(c.holonomy, sigma0.holonomy)) continue;
    if (same_connection(s, c, sigma0)) continue;
    auto to = s.label_of(c.end);
    if (!to) continue;
    if (*to == "Q" && sigma0.end == s.vertex_named("Q")) {
      // lambda <= 1: |c| <= |sigma0|
      if (compare(c.length2(), sigma0.length2()) <= 0) {
        rep.admissible = false;
        rep.certificate = c;
        return rep;
      }
    }
    if (!is22 && *to == "R2") {
      // lambda <= 2: |c| <= 2 |sigma0|
      if (compare(c.length2(), QuadNum(4) * sigma0.length2()) <= 0) {
        rep.admissible = false;
        rep.certificate = c;
        return rep;
      }
    }
  }
  return rep;
}

std::optional<SaddleConnection> find_connection(const TranslationSurface& s,
                                                const std::string& from, const std::string& to,
                                                const Vec2& hol) {
  int a = s.vertex_named(from), b = s.vertex_named(to);
  for (const auto& c : saddle_connections(s, hol.norm2()))
    if (c.start == a && c.end == b && c.holonomy == hol) return c;
  return std::nullopt;
}

}  // namespace prym
