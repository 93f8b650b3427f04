#include "prym/threetori.hpp"

#include <algorithm>

namespace prym {

namespace {

// edge chain of a boundary walk inside face f from the corner at half-edge
// `from` to the corner at half-edge `to` (both corners of f)
void face_walk(const PolyComplex& tri, Chain& c, int from_corner, int to_corner) {
  int e = from_corner;
  while (e != to_corner) {
    chain_add(tri, c, e, 1);
    e = tri.next(e);
  }
}

// tri-level edge chain homotopic to the connection: detour along triangle
// boundaries, pinning each crossed edge at the tail of its canonical side
Chain tri_connection_chain(const PolyComplex& tri, const SaddleConnection& sc) {
  Chain c;
  if (sc.along_edge) {
    chain_add(tri, c, sc.edge, 1);
    return c;
  }
  auto pin_corner_entering = [&](int ce) {
    // corner of face(ce) at the pinned endpoint of the crossed edge
    int key = std::min(ce, tri.opp(ce));
    return (ce == key) ? ce : tri.next(ce);  // tail(ce) or head(ce) corner
  };
  auto pin_corner_leaving = [&](int ce) {
    // same pinned endpoint seen from the face being left (face(opp(ce)))
    int oe = tri.opp(ce);
    int key = std::min(ce, oe);
    return (ce == key) ? tri.next(oe) : oe;  // head(oe) = tail(ce)
  };
  int cur = sc.start_corner;
  for (int ce : sc.crossings) {
    face_walk(tri, c, cur, pin_corner_leaving(ce));
    cur = pin_corner_entering(ce);
  }
  face_walk(tri, c, cur, sc.end_corner);
  return c;
}

}  // namespace

Chain connection_chain(const TranslationSurface& s, const SaddleConnection& sc) {
  const PolyComplex& tri = s.tri();
  const PolyComplex& cells = s.cells();
  const auto& to_cells = s.tri_to_cells();
  Chain tchain = tri_connection_chain(tri, sc);

  Chain out;
  for (const auto& [key, coeff] : tchain) {
    int mapped = to_cells[key];
    if (mapped >= 0) {
      chain_add(cells, out, mapped, coeff);
      continue;
    }
    // flat diagonal: replace by the boundary arc of the cell on its left,
    // walked from head(key) back to tail(key); [key] = -[arc]
    int e = tri.next(key);
    while (e != key) {
      if (to_cells[e] >= 0) {
        chain_add(cells, out, to_cells[e], -coeff);
        e = tri.next(e);
      } else {
        e = tri.next(tri.opp(e));
      }
    }
  }
  return out;
}

std::optional<ThreeToriDecomposition> three_tori_decomposition(
    const TranslationSurface& s, const FlagMap& tau, std::optional<QuadNum> bound2) {
  auto orders = s.stratum_orders();
  bool is22 = orders == std::vector<int>{2, 2};
  bool is112 = orders == std::vector<int>{2, 1, 1};
  if (!is22 && !is112) return std::nullopt;

  QuadNum bound = bound2.value_or(s.area2());
  auto conns = saddle_connections(s, bound);

  auto try_cut = [&](const std::vector<SaddleConnection>& slits)
      -> std::optional<ThreeToriDecomposition> {
    auto pieces = cut_along(s, slits);
    if (pieces.size() != 3) return std::nullopt;
    // the fixed torus carries all tau-swapped slits on its boundary: for
    // (2,2) the two non-invariant slits, for (1,1,2) all four
    size_t want_fixed_cuts = is22 ? 2 : 4;
    int fixed = -1;
    for (size_t i = 0; i < pieces.size(); ++i) {
      if (pieces[i].genus() != 1) return std::nullopt;
      if (pieces[i].period_basis.size() != 2) return std::nullopt;
      if (pieces[i].cut_ids.size() == want_fixed_cuts && is112) fixed = i;
    }
    if (is22) {
      // fixed piece: bounded by the two slits exchanged by tau
      for (size_t i = 0; i < pieces.size(); ++i) {
        bool has_invariant = false;
        for (int id : pieces[i].cut_ids)
          if (id == 0) has_invariant = true;  // slits[0] is the invariant one
        if (!has_invariant) fixed = i;
      }
    }
    if (fixed < 0) return std::nullopt;
    ThreeToriDecomposition out;
    out.slits = slits;
    out.tori[0] = pieces[fixed].period_basis;
    out.areas2[0] = pieces[fixed].area2;
    int k = 1;
    for (size_t i = 0; i < pieces.size(); ++i) {
      if ((int)i == fixed) continue;
      out.tori[k] = pieces[i].period_basis;
      out.areas2[k] = pieces[i].area2;
      ++k;
    }
    // the exchanged tori are isometric
    if (!(out.tori[1].size() == 2 && out.tori[2].size() == 2)) return std::nullopt;
    if (!(out.areas2[1] == out.areas2[2])) return std::nullopt;
    return out;
  };

  if (is22) {
    int P = s.vertex_named("P"), Q = s.vertex_named("Q");
    for (const auto& sigma0 : conns) {
      if (sigma0.start != P || sigma0.end != Q) continue;
      auto img = map_connection(s, tau, sigma0);
      if (!same_connection(s, img, reverse_connection(s, sigma0))) continue;
      // sigma0 is tau-invariant; collect its twins
      std::vector<SaddleConnection> family = {sigma0};
      for (const auto& c : conns) {
        if (c.start != P || c.end != Q) continue;
        if (!(c.holonomy == sigma0.holonomy)) continue;
        if (same_connection(s, c, sigma0)) continue;
        family.push_back(c);
      }
      if (family.size() != 3) continue;
      // the two twins must be exchanged (not separately fixed) by tau
      auto img1 = map_connection(s, tau, family[1]);
      if (!same_connection(s, img1, reverse_connection(s, family[2]))) continue;
      auto result = try_cut(family);
      if (result) return result;
    }
  } else {
    int R1 = s.vertex_named("R1"), Q = s.vertex_named("Q");
    for (const auto& sigma0 : conns) {
      if (sigma0.start != R1 || sigma0.end != Q) continue;
      std::vector<SaddleConnection> family = {sigma0};
      for (const auto& c : conns) {
        if (c.start != R1 || c.end != Q) continue;
        if (!(c.holonomy == sigma0.holonomy)) continue;
        if (same_connection(s, c, sigma0)) continue;
        family.push_back(c);
      }
      if (family.size() != 2) continue;
      family.push_back(map_connection(s, tau, family[0]));
      family.push_back(map_connection(s, tau, family[1]));
      auto result = try_cut(family);
      if (result) return result;
    }
  }
  return std::nullopt;
}

}  // namespace prym
