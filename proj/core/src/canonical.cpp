#include "prym/canonical.hpp"

#include <algorithm>

namespace prym {

std::vector<FlagMap> all_isomorphisms(const TranslationSurface& a, const TranslationSurface& b,
                                      int sign) {
  const PolyComplex& src = a.cells();
  PolyComplex tgt = (sign > 0) ? b.cells() : b.cells().negated();

  const std::string& code = a.canonical_code();
  int f0 = a.canonical_flags().front();
  std::vector<int> src_order;
  std::string check = traversal_code(src, f0, &src_order);
  require(check == code, Err::Internal, "canonical flag does not reproduce the code");

  std::vector<FlagMap> maps;
  for (int g : tgt.live_halfedges()) {
    std::vector<int> tgt_order;
    if (traversal_code(tgt, g, &tgt_order) != code) continue;
    FlagMap m;
    m.sign = sign;
    m.he_map.assign(src.he.size(), -1);
    for (size_t i = 0; i < src_order.size(); ++i) m.he_map[src_order[i]] = tgt_order[i];
    m.vertex_map.assign(src.num_vertices, -1);
    bool ok = true;
    for (int e : src.live_halfedges()) {
      int v = src.tail(e), w = tgt.tail(m.he_map[e]);
      if (m.vertex_map[v] >= 0 && m.vertex_map[v] != w) ok = false;
      m.vertex_map[v] = w;
    }
    require(ok, Err::Internal, "flag map not vertex-consistent");
    if (std::find(maps.begin(), maps.end(), m) == maps.end()) maps.push_back(m);
  }
  return maps;
}

std::optional<FlagMap> is_isomorphic(const TranslationSurface& a, const TranslationSurface& b) {
  if (a.canonical_code() != b.canonical_code()) return std::nullopt;
  auto maps = all_isomorphisms(a, b, +1);
  if (maps.empty()) return std::nullopt;
  if (!a.labels().empty() && !b.labels().empty()) {
    for (const auto& m : maps)
      if (preserves_labels(a, b, m)) return m;
    return std::nullopt;
  }
  return maps.front();
}

std::vector<FlagMap> translation_automorphisms(const TranslationSurface& s, int sign) {
  return all_isomorphisms(s, s, sign);
}

FlagMap identity_map(const TranslationSurface& s) {
  const PolyComplex& cx = s.cells();
  FlagMap m;
  m.sign = 1;
  m.he_map.resize(cx.he.size());
  for (size_t e = 0; e < cx.he.size(); ++e) m.he_map[e] = e;
  m.vertex_map.resize(cx.num_vertices);
  for (int v = 0; v < cx.num_vertices; ++v) m.vertex_map[v] = v;
  return m;
}

FlagMap compose(const FlagMap& f, const FlagMap& g) {
  FlagMap m;
  m.sign = f.sign * g.sign;
  m.he_map.assign(g.he_map.size(), -1);
  for (size_t e = 0; e < g.he_map.size(); ++e)
    if (g.he_map[e] >= 0) m.he_map[e] = f.he_map[g.he_map[e]];
  m.vertex_map.assign(g.vertex_map.size(), -1);
  for (size_t v = 0; v < g.vertex_map.size(); ++v)
    if (g.vertex_map[v] >= 0) m.vertex_map[v] = f.vertex_map[g.vertex_map[v]];
  return m;
}

bool is_identity(const FlagMap& f) {
  if (f.sign != 1) return false;
  for (size_t e = 0; e < f.he_map.size(); ++e)
    if (f.he_map[e] >= 0 && f.he_map[e] != (int)e) return false;
  return true;
}

bool is_involution(const FlagMap& f) { return !is_identity(f) && is_identity(compose(f, f)); }

bool preserves_labels(const TranslationSurface& a, const TranslationSurface& b, const FlagMap& f) {
  for (const auto& [name, v] : a.labels()) {
    auto it = b.labels().find(name);
    if (it == b.labels().end()) return false;
    if (f.vertex_map[v] != it->second) return false;
  }
  return a.labels().size() == b.labels().size();
}

int count_fixed_points(const TranslationSurface& s, const FlagMap& f) {
  require(f.sign == -1, Err::InvalidInput, "fixed points counted for anti-maps only");
  const PolyComplex& cx = s.cells();
  int count = 0;
  for (int v = 0; v < cx.num_vertices; ++v)
    if (f.vertex_map[v] == v) ++count;
  for (int e : cx.live_halfedges())
    if (e < cx.opp(e) && f.he_map[e] == cx.opp(e)) ++count;  // edge midpoint
  for (int fc : cx.live_faces()) {
    auto edges = cx.face_edges(fc);
    int img = cx.face(f.he_map[edges[0]]);
    if (img != fc) continue;
    // cell sent to itself; a pi rotation shifts the boundary walk by half
    int m = edges.size();
    if (m % 2 != 0) continue;
    int target = f.he_map[edges[0]];
    if (target == edges[m / 2]) ++count;  // center of the cell
  }
  return count;
}

}  // namespace prym
