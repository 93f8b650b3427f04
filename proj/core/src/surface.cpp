#include "prym/surface.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace prym {

std::string Stratum::str() const {
  if (orders.empty()) return "torus";
  std::string s = "H(";
  for (size_t i = 0; i < orders.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(orders[i]);
  }
  s += ")";
  if (tag == Tag::odd) s += "^odd";
  if (tag == Tag::hyp) s += "^hyp";
  return s;
}

struct TranslationSurface::Data {
  std::vector<std::vector<Vec2>> polygons;
  Gluing gluing;
  PolyComplex complex;
  std::vector<int> orders;            // per vertex id
  std::map<std::string, int> labels;  // name -> vertex id

  mutable std::once_flag lazy_flag;
  mutable PolyComplex tri;
  mutable PolyComplex cells;
  mutable std::vector<int> tri_to_cells;
  mutable std::string code;
  mutable std::vector<int> min_flags;

  void ensure_lazy() const {
    std::call_once(lazy_flag, [this] {
      tri = complex;
      tri.triangulate();
      tri.make_delaunay();
      cells = tri.merge_flat_edges(&tri_to_cells);
      for (int f : cells.live_halfedges()) {
        std::string c = traversal_code(cells, f);
        if (code.empty() || c < code) {
          code = c;
          min_flags.assign(1, f);
        } else if (c == code) {
          min_flags.push_back(f);
        }
      }
    });
  }
};

const TranslationSurface::Data& TranslationSurface::d() const {
  require(d_ != nullptr, Err::InvalidInput, "empty surface");
  return *d_;
}

TranslationSurface TranslationSurface::build(std::vector<std::vector<Vec2>> polygons,
                                             Gluing gluing,
                                             std::map<std::string, Side> corner_labels) {
  auto data = std::make_shared<Data>();
  data->complex = build_complex(polygons, gluing);
  data->polygons = std::move(polygons);
  data->gluing = std::move(gluing);

  // cone orders from a throwaway triangulation (corner angles < pi there)
  PolyComplex t = data->complex;
  t.triangulate();
  data->orders.assign(t.num_vertices, 0);
  for (int v = 0; v < t.num_vertices; ++v) data->orders[v] = t.vertex_winding(v) - 1;

  int order_sum = 0;
  for (int k : data->orders) {
    require(k >= 0, Err::Internal, "cone angle below 2pi");
    order_sum += k;
  }
  int g = data->complex.genus();
  require(order_sum == 2 * g - 2, Err::Internal, "zero orders inconsistent with genus");

  // resolve corner labels to vertex ids using the complex's side numbering
  int side_base = 0;
  std::vector<int> poly_first_he;
  for (const auto& p : data->polygons) {
    poly_first_he.push_back(side_base);
    side_base += p.size();
  }
  for (const auto& [name, side] : corner_labels) {
    require(side.first >= 0 && side.first < (int)data->polygons.size() && side.second >= 0 &&
                side.second < (int)data->polygons[side.first].size(),
            Err::InvalidInput, "label corner out of range");
    int e = poly_first_he[side.first] + side.second;
    data->labels[name] = data->complex.tail(e);
  }

  TranslationSurface s;
  s.d_ = std::move(data);
  return s;
}

TranslationSurface TranslationSurface::from_complex(PolyComplex cx,
                                                    std::map<std::string, int> vertex_labels) {
  cx.compact(nullptr);
  std::vector<std::vector<Vec2>> polygons;
  Gluing gluing;
  std::vector<std::pair<int, int>> side_of_he(cx.he.size(), {-1, -1});
  auto faces = cx.live_faces();
  for (int f : faces) {
    auto edges = cx.face_edges(f);
    std::vector<Vec2> poly;
    for (size_t i = 0; i < edges.size(); ++i) {
      poly.push_back(cx.vec(edges[i]));
      side_of_he[edges[i]] = {(int)polygons.size(), (int)i};
    }
    polygons.push_back(poly);
  }
  for (int e : cx.live_halfedges()) {
    if (e < cx.opp(e)) gluing.push_back({side_of_he[e], side_of_he[cx.opp(e)]});
  }
  std::map<std::string, Side> corner_labels;
  // pick a representative outgoing half-edge per labelled vertex
  for (const auto& [name, v] : vertex_labels) {
    int found = -1;
    for (int e : cx.live_halfedges())
      if (cx.tail(e) == v) {
        found = e;
        break;
      }
    require(found >= 0, Err::InvalidInput, "labelled vertex has no edges");
    corner_labels[name] = side_of_he[found];
  }
  return build(std::move(polygons), std::move(gluing), std::move(corner_labels));
}

const std::vector<std::vector<Vec2>>& TranslationSurface::polygons() const { return d().polygons; }
const TranslationSurface::Gluing& TranslationSurface::gluing() const { return d().gluing; }
long TranslationSurface::disc() const { return d().complex.disc; }
const PolyComplex& TranslationSurface::complex() const { return d().complex; }

const PolyComplex& TranslationSurface::tri() const {
  d().ensure_lazy();
  return d().tri;
}
const PolyComplex& TranslationSurface::cells() const {
  d().ensure_lazy();
  return d().cells;
}
const std::vector<int>& TranslationSurface::tri_to_cells() const {
  d().ensure_lazy();
  return d().tri_to_cells;
}
const std::string& TranslationSurface::canonical_code() const {
  d().ensure_lazy();
  return d().code;
}
const std::vector<int>& TranslationSurface::canonical_flags() const {
  d().ensure_lazy();
  return d().min_flags;
}

int TranslationSurface::genus() const { return d().complex.genus(); }
QuadNum TranslationSurface::area2() const { return d().complex.area2(); }
int TranslationSurface::vertex_count() const { return d().complex.num_vertices; }
const std::vector<int>& TranslationSurface::vertex_orders() const { return d().orders; }

std::vector<int> TranslationSurface::stratum_orders() const {
  std::vector<int> out;
  for (int k : d().orders)
    if (k > 0) out.push_back(k);
  std::sort(out.rbegin(), out.rend());
  return out;
}

const std::map<std::string, int>& TranslationSurface::labels() const { return d().labels; }

std::optional<std::string> TranslationSurface::label_of(int vertex) const {
  for (const auto& [name, v] : d().labels)
    if (v == vertex) return name;
  return std::nullopt;
}

int TranslationSurface::vertex_named(const std::string& name) const {
  auto it = d().labels.find(name);
  require(it != d().labels.end(), Err::InvalidInput, "no zero labelled " + name);
  return it->second;
}

TranslationSurface TranslationSurface::with_labels(std::map<std::string, int> vertex_labels) const {
  return from_complex(d().complex, std::move(vertex_labels));
}

TranslationSurface apply_gl2(const TranslationSurface& s, const Mat2& m) {
  PolyComplex cx = s.complex().transformed(m);
  std::map<std::string, int> labels = s.labels();
  return TranslationSurface::from_complex(std::move(cx), std::move(labels));
}

std::string traversal_code(const PolyComplex& cx, int start_flag, std::vector<int>* visit_order) {
  // Breadth-first over faces; emits face sizes, edge vectors, and opposite
  // face references in discovery order. Characterizes the complex up to a
  // flag-preserving translation isomorphism.
  std::vector<int> face_index(cx.face_anchor.size(), -1);
  std::vector<int> entry(cx.face_anchor.size(), -1);
  std::vector<int> queue;
  auto discover = [&](int e) {
    int f = cx.face(e);
    if (face_index[f] >= 0) return;
    face_index[f] = queue.size();
    entry[f] = e;
    queue.push_back(f);
  };
  discover(start_flag);
  std::ostringstream out;
  if (visit_order) visit_order->clear();
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int f = queue[qi];
    std::vector<int> edges;
    int e = entry[f];
    do {
      edges.push_back(e);
      e = cx.next(e);
    } while (e != entry[f]);
    out << "F" << edges.size() << "[";
    for (int ee : edges) discover(cx.opp(ee));
    for (int ee : edges) {
      if (visit_order) visit_order->push_back(ee);
      const Vec2& v = cx.vec(ee);
      out << v.x.a << "," << v.x.b << "," << v.x.disc << ";" << v.y.a << "," << v.y.b << ","
          << v.y.disc << ">";
      int o = cx.opp(ee);
      int fo = cx.face(o);
      // offset of o within its face's walk from the recorded entry
      int off = 0;
      int w = entry[fo];
      while (w != o) {
        w = cx.next(w);
        ++off;
      }
      out << face_index[fo] << "." << off << "|";
    }
    out << "]";
  }
  return out.str();
}

}  // namespace prym
