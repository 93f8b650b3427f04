#pragma once

#include "prym/polycomplex.hpp"

#include <memory>
#include <mutex>
#include <optional>

namespace prym {

struct Stratum {
  std::vector<int> orders;  // zero orders >= 1, sorted descending; empty = torus
  enum class Tag { none, odd, hyp } tag = Tag::none;

  int genus() const {
    int s = 0;
    for (int k : orders) s += k;
    return (s + 2) / 2;
  }
  bool operator==(const Stratum& o) const { return orders == o.orders && tag == o.tag; }
  std::string str() const;
};

// Immutable translation surface: polygons glued by translations, with an
// optional labelling of its cone points. Copies share state and are safe to
// pass between threads.
class TranslationSurface {
 public:
  using Side = std::pair<int, int>;  // (polygon, edge index)
  using Gluing = std::vector<std::pair<Side, Side>>;

  TranslationSurface() = default;

  static TranslationSurface build(std::vector<std::vector<Vec2>> polygons, Gluing gluing,
                                  std::map<std::string, Side> corner_labels = {});

  // Reassembles a surface from a (possibly surgered) complex. Labels are
  // given per vertex id of `cx`.
  static TranslationSurface from_complex(PolyComplex cx, std::map<std::string, int> vertex_labels);

  bool valid() const { return d_ != nullptr; }

  const std::vector<std::vector<Vec2>>& polygons() const;
  const Gluing& gluing() const;
  long disc() const;

  const PolyComplex& complex() const;  // the complex as built
  // Delaunay triangulation of the surface; carrier for all geodesic geometry.
  const PolyComplex& tri() const;
  // Delaunay cell decomposition; carrier for canonical codes and homology.
  const PolyComplex& cells() const;
  // half-edge id map tri() -> cells(), -1 on merged-away diagonals
  const std::vector<int>& tri_to_cells() const;

  int genus() const;
  QuadNum area2() const;
  int vertex_count() const;
  const std::vector<int>& vertex_orders() const;  // cone order per vertex id
  std::vector<int> stratum_orders() const;        // positive orders, descending

  const std::map<std::string, int>& labels() const;  // name -> vertex id
  std::optional<std::string> label_of(int vertex) const;
  int vertex_named(const std::string& name) const;
  TranslationSurface with_labels(std::map<std::string, int> vertex_labels) const;

  const std::string& canonical_code() const;
  // Flags (cell half-edges) whose traversal realizes the canonical code.
  const std::vector<int>& canonical_flags() const;

  bool same_surface_object(const TranslationSurface& o) const { return d_ == o.d_; }

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
  const Data& d() const;
};

// Stratum with the (2,2) odd/hyp tag filled in (hyperellipticity test);
// defined in eigenform.cpp since it needs the automorphism machinery.
Stratum compute_stratum(const TranslationSurface& s);

TranslationSurface apply_gl2(const TranslationSurface& s, const Mat2& m);

// Serialization of the traversal starting at `flag` on an arbitrary complex;
// equal strings <=> there is a translation isomorphism taking flag to flag.
std::string traversal_code(const PolyComplex& cx, int start_flag,
                           std::vector<int>* visit_order = nullptr);

}  // namespace prym
