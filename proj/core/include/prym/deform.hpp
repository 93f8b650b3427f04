#pragma once

#include "prym/threetori.hpp"

namespace prym {

// Kernel-foliation displacement plan for a surface with labelled zeros:
// (2,2)^odd moves P by -v/2 and Q by +v/2 so every P -> Q holonomy gains v;
// (1,1,2) moves R1 by -v and R2 by +v with Q fixed, so R1 -> Q gains v and
// R1 -> R2 gains 2v.
std::map<std::string, Vec2> rel_plan(const TranslationSurface& s, const Vec2& v);

// Executes the plan by incremental vertex translation with Delaunay flips.
// Absolute periods are verified unchanged, exactly. Throws
// CollisionDuringMove when a zero would hit another cone point.
TranslationSurface rel_move(const TranslationSurface& s, const FlagMap& tau, const Vec2& v);

// Collapses the zeros along an admissible sigma0 into a single order-4 zero.
TranslationSurface collapse(const TranslationSurface& s, const FlagMap& tau,
                            const SaddleConnection& sigma0);

// Splits the order-4 zero of a surface in H(4): split (2,2) creates P, Q with
// a P -> Q connection of holonomy v; split (1,1,2) performs the tau-symmetric
// double split creating R1, Q, R2 with connections of holonomy v and its
// tau-image. tau is required for the (1,1,2) split.
TranslationSurface break_up_zero(const TranslationSurface& s4, const Vec2& v, Kappa split,
                                 const FlagMap* tau = nullptr);

// Incremental translation-surface surgery engine shared by the operations
// above; exposed for tests.
struct Deformer {
  PolyComplex tri;
  std::map<std::string, int> labels;
  std::vector<Chain> tracked;

  explicit Deformer(const TranslationSurface& s);
  TranslationSurface finish();

  // registers a cells()-chain of the source surface for tracking; returns its index
  int track(const TranslationSurface& s, const Chain& cells_chain);
  Vec2 tracked_holonomy(int idx) const;

  // moves one vertex along delta, flipping as needed
  void translate(int vertex, const Vec2& delta);

  // simultaneous displacement of several vertices that contracts the listed
  // edges to points (their vectors must reach exactly zero)
  void contract_edges(std::vector<int> edges, const std::map<int, Vec2>& disp);

  // splits `vertex`: the sectors spanned by `turns` full turns starting at
  // the a-th direction-v ray move to a fresh vertex displaced by delta_new;
  // the rest stays, displaced by delta_old. Returns the new vertex id.
  int split_vertex(int vertex, const Vec2& v, int ray_index, int turns, const Vec2& delta_old,
                   const Vec2& delta_new);

  int count_direction_rays(int vertex, const Vec2& v) const;
};

}  // namespace prym
