#pragma once

#include "prym/cut.hpp"

namespace prym {

struct Cylinder {
  Vec2 direction;
  // width (circumference) and height measured after rotating `direction`
  // onto the positive x-axis by [[dx,dy],[-dy,dx]]; for unit directions
  // these are true lengths.
  QuadNum width, height;
  // boundary connections, with holonomies in the original frame
  std::vector<SaddleConnection> boundary;
};

// Full decomposition into maximal cylinders in a periodic direction. Traces
// every separatrix; throws NotPeriodicWithinBudget when a separatrix fails
// to close up within the crossing budget (never returns a wrong answer).
std::vector<Cylinder> cylinder_decomposition(const TranslationSurface& s, const Vec2& dir,
                                             long budget_scale = 10);

// The saddle connections in direction (1, 0), found by separatrix tracing.
std::vector<SaddleConnection> horizontal_connections(const TranslationSurface& s,
                                                     long budget_scale = 10);

}  // namespace prym
