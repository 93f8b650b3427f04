#include "prym/vec2.hpp"

namespace prym {

int incircle(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
  Vec2 p = a - d, q = b - d, r = c - d;
  QuadNum pw = p.norm2(), qw = q.norm2(), rw = r.norm2();
  QuadNum det = p.x * (q.y * rw - r.y * qw) - p.y * (q.x * rw - r.x * qw) +
                pw * (q.x * r.y - r.x * q.y);
  return det.sign();
}

bool arc_crosses_pos_x(const Vec2& u, const Vec2& v) {
  auto on_pos_x = [](const Vec2& w) { return w.y.sign() == 0 && w.x.sign() > 0; };
  if (on_pos_x(u)) return true;
  if (on_pos_x(v)) return false;
  Vec2 e(1, 0);
  return dir_strictly_inside(u, v, e);
}

int lex_compare(const Vec2& u, const Vec2& v) {
  int c = lex_compare(u.x, v.x);
  if (c != 0) return c;
  return lex_compare(u.y, v.y);
}

}  // namespace prym
