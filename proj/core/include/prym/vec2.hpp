#pragma once

#include "prym/qnum.hpp"

namespace prym {

struct Vec2 {
  QuadNum x, y;

  Vec2() = default;
  Vec2(QuadNum xv, QuadNum yv) : x(std::move(xv)), y(std::move(yv)) {}
  Vec2(long xv, long yv) : x(xv), y(yv) {}

  bool is_zero() const { return x.is_zero() && y.is_zero(); }
  QuadNum norm2() const { return x * x + y * y; }
  long disc() const { return merge_disc(x.disc, y.disc); }

  bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Vec2& o) const { return !(*this == o); }
  std::string str() const { return "(" + x.str() + ", " + y.str() + ")"; }
};

inline Vec2 operator+(const Vec2& u, const Vec2& v) { return {u.x + v.x, u.y + v.y}; }
inline Vec2 operator-(const Vec2& u, const Vec2& v) { return {u.x - v.x, u.y - v.y}; }
inline Vec2 operator-(const Vec2& u) { return {-u.x, -u.y}; }
inline Vec2 operator*(const QuadNum& c, const Vec2& v) { return {c * v.x, c * v.y}; }
inline Vec2& operator+=(Vec2& u, const Vec2& v) { return u = u + v; }
inline Vec2& operator-=(Vec2& u, const Vec2& v) { return u = u - v; }

inline QuadNum cross(const Vec2& u, const Vec2& v) { return u.x * v.y - u.y * v.x; }
inline QuadNum dot(const Vec2& u, const Vec2& v) { return u.x * v.x + u.y * v.y; }

// Sign of the signed area of triangle (a, b, c): +1 for counterclockwise.
inline int orient(const Vec2& a, const Vec2& b, const Vec2& c) {
  return cross(b - a, c - a).sign();
}

// Exact in-circle test. (a, b, c) counterclockwise; +1 iff d lies strictly
// inside their circumcircle, 0 iff cocircular.
int incircle(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d);

// u, v nonzero with cross(u, v) > 0 span a corner of angle in (0, pi).
// True iff direction d (nonzero) lies strictly inside that open angular sector.
inline bool dir_strictly_inside(const Vec2& u, const Vec2& v, const Vec2& d) {
  return cross(u, d).sign() > 0 && cross(d, v).sign() > 0;
}

// Counts the crossing of the positive x-direction by the half-open ccw arc
// [u, v) of angle < pi. Summing over the corners around a vertex gives the
// total cone angle in multiples of 2*pi.
bool arc_crosses_pos_x(const Vec2& u, const Vec2& v);

inline bool parallel_same_direction(const Vec2& u, const Vec2& v) {
  return cross(u, v).sign() == 0 && dot(u, v).sign() > 0;
}

// Total order on vectors for deterministic serialization.
int lex_compare(const Vec2& u, const Vec2& v);

// 2x2 matrix over the field, row major.
struct Mat2 {
  QuadNum a, b, c, d;  // [[a, b], [c, d]]
  QuadNum det() const { return a * d - b * c; }
  Vec2 apply(const Vec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
  Mat2 mul(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  static Mat2 identity() { return {QuadNum(1), QuadNum(0), QuadNum(0), QuadNum(1)}; }
};

}  // namespace prym
