#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace prym {

using Rat = mpq_class;
using Int = mpz_class;

struct FieldMismatch : std::runtime_error {
  FieldMismatch(long d1, long d2)
      : std::runtime_error("mixing elements of Q(sqrt(" + std::to_string(d1) +
                           ")) and Q(sqrt(" + std::to_string(d2) + "))") {}
};

// Returns f >= 0 with f*f == d, or -1 if d is not a perfect square.
long exact_sqrt(long d);

// Closed dyadic interval [lo, hi] certainly containing a real value.
struct DyadicInterval {
  Rat lo, hi;
  Rat width() const { return hi - lo; }
};

// Element a + b*sqrt(disc) of a real quadratic field.
//
// Canonical form: disc == 0 iff b == 0 (square discriminants are folded into
// the rational part at construction), so value equality is field equality.
// Arithmetic between two nonzero discriminants throws FieldMismatch; a
// rational (disc 0) combines with anything.
struct QuadNum {
  Rat a, b;
  long disc = 0;

  QuadNum() : a(0), b(0), disc(0) {}
  QuadNum(long v) : a(v), b(0), disc(0) {}
  QuadNum(const Rat& v) : a(v), b(0), disc(0) {}
  QuadNum(Rat av, Rat bv, long d);

  static QuadNum sqrt_of(long d) { return QuadNum(Rat(0), Rat(1), d); }

  bool is_rational() const { return disc == 0; }
  bool is_zero() const { return a == 0 && b == 0; }

  // Exact sign of a + b*sqrt(disc); never uses floating point.
  int sign() const;

  QuadNum conj() const { return QuadNum(a, -b, disc); }

  // a^2 - b^2 disc = x * conj(x), always rational.
  Rat norm() const { return a * a - b * b * Rat(disc); }

  QuadNum inverse() const;

  DyadicInterval approx(int bits) const;
  double to_double() const;

  std::string str() const;

  bool operator==(const QuadNum& o) const {
    return a == o.a && b == o.b && disc == o.disc;
  }
  bool operator!=(const QuadNum& o) const { return !(*this == o); }
};

long merge_disc(long d1, long d2);

QuadNum operator+(const QuadNum& x, const QuadNum& y);
QuadNum operator-(const QuadNum& x, const QuadNum& y);
QuadNum operator-(const QuadNum& x);
QuadNum operator*(const QuadNum& x, const QuadNum& y);
QuadNum operator/(const QuadNum& x, const QuadNum& y);

inline QuadNum& operator+=(QuadNum& x, const QuadNum& y) { return x = x + y; }
inline QuadNum& operator-=(QuadNum& x, const QuadNum& y) { return x = x - y; }
inline QuadNum& operator*=(QuadNum& x, const QuadNum& y) { return x = x * y; }

inline int sign(const QuadNum& x) { return x.sign(); }
inline int compare(const QuadNum& x, const QuadNum& y) { return (x - y).sign(); }
inline bool operator<(const QuadNum& x, const QuadNum& y) { return compare(x, y) < 0; }
inline bool operator>(const QuadNum& x, const QuadNum& y) { return compare(x, y) > 0; }
inline bool operator<=(const QuadNum& x, const QuadNum& y) { return compare(x, y) <= 0; }
inline bool operator>=(const QuadNum& x, const QuadNum& y) { return compare(x, y) >= 0; }

// Total order compatible with the canonical byte serialization (not the
// numeric order); used to break ties deterministically.
int lex_compare(const QuadNum& x, const QuadNum& y);

}  // namespace prym
