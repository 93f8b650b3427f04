#include "prym/qnum.hpp"

#include <cmath>

namespace prym {

long exact_sqrt(long d) {
  if (d < 0) return -1;
  mpz_class z(d);
  if (mpz_perfect_square_p(z.get_mpz_t())) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
    return r.get_si();
  }
  return -1;
}

QuadNum::QuadNum(Rat av, Rat bv, long d) : a(std::move(av)), b(std::move(bv)), disc(d) {
  if (disc < 0) throw std::invalid_argument("negative discriminant");
  if (b == 0) {
    disc = 0;
    return;
  }
  if (disc == 0) throw std::invalid_argument("sqrt part with zero discriminant");
  long f = exact_sqrt(disc);
  if (f >= 0) {
    a += b * Rat(f);
    b = 0;
    disc = 0;
  }
}

long merge_disc(long d1, long d2) {
  if (d1 == 0) return d2;
  if (d2 == 0) return d1;
  if (d1 != d2) throw FieldMismatch(d1, d2);
  return d1;
}

int QuadNum::sign() const {
  int sa = sgn(a), sb = sgn(b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // a and b*sqrt(D) have opposite signs: compare a^2 with b^2 D.
  int c = cmp(a * a, b * b * Rat(disc));
  if (c == 0) return 0;  // only possible for b == 0 given disc non-square
  return c > 0 ? sa : sb;
}

QuadNum QuadNum::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Rat n = norm();
  return QuadNum(a / n, -b / n, disc);
}

QuadNum operator+(const QuadNum& x, const QuadNum& y) {
  return QuadNum(x.a + y.a, x.b + y.b, merge_disc(x.disc, y.disc));
}

QuadNum operator-(const QuadNum& x, const QuadNum& y) {
  return QuadNum(x.a - y.a, x.b - y.b, merge_disc(x.disc, y.disc));
}

QuadNum operator-(const QuadNum& x) { return QuadNum(-x.a, -x.b, x.disc); }

QuadNum operator*(const QuadNum& x, const QuadNum& y) {
  long d = merge_disc(x.disc, y.disc);
  return QuadNum(x.a * y.a + x.b * y.b * Rat(d), x.a * y.b + x.b * y.a, d);
}

QuadNum operator/(const QuadNum& x, const QuadNum& y) { return x * y.inverse(); }

DyadicInterval QuadNum::approx(int bits) const {
  if (bits < 1) throw std::invalid_argument("bits must be >= 1");
  mpz_class target_scale = 1;
  mpz_mul_2exp(target_scale.get_mpz_t(), target_scale.get_mpz_t(), bits);
  Rat target(Int(1), Int(target_scale));
  // bracket on a finer grid so the interval hugs the value
  mpz_class scale = 1;
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), bits + 6);
  auto dyadic_bracket = [&](const Rat& v) {
    mpz_class fl, ce;
    mpz_class num = v.get_num() * scale, den = v.get_den();
    mpz_fdiv_q(fl.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    mpz_cdiv_q(ce.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Rat lo(fl, scale), hi(ce, scale);
    lo.canonicalize();
    hi.canonicalize();
    return DyadicInterval{lo, hi};
  };
  if (is_rational()) return dyadic_bracket(a);
  // Bracket sqrt(disc) with denominator 2^k, k raised until the final
  // interval is tight enough.
  for (int k = bits + 2;; k += 8) {
    mpz_class two_k = 1;
    mpz_mul_2exp(two_k.get_mpz_t(), two_k.get_mpz_t(), k);
    mpz_class m, t = Int(disc) * two_k * two_k;
    mpz_sqrt(m.get_mpz_t(), t.get_mpz_t());
    Rat slo(m, two_k), shi(m + 1, two_k);
    slo.canonicalize();
    shi.canonicalize();
    Rat lo = a + b * (sgn(b) > 0 ? slo : shi);
    Rat hi = a + b * (sgn(b) > 0 ? shi : slo);
    DyadicInterval out{dyadic_bracket(lo).lo, dyadic_bracket(hi).hi};
    if (out.width() <= target) return out;
  }
}

double QuadNum::to_double() const {
  double v = a.get_d();
  if (disc != 0) v += b.get_d() * std::sqrt(static_cast<double>(disc));
  return v;
}

std::string QuadNum::str() const {
  if (is_rational()) return a.get_str();
  return a.get_str() + "+" + b.get_str() + "*sqrt(" + std::to_string(disc) + ")";
}

int lex_compare(const QuadNum& x, const QuadNum& y) {
  if (x.disc != y.disc) return x.disc < y.disc ? -1 : 1;
  int c = cmp(x.a, y.a);
  if (c != 0) return c;
  return cmp(x.b, y.b);
}

}  // namespace prym
