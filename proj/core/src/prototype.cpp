#include "prym/prototype.hpp"

#include "prym/errors.hpp"

#include <algorithm>
#include <numeric>

namespace prym {

const char* kappa_name(Kappa k) { return k == Kappa::odd22 ? "(2,2)^odd" : "(1,1,2)"; }

std::optional<Kappa> kappa_from_string(const std::string& s) {
  if (s == "2,2" || s == "(2,2)" || s == "(2,2)^odd" || s == "22") return Kappa::odd22;
  if (s == "1,1,2" || s == "(1,1,2)" || s == "112") return Kappa::h112;
  return std::nullopt;
}

Prototype::Prototype(Kappa k, long wv, long hv, long ev) : kappa(k), w(wv), h(hv), e(ev) {
  require(w > 0 && h > 0, Err::InvalidInput, "prototype needs w > 0 and h > 0");
  require(std::gcd(std::gcd(w, h), std::abs(e)) == 1, Err::InvalidInput,
          "prototype needs gcd(w, h, e) = 1");
  // e + sqrt(D) > 0 holds automatically since D = e^2 + 8wh > e^2, but the
  // constraint is part of the contract, so keep the exact check.
  QuadNum lam = QuadNum(Rat(e)) + QuadNum::sqrt_of(disc());
  require(lam.sign() > 0, Err::InvalidInput, "prototype needs e + sqrt(D) > 0");
}

std::string Prototype::str() const {
  return std::string("S_") + kappa_name(kappa) + "(" + std::to_string(w) + "," +
         std::to_string(h) + "," + std::to_string(e) + ")";
}

QuadNum lambda_value(const Prototype& p) {
  QuadNum lam = (QuadNum(Rat(p.e)) + QuadNum::sqrt_of(p.disc())) / QuadNum(2);
  // lam^2 = e lam + 2wh
  QuadNum check = lam * lam - QuadNum(Rat(p.e)) * lam - QuadNum(Rat(2 * p.w * p.h));
  require(check.is_zero(), Err::Internal, "lambda does not satisfy its quadratic");
  require(lam.sign() > 0, Err::Internal, "lambda not positive");
  return lam;
}

RmGenerator rm_generator(const Prototype& p) {
  RmGenerator g;
  g.e = p.e;
  g.c = 2 * p.w * p.h;
  g.matrix = zmat(4, 4);
  g.matrix[0][0] = p.e;
  g.matrix[1][1] = p.e;
  g.matrix[0][2] = 2 * p.w;
  g.matrix[1][3] = 2 * p.h;
  g.matrix[2][0] = p.h;
  g.matrix[3][1] = p.w;
  return g;
}

RmGenerator canonical_generator(const RmGenerator& t) {
  long ec = ((t.e % 2) + 2) % 2;  // 0 or 1, same parity as e
  long k = (ec - t.e) / 2;
  RmGenerator out;
  out.e = ec;
  out.c = t.c - k * t.e - k * k;
  out.matrix = t.matrix;
  for (int i = 0; i < 4; ++i) out.matrix[i][i] += k;
  require(out.disc() == t.disc(), Err::Internal, "canonical shift changed the discriminant");
  return out;
}

std::optional<std::pair<long, long>> minimal_quadratic(const ZMat& t) {
  ZMat t2 = zmat_mul(t, t);
  // find (e, c) with t^2 = e t + c, i.e. per entry: t2 = e t + c I
  std::optional<Rat> e, c;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      if (t[i][j] != 0) {
        Rat cand(t2[i][j], t[i][j]);
        cand.canonicalize();
        if (e && *e != cand) return std::nullopt;
        e = cand;
      } else if (t2[i][j] != 0) {
        return std::nullopt;
      }
    }
  if (!e) return std::nullopt;  // diagonal (scalar-ish) matrix
  if (e->get_den() != 1) return std::nullopt;
  for (int i = 0; i < 4; ++i) {
    Rat cand = Rat(t2[i][i]) - *e * Rat(t[i][i]);
    if (c && *c != cand) return std::nullopt;
    c = cand;
  }
  if (c->get_den() != 1) return std::nullopt;
  long ev = e->get_num().get_si(), cv = c->get_num().get_si();
  // confirm exactly
  ZMat check = zmat_mul(t, t);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) check[i][j] -= Int(ev) * t[i][j];
    check[i][i] -= cv;
  }
  for (auto& row : check)
    for (auto& v : row)
      if (v != 0) return std::nullopt;
  return std::make_pair(ev, cv);
}

int form_vanishes_mod2_on_range(const ZMat& t, const ZMat& gram) {
  // columns of t mod 2 span the range; pair them through gram mod 2
  int n = t.size();
  auto mod2 = [](const Int& v) { return mpz_odd_p(v.get_mpz_t()) ? 1 : 0; };
  std::vector<std::vector<int>> cols;
  for (int j = 0; j < n; ++j) {
    std::vector<int> col(n);
    for (int i = 0; i < n; ++i) col[i] = mod2(t[i][j]);
    cols.push_back(col);
  }
  for (const auto& u : cols)
    for (const auto& v : cols) {
      long pair = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) pair += (long)u[i] * mod2(gram[i][j]) * v[j];
      if (pair % 2 != 0) return 0;  // form does not vanish
    }
  return 1;
}

int generator_parity(const RmGenerator& t) {
  RmGenerator c = canonical_generator(t);
  ZMat G = zmat(4, 4);
  G[0][1] = 1;
  G[1][0] = -1;
  G[2][3] = 2;
  G[3][2] = -2;
  return form_vanishes_mod2_on_range(c.matrix, G) ? 0 : 1;
}

ComponentClass component_invariant(const Prototype& p) {
  ComponentClass cls;
  cls.disc = p.disc();
  cls.parity = generator_parity(rm_generator(p));
  return cls;
}

std::vector<Prototype> enumerate_prototypes(long D, Kappa kappa) {
  require(D >= 1, Err::InvalidInput, "discriminant must be >= 1");
  std::vector<Prototype> out;
  long emax = 0;
  while ((emax + 1) * (emax + 1) < D) ++emax;
  for (long e = -emax; e <= emax; ++e) {
    long rem = D - e * e;
    if (rem % 8 != 0) continue;
    long wh = rem / 8;
    if (wh < 1) continue;
    for (long w = 1; w <= wh; ++w) {
      if (wh % w != 0) continue;
      long h = wh / w;
      if (std::gcd(std::gcd(w, h), std::labs(e)) != 1) continue;
      out.push_back(Prototype(kappa, w, h, e));
    }
  }
  std::sort(out.begin(), out.end(), [](const Prototype& a, const Prototype& b) {
    return std::tie(a.w, a.h, a.e) < std::tie(b.w, b.h, b.e);
  });
  return out;
}

ClassificationReport classify_components(long D, Kappa kappa) {
  require(D >= 8, Err::EmptyLocus, "discriminant below 8");
  long m = ((D % 8) + 8) % 8;
  ClassificationReport rep;
  rep.disc = D;
  rep.expected_classes = (m == 1) ? 2 : 1;
  auto protos = enumerate_prototypes(D, kappa);
  if (m != 0 && m != 1 && m != 4) {
    require(protos.empty(), Err::Internal, "prototypes exist for a forbidden discriminant");
    fail(Err::EmptyLocus, "no prototypes: D = " + std::to_string(m) + " mod 8");
  }
  require(!protos.empty(), Err::EmptyLocus, "no prototypes for D = " + std::to_string(D));
  rep.empty_locus = false;
  for (const auto& p : protos) {
    ComponentClass cls = component_invariant(p);
    bool placed = false;
    for (auto& c : rep.classes) {
      bool same = cls.parity_counts() ? (c.parity && *c.parity == cls.parity) : true;
      if (same) {
        c.prototypes.push_back(p);
        placed = true;
        break;
      }
    }
    if (!placed) {
      ClassificationReport::Class c;
      if (cls.parity_counts()) c.parity = cls.parity;
      c.prototypes.push_back(p);
      rep.classes.push_back(c);
    }
  }
  std::sort(rep.classes.begin(), rep.classes.end(),
            [](const ClassificationReport::Class& a, const ClassificationReport::Class& b) {
              return a.parity.value_or(-1) < b.parity.value_or(-1);
            });
  rep.matches_expected = (int)rep.classes.size() == rep.expected_classes;
  return rep;
}

}  // namespace prym
