#pragma once

#include "prym/zmat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace prym {

enum class Kappa { odd22, h112 };
const char* kappa_name(Kappa k);
std::optional<Kappa> kappa_from_string(const std::string& s);

// Integer datum (w, h, e) of the explicit eigenform surfaces: w, h > 0,
// gcd(w, h, e) = 1, D = e^2 + 8wh, e + sqrt(D) > 0.
struct Prototype {
  Kappa kappa;
  long w, h, e;

  Prototype(Kappa k, long wv, long hv, long ev);
  long disc() const { return e * e + 8 * w * h; }
  bool operator==(const Prototype& o) const {
    return kappa == o.kappa && w == o.w && h == o.h && e == o.e;
  }
  std::string str() const;
};

QuadNum lambda_value(const Prototype& p);  // (e + sqrt(D)) / 2

// Generator of the order acting on the (a0, b0, a, b) basis: self-adjoint
// for diag(J, 2J) and satisfying matrix^2 = e*matrix + c*Id with e^2+4c = D.
struct RmGenerator {
  ZMat matrix;  // 4x4
  long e, c;
  long disc() const { return e * e + 4 * c; }
};

RmGenerator rm_generator(const Prototype& p);

// Shifts by a multiple of the identity so that e lands in {0, 1}; the
// eigenvalue on the omega-line becomes (e_c + sqrt(D)) / 2. Idempotent.
RmGenerator canonical_generator(const RmGenerator& t);

// Recomputes (e, c) of a 4x4 integer matrix satisfying a quadratic relation;
// nullopt when the matrix is scalar or satisfies no monic quadratic.
std::optional<std::pair<long, long>> minimal_quadratic(const ZMat& t);

struct ComponentClass {
  long disc;
  int parity;      // diagnostic for all D
  bool parity_counts() const { return disc % 2 == 1; }
  bool operator==(const ComponentClass& o) const {
    return disc == o.disc && (!parity_counts() || parity == o.parity);
  }
};

// Vanishing (0) or not (1) of the intersection form mod 2 on the range of the
// canonical generator reduced mod 2.
int generator_parity(const RmGenerator& t);
ComponentClass component_invariant(const Prototype& p);

// All prototypes of discriminant D, ordered by (w, h, e). Empty when D has no
// representation (in particular for D = 5 mod 8).
std::vector<Prototype> enumerate_prototypes(long D, Kappa kappa);

struct ClassificationReport {
  long disc;
  bool empty_locus;
  struct Class {
    std::optional<int> parity;  // present iff D odd
    std::vector<Prototype> prototypes;
  };
  std::vector<Class> classes;
  int expected_classes;  // 2 iff D = 1 mod 8, else 1
  bool matches_expected;
};

ClassificationReport classify_components(long D, Kappa kappa);

// F2 range pairing used by generator_parity, exposed for oracles/tests.
int form_vanishes_mod2_on_range(const ZMat& t_mod2_source, const ZMat& gram);

}  // namespace prym
