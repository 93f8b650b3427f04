#pragma once

#include "prym/homology.hpp"
#include "prym/prototype.hpp"

namespace prym {

// A prototype surface together with its Prym involution.
struct PrototypeSurface {
  TranslationSurface surface;
  FlagMap tau;
  Prototype proto;
  QuadNum slit;
};

QuadNum default_slit(const Prototype& p);

// Connected sum of three slit tori following the prototype datum; zeros are
// labelled P/Q for (2,2)^odd and R1/Q/R2 for (1,1,2). The returned involution
// satisfies tau* omega = -omega, has H1-trace -2 and exactly 4 fixed points,
// and acts on the labels as the stratum demands.
PrototypeSurface build_prototype_surface(const Prototype& p,
                                         std::optional<QuadNum> slit = std::nullopt);

struct RmReport {
  bool self_adjoint = false;
  bool quadratic_ok = false;  // recomputed (e, c) match the claimed ones
  bool eigenform_ok = false;  // v . T = lambda v for T's own lambda
  bool disc_ok = false;       // disc of the recomputed polynomial equals D
  long recomputed_e = 0, recomputed_c = 0;
  long claimed_disc = 0;
  bool pass() const { return self_adjoint && quadratic_ok && eigenform_ok && disc_ok; }
  std::optional<Err> failure() const;
};

// Checks a generator against the computed Prym lattice of (s, tau).
RmReport verify_real_multiplication(const TranslationSurface& s, const PrymLattice& lat,
                                    const RmGenerator& gen, long claimed_disc);

// The generator of the order expressed on the computed lattice basis: the
// integral self-adjoint solution of v . T = lambda v with minimal polynomial
// X^2 - eX - 2wh (lambda taken with the positive square root).
RmGenerator adapted_generator(const TranslationSurface& s, const PrymLattice& lat,
                              const Prototype& p);

// Prym involutions: anti-automorphism involutions with H1-trace -2. When
// several exist the pairwise composites are checked to have order 3 with
// torus quotient (degree-3 cover criterion).
std::vector<FlagMap> find_prym_involutions(const TranslationSurface& s);

}  // namespace prym
