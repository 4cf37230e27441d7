#pragma once

// The l1 seminorm on homology classes as an exact LP, and dual
// bounded-cochain certificates: a cocycle phi with <phi, alpha> = 1 whose
// reciprocal sup norm certifies a lower bound on the seminorm. On a finite
// complex the certificate from the LP dual attains the seminorm exactly.

#include <optional>
#include <vector>

#include "l1hom/complex.hpp"
#include "l1hom/homology.hpp"
#include "l1hom/lp.hpp"

namespace l1hom {

// Rational-valued function on all k-simplices of the ambient complex,
// indexed in the complex's canonical order. The finite domain makes every
// cochain bounded; the sup norm is a max.
struct Cochain {
  int degree = 0;
  std::vector<Rat> values;
};

Rat sup_norm(const Cochain& f);

// Kronecker pairing <f, c> = sum f(sigma) * a_sigma.
Rat evaluate(const Cochain& f, const SimplicialComplex& x, const Chain& c);

// True iff f vanishes on the boundary of every (k+1)-simplex.
bool is_cocycle(const Cochain& f, const SimplicialComplex& x);

struct DualCertificate {
  Cochain cochain;  // cocycle phi
  Rat pairing;      // <phi, alpha> = 1 for normalized certificates
  Rat sup_norm;     // 1 / sup_norm equals the seminorm, exactly
};

struct SeminormResult {
  Rat value;
  Chain optimal_chain;  // cycle homologous to the input with l1 norm = value
  long pivots = 0;
};

// The LP  min sum(u + v)  s.t.  u - v - d(b+) + d(b-) = z,  all vars >= 0,
// whose optimum is the seminorm of [z]. Columns ordered [u | v | b+ | b-].
LinearProgram seminorm_lp(const HomologyClass& alpha);

// Throws NotACycle if the representative is not a cycle.
SeminormResult l1_seminorm(const HomologyClass& alpha);

// Normalized certificate from the LP dual, or nullopt when the seminorm is
// zero (then every cocycle pairs to zero with the class).
std::optional<DualCertificate> dual_certificate(const HomologyClass& alpha);

// Solver-independent arithmetic re-check: verifies the cocycle condition
// and <phi, alpha> = 1, then returns 1/||phi||_inf, a certified lower bound
// for the seminorm. Throws NotACocycle or PairingNotOne.
Rat verify_certificate(const Cochain& phi, const HomologyClass& alpha);

// Basis of the space of k-cocycles (kernel of the transposed boundary).
std::vector<Cochain> cocycle_basis(const SimplicialComplex& x, int k);

// [v_0, ..., v_rounds]: the seminorm of the fundamental class after i
// barycentric subdivisions. Each v_i upper-bounds the Gromov norm.
std::vector<Rat> simplicial_volume_upper(const SimplicialComplex& x,
                                         int rounds);

}  // namespace l1hom
