#pragma once

// Finitely-supported signed measure chains: total variation, the inclusion
// i_X of chains as atomic measures, pushforward along simplicial maps, the
// boundary via face pushforwards, the integration Kronecker product, and
// the seminorm on measure homology as an exact LP.
//
// Support is restricted to the ambient complex's simplex set: general
// compactly-determined measures on a mapping space have no finite
// representation, so the finitely-supported atomic case is what this
// module computes with.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "l1hom/complex.hpp"
#include "l1hom/seminorm.hpp"

namespace l1hom {

// Signed measure with finite support; masses[s] is the mass of the atom
// {s}. No zero masses are stored.
struct MeasureChain {
  int degree = 0;
  std::map<Simplex, Rat> masses;

  MeasureChain() = default;
  explicit MeasureChain(int deg) : degree(deg) {}

  void add(const Simplex& s, const Rat& mass);
  Rat mass(const Simplex& s) const;
  bool is_zero() const { return masses.empty(); }

  bool operator==(const MeasureChain&) const = default;
};

// Bounded rational function on all k-simplices, canonical index order. On a
// finite discrete set every function is measurable and bounded.
struct BoundedFunction {
  int degree = 0;
  std::vector<Rat> values;
};

Rat sup_norm(const BoundedFunction& f);

// Simplicial map given on vertices.
using VertexMap = std::map<Vertex, Vertex>;

// i_X: sum a_sigma * sigma  |->  sum a_sigma * delta_sigma. Norm-preserving
// and commutes with the boundary.
MeasureChain include_chain(const Chain& c);

// sup_A mu(A) - inf_A mu(A); for an atomic measure this is the sum of
// positive masses minus the sum of negative masses.
Rat total_variation(const MeasureChain& mu);

// Pushforward mu^g. Follows the simplicial chain-map convention: an atom
// whose image simplex is degenerate is dropped with its mass, a
// non-degenerate image is accumulated on the canonical (sorted) simplex
// with the orientation sign. Never increases the total variation.
MeasureChain pushforward(const MeasureChain& mu, const VertexMap& g);

// The induced chain map, same convention (used by functoriality checks).
Chain pushforward_chain(const Chain& c, const VertexMap& g);

// Boundary as the alternating sum of face pushforwards. Throws DegreeError
// on degree-0 input.
MeasureChain boundary_measure(const MeasureChain& mu);

// Kronecker product <f, mu> = integral of f against mu = sum over atoms.
// Throws DegreeMismatch when the degrees differ and MalformedInput if mu is
// supported outside the complex.
Rat kronecker(const SimplicialComplex& x, const BoundedFunction& f,
              const MeasureChain& mu);

// Linear extension of f to the chain space. Satisfies
// <v2(f), c> = <f, i_X(c)> for every chain c.
Cochain v2_extend(const BoundedFunction& f);

struct MeasureSeminormResult {
  Rat value;
  MeasureChain optimal;  // measure cycle homologous to mu attaining value
  long pivots = 0;
};

// min total variation over mu + boundary(nu), nu finitely supported on the
// (k+1)-simplices. Throws NotACycle if mu is not a measure cycle.
MeasureSeminormResult measure_seminorm(const SimplicialComplex& x,
                                       const MeasureChain& mu);

// Property suite over random instances on `x` (used by the CLI's
// measure-selftest subcommand). Returns (check name, passed) pairs;
// deterministic for a fixed seed.
std::vector<std::pair<std::string, bool>> measure_selftest(
    const SimplicialComplex& x, int trials, std::uint64_t seed);

}  // namespace l1hom
