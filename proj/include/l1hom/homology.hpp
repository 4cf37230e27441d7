#pragma once

// Boundary matrices, rational homology bases, homology testing with
// witnesses, and fundamental cycles of closed pseudomanifolds.

#include <optional>
#include <vector>

#include "l1hom/complex.hpp"
#include "l1hom/matrix.hpp"

namespace l1hom {

// Matrix of the boundary operator C_k -> C_{k-1} in the complex's canonical
// simplex order: count(k-1) rows, count(k) columns. For k == 0 the matrix
// has zero rows (the zero map).
QMatrix boundary_matrix(const SimplicialComplex& x, int k);

// Coefficient vector of `c` over the canonical k-simplex order. Throws
// MalformedInput if a term is not a simplex of `x`.
std::vector<Rat> chain_to_vector(const SimplicialComplex& x, const Chain& c);

Chain vector_to_chain(const SimplicialComplex& x, int degree,
                      const std::vector<Rat>& v);

// Cycles whose classes form a basis of H_k(X; Q), computed by exact
// Gaussian elimination on the boundary matrices. Deterministic.
std::vector<HomologyClass> homology_basis(const SimplicialComplex& x, int k);

// dim H_k(X; Q) for k = 0..dim(X).
std::vector<int> betti_numbers(const SimplicialComplex& x);

// If z1 - z2 is a boundary, returns a witness b with boundary(b) = z1 - z2;
// otherwise nullopt. Throws NotACycle when an input is not a cycle.
std::optional<Chain> is_homologous(const SimplicialComplex& x, const Chain& z1,
                                   const Chain& z2);

// Coherent +-1 orientation of all top-degree simplices forming a cycle.
// Throws NotClosed when some ridge is not in exactly two facets, and
// NotOrientable when the orientation propagation reaches a contradiction.
Chain fundamental_cycle(const SimplicialComplex& x);

}  // namespace l1hom
