#pragma once

// Barycentric subdivision together with its chain map. Sd sends a
// k-simplex to (k+1)! signed flag simplices, commutes with the boundary,
// and carries fundamental cycles to fundamental cycles.

#include <map>
#include <vector>

#include "l1hom/complex.hpp"

namespace l1hom {

class BarycentricSubdivision {
 public:
  const SimplicialComplex& source() const { return source_; }
  const SimplicialComplex& complex() const { return complex_; }

  // New vertex id assigned to a simplex of the source (its barycenter).
  Vertex vertex_for(const Simplex& s) const;

  // The chain map Sd. Linear, commutes with boundary.
  Chain map(const Chain& c) const;

  friend BarycentricSubdivision subdivide(const SimplicialComplex& x);

 private:
  SimplicialComplex source_;
  SimplicialComplex complex_;
  std::vector<int> degree_offset_;          // id = offset[deg] + index in degree
  std::map<Simplex, Chain> simplex_image_;  // Sd on each source simplex
};

BarycentricSubdivision subdivide(const SimplicialComplex& x);

}  // namespace l1hom
