#pragma once

// Finite simplicial complexes and degree-graded sparse rational chains.

#include <compare>
#include <map>
#include <vector>

#include "l1hom/rational.hpp"

namespace l1hom {

using Vertex = int;

// Simplex in canonical form: a strictly increasing vertex tuple. The
// canonical orientation is the increasing order; a sign is carried by the
// chain coefficient, never by the simplex.
struct Simplex {
  std::vector<Vertex> vertices;

  int degree() const { return static_cast<int>(vertices.size()) - 1; }

  // j-th face: drop the j-th vertex. Stays strictly increasing.
  Simplex face(int j) const;

  auto operator<=>(const Simplex&) const = default;
};

// Finite complex, closed under faces, simplices stored per degree in
// lexicographic order so every index and iteration order is reproducible.
class SimplicialComplex {
 public:
  int dim() const { return static_cast<int>(grades_.size()) - 1; }

  int count(int k) const {
    return (k < 0 || k > dim()) ? 0 : static_cast<int>(grades_[k].size());
  }

  const std::vector<Simplex>& simplices(int k) const;

  const Simplex& simplex(int k, int index) const { return grades_[k][index]; }

  // Position of `s` within its degree, or -1 if absent.
  int index_of(const Simplex& s) const;

  bool contains(const Simplex& s) const { return index_of(s) >= 0; }

  std::vector<Vertex> vertex_ids() const;

  // Maximal simplices (those that are not a proper face of another).
  std::vector<Simplex> maximal_simplices() const;

  bool operator==(const SimplicialComplex&) const = default;

  friend SimplicialComplex build_complex(
      const std::vector<std::vector<Vertex>>& facets);

 private:
  std::vector<std::vector<Simplex>> grades_;
};

// Closure of the given facets under taking faces. Throws InvalidFacet on a
// repeated vertex within a facet or a negative vertex id.
SimplicialComplex build_complex(const std::vector<std::vector<Vertex>>& facets);

// Sparse chain c = sum a_sigma * sigma with exact rational coefficients.
// No zero coefficients are ever stored.
struct Chain {
  int degree = 0;
  std::map<Simplex, Rat> terms;

  Chain() = default;
  explicit Chain(int deg) : degree(deg) {}

  // Accumulates `coeff` onto `s`, erasing the term if it cancels to zero.
  void add(const Simplex& s, const Rat& coeff);

  Rat coeff(const Simplex& s) const;

  bool is_zero() const { return terms.empty(); }

  Chain& operator+=(const Chain& other);
  Chain& operator-=(const Chain& other);
  Chain operator*(const Rat& scalar) const;

  bool operator==(const Chain&) const = default;
};

// Alternating-sign boundary. Throws DegreeError on degree-0 input.
Chain boundary(const Chain& c);

// l1 norm: sum of absolute coefficient values.
Rat l1_norm(const Chain& c);

// A homology class held by a representing cycle on its ambient complex.
struct HomologyClass {
  const SimplicialComplex* complex = nullptr;
  Chain cycle;
  int degree = 0;
};

}  // namespace l1hom
