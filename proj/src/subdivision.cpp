#include "l1hom/subdivision.hpp"

#include <algorithm>
#include <cassert>

#include "l1hom/errors.hpp"

namespace l1hom {

namespace {

// Cone with the apex appended last: b * [u_0..u_j] = [u_0..u_j, b], valid
// because the apex id exceeds every flag-vertex id below it. Satisfies
// d(b * c) = b * d(c) + (-1)^(j+1) c on degree-j chains.
Chain cone(Vertex apex, const Chain& c) {
  Chain out(c.degree + 1);
  for (const auto& [s, a] : c.terms) {
    assert(s.vertices.empty() || s.vertices.back() < apex);
    Simplex t = s;
    t.vertices.push_back(apex);
    out.terms.emplace(std::move(t), a);
  }
  return out;
}

}  // namespace

Vertex BarycentricSubdivision::vertex_for(const Simplex& s) const {
  int i = source_.index_of(s);
  if (i < 0) throw MalformedInput("simplex is not part of the source complex");
  return degree_offset_[s.degree()] + i;
}

Chain BarycentricSubdivision::map(const Chain& c) const {
  Chain out(c.degree);
  for (const auto& [s, a] : c.terms) {
    auto it = simplex_image_.find(s);
    if (it == simplex_image_.end()) {
      throw MalformedInput("chain term is not a simplex of the source complex");
    }
    out += it->second * a;
  }
  return out;
}

BarycentricSubdivision subdivide(const SimplicialComplex& x) {
  BarycentricSubdivision sd;
  sd.source_ = x;

  // Barycenter ids: enumerate source simplices degree-major, lex within a
  // degree; flags list their ids in strictly increasing order.
  sd.degree_offset_.assign(x.dim() + 2, 0);
  for (int k = 0; k <= x.dim(); ++k) {
    sd.degree_offset_[k + 1] = sd.degree_offset_[k] + x.count(k);
  }

  // Sd on each simplex, bottom-up:
  //   Sd(v) = barycenter(v),   Sd(s) = (-1)^k barycenter(s) * Sd(ds).
  for (int k = 0; k <= x.dim(); ++k) {
    for (const auto& s : x.simplices(k)) {
      Vertex b = sd.degree_offset_[k] + x.index_of(s);
      if (k == 0) {
        Chain image(0);
        image.terms.emplace(Simplex{{b}}, Rat(1));
        sd.simplex_image_.emplace(s, std::move(image));
        continue;
      }
      Chain ds(k - 1);
      int sign = 1;
      for (int j = 0; j <= k; ++j) {
        ds += sd.simplex_image_.at(s.face(j)) * Rat(sign);
        sign = -sign;
      }
      Chain image = cone(b, ds);
      if (k % 2 != 0) {
        image = image * Rat(-1);
      }
      sd.simplex_image_.emplace(s, std::move(image));
    }
  }

  // The subdivided complex is the closure of the flag facets through each
  // maximal simplex; those are exactly the supports of the Sd images.
  std::vector<std::vector<Vertex>> facets;
  for (const auto& m : x.maximal_simplices()) {
    for (const auto& [flag, a] : sd.simplex_image_.at(m).terms) {
      facets.push_back(flag.vertices);
    }
  }
  sd.complex_ = build_complex(facets);
  return sd;
}

}  // namespace l1hom
