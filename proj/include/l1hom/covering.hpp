#pragma once

// Simplicial covering maps, unique simplex lifting through a prescribed
// basepoint, and a canonical deterministic section (the combinatorial
// counterpart of a Borel section of the induced map on simplices).

#include <map>

#include "l1hom/complex.hpp"

namespace l1hom {

// p: total -> base, given on vertices. Valid covers project every simplex
// bijectively and are injective from each vertex star onto the star of the
// image vertex, with constant fiber cardinality over each connected piece
// of the base.
struct CoveringMap {
  SimplicialComplex total;
  SimplicialComplex base;
  std::map<Vertex, Vertex> projection;
};

// Verifies all covering invariants; throws NotACovering naming the
// violating vertex or simplex.
CoveringMap validate_cover(SimplicialComplex total, SimplicialComplex base,
                           std::map<Vertex, Vertex> projection);

// Image of a total simplex under the projection (canonical vertex order).
Simplex project_simplex(const CoveringMap& cover, const Simplex& s);

// Orientation sign relating the canonical order of `s` to the projected
// vertex order: pushing the lifted simplex forward yields sign * image.
int projection_sign(const CoveringMap& cover, const Simplex& s);

// Number of sheets (fiber cardinality over the smallest base vertex).
int sheet_count(const CoveringMap& cover);

// The unique simplex over `base_simplex` containing `basepoint`, where
// `basepoint` lies in the fiber of the simplex's first (smallest) vertex.
// Throws BadBasepoint otherwise.
Simplex lift_simplex(const CoveringMap& cover, const Simplex& base_simplex,
                     Vertex basepoint);

// Assignment of a total simplex to every base simplex, all degrees, with
// projection o assignment = identity.
struct Section {
  std::map<Simplex, Simplex> assignment;
};

// Canonical section: each base simplex is lifted through the smallest-id
// fiber vertex over its first vertex. Deterministic.
Section build_section(const CoveringMap& cover);

// True iff every base simplex is assigned a lift that projects back to it.
bool verify_section(const CoveringMap& cover, const Section& s);

// Chain map induced by a section, orientation-corrected so that pushing
// the image forward through the cover recovers the original chain.
Chain section_chain_map(const CoveringMap& cover, const Section& s,
                        const Chain& base_chain);

}  // namespace l1hom
