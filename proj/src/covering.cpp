#include "l1hom/covering.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "l1hom/errors.hpp"

namespace l1hom {

namespace {

std::string simplex_str(const Simplex& s) {
  std::string out = "[";
  for (size_t i = 0; i < s.vertices.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.vertices[i]);
  }
  return out + "]";
}

// All simplices of every degree containing the vertex.
std::vector<Simplex> star(const SimplicialComplex& x, Vertex v) {
  std::vector<Simplex> out;
  for (int k = 0; k <= x.dim(); ++k) {
    for (const auto& s : x.simplices(k)) {
      if (std::binary_search(s.vertices.begin(), s.vertices.end(), v)) {
        out.push_back(s);
      }
    }
  }
  return out;
}

Simplex project_raw(const std::map<Vertex, Vertex>& projection,
                    const Simplex& s, int* sign_out) {
  std::vector<Vertex> image;
  image.reserve(s.vertices.size());
  for (Vertex v : s.vertices) {
    auto it = projection.find(v);
    if (it == projection.end()) {
      throw NotACovering("projection undefined on vertex " + std::to_string(v));
    }
    image.push_back(it->second);
  }
  int sign = 1;
  for (size_t i = 0; i < image.size(); ++i) {
    for (size_t j = i + 1; j < image.size(); ++j) {
      if (image[i] == image[j]) {
        throw NotACovering("simplex " + simplex_str(s) +
                           " is collapsed by the projection");
      }
      if (image[i] > image[j]) sign = -sign;
    }
  }
  std::sort(image.begin(), image.end());
  if (sign_out) *sign_out = sign;
  return Simplex{std::move(image)};
}

}  // namespace

CoveringMap validate_cover(SimplicialComplex total, SimplicialComplex base,
                           std::map<Vertex, Vertex> projection) {
  CoveringMap cover{std::move(total), std::move(base), std::move(projection)};

  // Projection must be defined exactly on the total vertices, into the
  // base vertices.
  std::set<Vertex> total_vertices;
  for (Vertex v : cover.total.vertex_ids()) total_vertices.insert(v);
  for (const auto& [tv, bv] : cover.projection) {
    if (!total_vertices.count(tv)) {
      throw NotACovering("projection mentions unknown vertex " +
                         std::to_string(tv));
    }
    if (!cover.base.contains(Simplex{{bv}})) {
      throw NotACovering("projection image " + std::to_string(bv) +
                         " is not a base vertex");
    }
  }
  std::map<Vertex, int> fiber_size;
  for (Vertex v : total_vertices) {
    auto it = cover.projection.find(v);
    if (it == cover.projection.end()) {
      throw NotACovering("projection undefined on vertex " + std::to_string(v));
    }
    fiber_size[it->second]++;
  }
  for (Vertex bv : cover.base.vertex_ids()) {
    if (!fiber_size.count(bv)) {
      throw NotACovering("empty fiber over vertex " + std::to_string(bv));
    }
  }

  // Simplices must project to base simplices without collapsing.
  for (int k = 1; k <= cover.total.dim(); ++k) {
    for (const auto& s : cover.total.simplices(k)) {
      Simplex image = project_raw(cover.projection, s, nullptr);
      if (!cover.base.contains(image)) {
        throw NotACovering("image " + simplex_str(image) + " of " +
                           simplex_str(s) + " is not a base simplex");
      }
    }
  }

  // Local homeomorphism on stars: the projection restricted to the star of
  // each vertex must be a bijection onto the star of the image vertex.
  for (Vertex tv : total_vertices) {
    Vertex bv = cover.projection.at(tv);
    std::set<Simplex> images;
    for (const auto& s : star(cover.total, tv)) {
      Simplex image = project_raw(cover.projection, s, nullptr);
      if (!images.insert(image).second) {
        throw NotACovering("star of vertex " + std::to_string(tv) +
                           " is not injective over " + simplex_str(image));
      }
    }
    // Every image lands in star(bv) already, so subset plus injectivity
    // makes the restriction a bijection of stars.
    for (const auto& s : star(cover.base, bv)) {
      if (!images.count(s)) {
        throw NotACovering("star of vertex " + std::to_string(tv) +
                           " misses base simplex " + simplex_str(s));
      }
    }
  }

  // Constant fiber cardinality over each connected piece of the base.
  std::map<Vertex, Vertex> parent;
  auto find = [&](Vertex v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (Vertex v : cover.base.vertex_ids()) parent[v] = v;
  for (const auto& e : cover.base.simplices(1)) {
    Vertex a = find(e.vertices[0]), b = find(e.vertices[1]);
    if (a != b) parent[a] = b;
  }
  std::map<Vertex, int> component_size;
  for (Vertex v : cover.base.vertex_ids()) {
    Vertex root = find(v);
    int size = fiber_size.at(v);
    auto [it, inserted] = component_size.emplace(root, size);
    if (!inserted && it->second != size) {
      throw NotACovering("fiber cardinality is not constant near vertex " +
                         std::to_string(v));
    }
  }

  return cover;
}

Simplex project_simplex(const CoveringMap& cover, const Simplex& s) {
  return project_raw(cover.projection, s, nullptr);
}

int projection_sign(const CoveringMap& cover, const Simplex& s) {
  int sign = 1;
  project_raw(cover.projection, s, &sign);
  return sign;
}

int sheet_count(const CoveringMap& cover) {
  Vertex smallest = cover.base.vertex_ids().front();
  int count = 0;
  for (const auto& [tv, bv] : cover.projection) {
    if (bv == smallest) ++count;
  }
  return count;
}

Simplex lift_simplex(const CoveringMap& cover, const Simplex& base_simplex,
                     Vertex basepoint) {
  if (cover.base.index_of(base_simplex) < 0) {
    throw MalformedInput("simplex " + simplex_str(base_simplex) +
                         " is not part of the base");
  }
  auto it = cover.projection.find(basepoint);
  if (it == cover.projection.end() ||
      it->second != base_simplex.vertices.front()) {
    throw BadBasepoint("vertex " + std::to_string(basepoint) +
                       " does not lie over the first vertex of " +
                       simplex_str(base_simplex));
  }
  // Uniqueness of lifts through a prescribed basepoint: exactly one simplex
  // in the basepoint's star projects onto the base simplex.
  for (const auto& s : star(cover.total, basepoint)) {
    if (s.degree() == base_simplex.degree() &&
        project_simplex(cover, s) == base_simplex) {
      return s;
    }
  }
  throw NotACovering("no lift of " + simplex_str(base_simplex) +
                     " through vertex " + std::to_string(basepoint));
}

Section build_section(const CoveringMap& cover) {
  Section section;
  for (int k = 0; k <= cover.base.dim(); ++k) {
    for (const auto& s : cover.base.simplices(k)) {
      // Canonical rule: lift through the smallest-id fiber vertex over the
      // simplex's first vertex.
      Vertex first = s.vertices.front();
      Vertex basepoint = -1;
      for (const auto& [tv, bv] : cover.projection) {
        if (bv == first) {
          basepoint = tv;  // map iteration is ascending, first hit is smallest
          break;
        }
      }
      section.assignment.emplace(s, lift_simplex(cover, s, basepoint));
    }
  }
  return section;
}

bool verify_section(const CoveringMap& cover, const Section& section) {
  for (int k = 0; k <= cover.base.dim(); ++k) {
    for (const auto& s : cover.base.simplices(k)) {
      auto it = section.assignment.find(s);
      if (it == section.assignment.end()) return false;
      if (cover.total.index_of(it->second) < 0) return false;
      if (project_simplex(cover, it->second) != s) return false;
    }
  }
  return true;
}

Chain section_chain_map(const CoveringMap& cover, const Section& section,
                        const Chain& base_chain) {
  Chain out(base_chain.degree);
  for (const auto& [s, a] : base_chain.terms) {
    auto it = section.assignment.find(s);
    if (it == section.assignment.end()) {
      throw MalformedInput("section undefined on simplex " + simplex_str(s));
    }
    // Orientation-corrected so the projection pushforward returns +s.
    out.add(it->second, Rat(projection_sign(cover, it->second)) * a);
  }
  return out;
}

}  // namespace l1hom
