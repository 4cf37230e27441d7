#pragma once

// Shared helpers for the test suites: bundled corpus loading and
// deterministic random generators for chains, measures and cochains.

#include <random>
#include <string>

#include "l1hom/complex.hpp"
#include "l1hom/homology.hpp"
#include "l1hom/io.hpp"
#include "l1hom/measure.hpp"
#include "l1hom/seminorm.hpp"

namespace testutil {

using namespace l1hom;

inline std::string corpus_path(const std::string& name) {
  return std::string(L1HOM_DATA_DIR) + "/" + name;
}

inline SimplicialComplex load_complex(const std::string& name) {
  return complex_from_json(read_json_file(corpus_path(name)));
}

struct Rng {
  std::mt19937_64 eng;

  explicit Rng(std::uint64_t seed) : eng(seed) {}

  int uniform(int lo, int hi) {
    return static_cast<int>(eng() % static_cast<std::uint64_t>(hi - lo + 1)) + lo;
  }

  Rat rat(bool nonzero = false) {
    int num = uniform(-9, 9);
    if (nonzero && num == 0) num = 1;
    return Rat(num, uniform(1, 9));
  }

  Chain chain(const SimplicialComplex& x, int k, int max_terms = 4) {
    Chain c(k);
    const int n = x.count(k);
    if (n == 0) return c;
    int terms = uniform(1, max_terms);
    for (int t = 0; t < terms; ++t) {
      c.add(x.simplex(k, uniform(0, n - 1)), rat());
    }
    return c;
  }

  MeasureChain measure(const SimplicialComplex& x, int k, int max_terms = 4) {
    return include_chain(chain(x, k, max_terms));
  }

  BoundedFunction function(const SimplicialComplex& x, int k) {
    BoundedFunction f{k, std::vector<Rat>(x.count(k))};
    for (auto& v : f.values) v = rat();
    return f;
  }

  // Random element of the cycle space in degree k.
  Chain cycle(const SimplicialComplex& x, int k) {
    if (k == 0) return chain(x, 0);
    auto basis = kernel_basis(boundary_matrix(x, k));
    std::vector<Rat> v(x.count(k), Rat(0));
    for (const auto& b : basis) {
      Rat a = rat();
      for (size_t i = 0; i < v.size(); ++i) v[i] += a * b[i];
    }
    return vector_to_chain(x, k, v);
  }

  // Random cocycle (combination of the cocycle basis).
  Cochain cocycle(const SimplicialComplex& x, int k) {
    Cochain f{k, std::vector<Rat>(x.count(k), Rat(0))};
    for (const auto& base : cocycle_basis(x, k)) {
      Rat a = rat();
      for (size_t i = 0; i < f.values.size(); ++i) {
        f.values[i] += a * base.values[i];
      }
    }
    return f;
  }

  // Random boundary: the boundary of a random (k+1)-chain.
  Chain boundary_chain(const SimplicialComplex& x, int k) {
    if (k + 1 > x.dim() || x.count(k + 1) == 0) return Chain(k);
    return boundary(chain(x, k + 1));
  }

  // Simplicial self-map: every vertex is sent into one facet.
  VertexMap self_map(const SimplicialComplex& x) {
    auto maximal = x.maximal_simplices();
    const Simplex& target =
        maximal[uniform(0, static_cast<int>(maximal.size()) - 1)];
    VertexMap g;
    for (Vertex v : x.vertex_ids()) {
      g[v] = target.vertices[uniform(0, target.degree())];
    }
    return g;
  }
};

inline Simplex simplex(std::initializer_list<Vertex> vs) {
  return Simplex{std::vector<Vertex>(vs)};
}

inline Chain unit_chain(int degree, std::initializer_list<Vertex> vs) {
  Chain c(degree);
  c.add(simplex(vs), Rat(1));
  return c;
}

}  // namespace testutil
