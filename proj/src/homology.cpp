#include "l1hom/homology.hpp"

#include <cassert>
#include <deque>
#include <map>
#include <set>

#include "l1hom/errors.hpp"

namespace l1hom {

QMatrix boundary_matrix(const SimplicialComplex& x, int k) {
  const int cols = x.count(k);
  const int rows = k >= 1 ? x.count(k - 1) : 0;
  QMatrix m(rows, cols);
  if (k < 1) return m;
  for (int c = 0; c < cols; ++c) {
    const Simplex& s = x.simplex(k, c);
    int sign = 1;
    for (int j = 0; j <= k; ++j) {
      int r = x.index_of(s.face(j));
      assert(r >= 0);  // closure under faces
      m.at(r, c) = sign;
      sign = -sign;
    }
  }
  return m;
}

std::vector<Rat> chain_to_vector(const SimplicialComplex& x, const Chain& c) {
  std::vector<Rat> v(x.count(c.degree), Rat(0));
  for (const auto& [s, a] : c.terms) {
    int i = x.index_of(s);
    if (i < 0) throw MalformedInput("chain term is not a simplex of the complex");
    v[i] = a;
  }
  return v;
}

Chain vector_to_chain(const SimplicialComplex& x, int degree,
                      const std::vector<Rat>& v) {
  Chain c(degree);
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) c.terms.emplace(x.simplex(degree, static_cast<int>(i)), v[i]);
  }
  return c;
}

namespace {

// Incremental forward reducer: keeps normalized rows with distinct pivot
// columns; insert() reduces a vector in place and reports whether a new
// independent direction was added.
class SpanReducer {
 public:
  bool insert(std::vector<Rat> v) {
    for (const auto& [p, row] : rows_) {
      if (v[p] != 0) {
        Rat f = v[p];
        for (size_t c = p; c < v.size(); ++c) {
          if (row[c] != 0) v[c] -= f * row[c];
        }
      }
    }
    size_t pivot = v.size();
    for (size_t c = 0; c < v.size(); ++c) {
      if (v[c] != 0) {
        pivot = c;
        break;
      }
    }
    if (pivot == v.size()) return false;
    Rat p = v[pivot];
    for (size_t c = pivot; c < v.size(); ++c) {
      if (v[c] != 0) v[c] /= p;
    }
    rows_.emplace(pivot, std::move(v));
    return true;
  }

 private:
  std::map<size_t, std::vector<Rat>> rows_;
};

std::vector<std::vector<Rat>> cycle_space_basis(const SimplicialComplex& x,
                                                int k) {
  if (k == 0) {
    // Every 0-chain is a cycle.
    std::vector<std::vector<Rat>> basis;
    const int n = x.count(0);
    for (int i = 0; i < n; ++i) {
      std::vector<Rat> e(n, Rat(0));
      e[i] = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  return kernel_basis(boundary_matrix(x, k));
}

bool chain_is_cycle(const Chain& z) {
  return z.degree == 0 || boundary(z).is_zero();
}

}  // namespace

std::vector<HomologyClass> homology_basis(const SimplicialComplex& x, int k) {
  std::vector<HomologyClass> classes;
  if (k < 0 || k > x.dim()) return classes;

  SpanReducer reducer;
  // Seed with the boundary space: columns of the (k+1)-boundary matrix.
  QMatrix d_up = boundary_matrix(x, k + 1);
  for (int c = 0; c < d_up.cols(); ++c) {
    std::vector<Rat> col(d_up.rows());
    for (int r = 0; r < d_up.rows(); ++r) col[r] = d_up.at(r, c);
    reducer.insert(std::move(col));
  }
  // Kernel vectors that stay independent modulo boundaries represent a
  // basis of H_k.
  for (auto& v : cycle_space_basis(x, k)) {
    std::vector<Rat> copy = v;
    if (reducer.insert(std::move(copy))) {
      classes.push_back(HomologyClass{&x, vector_to_chain(x, k, v), k});
    }
  }
  return classes;
}

std::vector<int> betti_numbers(const SimplicialComplex& x) {
  std::vector<int> betti;
  for (int k = 0; k <= x.dim(); ++k) {
    int cycles = k == 0 ? x.count(0)
                        : x.count(k) - rank(boundary_matrix(x, k));
    int boundaries = rank(boundary_matrix(x, k + 1));
    betti.push_back(cycles - boundaries);
  }
  return betti;
}

std::optional<Chain> is_homologous(const SimplicialComplex& x, const Chain& z1,
                                   const Chain& z2) {
  if (z1.degree != z2.degree) {
    throw DegreeMismatch("cycles of different degree");
  }
  if (!chain_is_cycle(z1) || !chain_is_cycle(z2)) {
    throw NotACycle("is_homologous requires cycle inputs");
  }
  const int k = z1.degree;
  Chain diff = z1;
  diff -= z2;
  std::vector<Rat> d = chain_to_vector(x, diff);

  if (k + 1 > x.dim()) {
    if (diff.is_zero()) return Chain(k + 1);
    return std::nullopt;
  }
  auto sol = solve_linear(boundary_matrix(x, k + 1), d);
  if (!sol) return std::nullopt;
  return vector_to_chain(x, k + 1, *sol);
}

Chain fundamental_cycle(const SimplicialComplex& x) {
  const int d = x.dim();
  if (d < 0) throw NotClosed("empty complex");

  const auto& facets = x.simplices(d);
  const int nf = static_cast<int>(facets.size());

  if (d == 0) {
    Chain z(0);
    for (const auto& s : facets) z.terms.emplace(s, Rat(1));
    return z;
  }

  // Ridge incidences: every (d-1)-simplex must lie in exactly two facets.
  struct Incidence {
    int facet;
    int sign;
  };
  std::map<Simplex, std::vector<Incidence>> ridge_of;
  for (int f = 0; f < nf; ++f) {
    int sign = 1;
    for (int j = 0; j <= d; ++j) {
      ridge_of[facets[f].face(j)].push_back({f, sign});
      sign = -sign;
    }
  }
  for (const auto& [ridge, inc] : ridge_of) {
    if (inc.size() != 2) {
      std::string vs;
      for (Vertex v : ridge.vertices) vs += std::to_string(v) + " ";
      throw NotClosed("ridge [ " + vs + "] lies in " +
                      std::to_string(inc.size()) + " facets, expected 2");
    }
  }

  // Propagate orientations across ridges; the two incident facets must
  // induce opposite signs on the shared ridge.
  std::vector<int> sign(nf, 0);
  for (int seed = 0; seed < nf; ++seed) {
    if (sign[seed] != 0) continue;
    sign[seed] = 1;
    std::deque<int> queue{seed};
    while (!queue.empty()) {
      int f = queue.front();
      queue.pop_front();
      for (int j = 0; j <= d; ++j) {
        const auto& inc = ridge_of.at(facets[f].face(j));
        const Incidence& mine = inc[0].facet == f ? inc[0] : inc[1];
        const Incidence& other = inc[0].facet == f ? inc[1] : inc[0];
        int needed = -sign[f] * mine.sign * other.sign;
        if (sign[other.facet] == 0) {
          sign[other.facet] = needed;
          queue.push_back(other.facet);
        } else if (sign[other.facet] != needed) {
          throw NotOrientable("orientation propagation reached a contradiction");
        }
      }
    }
  }

  Chain z(d);
  for (int f = 0; f < nf; ++f) z.terms.emplace(facets[f], Rat(sign[f]));
  assert(boundary(z).is_zero());
  return z;
}

}  // namespace l1hom
