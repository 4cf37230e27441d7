#include "l1hom/measure.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "l1hom/errors.hpp"
#include "l1hom/homology.hpp"
#include "l1hom/lp.hpp"

namespace l1hom {

void MeasureChain::add(const Simplex& s, const Rat& m) {
  if (m == 0) return;
  auto [it, inserted] = masses.emplace(s, m);
  if (!inserted) {
    it->second += m;
    if (it->second == 0) masses.erase(it);
  }
}

Rat MeasureChain::mass(const Simplex& s) const {
  auto it = masses.find(s);
  return it == masses.end() ? Rat(0) : it->second;
}

Rat sup_norm(const BoundedFunction& f) {
  Rat best(0);
  for (const Rat& v : f.values) {
    Rat a = rat_abs(v);
    if (a > best) best = a;
  }
  return best;
}

MeasureChain include_chain(const Chain& c) {
  MeasureChain mu(c.degree);
  mu.masses = c.terms;
  return mu;
}

Rat total_variation(const MeasureChain& mu) {
  // sup mu(A) is the mass of the positive atoms, inf mu(A) the mass of the
  // negative ones; the difference is the sum of absolute masses.
  Rat pos(0), neg(0);
  for (const auto& [s, m] : mu.masses) {
    if (m > 0) {
      pos += m;
    } else {
      neg += m;
    }
  }
  return pos - neg;
}

namespace {

// Sign of the permutation sorting `vs`, 0 if a value repeats.
int sort_sign(std::vector<Vertex>& vs) {
  int sign = 1;
  for (size_t i = 0; i < vs.size(); ++i) {
    for (size_t j = i + 1; j < vs.size(); ++j) {
      if (vs[i] == vs[j]) return 0;
      if (vs[i] > vs[j]) sign = -sign;
    }
  }
  std::sort(vs.begin(), vs.end());
  return sign;
}

// Image of a canonical simplex under a vertex map: the sorted image tuple
// and the orientation sign, or sign 0 when the image is degenerate.
std::pair<Simplex, int> map_simplex(const Simplex& s, const VertexMap& g) {
  std::vector<Vertex> image;
  image.reserve(s.vertices.size());
  for (Vertex v : s.vertices) {
    auto it = g.find(v);
    if (it == g.end()) {
      throw MalformedInput("vertex map undefined on vertex " + std::to_string(v));
    }
    image.push_back(it->second);
  }
  int sign = sort_sign(image);
  return {Simplex{std::move(image)}, sign};
}

}  // namespace

MeasureChain pushforward(const MeasureChain& mu, const VertexMap& g) {
  MeasureChain out(mu.degree);
  for (const auto& [s, m] : mu.masses) {
    auto [image, sign] = map_simplex(s, g);
    if (sign != 0) out.add(image, Rat(sign) * m);
  }
  return out;
}

Chain pushforward_chain(const Chain& c, const VertexMap& g) {
  Chain out(c.degree);
  for (const auto& [s, a] : c.terms) {
    auto [image, sign] = map_simplex(s, g);
    if (sign != 0) out.add(image, Rat(sign) * a);
  }
  return out;
}

MeasureChain boundary_measure(const MeasureChain& mu) {
  if (mu.degree == 0) throw DegreeError("boundary of a degree-0 measure chain");
  // Alternating sum of the face pushforwards; faces of a canonical simplex
  // are canonical, so no orientation correction appears here.
  MeasureChain out(mu.degree - 1);
  for (const auto& [s, m] : mu.masses) {
    int sign = 1;
    for (int j = 0; j <= s.degree(); ++j) {
      out.add(s.face(j), sign > 0 ? m : Rat(-m));
      sign = -sign;
    }
  }
  return out;
}

Rat kronecker(const SimplicialComplex& x, const BoundedFunction& f,
              const MeasureChain& mu) {
  if (f.degree != mu.degree) {
    throw DegreeMismatch("function and measure chain degrees differ");
  }
  Rat sum(0);
  for (const auto& [s, m] : mu.masses) {
    int i = x.index_of(s);
    if (i < 0) {
      throw MalformedInput("measure chain supported outside the complex");
    }
    sum += f.values[i] * m;
  }
  return sum;
}

Cochain v2_extend(const BoundedFunction& f) {
  return Cochain{f.degree, f.values};
}

MeasureSeminormResult measure_seminorm(const SimplicialComplex& x,
                                       const MeasureChain& mu) {
  if (mu.degree > 0 && !boundary_measure(mu).is_zero()) {
    throw NotACycle("measure chain has nonzero boundary");
  }
  const int k = mu.degree;
  const int nk = x.count(k);
  const int nup = x.count(k + 1);

  LinearProgram lp;
  lp.constraints = QMatrix(nk, 2 * nk + 2 * nup);
  lp.objective.assign(2 * nk + 2 * nup, Rat(0));
  lp.rhs.assign(nk, Rat(0));
  for (const auto& [s, m] : mu.masses) {
    int i = x.index_of(s);
    if (i < 0) {
      throw MalformedInput("measure chain supported outside the complex");
    }
    lp.rhs[i] = m;
  }
  for (int i = 0; i < nk; ++i) {
    lp.objective[i] = 1;
    lp.objective[nk + i] = 1;
    lp.constraints.at(i, i) = 1;
    lp.constraints.at(i, nk + i) = -1;
  }
  // Boundary columns assembled through the measure operations themselves.
  for (int t = 0; t < nup; ++t) {
    MeasureChain atom(k + 1);
    atom.add(x.simplex(k + 1, t), Rat(1));
    for (const auto& [s, m] : boundary_measure(atom).masses) {
      int i = x.index_of(s);
      lp.constraints.at(i, 2 * nk + t) = -m;
      lp.constraints.at(i, 2 * nk + nup + t) = m;
    }
  }

  LPSolution sol = solve(lp);
  if (sol.status != LPStatus::Optimal) {
    throw std::logic_error("measure seminorm LP must be optimal");
  }
  MeasureChain best(k);
  for (int i = 0; i < nk; ++i) {
    Rat w = sol.primal[i] - sol.primal[nk + i];
    if (w != 0) best.masses.emplace(x.simplex(k, i), w);
  }
  return MeasureSeminormResult{sol.value, std::move(best), sol.pivots};
}

// ---------------------------------------------------------------------------
// Randomized property suite (CLI measure-selftest)
// ---------------------------------------------------------------------------

namespace {

struct Rng {
  std::mt19937_64 eng;

  int uniform(int lo, int hi) {
    return static_cast<int>(eng() % (hi - lo + 1)) + lo;
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

  // Simplicial self-map: send every vertex into the vertex set of one
  // facet (any map into a simplex is simplicial).
  VertexMap self_map(const SimplicialComplex& x) {
    auto maximal = x.maximal_simplices();
    const Simplex& target = maximal[uniform(0, static_cast<int>(maximal.size()) - 1)];
    VertexMap g;
    for (Vertex v : x.vertex_ids()) {
      int i = uniform(0, target.degree());
      g[v] = target.vertices[i];
    }
    return g;
  }
};

}  // namespace

std::vector<std::pair<std::string, bool>> measure_selftest(
    const SimplicialComplex& x, int trials, std::uint64_t seed) {
  std::vector<std::pair<std::string, bool>> results;
  Rng rng{std::mt19937_64(seed)};
  auto record = [&](const std::string& name, bool ok) {
    results.emplace_back(name, ok);
  };
  auto any_degree = [&](Rng& r, int lo) { return r.uniform(lo, x.dim()); };

  {
    bool ok = true;
    for (int t = 0; t < trials; ++t) {
      Chain c = rng.chain(x, any_degree(rng, 0));
      ok = ok && total_variation(include_chain(c)) == l1_norm(c);
    }
    record("include_chain preserves the norm", ok);
  }
  {
    bool ok = true;
    for (int t = 0; t < trials && x.dim() >= 1; ++t) {
      Chain c = rng.chain(x, any_degree(rng, 1));
      ok = ok && boundary_measure(include_chain(c)) == include_chain(boundary(c));
    }
    record("include_chain commutes with the boundary", ok);
  }
  {
    bool ok = true;
    for (int t = 0; t < trials && x.dim() >= 2; ++t) {
      MeasureChain mu = rng.measure(x, any_degree(rng, 2));
      ok = ok && boundary_measure(boundary_measure(mu)).is_zero();
    }
    record("boundary of boundary vanishes", ok);
  }
  {
    bool ok = true;
    for (int t = 0; t < trials; ++t) {
      int k = any_degree(rng, 0);
      BoundedFunction f = rng.function(x, k);
      MeasureChain mu = rng.measure(x, k), nu = rng.measure(x, k);
      Rat a = rng.rat(), b = rng.rat();
      MeasureChain combo(k);
      for (const auto& [s, m] : mu.masses) combo.add(s, a * m);
      for (const auto& [s, m] : nu.masses) combo.add(s, b * m);
      ok = ok && kronecker(x, f, combo) ==
                     a * kronecker(x, f, mu) + b * kronecker(x, f, nu);
    }
    record("kronecker product is bilinear", ok);
  }
  {
    bool ok = true;
    for (int t = 0; t < trials; ++t) {
      int k = any_degree(rng, 0);
      BoundedFunction f = rng.function(x, k);
      MeasureChain mu = rng.measure(x, k);
      ok = ok && rat_abs(kronecker(x, f, mu)) <= sup_norm(f) * total_variation(mu);
    }
    record("kronecker bounded by sup norm times total variation", ok);
  }
  {
    bool ok = true;
    for (int t = 0; t < trials; ++t) {
      int k = any_degree(rng, 0);
      BoundedFunction f = rng.function(x, k);
      Chain c = rng.chain(x, k);
      ok = ok && evaluate(v2_extend(f), x, c) == kronecker(x, f, include_chain(c));
    }
    record("v2 extension is compatible with the kronecker product", ok);
  }
  {
    bool ok = true;
    for (int t = 0; t < trials; ++t) {
      MeasureChain mu = rng.measure(x, any_degree(rng, 0));
      ok = ok && total_variation(pushforward(mu, rng.self_map(x))) <=
                     total_variation(mu);
    }
    record("pushforward does not increase the total variation", ok);
  }
  {
    // Duality bound: a cocycle-valued function paired to 1 forces the
    // seminorm of the class above the reciprocal sup norm.
    bool ok = true;
    int checked = 0;
    const int wanted = std::max(1, trials / 10);
    for (int k = 0; k <= x.dim(); ++k) {
      auto cocycles = cocycle_basis(x, k);
      if (cocycles.empty()) continue;
      // Random measure cycles are drawn from the cycle space directly.
      std::vector<std::vector<Rat>> cycles;
      if (k == 0) {
        for (int i = 0; i < x.count(0); ++i) {
          std::vector<Rat> e(x.count(0), Rat(0));
          e[i] = 1;
          cycles.push_back(std::move(e));
        }
      } else {
        cycles = kernel_basis(boundary_matrix(x, k));
      }
      if (cycles.empty()) continue;
      for (int t = 0; t < 4 * wanted && checked < wanted * (k + 1); ++t) {
        BoundedFunction f{k, std::vector<Rat>(x.count(k), Rat(0))};
        for (const auto& base : cocycles) {
          Rat a = rng.rat();
          for (size_t i = 0; i < f.values.size(); ++i) {
            f.values[i] += a * base.values[i];
          }
        }
        std::vector<Rat> zv(x.count(k), Rat(0));
        for (const auto& cyc : cycles) {
          Rat a = rng.rat();
          for (size_t i = 0; i < zv.size(); ++i) zv[i] += a * cyc[i];
        }
        MeasureChain mu = include_chain(vector_to_chain(x, k, zv));
        Rat pairing = kronecker(x, f, mu);
        if (pairing == 0) continue;
        for (auto& v : f.values) v /= pairing;
        Rat bound = Rat(1) / sup_norm(f);
        ok = ok && measure_seminorm(x, mu).value >= bound;
        ++checked;
      }
    }
    record("duality bound certified by cocycle pairings", ok && checked > 0);
  }
  return results;
}

}  // namespace l1hom
