#include "l1hom/complex.hpp"

#include <algorithm>
#include <set>

#include "l1hom/errors.hpp"

namespace l1hom {

Simplex Simplex::face(int j) const {
  Simplex f;
  f.vertices.reserve(vertices.size() - 1);
  for (size_t i = 0; i < vertices.size(); ++i) {
    if (static_cast<int>(i) != j) f.vertices.push_back(vertices[i]);
  }
  return f;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int k) const {
  static const std::vector<Simplex> empty;
  if (k < 0 || k > dim()) return empty;
  return grades_[k];
}

int SimplicialComplex::index_of(const Simplex& s) const {
  int k = s.degree();
  if (k < 0 || k > dim()) return -1;
  const auto& grade = grades_[k];
  auto it = std::lower_bound(grade.begin(), grade.end(), s);
  if (it == grade.end() || *it != s) return -1;
  return static_cast<int>(it - grade.begin());
}

std::vector<Vertex> SimplicialComplex::vertex_ids() const {
  std::vector<Vertex> out;
  if (dim() < 0) return out;
  out.reserve(grades_[0].size());
  for (const auto& s : grades_[0]) out.push_back(s.vertices[0]);
  return out;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  std::vector<Simplex> out;
  std::set<Simplex> proper_faces;
  for (int k = dim(); k >= 0; --k) {
    for (const auto& s : grades_[k]) {
      if (!proper_faces.count(s)) out.push_back(s);
      for (int j = 0; j <= s.degree(); ++j) {
        if (s.degree() >= 1) proper_faces.insert(s.face(j));
      }
    }
  }
  return out;
}

SimplicialComplex build_complex(
    const std::vector<std::vector<Vertex>>& facets) {
  std::set<Simplex> all;
  for (const auto& facet : facets) {
    std::vector<Vertex> vs = facet;
    for (Vertex v : vs) {
      if (v < 0) throw InvalidFacet("negative vertex id");
    }
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) {
      throw InvalidFacet("repeated vertex within a facet");
    }
    // Closure: every subset of the facet's vertex set is a face.
    const size_t n = vs.size();
    for (size_t mask = 1; mask < (size_t(1) << n); ++mask) {
      Simplex s;
      for (size_t i = 0; i < n; ++i) {
        if (mask & (size_t(1) << i)) s.vertices.push_back(vs[i]);
      }
      all.insert(std::move(s));
    }
  }
  SimplicialComplex x;
  int dim = -1;
  for (const auto& s : all) dim = std::max(dim, s.degree());
  x.grades_.resize(dim + 1);
  for (const auto& s : all) x.grades_[s.degree()].push_back(s);
  // std::set iteration is lex-sorted already; per-degree order inherits it.
  return x;
}

void Chain::add(const Simplex& s, const Rat& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms.emplace(s, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  }
}

Rat Chain::coeff(const Simplex& s) const {
  auto it = terms.find(s);
  return it == terms.end() ? Rat(0) : it->second;
}

Chain& Chain::operator+=(const Chain& other) {
  for (const auto& [s, a] : other.terms) add(s, a);
  return *this;
}

Chain& Chain::operator-=(const Chain& other) {
  for (const auto& [s, a] : other.terms) add(s, -a);
  return *this;
}

Chain Chain::operator*(const Rat& scalar) const {
  Chain out(degree);
  if (scalar == 0) return out;
  for (const auto& [s, a] : terms) out.terms.emplace(s, a * scalar);
  return out;
}

Chain boundary(const Chain& c) {
  if (c.degree == 0) throw DegreeError("boundary of a degree-0 chain");
  Chain out(c.degree - 1);
  for (const auto& [s, a] : c.terms) {
    int sign = 1;
    for (int j = 0; j <= s.degree(); ++j) {
      out.add(s.face(j), sign > 0 ? a : Rat(-a));
      sign = -sign;
    }
  }
  return out;
}

Rat l1_norm(const Chain& c) {
  Rat sum(0);
  for (const auto& [s, a] : c.terms) sum += rat_abs(a);
  return sum;
}

}  // namespace l1hom
