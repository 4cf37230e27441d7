#include "l1hom/seminorm.hpp"

#include <stdexcept>

#include "l1hom/errors.hpp"
#include "l1hom/subdivision.hpp"

namespace l1hom {

Rat sup_norm(const Cochain& f) {
  Rat best(0);
  for (const Rat& v : f.values) {
    Rat a = rat_abs(v);
    if (a > best) best = a;
  }
  return best;
}

Rat evaluate(const Cochain& f, const SimplicialComplex& x, const Chain& c) {
  if (f.degree != c.degree) {
    throw DegreeMismatch("cochain and chain degrees differ");
  }
  Rat sum(0);
  for (const auto& [s, a] : c.terms) {
    int i = x.index_of(s);
    if (i < 0) throw MalformedInput("chain term is not a simplex of the complex");
    sum += f.values[i] * a;
  }
  return sum;
}

bool is_cocycle(const Cochain& f, const SimplicialComplex& x) {
  const int k = f.degree;
  for (const auto& tau : x.simplices(k + 1)) {
    Rat sum(0);
    int sign = 1;
    for (int j = 0; j <= k + 1; ++j) {
      sum += Rat(sign) * f.values[x.index_of(tau.face(j))];
      sign = -sign;
    }
    if (sum != 0) return false;
  }
  return true;
}

namespace {

void require_class_cycle(const HomologyClass& alpha) {
  if (!alpha.complex) throw MalformedInput("homology class has no complex");
  if (alpha.cycle.degree != alpha.degree) {
    throw DegreeMismatch("class degree does not match its cycle");
  }
  if (alpha.degree > 0 && !boundary(alpha.cycle).is_zero()) {
    throw NotACycle("representative has nonzero boundary");
  }
}

void require(bool cond, const char* what) {
  if (!cond) throw std::logic_error(what);
}

}  // namespace

LinearProgram seminorm_lp(const HomologyClass& alpha) {
  const SimplicialComplex& x = *alpha.complex;
  const int k = alpha.degree;
  const int nk = x.count(k);
  const int nup = x.count(k + 1);
  std::vector<Rat> z = chain_to_vector(x, alpha.cycle);
  QMatrix d = boundary_matrix(x, k + 1);

  LinearProgram lp;
  lp.constraints = QMatrix(nk, 2 * nk + 2 * nup);
  lp.rhs = std::move(z);
  lp.objective.assign(2 * nk + 2 * nup, Rat(0));
  for (int i = 0; i < nk; ++i) {
    lp.objective[i] = 1;       // u_i
    lp.objective[nk + i] = 1;  // v_i
    lp.constraints.at(i, i) = 1;
    lp.constraints.at(i, nk + i) = -1;
  }
  for (int t = 0; t < nup; ++t) {
    for (int i = 0; i < nk; ++i) {
      const Rat& e = d.at(i, t);
      if (e != 0) {
        lp.constraints.at(i, 2 * nk + t) = -e;        // b+ column
        lp.constraints.at(i, 2 * nk + nup + t) = e;   // b- column
      }
    }
  }
  return lp;
}

namespace {

struct SolvedSeminorm {
  LPSolution sol;
  int nk;
};

SolvedSeminorm solve_seminorm(const HomologyClass& alpha) {
  require_class_cycle(alpha);
  LinearProgram lp = seminorm_lp(alpha);
  LPSolution sol = solve(lp);
  // u = z+, v = z-, b = 0 is always feasible and the objective is >= 0.
  require(sol.status == LPStatus::Optimal, "seminorm LP must be optimal");
  return {std::move(sol), alpha.complex->count(alpha.degree)};
}

}  // namespace

SeminormResult l1_seminorm(const HomologyClass& alpha) {
  auto [sol, nk] = solve_seminorm(alpha);
  std::vector<Rat> w(nk);
  for (int i = 0; i < nk; ++i) w[i] = sol.primal[i] - sol.primal[nk + i];
  return SeminormResult{sol.value,
                        vector_to_chain(*alpha.complex, alpha.degree, w),
                        sol.pivots};
}

std::optional<DualCertificate> dual_certificate(const HomologyClass& alpha) {
  auto [sol, nk] = solve_seminorm(alpha);
  if (sol.value == 0) return std::nullopt;

  // The dual multipliers form a cocycle y with <y, z> = value and
  // ||y||_inf = 1; rescaling by the value normalizes the pairing to 1 and
  // pins the sup norm to 1/value (weak duality forbids anything smaller).
  DualCertificate cert;
  cert.cochain.degree = alpha.degree;
  cert.cochain.values.resize(nk);
  for (int i = 0; i < nk; ++i) cert.cochain.values[i] = sol.dual[i] / sol.value;
  cert.pairing = evaluate(cert.cochain, *alpha.complex, alpha.cycle);
  cert.sup_norm = sup_norm(cert.cochain);
  require(cert.pairing == 1, "dual certificate pairing must be 1");
  require(cert.sup_norm * sol.value == 1, "dual certificate must attain the optimum");
  require(is_cocycle(cert.cochain, *alpha.complex),
          "dual certificate must be a cocycle");
  return cert;
}

Rat verify_certificate(const Cochain& phi, const HomologyClass& alpha) {
  const SimplicialComplex& x = *alpha.complex;
  const int k = alpha.degree;
  if (phi.degree != k ||
      static_cast<int>(phi.values.size()) != x.count(k)) {
    throw MalformedInput("certificate is not a total cochain of this degree");
  }
  // Cocycle condition on the spanning set of boundaries, then the
  // normalization; both plain arithmetic, independent of the LP solver.
  if (!is_cocycle(phi, x)) {
    throw NotACocycle("certificate does not vanish on all boundaries");
  }
  Rat pairing = evaluate(phi, x, alpha.cycle);
  if (pairing != 1) {
    throw PairingNotOne("certificate pairs to " + rat_str(pairing));
  }
  return Rat(1) / sup_norm(phi);
}

std::vector<Cochain> cocycle_basis(const SimplicialComplex& x, int k) {
  const int nk = x.count(k);
  const int nup = x.count(k + 1);
  QMatrix d = boundary_matrix(x, k + 1);
  QMatrix dt(nup, nk);
  for (int r = 0; r < d.rows(); ++r) {
    for (int c = 0; c < d.cols(); ++c) {
      if (d.at(r, c) != 0) dt.at(c, r) = d.at(r, c);
    }
  }
  std::vector<Cochain> basis;
  for (auto& v : kernel_basis(dt)) {
    basis.push_back(Cochain{k, std::move(v)});
  }
  return basis;
}

std::vector<Rat> simplicial_volume_upper(const SimplicialComplex& x,
                                         int rounds) {
  if (rounds < 0) throw MalformedInput("rounds must be nonnegative");
  std::vector<Rat> values;
  SimplicialComplex cur = x;
  Chain z = fundamental_cycle(cur);
  for (int i = 0; i <= rounds; ++i) {
    values.push_back(l1_seminorm(HomologyClass{&cur, z, cur.dim()}).value);
    if (i < rounds) {
      BarycentricSubdivision sd = subdivide(cur);
      z = sd.map(z);
      cur = sd.complex();
    }
  }
  return values;
}

}  // namespace l1hom
