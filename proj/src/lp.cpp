#include "l1hom/lp.hpp"

#include <cassert>
#include <sstream>

#include "l1hom/errors.hpp"

namespace l1hom {

namespace {

// Dense simplex tableau: m constraint rows plus one reduced-cost row, the
// columns being [original vars | artificials | rhs]. The artificial columns
// double as B^{-1}, which is where the dual multipliers come from.
struct Tableau {
  QMatrix t;               // (m+1) x (n + m + 1)
  std::vector<int> basis;  // basic column per constraint row
  int m, n;
  long pivots = 0;

  int rhs_col() const { return n + m; }
  int obj_row() const { return m; }

  void pivot(int row, int col) {
    normalize_pivot_row(t, row, col);
    eliminate_column(t, row, col);
    basis[row] = col;
    ++pivots;
  }

  // Returns true on optimal, false on unbounded. `limit` is one past the
  // last column allowed to enter.
  bool run(int limit) {
    for (;;) {
      // Bland: entering column = smallest index with negative reduced cost.
      int entering = -1;
      for (int j = 0; j < limit; ++j) {
        if (t.at(obj_row(), j) < 0) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return true;

      // Ratio test; ties broken by the smallest basic column index.
      int leaving = -1;
      Rat best;
      for (int r = 0; r < m; ++r) {
        const Rat& a = t.at(r, entering);
        if (a <= 0) continue;
        Rat ratio = t.at(r, rhs_col()) / a;
        if (leaving < 0 || ratio < best ||
            (ratio == best && basis[r] < basis[leaving])) {
          leaving = r;
          best = ratio;
        }
      }
      if (leaving < 0) return false;
      pivot(leaving, entering);
    }
  }
};

}  // namespace

LPSolution solve(const LinearProgram& lp) {
  const int m = lp.constraints.rows();
  const int n = lp.constraints.cols();
  if (static_cast<int>(lp.objective.size()) != n ||
      static_cast<int>(lp.rhs.size()) != m) {
    throw MalformedProgram("objective/rhs dimensions do not match the matrix");
  }

  Tableau tab;
  tab.m = m;
  tab.n = n;
  tab.t = QMatrix(m + 1, n + m + 1);
  tab.basis.resize(m);

  // Rows are flipped where needed so the rhs is nonnegative; dual
  // multipliers are flipped back at the end.
  std::vector<int> flip(m, 1);
  for (int r = 0; r < m; ++r) {
    if (lp.rhs[r] < 0) flip[r] = -1;
    for (int c = 0; c < n; ++c) {
      if (lp.constraints.at(r, c) != 0) {
        tab.t.at(r, c) = flip[r] * lp.constraints.at(r, c);
      }
    }
    tab.t.at(r, n + r) = 1;
    tab.t.at(r, tab.rhs_col()) = flip[r] * lp.rhs[r];
    tab.basis[r] = n + r;
  }

  // Phase 1: minimize the sum of artificials. With the artificial basis,
  // the reduced cost of column j is -sum of its entries, and the objective
  // cell holds -(sum of rhs).
  for (int j = 0; j <= tab.rhs_col(); ++j) {
    if (j >= n && j < n + m) continue;  // artificials cost 1 - 1 = 0
    Rat sum(0);
    for (int r = 0; r < m; ++r) sum += tab.t.at(r, j);
    if (sum != 0) tab.t.at(tab.obj_row(), j) = -sum;
  }

  bool ok = tab.run(n + m);
  assert(ok);  // phase 1 is bounded below by zero
  (void)ok;

  LPSolution out;
  out.pivots = tab.pivots;
  if (tab.t.at(tab.obj_row(), tab.rhs_col()) != 0) {
    out.status = LPStatus::Infeasible;
    return out;
  }

  // Drive leftover artificials out of the basis; a row that cannot pivot
  // on any structural column is redundant and keeps its artificial at 0.
  for (int r = 0; r < m; ++r) {
    if (tab.basis[r] < n) continue;
    for (int c = 0; c < n; ++c) {
      if (tab.t.at(r, c) != 0) {
        tab.pivot(r, c);
        break;
      }
    }
  }

  // Phase 2: rebuild the reduced-cost row for the real objective. The
  // artificial columns keep their reduced costs -y so the duals can be
  // read off after the run; they are barred from entering.
  for (int j = 0; j <= tab.rhs_col(); ++j) {
    Rat v = j < n ? lp.objective[j] : Rat(0);
    for (int r = 0; r < m; ++r) {
      if (tab.basis[r] < n && tab.t.at(r, j) != 0) {
        v -= lp.objective[tab.basis[r]] * tab.t.at(r, j);
      }
    }
    tab.t.at(tab.obj_row(), j) = v;
  }

  if (!tab.run(n)) {
    out.status = LPStatus::Unbounded;
    out.pivots = tab.pivots;
    return out;
  }
  out.pivots = tab.pivots;
  out.status = LPStatus::Optimal;

  out.primal.assign(n, Rat(0));
  for (int r = 0; r < m; ++r) {
    if (tab.basis[r] < n) out.primal[tab.basis[r]] = tab.t.at(r, tab.rhs_col());
  }
  out.value = 0;
  for (int j = 0; j < n; ++j) {
    if (out.primal[j] != 0) out.value += lp.objective[j] * out.primal[j];
  }
  out.dual.assign(m, Rat(0));
  for (int r = 0; r < m; ++r) {
    out.dual[r] = Rat(-flip[r]) * tab.t.at(tab.obj_row(), n + r);
  }
  return out;
}

std::string lp_dump_text(const LinearProgram& lp) {
  std::ostringstream os;
  os << "min\n";
  os << "c:";
  for (const Rat& c : lp.objective) os << " " << rat_str(c);
  os << "\n";
  for (int r = 0; r < lp.constraints.rows(); ++r) {
    os << "A|b:";
    for (int c = 0; c < lp.constraints.cols(); ++c) {
      os << " " << rat_str(lp.constraints.at(r, c));
    }
    os << " | " << rat_str(lp.rhs[r]) << "\n";
  }
  return os.str();
}

}  // namespace l1hom
