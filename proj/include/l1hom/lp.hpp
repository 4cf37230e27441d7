#pragma once

// Exact rational linear programming: primal simplex in standard form
//     min c.x   s.t.  A x = b,  x >= 0
// with Bland's anti-cycling rule. Returns the optimal value, a primal
// solution, and one dual multiplier per constraint row with a zero duality
// gap, all exact.

#include <string>
#include <vector>

#include "l1hom/matrix.hpp"

namespace l1hom {

struct LinearProgram {
  std::vector<Rat> objective;  // length n
  QMatrix constraints;         // m x n
  std::vector<Rat> rhs;        // length m
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPSolution {
  LPStatus status = LPStatus::Infeasible;
  Rat value;                // c.primal = rhs.dual when Optimal
  std::vector<Rat> primal;  // length n, empty unless Optimal
  std::vector<Rat> dual;    // length m, empty unless Optimal
  long pivots = 0;
};

// Throws MalformedProgram on inconsistent dimensions. Deterministic:
// identical programs yield identical solutions bit for bit.
LPSolution solve(const LinearProgram& lp);

// Plain-text dump used by the CLI's --dump-lp flag.
std::string lp_dump_text(const LinearProgram& lp);

}  // namespace l1hom
