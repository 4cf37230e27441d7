#pragma once

// Dense exact-rational matrices plus the row-elimination kernels shared by
// the simplex solver and the homology rank computations.
//
// Every kernel comes in two flavours: a serial reference version and an
// OpenMP row-parallel version. Row updates are independent exact-rational
// operations, so the two produce bit-identical results; the parallel path
// is an optimization only and the serial path stays as the testing oracle.

#include <optional>
#include <vector>

#include "l1hom/rational.hpp"

namespace l1hom {

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const Rat& at(int r, int c) const {
    return data_[static_cast<size_t>(r) * cols_ + c];
  }

  void swap_rows(int a, int b);

  bool operator==(const QMatrix& other) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rat> data_;
};

// Divides row `prow` by its entry in column `pcol` (which must be nonzero)
// so the pivot becomes 1.
void normalize_pivot_row(QMatrix& m, int prow, int pcol);

// Subtracts multiples of the (normalized) pivot row from every other row so
// column `pcol` becomes the unit vector e_prow. Pivot entry must be 1.
void eliminate_column_serial(QMatrix& m, int prow, int pcol);
void eliminate_column_parallel(QMatrix& m, int prow, int pcol);

// Dispatches to the parallel kernel for matrices large enough to amortize
// the fork, otherwise runs the serial reference. Output is identical either
// way.
void eliminate_column(QMatrix& m, int prow, int pcol);

// Result of Gauss-Jordan elimination: `m` in reduced row echelon form and
// the pivot column of each nonzero row (rank = pivot_cols.size()).
struct Rref {
  QMatrix m;
  std::vector<int> pivot_cols;
};

Rref row_reduce(QMatrix m);

int rank(const QMatrix& m);

// Basis of { x : m x = 0 }, one vector per free column, in ascending free
// column order. Deterministic.
std::vector<std::vector<Rat>> kernel_basis(const QMatrix& m);

// One solution of a x = b with all free variables set to zero, or nullopt
// if the system is inconsistent.
std::optional<std::vector<Rat>> solve_linear(const QMatrix& a,
                                             const std::vector<Rat>& b);

}  // namespace l1hom
