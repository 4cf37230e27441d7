#include "l1hom/matrix.hpp"

#include <algorithm>
#include <cassert>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace l1hom {

void QMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  auto* pa = &data_[static_cast<size_t>(a) * cols_];
  auto* pb = &data_[static_cast<size_t>(b) * cols_];
  for (int c = 0; c < cols_; ++c) std::swap(pa[c], pb[c]);
}

void normalize_pivot_row(QMatrix& m, int prow, int pcol) {
  Rat pivot = m.at(prow, pcol);
  assert(pivot != 0);
  if (pivot == 1) return;
  for (int c = 0; c < m.cols(); ++c) {
    Rat& e = m.at(prow, c);
    if (e != 0) e /= pivot;
  }
}

namespace {

inline void eliminate_one_row(QMatrix& m, int r, int prow, int pcol) {
  Rat factor = m.at(r, pcol);
  if (factor == 0) return;
  const int cols = m.cols();
  for (int c = 0; c < cols; ++c) {
    const Rat& p = m.at(prow, c);
    if (p != 0) m.at(r, c) -= factor * p;
  }
  m.at(r, pcol) = 0;  // exact, but avoid leaving a non-canonical 0/1
}

}  // namespace

void eliminate_column_serial(QMatrix& m, int prow, int pcol) {
  assert(m.at(prow, pcol) == 1);
  for (int r = 0; r < m.rows(); ++r) {
    if (r != prow) eliminate_one_row(m, r, prow, pcol);
  }
}

void eliminate_column_parallel(QMatrix& m, int prow, int pcol) {
  assert(m.at(prow, pcol) == 1);
  const int rows = m.rows();
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int r = 0; r < rows; ++r) {
    if (r != prow) eliminate_one_row(m, r, prow, pcol);
  }
}

void eliminate_column(QMatrix& m, int prow, int pcol) {
#ifdef _OPENMP
  // Rational row updates are heavy enough that even modest matrices
  // amortize the fork once more than one thread is available.
  if (omp_get_max_threads() > 1 && m.rows() >= 32 && m.cols() >= 16) {
    eliminate_column_parallel(m, prow, pcol);
    return;
  }
#endif
  eliminate_column_serial(m, prow, pcol);
}

Rref row_reduce(QMatrix m) {
  Rref out;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pivot_row = -1;
    for (int i = r; i < m.rows(); ++i) {
      if (m.at(i, c) != 0) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row < 0) continue;
    m.swap_rows(pivot_row, r);
    normalize_pivot_row(m, r, c);
    eliminate_column(m, r, c);
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.m = std::move(m);
  return out;
}

int rank(const QMatrix& m) {
  return static_cast<int>(row_reduce(m).pivot_cols.size());
}

std::vector<std::vector<Rat>> kernel_basis(const QMatrix& m) {
  const int n = m.cols();
  Rref rref = row_reduce(m);

  std::vector<bool> is_pivot(n, false);
  for (int c : rref.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Rat>> basis;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(n, Rat(0));
    v[f] = 1;
    for (size_t i = 0; i < rref.pivot_cols.size(); ++i) {
      v[rref.pivot_cols[i]] = -rref.m.at(static_cast<int>(i), f);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rat>> solve_linear(const QMatrix& a,
                                             const std::vector<Rat>& b) {
  assert(static_cast<int>(b.size()) == a.rows());
  QMatrix aug(a.rows(), a.cols() + 1);
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = b[r];
  }
  Rref rref = row_reduce(std::move(aug));
  for (int c : rref.pivot_cols) {
    if (c == a.cols()) return std::nullopt;  // pivot in the rhs column
  }
  std::vector<Rat> x(a.cols(), Rat(0));
  for (size_t i = 0; i < rref.pivot_cols.size(); ++i) {
    x[rref.pivot_cols[i]] = rref.m.at(static_cast<int>(i), a.cols());
  }
  return x;
}

}  // namespace l1hom
