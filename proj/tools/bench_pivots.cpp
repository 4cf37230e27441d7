// Benchmark of the row-elimination kernels: full Gauss-Jordan sweeps over
// random dense rational matrices, serial reference vs OpenMP row-parallel,
// with a bitwise equality check between the two results.

#include <chrono>
#include <cstdio>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "l1hom/matrix.hpp"

using namespace l1hom;

namespace {

QMatrix random_matrix(int n, std::mt19937_64& rng) {
  QMatrix m(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      int num = static_cast<int>(rng() % 19) - 9;
      int den = static_cast<int>(rng() % 9) + 1;
      m.at(r, c) = Rat(num, den);
    }
  }
  return m;
}

template <typename Eliminate>
double sweep(QMatrix& m, Eliminate eliminate) {
  auto start = std::chrono::steady_clock::now();
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pivot = -1;
    for (int i = r; i < m.rows(); ++i) {
      if (m.at(i, c) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    m.swap_rows(pivot, r);
    normalize_pivot_row(m, r, c);
    eliminate(m, r, c);
    ++r;
  }
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("%8s %14s %14s %10s %8s\n", "size", "serial_ms", "parallel_ms",
              "speedup", "equal");

  for (int n : {48, 96, 160}) {
    std::mt19937_64 rng(0xbadc0ffeULL);
    QMatrix base = random_matrix(n, rng);

    QMatrix serial = base;
    double t_serial = sweep(serial, eliminate_column_serial);

    QMatrix parallel = base;
    double t_parallel = sweep(parallel, eliminate_column_parallel);

    bool equal = serial == parallel;
    std::printf("%8d %14.2f %14.2f %9.2fx %8s\n", n, t_serial, t_parallel,
                t_parallel > 0 ? t_serial / t_parallel : 0.0,
                equal ? "yes" : "NO");
    if (!equal) return 1;
  }
  return 0;
}
