#pragma once

#include <span>
#include <vector>

#include "gmat/errors.hpp"

namespace gmat {

/// Row-major dense square matrix.  Brute-force oracle scale only.
struct DenseMatrix {
  int n = 0;
  std::vector<double> a;

  DenseMatrix() = default;
  explicit DenseMatrix(int order)
      : n(order), a(static_cast<std::size_t>(order) * order, 0.0) {}

  double& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

  static DenseMatrix identity(int order);
};

/// circ(c): every row after the first is the previous one shifted
/// cyclically one place right; entry (k,l) = c[(l-k) mod n].
DenseMatrix circulant(std::span<const double> c);

/// rcirc(b): rows shift cyclically one place left; entry (k,l) =
/// b[(k+l) mod n].  Always symmetric.
DenseMatrix reverse_circulant(std::span<const double> b);

/// Explicit O(n^2) products with the materialized basis; any n >= 2.
std::vector<double> dense_idsct(std::span<const double> x);  // Q^T x
std::vector<double> dense_dsct(std::span<const double> t);   // Q t

std::vector<double> dense_matvec(const DenseMatrix& A, std::span<const double> x);
DenseMatrix dense_matmul(const DenseMatrix& A, const DenseMatrix& B);

double max_abs_difference(const DenseMatrix& A, const DenseMatrix& B);

/// Eigenvalues of a symmetric matrix, sorted ascending.  Householder
/// tridiagonalization followed by implicit-shift QL; accuracy on the order
/// of machine epsilon times the matrix norm.  Throws StructureError if A
/// is not symmetric within 1e-10 of its scale.
std::vector<double> dense_eigensolve_symmetric(const DenseMatrix& A);

/// Direct dense solve (LU with partial pivoting); test oracle for the
/// iterative solver.
std::vector<double> dense_solve(DenseMatrix A, std::vector<double> b);

}  // namespace gmat
