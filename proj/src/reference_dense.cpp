#include "gmat/reference_dense.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gmat/spectral_core.hpp"

namespace gmat {

DenseMatrix DenseMatrix::identity(int order) {
  DenseMatrix I(order);
  for (int i = 0; i < order; ++i) I.at(i, i) = 1.0;
  return I;
}

DenseMatrix circulant(std::span<const double> c) {
  const int n = static_cast<int>(c.size());
  DenseMatrix C(n);
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) C.at(k, l) = c[static_cast<std::size_t>(((l - k) % n + n) % n)];
  }
  return C;
}

DenseMatrix reverse_circulant(std::span<const double> b) {
  const int n = static_cast<int>(b.size());
  DenseMatrix B(n);
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) B.at(k, l) = b[static_cast<std::size_t>((k + l) % n)];
  }
  return B;
}

std::vector<double> dense_idsct(std::span<const double> x) {
  const int n = static_cast<int>(x.size());
  const BasisVectorSet q = build_q_dense(n);
  std::vector<double> y(x.size(), 0.0);
  for (int j = 0; j < n; ++j) {
    double acc = 0.0;
    for (int k = 0; k < n; ++k) acc += q.entry(k, j) * x[static_cast<std::size_t>(k)];
    y[static_cast<std::size_t>(j)] = acc;
  }
  return y;
}

std::vector<double> dense_dsct(std::span<const double> t) {
  const int n = static_cast<int>(t.size());
  const BasisVectorSet q = build_q_dense(n);
  std::vector<double> y(t.size(), 0.0);
  for (int j = 0; j < n; ++j) {
    const double tj = t[static_cast<std::size_t>(j)];
    for (int k = 0; k < n; ++k) y[static_cast<std::size_t>(k)] += q.entry(k, j) * tj;
  }
  return y;
}

std::vector<double> dense_matvec(const DenseMatrix& A, std::span<const double> x) {
  if (static_cast<int>(x.size()) != A.n) throw DimensionError("dense_matvec: size mismatch");
  std::vector<double> y(x.size(), 0.0);
  for (int i = 0; i < A.n; ++i) {
    double acc = 0.0;
    for (int j = 0; j < A.n; ++j) acc += A.at(i, j) * x[static_cast<std::size_t>(j)];
    y[static_cast<std::size_t>(i)] = acc;
  }
  return y;
}

DenseMatrix dense_matmul(const DenseMatrix& A, const DenseMatrix& B) {
  if (A.n != B.n) throw DimensionError("dense_matmul: order mismatch");
  const int n = A.n;
  DenseMatrix C(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const double aik = A.at(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < n; ++j) C.at(i, j) += aik * B.at(k, j);
    }
  }
  return C;
}

double max_abs_difference(const DenseMatrix& A, const DenseMatrix& B) {
  if (A.n != B.n) throw DimensionError("max_abs_difference: order mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < A.a.size(); ++i) {
    worst = std::max(worst, std::abs(A.a[i] - B.a[i]));
  }
  return worst;
}

namespace {

// Householder reduction of a symmetric matrix to tridiagonal form
// (diagonal d, subdiagonal e); eigenvalues only, so the transforms are not
// accumulated.
void tridiagonalize(DenseMatrix& A, std::vector<double>& d, std::vector<double>& e) {
  const int n = A.n;
  d.assign(static_cast<std::size_t>(n), 0.0);
  e.assign(static_cast<std::size_t>(n), 0.0);
  std::vector<double> v(static_cast<std::size_t>(n)), p(static_cast<std::size_t>(n)),
      w(static_cast<std::size_t>(n));
  for (int i = 0; i + 2 < n; ++i) {
    double norm2 = 0.0;
    for (int k = i + 1; k < n; ++k) norm2 += A.at(k, i) * A.at(k, i);
    const double norm = std::sqrt(norm2);
    if (norm == 0.0) {
      e[static_cast<std::size_t>(i)] = 0.0;
      continue;
    }
    const double x0 = A.at(i + 1, i);
    const double alpha = (x0 >= 0.0) ? -norm : norm;
    // reflector v annihilating the column below the subdiagonal
    double vnorm2 = 0.0;
    for (int k = i + 1; k < n; ++k) {
      v[static_cast<std::size_t>(k)] = A.at(k, i);
    }
    v[static_cast<std::size_t>(i) + 1] -= alpha;
    for (int k = i + 1; k < n; ++k) {
      vnorm2 += v[static_cast<std::size_t>(k)] * v[static_cast<std::size_t>(k)];
    }
    e[static_cast<std::size_t>(i)] = alpha;
    if (vnorm2 == 0.0) continue;
    const double beta = 2.0 / vnorm2;
    // symmetric rank-two update A <- A - v w^T - w v^T on the trailing block
    for (int k = i + 1; k < n; ++k) {
      double acc = 0.0;
      for (int l = i + 1; l < n; ++l) acc += A.at(k, l) * v[static_cast<std::size_t>(l)];
      p[static_cast<std::size_t>(k)] = beta * acc;
    }
    double kappa = 0.0;
    for (int k = i + 1; k < n; ++k) {
      kappa += v[static_cast<std::size_t>(k)] * p[static_cast<std::size_t>(k)];
    }
    kappa *= beta / 2.0;
    for (int k = i + 1; k < n; ++k) {
      w[static_cast<std::size_t>(k)] =
          p[static_cast<std::size_t>(k)] - kappa * v[static_cast<std::size_t>(k)];
    }
    for (int k = i + 1; k < n; ++k) {
      const double vk = v[static_cast<std::size_t>(k)];
      const double wk = w[static_cast<std::size_t>(k)];
      for (int l = i + 1; l <= k; ++l) {
        const double upd = vk * w[static_cast<std::size_t>(l)] +
                           wk * v[static_cast<std::size_t>(l)];
        A.at(k, l) -= upd;
        if (l != k) A.at(l, k) = A.at(k, l);
      }
    }
    A.at(i + 1, i) = alpha;
  }
  for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = A.at(i, i);
  if (n >= 2) e[static_cast<std::size_t>(n) - 2] = A.at(n - 1, n - 2);
  e[static_cast<std::size_t>(n) - 1] = 0.0;
}

// Implicit-shift QL on a symmetric tridiagonal (d, e); d becomes the
// unsorted eigenvalues.  e[i] is the coupling between i and i+1.
void ql_implicit(std::vector<double>& d, std::vector<double>& e) {
  const int n = static_cast<int>(d.size());
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = l;
    for (;;) {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[static_cast<std::size_t>(m)]) +
                          std::abs(d[static_cast<std::size_t>(m) + 1]);
        if (std::abs(e[static_cast<std::size_t>(m)]) <= 1e-300 ||
            std::abs(e[static_cast<std::size_t>(m)]) <= 2.3e-16 * dd) {
          break;
        }
      }
      if (m == l) break;
      if (iter++ == 64) throw Error("dense_eigensolve_symmetric: QL iteration failed");
      double g = (d[static_cast<std::size_t>(l) + 1] - d[static_cast<std::size_t>(l)]) /
                 (2.0 * e[static_cast<std::size_t>(l)]);
      double r = std::hypot(g, 1.0);
      g = d[static_cast<std::size_t>(m)] - d[static_cast<std::size_t>(l)] +
          e[static_cast<std::size_t>(l)] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      bool underflow = false;
      for (int i = m - 1; i >= l; --i) {
        double f = s * e[static_cast<std::size_t>(i)];
        const double b = c * e[static_cast<std::size_t>(i)];
        r = std::hypot(f, g);
        e[static_cast<std::size_t>(i) + 1] = r;
        if (r == 0.0) {
          d[static_cast<std::size_t>(i) + 1] -= p;
          e[static_cast<std::size_t>(m)] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[static_cast<std::size_t>(i) + 1] - p;
        r = (d[static_cast<std::size_t>(i)] - g) * s + 2.0 * c * b;
        p = s * r;
        d[static_cast<std::size_t>(i) + 1] = g + p;
        g = c * r - b;
      }
      if (underflow) continue;
      d[static_cast<std::size_t>(l)] -= p;
      e[static_cast<std::size_t>(l)] = g;
      e[static_cast<std::size_t>(m)] = 0.0;
    }
  }
}

}  // namespace

std::vector<double> dense_eigensolve_symmetric(const DenseMatrix& A) {
  const int n = A.n;
  if (n < 1) throw InvalidOrderError("dense_eigensolve_symmetric: empty matrix");
  double scale = 0.0;
  for (double v : A.a) scale = std::max(scale, std::abs(v));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(A.at(i, j) - A.at(j, i)) > 1e-10 * std::max(1.0, scale)) {
        throw StructureError("dense_eigensolve_symmetric: matrix is not symmetric");
      }
    }
  }
  if (n == 1) return {A.at(0, 0)};
  DenseMatrix work = A;
  std::vector<double> d, e;
  tridiagonalize(work, d, e);
  ql_implicit(d, e);
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<double> dense_solve(DenseMatrix A, std::vector<double> b) {
  const int n = A.n;
  if (static_cast<int>(b.size()) != n) throw DimensionError("dense_solve: size mismatch");
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(A.at(r, col)) > std::abs(A.at(pivot, col))) pivot = r;
    }
    if (A.at(pivot, col) == 0.0) throw SingularMatrixError("dense_solve: singular", col, 0.0);
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(A.at(pivot, j), A.at(col, j));
      std::swap(b[static_cast<std::size_t>(pivot)], b[static_cast<std::size_t>(col)]);
    }
    const double inv = 1.0 / A.at(col, col);
    for (int r = col + 1; r < n; ++r) {
      const double f = A.at(r, col) * inv;
      if (f == 0.0) continue;
      for (int j = col; j < n; ++j) A.at(r, j) -= f * A.at(col, j);
      b[static_cast<std::size_t>(r)] -= f * b[static_cast<std::size_t>(col)];
    }
  }
  for (int r = n - 1; r >= 0; --r) {
    double acc = b[static_cast<std::size_t>(r)];
    for (int j = r + 1; j < n; ++j) acc -= A.at(r, j) * b[static_cast<std::size_t>(j)];
    b[static_cast<std::size_t>(r)] = acc / A.at(r, r);
  }
  return b;
}

}  // namespace gmat
