#pragma once

#include <span>
#include <utility>
#include <vector>

#include "gmat/gamma_algebra.hpp"

namespace gmat {

/// Real symmetric Toeplitz matrix stored as its first column; entry (k,j)
/// is t[|k-j|].
struct SymToeplitz {
  int n = 0;
  std::vector<double> t;

  static SymToeplitz from_first_column(std::vector<double> column);
};

DenseMatrix dense_toeplitz(const SymToeplitz& T);
std::vector<double> toeplitz_matvec(const SymToeplitz& T, std::span<const double> x);

/// Finitely supported generating sequence t_0..t_K.  Absolute summability
/// (Wiener-class membership) is automatic.
struct GeneratorSeq {
  std::vector<double> coeffs;

  static GeneratorSeq geometric(double ratio, int K);
};

/// t_j = coeffs[j] for j <= K, else 0.
SymToeplitz toeplitz_from_generator(const GeneratorSeq& gen, int n);

/// Min/max of the generating symbol f(theta) = t_0 + 2 sum t_j cos(j theta)
/// sampled on `grid` points of the unit circle.
std::pair<double, double> generator_symbol_range(const GeneratorSeq& gen,
                                                 int grid = 4096);

/// Optimal Frobenius-norm gamma-matrix approximation of T.
///
/// Circulant part: c_0 = t_0, c_j = ((n-j) t_j + j t_{n-j}) / n.  Reverse
/// part: the stationarity formulas, with branches by the parity of n and j
/// and dedicated forms for b_0 and b_{n/2}.  In the even-n/odd-j branch
/// both interior sums run from k = 0; see gamma_approx_bpart_printed() for
/// the variant with the k = 1 lower limit, which fails the stationarity
/// constraints (kept for diagnosis).
///
/// The output is constraint-checked; a violation beyond 1e-8 raises
/// FormulaDiscrepancyError carrying both the formula output and (at oracle
/// scale) the projection-oracle output.
GammaMatrix gamma_approx(const SymToeplitz& T);

/// Reverse-part coefficients exactly as printed in the closed-form display
/// (even-n/odd-j sums from k = 1).  Diagnostic only.
std::vector<double> gamma_approx_bpart_printed(const SymToeplitz& T);

/// Independent check of the closed forms: orthonormal basis of the
/// circulant and constrained reverse-circulant classes inside matrix
/// space, projection of T by Frobenius inner products.  n <= 128.
GammaMatrix frobenius_projection_oracle(const SymToeplitz& T);

/// Eigenvalues of the preconditioned operator and the outlier census.
struct ClusterReport {
  double epsilon = 0;
  int n = 0;
  int outliers = 0;                // #{ lambda : |lambda - 1| > epsilon }
  std::vector<double> spectrum;    // sorted ascending
};

/// Spectrum of G^{-1} T computed through the symmetrized form
/// G^{-1/2} T G^{-1/2} (spectral square root of G).  Requires G definite;
/// a negative-definite G is handled by sign flip, a singular one raises
/// SingularMatrixError, an indefinite one IndefiniteMatrixError.
/// n <= 2048 (dense eigensolve).
ClusterReport preconditioned_spectrum(const SymToeplitz& T, const GammaMatrix& G,
                                      double epsilon);

/// Outliers of the raw Toeplitz spectrum against the same window; the
/// unpreconditioned baseline in clustering sweeps.
ClusterReport unpreconditioned_spectrum(const SymToeplitz& T, double epsilon);

}  // namespace gmat
