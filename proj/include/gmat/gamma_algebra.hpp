#pragma once

#include <memory>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "gmat/fast_transforms.hpp"
#include "gmat/reference_dense.hpp"
#include "gmat/spectral_core.hpp"

namespace gmat {

/// Eigenvalues of a gamma matrix, in the fixed basis-column order.
/// Splits as lambda = lambdaC + lambdaB with lambdaC symmetric and lambdaB
/// asymmetric.
class GammaSpectrum {
 public:
  explicit GammaSpectrum(std::vector<double> lambdas)
      : lambdas_(std::move(lambdas)) {}

  const std::vector<double>& lambdas() const { return lambdas_; }
  int size() const { return static_cast<int>(lambdas_.size()); }
  double min_abs() const;
  double max_abs() const;
  double min_value() const;

 private:
  std::vector<double> lambdas_;
};

/// lambdaC_j = (lambda_j + lambda_{(n-j) mod n}) / 2,
/// lambdaB_j = (lambda_j - lambda_{(n-j) mod n}) / 2.
std::pair<StructuredVector, StructuredVector> decompose_spectrum(
    std::span<const double> lambda);

/// Compact representation of a gamma matrix as the pair (c, b): first row
/// of its circulant part and first row of its reverse-circulant part.
/// c is symmetric; b is symmetric with zero sum and (n even) zero
/// alternating sum.  Values are immutable after construction.
class GammaMatrix {
 public:
  /// Validates all invariants (tolerance 1e-12, scaled by the component
  /// magnitude) and stores (c, b).  Any n >= 2 is accepted so that the
  /// dense/oracle paths can carry odd orders; the fast operations below
  /// additionally require a power of two >= 4.
  static GammaMatrix from_components(std::vector<double> c, std::vector<double> b);

  static GammaMatrix identity(int n);
  static GammaMatrix zero(int n);

  int order() const { return n_; }
  const std::vector<double>& circulant_first_row() const { return c_; }
  const std::vector<double>& reverse_first_row() const { return b_; }
  bool has_fast_order() const;

  GammaMatrix(const GammaMatrix& other);
  GammaMatrix& operator=(const GammaMatrix& other);
  GammaMatrix(GammaMatrix&&) noexcept = default;
  GammaMatrix& operator=(GammaMatrix&&) noexcept = default;

 private:
  GammaMatrix(int n, std::vector<double> c, std::vector<double> b)
      : n_(n), c_(std::move(c)), b_(std::move(b)) {}

  friend GammaSpectrum eigenvalues(const GammaMatrix&, const TransformPlan&);

  int n_ = 0;
  std::vector<double> c_, b_;
  // Single-assignment memo: concurrent first computations may race to
  // identical values; readers see a fully written spectrum or none.
  mutable std::shared_ptr<const std::vector<double>> spectrum_memo_;
};

/// Two cs calls (on c and on b) assembled into the full spectrum:
/// lambda_0 = dC_0, lambda_j = dC_j + dB_j for j < n/2, lambda_m = dC_m,
/// lambda_j = dC_{n-j} - dB_{n-j} for j > n/2.  Memoized per matrix.
GammaSpectrum eigenvalues(const GammaMatrix& gm, const TransformPlan& plan);

/// Spectrum through the dense basis; works at any order.  Oracle-path
/// companion of eigenvalues() for non-power-of-two sizes.
GammaSpectrum eigenvalues_dense(const GammaMatrix& gm);

/// y = Q ( Lambda (Q^T x) ) via idsct, entrywise scaling, dsct.
std::vector<double> matvec(const GammaMatrix& gm, std::span<const double> x,
                           const TransformPlan& plan, OpCounter& counter);

/// Product of two gamma matrices from four cs calls (the component
/// spectra) and two dsct applications of spectral s-vectors.
GammaMatrix matmul(const GammaMatrix& g1, const GammaMatrix& g2,
                   const TransformPlan& plan);

GammaMatrix add(const GammaMatrix& g1, const GammaMatrix& g2);
GammaMatrix scale(const GammaMatrix& g, double a);

/// Solves gm y = x through the spectrum: y = Q (Q^T x / lambda).
/// Throws SingularMatrixError (reporting the offending index) when any
/// |lambda_j| <= rel_threshold * max |lambda|.
std::vector<double> inverse_apply(const GammaMatrix& gm, std::span<const double> x,
                                  const TransformPlan& plan, OpCounter& counter,
                                  double rel_threshold = 1e-12);

/// Same, with a precomputed spectrum.
std::vector<double> solve_with_spectrum(const GammaSpectrum& spectrum,
                                        std::span<const double> x,
                                        const TransformPlan& plan, OpCounter& counter,
                                        double rel_threshold = 1e-12);

/// Structural membership classes.
enum class GammaClass {
  circulant,          // b == 0: real symmetric circulant
  reverse_circulant,  // c == 0: constrained symmetric reverse circulant
  centered_circulant, // b == 0 and both row sums of c vanish
  checkerboard,       // b == 0 and c is two-valued by index parity
};

std::set<GammaClass> classify(const GammaMatrix& g);

/// Recovers (c, b) from the dense entries of a gamma matrix in O(n) reads
/// (diagonal, superdiagonal and first row), fixing the one-parameter gauge
/// per parity class with the zero-sum constraints.  Validates by full
/// reconstruction at n <= 64 and by 8n random entry probes above that;
/// mismatch beyond 1e-8 throws NotGammaMatrixError.
std::pair<std::vector<double>, std::vector<double>> extract_components(
    const DenseMatrix& g);

/// circ(c) + rcirc(b), materialized.
DenseMatrix dense_render(const GammaMatrix& gm);

}  // namespace gmat
