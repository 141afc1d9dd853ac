#pragma once

#include <span>
#include <vector>

#include "gmat/errors.hpp"

namespace gmat {

/// Tolerance used when verifying symmetry structure on construction.
inline constexpr double kStructureTol = 1e-12;

enum class Structure { general, symmetric, asymmetric };

/// Returns true iff x[j] == x[n-j] for 1 <= j <= n/2 (within tol).
bool is_symmetric(std::span<const double> x, double tol = kStructureTol);

/// Returns true iff x[j] == -x[n-j] for 1 <= j <= n/2 and x[0] == 0
/// (within tol).  Forces x[n/2] == 0 when n is even.
bool is_asymmetric(std::span<const double> x, double tol = kStructureTol);

/// A real vector tagged with its symmetry structure.  The tag is verified
/// against the entries on construction rather than trusted: the fast
/// transforms silently produce wrong results on mis-flagged inputs.
class StructuredVector {
 public:
  StructuredVector() = default;
  StructuredVector(std::vector<double> entries, Structure structure);

  static StructuredVector general(std::vector<double> entries);

  const std::vector<double>& entries() const { return entries_; }
  Structure structure() const { return structure_; }
  int size() const { return static_cast<int>(entries_.size()); }
  double operator[](int j) const { return entries_[static_cast<std::size_t>(j)]; }
  std::span<const double> span() const { return entries_; }

 private:
  std::vector<double> entries_;
  Structure structure_ = Structure::general;
};

/// rho: reverses all components except index 0.
std::vector<double> reverse_tail(std::span<const double> x);

/// sigma: x + rho(x).  Twice the symmetric part of x.
StructuredVector symmetrize(std::span<const double> x);

/// alpha-map: x - rho(x).  Twice the asymmetric part of x.
StructuredVector antisymmetrize(std::span<const double> x);

/// eta: components at even indices 0, 2, ..., n-2.  Requires n even.
std::vector<double> even_part(std::span<const double> x);

/// zeta: components at odd indices 1, 3, ..., n-1.  Requires n even.
std::vector<double> odd_part(std::span<const double> x);

/// Scaling constant alpha_j of the basis: 1/sqrt(n) for j = 0 and for
/// j = n/2 when n is even, sqrt(2/n) otherwise.
double scale_constant(int n, int j);

/// The orthonormal sine-cosine eigenvector basis, materialized densely.
/// Column j is the cosine profile u^(j) (scaled) for j <= n/2 and the sine
/// profile v^(n-j) (scaled) for j > n/2.  Oracle use only: production code
/// never forms this matrix.
struct BasisVectorSet {
  int n = 0;
  std::vector<double> columns;  // column-major, n*n

  double entry(int k, int j) const {
    return columns[static_cast<std::size_t>(j) * n + k];
  }
  std::span<const double> column(int j) const {
    return {columns.data() + static_cast<std::size_t>(j) * n,
            static_cast<std::size_t>(n)};
  }
};

/// Evaluates the basis entry rule directly.  n >= 2.
BasisVectorSet build_q_dense(int n);

/// Unscaled cosine profile u^(j), j <= n/2.
std::vector<double> cosine_profile(int n, int j);
/// Unscaled sine profile v^(j), 1 <= j <= (n-1)/2.
std::vector<double> sine_profile(int n, int j);

}  // namespace gmat
