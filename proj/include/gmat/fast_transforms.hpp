#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gmat/spectral_core.hpp"

namespace gmat {

/// Tally of floating-point work done by a transform call.  One addition is
/// counted per binary +/- and one multiplication per product by a stored
/// secant, by 2, or by 1/2; index arithmetic, copies and negated copies are
/// free.  This is the discipline under which the closed-form predictions
/// are reproduced exactly.
struct OpCounter {
  std::uint64_t additions = 0;
  std::uint64_t multiplications = 0;
  void reset() { additions = multiplications = 0; }
};

/// Precomputed tables 1/(2 cos(2 pi k / s)) for every recursion level
/// s in {n, n/2, ..., 8} and 1 <= k <= s/4 - 1.  A plan built for n serves
/// every smaller power-of-two size as well, and is immutable after
/// construction (safe to share across threads).
class TransformPlan {
 public:
  explicit TransformPlan(int n);

  int order() const { return n_; }
  bool covers(int n) const;

  /// Secant constant for recursion level `level`, 1 <= k <= level/4 - 1.
  double secant(int level, int k) const;

 private:
  int n_;
  // secants_[r] holds the table for level 2^r (empty below r = 3).
  std::vector<std::vector<double>> secants_;
};

/// Cosine coefficients C_0(x) .. C_m(x), m = n/2.
struct CosCoeffs {
  std::vector<double> values;
};

/// Sine coefficients S_1(x) .. S_{m-1}(x), m = n/2.
struct SinCoeffs {
  std::vector<double> values;
};

/// Recursive cosine kernel.  x must be flagged symmetric and have
/// power-of-two length >= 4 covered by the plan.
CosCoeffs cs(const StructuredVector& x, const TransformPlan& plan, OpCounter& counter);

/// Recursive sine kernel.  x must be flagged asymmetric.
SinCoeffs sn(const StructuredVector& x, const TransformPlan& plan, OpCounter& counter);

/// Q_n^T x assembled from one cs and one sn call on the symmetric and
/// asymmetric parts of x.
std::vector<double> idsct(std::span<const double> x, const TransformPlan& plan,
                          OpCounter& counter);

/// Q_n t assembled from the symmetric/asymmetric folds of t.
std::vector<double> dsct(std::span<const double> t, const TransformPlan& plan,
                         OpCounter& counter);

struct OpCounts {
  std::int64_t additions = 0;
  std::int64_t multiplications = 0;
  bool operator==(const OpCounts&) const = default;
};

/// Closed-form cost of one cs call: A(n) = 3/4 n log2 n - n/2 + 1,
/// M(n) = 1/4 n log2 n + n/2 - 2.
OpCounts predicted_counts_cs(int n);

/// Closed-form cost of one sn call: A(n) = n log2 n - 11/4 n + 3,
/// M(n) = 1/4 n log2 n - n/4.
OpCounts predicted_counts_sn(int n);

struct AsymptoticCost {
  double additions = 0;
  double multiplications = 0;
};

/// The two published leading-order estimates for a full gamma-matrix/vector
/// product.  They disagree (the transform-pair figure counts IDSCT alone,
/// the pipeline figure counts IDSCT + eigenvalues + DSCT); both are
/// reported side by side and neither is arbitrated here.
AsymptoticCost matvec_cost_transform_pair(int n);  // 7/4 n log2 n, 1/2 n log2 n
AsymptoticCost matvec_cost_full_pipeline(int n);   // 5 n log2 n, 3/2 n log2 n

/// True iff n is a power of two with n >= 4 (the fast-path domain).
bool is_fast_order(int n);

}  // namespace gmat
