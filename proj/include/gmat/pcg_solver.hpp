#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gmat/toeplitz_precond.hpp"

namespace gmat {

struct SolveOutcome {
  std::vector<double> solution;
  int iterations = 0;
  std::vector<double> residual_history;  // ||r_k|| / ||b|| per iteration
  bool converged = false;
};

/// Left-preconditioned conjugate gradient for symmetric positive definite
/// Toeplitz systems, seeded at x_0 = 0.  The Toeplitz product is applied
/// densely (O(n^2) per step); the preconditioner solve runs through the
/// gamma spectrum in O(n log n).
///
/// The preconditioner must be positive definite (its gamma spectrum is
/// inspected up front; non-PD preconditioners are rejected, not
/// regularized).  Negative curvature p.Tp <= 0 aborts with
/// IndefiniteMatrixError.  Reaching maxit returns converged = false.
SolveOutcome pcg(const SymToeplitz& T, std::span<const double> rhs,
                 const GammaMatrix* precond, double tol, int maxit);

}  // namespace gmat
