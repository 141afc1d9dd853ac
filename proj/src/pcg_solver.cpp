#include "gmat/pcg_solver.hpp"

#include <cmath>
#include <string>

namespace gmat {

namespace {

double norm2(std::span<const double> v) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return std::sqrt(acc);
}

double dot(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace

SolveOutcome pcg(const SymToeplitz& T, std::span<const double> rhs,
                 const GammaMatrix* precond, double tol, int maxit) {
  const int n = T.n;
  if (static_cast<int>(rhs.size()) != n) throw DimensionError("pcg: rhs length mismatch");
  if (precond && precond->order() != n) throw DimensionError("pcg: preconditioner order mismatch");

  SolveOutcome out;
  out.solution.assign(static_cast<std::size_t>(n), 0.0);

  const double nb = norm2(rhs);
  if (nb == 0.0) {
    out.residual_history.push_back(0.0);
    out.converged = true;
    return out;
  }

  // The preconditioner is inspected rather than trusted: every eigenvalue
  // must be strictly positive.
  TransformPlan plan(precond && precond->has_fast_order() ? n : 4);
  OpCounter scratch;
  std::vector<double> lam;
  if (precond) {
    if (!precond->has_fast_order()) {
      throw InvalidOrderError("pcg: preconditioner needs a power-of-two order >= 4");
    }
    const GammaSpectrum spectrum = eigenvalues(*precond, plan);
    const double cutoff = 1e-12 * spectrum.max_abs();
    for (int j = 0; j < n; ++j) {
      const double l = spectrum.lambdas()[static_cast<std::size_t>(j)];
      if (std::abs(l) <= cutoff) {
        throw SingularMatrixError("pcg: singular preconditioner (index " + std::to_string(j) + ")",
                                  j, l);
      }
      if (l < 0.0) {
        throw IndefiniteMatrixError("pcg: preconditioner is not positive definite (lambda_" +
                                    std::to_string(j) + " = " + std::to_string(l) + ")");
      }
    }
    lam = spectrum.lambdas();
  }
  const auto apply_precond = [&](std::span<const double> r) {
    if (lam.empty()) return std::vector<double>(r.begin(), r.end());
    std::vector<double> z = idsct(r, plan, scratch);
    for (std::size_t j = 0; j < z.size(); ++j) z[j] /= lam[j];
    return dsct(z, plan, scratch);
  };

  std::vector<double> r(rhs.begin(), rhs.end());
  out.residual_history.push_back(1.0);  // ||r_0|| / ||b|| with x_0 = 0
  std::vector<double> z = apply_precond(r);
  std::vector<double> p = z;
  double rz = dot(r, z);

  while (out.iterations < maxit) {
    const std::vector<double> Ap = toeplitz_matvec(T, p);
    const double pAp = dot(p, Ap);
    if (pAp <= 0.0) {
      throw IndefiniteMatrixError("pcg: negative curvature, matrix is not positive definite");
    }
    const double alpha = rz / pAp;
    for (int i = 0; i < n; ++i) {
      out.solution[static_cast<std::size_t>(i)] += alpha * p[static_cast<std::size_t>(i)];
      r[static_cast<std::size_t>(i)] -= alpha * Ap[static_cast<std::size_t>(i)];
    }
    ++out.iterations;
    const double rel = norm2(r) / nb;
    out.residual_history.push_back(rel);
    if (rel <= tol) {
      out.converged = true;
      return out;
    }
    z = apply_precond(r);
    const double rz_next = dot(r, z);
    const double beta = rz_next / rz;
    rz = rz_next;
    for (int i = 0; i < n; ++i) {
      p[static_cast<std::size_t>(i)] = z[static_cast<std::size_t>(i)] + beta * p[static_cast<std::size_t>(i)];
    }
  }
  out.converged = false;
  return out;
}

}  // namespace gmat
