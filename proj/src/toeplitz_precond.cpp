#include "gmat/toeplitz_precond.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace gmat {

namespace {

double sup_norm(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// Circulant part of the projection: c_0 = t_0, c_j = ((n-j) t_j + j t_{n-j}) / n.
std::vector<double> circulant_part(const SymToeplitz& T) {
  const int n = T.n;
  std::vector<double> c(static_cast<std::size_t>(n));
  c[0] = T.t[0];
  for (int j = 1; j < n; ++j) {
    c[static_cast<std::size_t>(j)] =
        ((n - j) * T.t[static_cast<std::size_t>(j)] + j * T.t[static_cast<std::size_t>(n - j)]) / n;
  }
  return c;
}

// Reverse part of the projection via the stationarity formulas.  The
// even-n/odd-j interior sums both run from k = 0; the k = 1 lower limit of
// the printed display drops the first odd difference and breaks the
// zero-sum constraints (see gamma_approx_bpart_printed).
std::vector<double> reverse_part(const SymToeplitz& T, bool printed_lower_limits) {
  const int n = T.n;
  const auto diff = [&](int i) {  // t_i - t_{n-i}
    return T.t[static_cast<std::size_t>(i)] - T.t[static_cast<std::size_t>(n - i)];
  };
  const auto odd_sum = [&](int from, int upto) {  // sum (2k+1)/n (t_{2k+1} - t_{n-2k-1})
    double s = 0.0;
    for (int k = from; k <= upto; ++k) s += double(2 * k + 1) / n * diff(2 * k + 1);
    return s;
  };
  const auto even_sum = [&](int upto) {  // sum_{k=1} (2k)/n (t_{2k} - t_{n-2k})
    double s = 0.0;
    for (int k = 1; k <= upto; ++k) s += double(2 * k) / n * diff(2 * k);
    return s;
  };

  std::vector<double> b(static_cast<std::size_t>(n), 0.0);
  const int odd_from = printed_lower_limits ? 1 : 0;
  if (n % 2 == 0) {
    for (int j = 1; j < n; ++j) {
      if (j == n / 2) continue;
      double s = double(4 * j - 2 * n) / n * diff(j);
      if (j % 2 == 1) {
        s += 4.0 * odd_sum(odd_from, (j - 3) / 2);
        s += 4.0 * odd_sum(odd_from, (n - j - 3) / 2);
      } else {
        s += 4.0 * even_sum(j / 2 - 1);
        s += 4.0 * even_sum((n - j) / 2 - 1);
      }
      b[static_cast<std::size_t>(j)] = s / (2.0 * n);
    }
    b[0] = 2.0 / n * even_sum(n / 2 - 1);
    b[static_cast<std::size_t>(n) / 2] = 4.0 / n * even_sum(n / 4 - 1);
  } else {
    for (int j = 1; j < n; ++j) {
      double s = double(4 * j - 2 * n) / n * diff(j);
      if (j % 2 == 1) {
        s += 4.0 * odd_sum(0, (j - 3) / 2);
        s += 4.0 * even_sum((n - j) / 2 - 1);
      } else {
        s += 4.0 * even_sum(j / 2 - 1);
        s += 4.0 * odd_sum(0, (n - j - 3) / 2);
      }
      b[static_cast<std::size_t>(j)] = s / (2.0 * n);
    }
    b[0] = 2.0 / n * odd_sum(0, (n - 3) / 2);
  }
  return b;
}

GammaSpectrum spectrum_any_order(const GammaMatrix& G) {
  if (G.has_fast_order()) {
    TransformPlan plan(G.order());
    return eigenvalues(G, plan);
  }
  return eigenvalues_dense(G);
}

}  // namespace

SymToeplitz SymToeplitz::from_first_column(std::vector<double> column) {
  if (column.empty()) throw InvalidOrderError("SymToeplitz: empty first column");
  SymToeplitz T;
  T.n = static_cast<int>(column.size());
  T.t = std::move(column);
  return T;
}

DenseMatrix dense_toeplitz(const SymToeplitz& T) {
  DenseMatrix A(T.n);
  for (int k = 0; k < T.n; ++k) {
    for (int j = 0; j < T.n; ++j) A.at(k, j) = T.t[static_cast<std::size_t>(std::abs(k - j))];
  }
  return A;
}

std::vector<double> toeplitz_matvec(const SymToeplitz& T, std::span<const double> x) {
  if (static_cast<int>(x.size()) != T.n) throw DimensionError("toeplitz_matvec: size mismatch");
  std::vector<double> y(x.size(), 0.0);
  for (int k = 0; k < T.n; ++k) {
    double acc = 0.0;
    for (int j = 0; j < T.n; ++j) {
      acc += T.t[static_cast<std::size_t>(std::abs(k - j))] * x[static_cast<std::size_t>(j)];
    }
    y[static_cast<std::size_t>(k)] = acc;
  }
  return y;
}

GeneratorSeq GeneratorSeq::geometric(double ratio, int K) {
  GeneratorSeq gen;
  gen.coeffs.resize(static_cast<std::size_t>(K) + 1);
  double v = 1.0;
  for (int j = 0; j <= K; ++j) {
    gen.coeffs[static_cast<std::size_t>(j)] = v;
    v *= ratio;
  }
  return gen;
}

SymToeplitz toeplitz_from_generator(const GeneratorSeq& gen, int n) {
  if (n < 1) throw InvalidOrderError("toeplitz_from_generator: order must be >= 1");
  std::vector<double> t(static_cast<std::size_t>(n), 0.0);
  const std::size_t upto = std::min<std::size_t>(gen.coeffs.size(), t.size());
  for (std::size_t j = 0; j < upto; ++j) t[j] = gen.coeffs[j];
  return SymToeplitz::from_first_column(std::move(t));
}

std::pair<double, double> generator_symbol_range(const GeneratorSeq& gen, int grid) {
  double lo = 0.0, hi = 0.0;
  for (int g = 0; g < grid; ++g) {
    const double theta = 2.0 * std::numbers::pi * g / grid;
    double f = gen.coeffs.empty() ? 0.0 : gen.coeffs[0];
    for (std::size_t j = 1; j < gen.coeffs.size(); ++j) {
      f += 2.0 * gen.coeffs[j] * std::cos(double(j) * theta);
    }
    if (g == 0) {
      lo = hi = f;
    } else {
      lo = std::min(lo, f);
      hi = std::max(hi, f);
    }
  }
  return {lo, hi};
}

std::vector<double> gamma_approx_bpart_printed(const SymToeplitz& T) {
  return reverse_part(T, /*printed_lower_limits=*/true);
}

GammaMatrix gamma_approx(const SymToeplitz& T) {
  const int n = T.n;
  if (n < 2) throw InvalidOrderError("gamma_approx: order must be >= 2");
  std::vector<double> c = circulant_part(T);
  std::vector<double> b = reverse_part(T, /*printed_lower_limits=*/false);

  // Stationarity self-check.  A violation means the closed forms and the
  // optimality definition came apart; surface both rather than patching.
  const double tol = 1e-8 * std::max(1.0, sup_norm(T.t));
  double sum = 0.0, alt = 0.0;
  for (int t = 0; t < n; ++t) {
    sum += b[static_cast<std::size_t>(t)];
    alt += (t % 2 == 0) ? b[static_cast<std::size_t>(t)] : -b[static_cast<std::size_t>(t)];
  }
  const bool violated = std::abs(sum) > tol || (n % 2 == 0 && std::abs(alt) > tol);
  if (violated) {
    std::vector<double> oc, ob;
    if (n <= 128) {
      const GammaMatrix oracle = frobenius_projection_oracle(T);
      oc = oracle.circulant_first_row();
      ob = oracle.reverse_first_row();
    }
    throw FormulaDiscrepancyError(
        "gamma_approx: stationarity constraints violated (sum " + std::to_string(sum) +
            ", alternating " + std::to_string(alt) + ")",
        c, b, oc, ob, std::max(std::abs(sum), std::abs(alt)));
  }
  return GammaMatrix::from_components(std::move(c), std::move(b));
}

GammaMatrix frobenius_projection_oracle(const SymToeplitz& T) {
  const int n = T.n;
  if (n > 128) throw InvalidOrderError("frobenius_projection_oracle: dense scale is n <= 128");
  const DenseMatrix dense = dense_toeplitz(T);

  // <T, circ(e)> for a first-row vector e; Frobenius inner products against
  // the shifted copies reduce to weighted sums over the residues of l - k.
  const auto circ_inner = [&](std::span<const double> e) {
    double acc = 0.0;
    for (int k = 0; k < n; ++k) {
      for (int l = 0; l < n; ++l) {
        acc += dense.at(k, l) * e[static_cast<std::size_t>(((l - k) % n + n) % n)];
      }
    }
    return acc;
  };
  const auto rcirc_inner = [&](std::span<const double> e) {
    double acc = 0.0;
    for (int k = 0; k < n; ++k) {
      for (int l = 0; l < n; ++l) {
        acc += dense.at(k, l) * e[static_cast<std::size_t>((k + l) % n)];
      }
    }
    return acc;
  };

  // Circulant class: the symmetric one-pair first rows give mutually
  // orthogonal basis matrices, so plain inner products suffice.
  std::vector<double> c(static_cast<std::size_t>(n), 0.0);
  for (int k = 0; k <= n / 2; ++k) {
    std::vector<double> e(static_cast<std::size_t>(n), 0.0);
    e[static_cast<std::size_t>(k)] += 1.0;
    if (k != 0 && (n - k) % n != k) e[static_cast<std::size_t>((n - k) % n)] += 1.0;
    double norm2 = 0.0;  // <circ(e), circ(e)> = n e.e
    for (double v : e) norm2 += v * v;
    norm2 *= n;
    const double coef = circ_inner(e) / norm2;
    for (int t = 0; t < n; ++t) c[static_cast<std::size_t>(t)] += coef * e[static_cast<std::size_t>(t)];
  }

  // Constrained reverse-circulant class: start from the symmetric one-pair
  // rows, project out the constraint directions, orthonormalize in row
  // space (the map b -> rcirc(b) scales Frobenius products by n).
  std::vector<std::vector<double>> raw;
  {
    std::vector<double> e0(static_cast<std::size_t>(n), 0.0);
    e0[0] = 1.0;
    raw.push_back(e0);
  }
  for (int k = 1; k <= (n - 1) / 2; ++k) {
    std::vector<double> e(static_cast<std::size_t>(n), 0.0);
    e[static_cast<std::size_t>(k)] += 1.0;
    e[static_cast<std::size_t>(n - k)] += 1.0;
    raw.push_back(e);
  }
  if (n % 2 == 0) {
    std::vector<double> em(static_cast<std::size_t>(n), 0.0);
    em[static_cast<std::size_t>(n) / 2] = 1.0;
    raw.push_back(em);
  }
  const auto project_out = [&](std::vector<double>& v) {
    double dot_ones = 0.0, dot_alt = 0.0;
    for (int t = 0; t < n; ++t) {
      dot_ones += v[static_cast<std::size_t>(t)];
      dot_alt += (t % 2 == 0) ? v[static_cast<std::size_t>(t)] : -v[static_cast<std::size_t>(t)];
    }
    for (int t = 0; t < n; ++t) {
      v[static_cast<std::size_t>(t)] -= dot_ones / n;
      if (n % 2 == 0) {
        v[static_cast<std::size_t>(t)] -= ((t % 2 == 0) ? 1.0 : -1.0) * dot_alt / n;
      }
    }
  };
  std::vector<std::vector<double>> ortho;
  for (std::vector<double>& v : raw) {
    project_out(v);
    for (const std::vector<double>& u : ortho) {
      double dot = 0.0;
      for (int t = 0; t < n; ++t) dot += v[static_cast<std::size_t>(t)] * u[static_cast<std::size_t>(t)];
      for (int t = 0; t < n; ++t) v[static_cast<std::size_t>(t)] -= dot * u[static_cast<std::size_t>(t)];
    }
    double norm2 = 0.0;
    for (double x : v) norm2 += x * x;
    if (norm2 < 1e-20) continue;  // constraint directions drop out here
    const double inv = 1.0 / std::sqrt(norm2);
    for (double& x : v) x *= inv;
    ortho.push_back(v);
  }
  std::vector<double> b(static_cast<std::size_t>(n), 0.0);
  for (const std::vector<double>& u : ortho) {
    const double coef = rcirc_inner(u) / n;
    for (int t = 0; t < n; ++t) b[static_cast<std::size_t>(t)] += coef * u[static_cast<std::size_t>(t)];
  }
  return GammaMatrix::from_components(std::move(c), std::move(b));
}

ClusterReport preconditioned_spectrum(const SymToeplitz& T, const GammaMatrix& G,
                                      double epsilon) {
  const int n = T.n;
  if (G.order() != n) throw DimensionError("preconditioned_spectrum: order mismatch");
  if (n > 2048) throw InvalidOrderError("preconditioned_spectrum: dense eigensolve is n <= 2048");
  if (epsilon <= 0) throw Error("preconditioned_spectrum: epsilon must be positive");

  GammaSpectrum spec = spectrum_any_order(G);
  const double cutoff = 1e-12 * spec.max_abs();
  for (int j = 0; j < n; ++j) {
    const double lam = spec.lambdas()[static_cast<std::size_t>(j)];
    if (std::abs(lam) <= cutoff) {
      throw SingularMatrixError("preconditioned_spectrum: singular preconditioner (index " +
                                    std::to_string(j) + ")",
                                j, lam);
    }
  }
  bool all_pos = true, all_neg = true;
  for (double lam : spec.lambdas()) {
    all_pos = all_pos && lam > 0;
    all_neg = all_neg && lam < 0;
  }
  if (!all_pos && !all_neg) {
    throw IndefiniteMatrixError(
        "preconditioned_spectrum: indefinite preconditioner has no real symmetrized form");
  }
  const double sign = all_pos ? 1.0 : -1.0;

  // Columns of G^{-1/2} T G^{-1/2} through the spectral square root; the
  // Toeplitz product dominates at O(n^2) per column.
  std::vector<double> half(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    half[static_cast<std::size_t>(j)] =
        1.0 / std::sqrt(sign * spec.lambdas()[static_cast<std::size_t>(j)]);
  }
  const bool fast = G.has_fast_order();
  TransformPlan plan(fast ? n : 4);
  OpCounter scratch;
  const auto apply_half_inv = [&](std::span<const double> x) {
    std::vector<double> z = fast ? idsct(x, plan, scratch) : dense_idsct(x);
    for (int j = 0; j < n; ++j) z[static_cast<std::size_t>(j)] *= half[static_cast<std::size_t>(j)];
    return fast ? dsct(z, plan, scratch) : dense_dsct(z);
  };

  DenseMatrix M(n);
  std::vector<double> unit(static_cast<std::size_t>(n), 0.0);
  for (int col = 0; col < n; ++col) {
    unit[static_cast<std::size_t>(col)] = 1.0;
    const std::vector<double> w = apply_half_inv(unit);
    const std::vector<double> v = toeplitz_matvec(T, w);
    const std::vector<double> out = apply_half_inv(v);
    for (int row = 0; row < n; ++row) M.at(row, col) = sign * out[static_cast<std::size_t>(row)];
    unit[static_cast<std::size_t>(col)] = 0.0;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double avg = (M.at(i, j) + M.at(j, i)) / 2.0;
      M.at(i, j) = M.at(j, i) = avg;
    }
  }

  ClusterReport report;
  report.epsilon = epsilon;
  report.n = n;
  report.spectrum = dense_eigensolve_symmetric(M);
  for (double lam : report.spectrum) {
    if (std::abs(lam - 1.0) > epsilon) ++report.outliers;
  }
  return report;
}

ClusterReport unpreconditioned_spectrum(const SymToeplitz& T, double epsilon) {
  if (T.n > 2048) throw InvalidOrderError("unpreconditioned_spectrum: dense eigensolve is n <= 2048");
  if (epsilon <= 0) throw Error("unpreconditioned_spectrum: epsilon must be positive");
  ClusterReport report;
  report.epsilon = epsilon;
  report.n = T.n;
  report.spectrum = dense_eigensolve_symmetric(dense_toeplitz(T));
  for (double lam : report.spectrum) {
    if (std::abs(lam - 1.0) > epsilon) ++report.outliers;
  }
  return report;
}

}  // namespace gmat
