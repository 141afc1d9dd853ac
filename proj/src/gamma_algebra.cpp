#include "gmat/gamma_algebra.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <string>

namespace gmat {

namespace {

double sup_norm(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double component_tol(std::span<const double> v) {
  return kStructureTol * std::max(1.0, sup_norm(v));
}

// lambda_0 = dC_0; lambda_j = dC_j + dB_j below the fold; lambda above the
// fold from the mirrored entries with the reverse-part sign flipped.
std::vector<double> assemble_spectrum(int n, std::span<const double> dC,
                                      std::span<const double> dB) {
  const int m = n / 2;
  std::vector<double> lam(static_cast<std::size_t>(n));
  lam[0] = dC[0];
  for (int j = 1; j <= m; ++j) lam[static_cast<std::size_t>(j)] = dC[j] + dB[j];
  if (n % 2 == 0) lam[static_cast<std::size_t>(m)] = dC[m];
  for (int j = m + 1; j < n; ++j) {
    lam[static_cast<std::size_t>(j)] = dC[n - j] - dB[n - j];
  }
  return lam;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

double GammaSpectrum::min_abs() const {
  double m = std::abs(lambdas_.front());
  for (double x : lambdas_) m = std::min(m, std::abs(x));
  return m;
}

double GammaSpectrum::max_abs() const { return sup_norm(lambdas_); }

double GammaSpectrum::min_value() const {
  return *std::min_element(lambdas_.begin(), lambdas_.end());
}

std::pair<StructuredVector, StructuredVector> decompose_spectrum(
    std::span<const double> lambda) {
  const int n = static_cast<int>(lambda.size());
  std::vector<double> symPart(lambda.size()), asymPart(lambda.size());
  for (int j = 0; j < n; ++j) {
    const double mirror = lambda[static_cast<std::size_t>((n - j) % n)];
    symPart[static_cast<std::size_t>(j)] = (lambda[static_cast<std::size_t>(j)] + mirror) / 2.0;
    asymPart[static_cast<std::size_t>(j)] = (lambda[static_cast<std::size_t>(j)] - mirror) / 2.0;
  }
  return {StructuredVector(std::move(symPart), Structure::symmetric),
          StructuredVector(std::move(asymPart), Structure::asymmetric)};
}

GammaMatrix GammaMatrix::from_components(std::vector<double> c, std::vector<double> b) {
  if (c.size() != b.size()) throw DimensionError("from_components: length mismatch");
  const int n = static_cast<int>(c.size());
  if (n < 2) throw InvalidOrderError("from_components: order must be >= 2");
  if (!is_symmetric(c, component_tol(c))) {
    throw StructureError("from_components: circulant first row is not symmetric");
  }
  if (!is_symmetric(b, component_tol(b))) {
    throw StructureError("from_components: reverse first row is not symmetric");
  }
  const double tol = std::max(1.0, sup_norm(b)) * kStructureTol * n;
  double sum = 0.0, alt = 0.0;
  for (int t = 0; t < n; ++t) {
    sum += b[static_cast<std::size_t>(t)];
    alt += (t % 2 == 0) ? b[static_cast<std::size_t>(t)] : -b[static_cast<std::size_t>(t)];
  }
  if (std::abs(sum) > tol) {
    throw ConstraintError("from_components: reverse first row must sum to zero");
  }
  if (n % 2 == 0 && std::abs(alt) > tol) {
    throw ConstraintError("from_components: alternating sum of reverse first row must vanish");
  }
  return GammaMatrix(n, std::move(c), std::move(b));
}

GammaMatrix GammaMatrix::identity(int n) {
  std::vector<double> c(static_cast<std::size_t>(n), 0.0);
  c[0] = 1.0;
  return GammaMatrix(n, std::move(c), std::vector<double>(static_cast<std::size_t>(n), 0.0));
}

GammaMatrix GammaMatrix::zero(int n) {
  return GammaMatrix(n, std::vector<double>(static_cast<std::size_t>(n), 0.0),
                     std::vector<double>(static_cast<std::size_t>(n), 0.0));
}

bool GammaMatrix::has_fast_order() const { return is_fast_order(n_); }

GammaMatrix::GammaMatrix(const GammaMatrix& other)
    : n_(other.n_),
      c_(other.c_),
      b_(other.b_),
      spectrum_memo_(std::atomic_load(&other.spectrum_memo_)) {}

GammaMatrix& GammaMatrix::operator=(const GammaMatrix& other) {
  if (this != &other) {
    n_ = other.n_;
    c_ = other.c_;
    b_ = other.b_;
    std::atomic_store(&spectrum_memo_, std::atomic_load(&other.spectrum_memo_));
  }
  return *this;
}

GammaSpectrum eigenvalues(const GammaMatrix& gm, const TransformPlan& plan) {
  if (auto memo = std::atomic_load(&gm.spectrum_memo_)) return GammaSpectrum(*memo);
  if (!gm.has_fast_order()) {
    throw InvalidOrderError("eigenvalues: fast path needs a power-of-two order >= 4; "
                            "use eigenvalues_dense");
  }
  OpCounter scratch;
  const CosCoeffs dC =
      cs(StructuredVector(gm.c_, Structure::symmetric), plan, scratch);
  const CosCoeffs dB =
      cs(StructuredVector(gm.b_, Structure::symmetric), plan, scratch);
  std::vector<double> lam = assemble_spectrum(gm.n_, dC.values, dB.values);
  auto fresh = std::make_shared<const std::vector<double>>(lam);
  std::shared_ptr<const std::vector<double>> expected;
  std::atomic_compare_exchange_strong(&gm.spectrum_memo_, &expected, fresh);
  return GammaSpectrum(std::move(lam));
}

GammaSpectrum eigenvalues_dense(const GammaMatrix& gm) {
  const int n = gm.order();
  const int m = n / 2;
  std::vector<double> dC(static_cast<std::size_t>(m) + 1),
      dB(static_cast<std::size_t>(m) + 1);
  const auto& c = gm.circulant_first_row();
  const auto& b = gm.reverse_first_row();
  for (int j = 0; j <= m; ++j) {
    const std::vector<double> u = cosine_profile(n, j);
    double accC = 0.0, accB = 0.0;
    for (int k = 0; k < n; ++k) {
      accC += c[static_cast<std::size_t>(k)] * u[static_cast<std::size_t>(k)];
      accB += b[static_cast<std::size_t>(k)] * u[static_cast<std::size_t>(k)];
    }
    dC[static_cast<std::size_t>(j)] = accC;
    dB[static_cast<std::size_t>(j)] = accB;
  }
  return GammaSpectrum(assemble_spectrum(n, dC, dB));
}

std::vector<double> matvec(const GammaMatrix& gm, std::span<const double> x,
                           const TransformPlan& plan, OpCounter& counter) {
  if (static_cast<int>(x.size()) != gm.order()) {
    throw DimensionError("matvec: vector length does not match matrix order");
  }
  const GammaSpectrum spectrum = eigenvalues(gm, plan);
  std::vector<double> z = idsct(x, plan, counter);
  for (std::size_t j = 0; j < z.size(); ++j) z[j] *= spectrum.lambdas()[j];
  counter.multiplications += z.size();
  return dsct(z, plan, counter);
}

GammaMatrix matmul(const GammaMatrix& g1, const GammaMatrix& g2,
                   const TransformPlan& plan) {
  if (g1.order() != g2.order()) throw DimensionError("matmul: order mismatch");
  const int n = g1.order();
  if (!g1.has_fast_order()) throw InvalidOrderError("matmul: fast order required");
  const int m = n / 2;
  OpCounter scratch;
  const CosCoeffs dC1 =
      cs(StructuredVector(g1.circulant_first_row(), Structure::symmetric), plan, scratch);
  const CosCoeffs dB1 =
      cs(StructuredVector(g1.reverse_first_row(), Structure::symmetric), plan, scratch);
  const CosCoeffs dC2 =
      cs(StructuredVector(g2.circulant_first_row(), Structure::symmetric), plan, scratch);
  const CosCoeffs dB2 =
      cs(StructuredVector(g2.reverse_first_row(), Structure::symmetric), plan, scratch);

  // s-vector: alpha_j-weighted eigenvalue products on 0..m, zero beyond.
  const auto s_vector = [&](const std::vector<double>& d1, const std::vector<double>& d2,
                            const std::vector<double>& e1, const std::vector<double>& e2) {
    std::vector<double> s(static_cast<std::size_t>(n), 0.0);
    for (int j = 0; j <= m; ++j) {
      s[static_cast<std::size_t>(j)] =
          scale_constant(n, j) * (d1[static_cast<std::size_t>(j)] * d2[static_cast<std::size_t>(j)] +
                                  e1[static_cast<std::size_t>(j)] * e2[static_cast<std::size_t>(j)]);
    }
    return s;
  };
  // circulant part from C1C2 + B1B2, reverse part from C1B2 + B1C2; the
  // theta fold vanishes in both dsct calls.
  const std::vector<double> c_out =
      dsct(s_vector(dC1.values, dC2.values, dB1.values, dB2.values), plan, scratch);
  const std::vector<double> b_out =
      dsct(s_vector(dC1.values, dB2.values, dB1.values, dC2.values), plan, scratch);
  return GammaMatrix::from_components(c_out, b_out);
}

GammaMatrix add(const GammaMatrix& g1, const GammaMatrix& g2) {
  if (g1.order() != g2.order()) throw DimensionError("add: order mismatch");
  std::vector<double> c = g1.circulant_first_row();
  std::vector<double> b = g1.reverse_first_row();
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] += g2.circulant_first_row()[i];
    b[i] += g2.reverse_first_row()[i];
  }
  return GammaMatrix::from_components(std::move(c), std::move(b));
}

GammaMatrix scale(const GammaMatrix& g, double a) {
  std::vector<double> c = g.circulant_first_row();
  std::vector<double> b = g.reverse_first_row();
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] *= a;
    b[i] *= a;
  }
  return GammaMatrix::from_components(std::move(c), std::move(b));
}

std::vector<double> solve_with_spectrum(const GammaSpectrum& spectrum,
                                        std::span<const double> x,
                                        const TransformPlan& plan, OpCounter& counter,
                                        double rel_threshold) {
  if (spectrum.size() != static_cast<int>(x.size())) {
    throw DimensionError("solve_with_spectrum: size mismatch");
  }
  const double cutoff = rel_threshold * spectrum.max_abs();
  for (int j = 0; j < spectrum.size(); ++j) {
    const double lam = spectrum.lambdas()[static_cast<std::size_t>(j)];
    if (std::abs(lam) <= cutoff) {
      throw SingularMatrixError(
          "singular gamma matrix: |lambda_" + std::to_string(j) + "| = " +
              std::to_string(std::abs(lam)) + " below threshold",
          j, lam);
    }
  }
  std::vector<double> z = idsct(x, plan, counter);
  for (std::size_t j = 0; j < z.size(); ++j) z[j] /= spectrum.lambdas()[j];
  counter.multiplications += z.size();
  return dsct(z, plan, counter);
}

std::vector<double> inverse_apply(const GammaMatrix& gm, std::span<const double> x,
                                  const TransformPlan& plan, OpCounter& counter,
                                  double rel_threshold) {
  if (static_cast<int>(x.size()) != gm.order()) {
    throw DimensionError("inverse_apply: vector length does not match matrix order");
  }
  return solve_with_spectrum(eigenvalues(gm, plan), x, plan, counter, rel_threshold);
}

std::set<GammaClass> classify(const GammaMatrix& g) {
  const int n = g.order();
  const auto& c = g.circulant_first_row();
  const auto& b = g.reverse_first_row();
  const double eps =
      kStructureTol * std::max({1.0, sup_norm(c), sup_norm(b)});
  const auto all_small = [&](std::span<const double> v) { return sup_norm(v) <= eps; };

  std::set<GammaClass> classes;
  const bool b_zero = all_small(b);
  const bool c_zero = all_small(c);
  if (b_zero) classes.insert(GammaClass::circulant);
  if (c_zero) classes.insert(GammaClass::reverse_circulant);
  if (b_zero) {
    double sum = 0.0, alt = 0.0;
    for (int t = 0; t < n; ++t) {
      sum += c[static_cast<std::size_t>(t)];
      alt += (t % 2 == 0) ? c[static_cast<std::size_t>(t)] : -c[static_cast<std::size_t>(t)];
    }
    if (std::abs(sum) <= eps * n && (n % 2 != 0 || std::abs(alt) <= eps * n)) {
      classes.insert(GammaClass::centered_circulant);
    }
    bool checkerboard = true;
    for (int t = 0; t < n; ++t) {
      const double want = (n % 2 == 0) ? c[static_cast<std::size_t>(t % 2)] : c[0];
      if (std::abs(c[static_cast<std::size_t>(t)] - want) > eps) {
        checkerboard = false;
        break;
      }
    }
    if (checkerboard) classes.insert(GammaClass::checkerboard);
  }
  return classes;
}

std::pair<std::vector<double>, std::vector<double>> extract_components(
    const DenseMatrix& g) {
  const int n = g.n;
  if (!is_fast_order(n)) {
    throw InvalidOrderError("extract_components: power-of-two order >= 4 required");
  }
  const int m = n / 2;
  std::vector<double> c(static_cast<std::size_t>(n), 0.0),
      b(static_cast<std::size_t>(n), 0.0);

  // Even family: the diagonal reads c_0 + b_{2k}.  The entry systems are
  // rank-deficient by one gauge parameter per parity class; the zero-sum
  // side constraints pin it down.
  double even_sum = 0.0;
  for (int k = 0; k < m; ++k) even_sum += g.at(k, k) - g.at(0, 0);
  const double c0 = g.at(0, 0) + even_sum / m;
  c[0] = c0;
  for (int k = 0; k < m; ++k) b[static_cast<std::size_t>(2 * k)] = g.at(k, k) - c0;

  // Odd family: the first superdiagonal reads c_1 + b_{2k+1}.
  double odd_sum = 0.0;
  for (int k = 0; k < m; ++k) odd_sum += g.at(k, k + 1) - g.at(0, 1);
  const double c1 = g.at(0, 1) + odd_sum / m;
  for (int k = 0; k < m; ++k) {
    b[static_cast<std::size_t>(2 * k + 1)] = g.at(k, k + 1) - c1;
  }

  // First row reads c_j + b_j for every j.
  c[1] = c1;
  for (int j = 1; j < n; ++j) {
    if (j != 1) c[static_cast<std::size_t>(j)] = g.at(0, j) - b[static_cast<std::size_t>(j)];
  }

  // Reconstruction check: dense below 64, random entry probes above.
  double scale_g = 0.0;
  for (double v : g.a) scale_g = std::max(scale_g, std::abs(v));
  const double tol = 1e-8 * std::max(1.0, scale_g);
  const auto entry_of = [&](int k, int l) {
    return c[static_cast<std::size_t>(((l - k) % n + n) % n)] +
           b[static_cast<std::size_t>((k + l) % n)];
  };
  double worst = 0.0;
  if (n <= 64) {
    for (int k = 0; k < n; ++k) {
      for (int l = 0; l < n; ++l) {
        worst = std::max(worst, std::abs(g.at(k, l) - entry_of(k, l)));
      }
    }
  } else {
    std::uint64_t state = 0x6a09e667f3bcc908ull ^ static_cast<std::uint64_t>(n);
    for (int probe = 0; probe < 8 * n; ++probe) {
      const int k = static_cast<int>(splitmix64(state) % static_cast<std::uint64_t>(n));
      const int l = static_cast<int>(splitmix64(state) % static_cast<std::uint64_t>(n));
      worst = std::max(worst, std::abs(g.at(k, l) - entry_of(k, l)));
    }
  }
  if (worst > tol) {
    throw NotGammaMatrixError(
        "extract_components: dense input is not a gamma matrix (mismatch " +
            std::to_string(worst) + ")",
        worst);
  }
  return {std::move(c), std::move(b)};
}

DenseMatrix dense_render(const GammaMatrix& gm) {
  DenseMatrix out = circulant(gm.circulant_first_row());
  const DenseMatrix rev = reverse_circulant(gm.reverse_first_row());
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] += rev.a[i];
  return out;
}

}  // namespace gmat
