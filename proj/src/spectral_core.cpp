#include "gmat/spectral_core.hpp"

#include <cmath>
#include <numbers>

namespace gmat {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

bool is_symmetric(std::span<const double> x, double tol) {
  const int n = static_cast<int>(x.size());
  for (int j = 1; j <= n / 2; ++j) {
    if (std::abs(x[j] - x[n - j]) > tol) return false;
  }
  return true;
}

bool is_asymmetric(std::span<const double> x, double tol) {
  const int n = static_cast<int>(x.size());
  if (std::abs(x[0]) > tol) return false;
  for (int j = 1; j <= n / 2; ++j) {
    if (std::abs(x[j] + x[n - j]) > tol) return false;
  }
  return true;
}

StructuredVector::StructuredVector(std::vector<double> entries, Structure structure)
    : entries_(std::move(entries)), structure_(structure) {
  if (entries_.size() < 2) throw InvalidOrderError("structured vector needs length >= 2");
  if (structure_ == Structure::symmetric && !is_symmetric(entries_)) {
    throw StructureError("vector is not symmetric");
  }
  if (structure_ == Structure::asymmetric && !is_asymmetric(entries_)) {
    throw StructureError("vector is not asymmetric");
  }
}

StructuredVector StructuredVector::general(std::vector<double> entries) {
  return StructuredVector(std::move(entries), Structure::general);
}

std::vector<double> reverse_tail(std::span<const double> x) {
  const std::size_t n = x.size();
  std::vector<double> y(n);
  y[0] = x[0];
  for (std::size_t j = 1; j < n; ++j) y[j] = x[n - j];
  return y;
}

StructuredVector symmetrize(std::span<const double> x) {
  const int n = static_cast<int>(x.size());
  std::vector<double> y(x.size());
  y[0] = 2.0 * x[0];
  for (int j = 1; j < n; ++j) y[j] = x[j] + x[n - j];
  return StructuredVector(std::move(y), Structure::symmetric);
}

StructuredVector antisymmetrize(std::span<const double> x) {
  const int n = static_cast<int>(x.size());
  std::vector<double> y(x.size());
  y[0] = 0.0;
  for (int j = 1; j < n; ++j) y[j] = x[j] - x[n - j];
  if (n % 2 == 0) y[n / 2] = 0.0;
  return StructuredVector(std::move(y), Structure::asymmetric);
}

std::vector<double> even_part(std::span<const double> x) {
  const std::size_t n = x.size();
  if (n % 2 != 0) throw InvalidOrderError("even/odd decimation requires even length");
  std::vector<double> y(n / 2);
  for (std::size_t p = 0; p < n / 2; ++p) y[p] = x[2 * p];
  return y;
}

std::vector<double> odd_part(std::span<const double> x) {
  const std::size_t n = x.size();
  if (n % 2 != 0) throw InvalidOrderError("even/odd decimation requires even length");
  std::vector<double> y(n / 2);
  for (std::size_t p = 0; p < n / 2; ++p) y[p] = x[2 * p + 1];
  return y;
}

double scale_constant(int n, int j) {
  if (j == 0 || (n % 2 == 0 && j == n / 2)) return 1.0 / std::sqrt(double(n));
  return std::sqrt(2.0 / n);
}

std::vector<double> cosine_profile(int n, int j) {
  std::vector<double> u(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) u[k] = std::cos(kTwoPi * k * j / n);
  return u;
}

std::vector<double> sine_profile(int n, int j) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) v[k] = std::sin(kTwoPi * k * j / n);
  return v;
}

BasisVectorSet build_q_dense(int n) {
  if (n < 2) throw InvalidOrderError("basis requires order >= 2");
  BasisVectorSet q;
  q.n = n;
  q.columns.resize(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j) {
    const double a = scale_constant(n, j);
    double* col = q.columns.data() + static_cast<std::size_t>(j) * n;
    if (j <= n / 2) {
      for (int k = 0; k < n; ++k) col[k] = a * std::cos(kTwoPi * k * j / n);
    } else {
      for (int k = 0; k < n; ++k) col[k] = a * std::sin(kTwoPi * k * (n - j) / n);
    }
  }
  return q;
}

}  // namespace gmat
