#include "gmat/fast_transforms.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

namespace gmat {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

int log2_exact(int n) { return std::countr_zero(static_cast<unsigned>(n)); }

void require_fast_order(int n, const char* who) {
  if (!is_fast_order(n)) {
    throw InvalidOrderError(std::string(who) + ": order " + std::to_string(n) +
                            " is not a power of two >= 4");
  }
}

// sigma fold of an even-length sub-vector.  The output is symmetric, so
// only the lower half is summed; the mirrored entries are copies.
// Cost: m/2 - 1 additions, 2 multiplications (the two doublings).
std::vector<double> fold_symmetric(std::span<const double> y, OpCounter& ctr) {
  const int m = static_cast<int>(y.size());
  std::vector<double> out(y.size());
  out[0] = 2.0 * y[0];
  ctr.multiplications += 1;
  for (int j = 1; j < m / 2; ++j) {
    out[j] = y[j] + y[m - j];
    out[m - j] = out[j];
  }
  ctr.additions += static_cast<std::uint64_t>(m / 2 - 1);
  out[m / 2] = 2.0 * y[m / 2];
  ctr.multiplications += 1;
  return out;
}

// alpha fold; entries 0 and m/2 are structurally zero and the upper half
// holds negated copies.  Cost: m/2 - 1 additions.
std::vector<double> fold_asymmetric(std::span<const double> y, OpCounter& ctr) {
  const int m = static_cast<int>(y.size());
  std::vector<double> out(y.size());
  out[0] = 0.0;
  for (int j = 1; j < m / 2; ++j) {
    out[j] = y[j] - y[m - j];
    out[m - j] = -out[j];
  }
  ctr.additions += static_cast<std::uint64_t>(m / 2 - 1);
  out[m / 2] = 0.0;
  return out;
}

std::vector<double> decimate_even(std::span<const double> x) {
  std::vector<double> y(x.size() / 2);
  for (std::size_t p = 0; p < y.size(); ++p) y[p] = x[2 * p];
  return y;
}

std::vector<double> decimate_odd(std::span<const double> x) {
  std::vector<double> y(x.size() / 2);
  for (std::size_t p = 0; p < y.size(); ++p) y[p] = x[2 * p + 1];
  return y;
}

// function CS: c_j = C_j(x) for j = 0..n/2, x symmetric.
std::vector<double> cs_rec(std::span<const double> x, const TransformPlan& plan,
                           OpCounter& ctr) {
  const int n = static_cast<int>(x.size());
  if (n == 4) {
    std::vector<double> c(3);
    double twice = 2.0 * x[1];
    ctr.multiplications += 1;
    c[0] = x[0] + twice + x[2];
    ctr.additions += 2;
    c[1] = x[0] - x[2];
    ctr.additions += 1;
    twice = 2.0 * x[1];
    ctr.multiplications += 1;
    c[2] = x[0] - twice + x[2];
    ctr.additions += 2;
    return c;
  }
  const int m = n / 2;
  const int nu = n / 4;
  const std::vector<double> ct = cs_rec(decimate_even(x), plan, ctr);
  const std::vector<double> cb = cs_rec(fold_symmetric(decimate_odd(x), ctr), plan, ctr);
  std::vector<double> c(static_cast<std::size_t>(m) + 1);
  for (int k = 1; k < nu; ++k) {
    const double aux = plan.secant(n, k) * cb[k];
    ctr.multiplications += 1;
    c[k] = ct[k] + aux;
    c[m - k] = ct[k] - aux;
    ctr.additions += 2;
  }
  const double aux = cb[0] / 2.0;
  ctr.multiplications += 1;
  c[0] = ct[0] + aux;
  c[nu] = ct[nu];
  c[m] = ct[0] - aux;
  ctr.additions += 2;
  return c;
}

// function SN: s[j-1] = S_j(x) for j = 1..n/2-1, x asymmetric.
std::vector<double> sn_rec(std::span<const double> x, const TransformPlan& plan,
                           OpCounter& ctr) {
  const int n = static_cast<int>(x.size());
  if (n == 4) {
    ctr.multiplications += 1;
    return {2.0 * x[1]};
  }
  const int m = n / 2;
  const int nu = n / 4;
  const std::vector<double> st = sn_rec(decimate_even(x), plan, ctr);
  const std::vector<double> sb = sn_rec(fold_asymmetric(decimate_odd(x), ctr), plan, ctr);
  std::vector<double> s(static_cast<std::size_t>(m) - 1);
  for (int k = 1; k < nu; ++k) {
    const double aux = plan.secant(n, k) * sb[k - 1];
    ctr.multiplications += 1;
    s[k - 1] = st[k - 1] + aux;
    s[m - k - 1] = aux - st[k - 1];
    ctr.additions += 2;
  }
  // S_nu(x) summed directly from the odd entries of x.
  double acc = 0.0;
  for (int j = 0; j + 2 <= nu; j += 2) {
    acc = acc + x[2 * j + 1] - x[2 * j + 3];
    ctr.additions += 2;
  }
  s[nu - 1] = 2.0 * acc;
  ctr.multiplications += 1;
  return s;
}

}  // namespace

bool is_fast_order(int n) { return n >= 4 && (n & (n - 1)) == 0; }

TransformPlan::TransformPlan(int n) : n_(n) {
  require_fast_order(n, "TransformPlan");
  const int rmax = log2_exact(n);
  secants_.resize(static_cast<std::size_t>(rmax) + 1);
  for (int r = 3; r <= rmax; ++r) {
    const int level = 1 << r;
    std::vector<double>& table = secants_[static_cast<std::size_t>(r)];
    table.resize(static_cast<std::size_t>(level / 4));
    for (int k = 1; k <= level / 4 - 1; ++k) {
      table[static_cast<std::size_t>(k)] = 1.0 / (2.0 * std::cos(kTwoPi * k / level));
    }
  }
}

bool TransformPlan::covers(int n) const { return is_fast_order(n) && n <= n_; }

double TransformPlan::secant(int level, int k) const {
  return secants_[static_cast<std::size_t>(log2_exact(level))][static_cast<std::size_t>(k)];
}

CosCoeffs cs(const StructuredVector& x, const TransformPlan& plan, OpCounter& counter) {
  require_fast_order(x.size(), "cs");
  if (!plan.covers(x.size())) throw InvalidOrderError("cs: plan does not cover this order");
  if (x.structure() != Structure::symmetric) {
    throw StructureError("cs requires a symmetric input vector");
  }
  return CosCoeffs{cs_rec(x.span(), plan, counter)};
}

SinCoeffs sn(const StructuredVector& x, const TransformPlan& plan, OpCounter& counter) {
  require_fast_order(x.size(), "sn");
  if (!plan.covers(x.size())) throw InvalidOrderError("sn: plan does not cover this order");
  if (x.structure() != Structure::asymmetric) {
    throw StructureError("sn requires an asymmetric input vector");
  }
  return SinCoeffs{sn_rec(x.span(), plan, counter)};
}

std::vector<double> idsct(std::span<const double> x, const TransformPlan& plan,
                          OpCounter& counter) {
  const int n = static_cast<int>(x.size());
  require_fast_order(n, "idsct");
  if (!plan.covers(n)) throw InvalidOrderError("idsct: plan does not cover this order");
  const int m = n / 2;

  const StructuredVector sx = [&] {
    // counted sigma fold of the full input
    std::vector<double> y(x.size());
    y[0] = 2.0 * x[0];
    counter.multiplications += 1;
    for (int j = 1; j < m; ++j) {
      y[j] = x[j] + x[n - j];
      y[n - j] = y[j];
    }
    counter.additions += static_cast<std::uint64_t>(m - 1);
    y[m] = 2.0 * x[m];
    counter.multiplications += 1;
    return StructuredVector(std::move(y), Structure::symmetric);
  }();
  const StructuredVector ax = [&] {
    std::vector<double> y(x.size());
    y[0] = 0.0;
    for (int j = 1; j < m; ++j) {
      y[j] = x[j] - x[n - j];
      y[n - j] = -y[j];
    }
    counter.additions += static_cast<std::uint64_t>(m - 1);
    y[m] = 0.0;
    return StructuredVector(std::move(y), Structure::asymmetric);
  }();

  const std::vector<double> c = cs_rec(sx.span(), plan, counter);
  const std::vector<double> s = sn_rec(ax.span(), plan, counter);

  std::vector<double> y(x.size());
  for (int j = 0; j <= m; ++j) {
    y[j] = scale_constant(n, j) * c[j] / 2.0;
  }
  for (int j = m + 1; j < n; ++j) {
    y[j] = scale_constant(n, j) * s[static_cast<std::size_t>(n - j) - 1] / 2.0;
  }
  counter.multiplications += static_cast<std::uint64_t>(n);  // alpha_j/2 scalings
  return y;
}

std::vector<double> dsct(std::span<const double> t, const TransformPlan& plan,
                         OpCounter& counter) {
  const int n = static_cast<int>(t.size());
  require_fast_order(n, "dsct");
  if (!plan.covers(n)) throw InvalidOrderError("dsct: plan does not cover this order");
  const int m = n / 2;

  // phi fold: (t_0 .. t_m, t_{m-1} .. t_1), symmetric by construction.
  std::vector<double> folded(t.size());
  for (int j = 0; j <= m; ++j) folded[j] = t[j];
  for (int j = m + 1; j < n; ++j) folded[j] = t[n - j];
  // theta fold: zeros at 0 and m, upper entries of t reflected/negated.
  std::vector<double> anti(t.size(), 0.0);
  for (int j = 1; j < m; ++j) anti[j] = t[n - j];
  for (int j = m + 1; j < n; ++j) anti[j] = -t[j];

  const std::vector<double> C = cs_rec(folded, plan, counter);
  const std::vector<double> S = sn_rec(anti, plan, counter);

  const double abar = scale_constant(n, 0);
  const double atil = scale_constant(n, 1);
  const double half_atil = atil / 2.0;

  std::vector<double> y(t.size());
  y[0] = half_atil * (C[0] - t[0] - t[m]) + abar * (t[0] + t[m]);
  y[m] = half_atil * (C[m] - t[0] - t[m]) + abar * (t[0] + t[m]);
  counter.additions += 6;
  counter.multiplications += 4;
  for (int j = 1; j < m; ++j) {
    const double tm_signed = (j % 2 == 0) ? t[m] : -t[m];
    const double rim = abar * (t[0] + tm_signed);
    const double core = C[j] - t[0] - tm_signed;
    const double sj = S[static_cast<std::size_t>(j) - 1];
    y[j] = half_atil * (core + sj) + rim;
    y[n - j] = half_atil * (core - sj) + rim;
    counter.additions += 7;
    counter.multiplications += 3;
  }
  return y;
}

OpCounts predicted_counts_cs(int n) {
  require_fast_order(n, "predicted_counts_cs");
  const std::int64_t r = log2_exact(n);
  const std::int64_t nn = n;
  return {3 * nn * r / 4 - nn / 2 + 1, nn * r / 4 + nn / 2 - 2};
}

OpCounts predicted_counts_sn(int n) {
  require_fast_order(n, "predicted_counts_sn");
  const std::int64_t r = log2_exact(n);
  const std::int64_t nn = n;
  return {nn * r - 11 * nn / 4 + 3, nn * r / 4 - nn / 4};
}

AsymptoticCost matvec_cost_transform_pair(int n) {
  const double nlog = n * std::log2(double(n));
  return {1.75 * nlog, 0.5 * nlog};
}

AsymptoticCost matvec_cost_full_pipeline(int n) {
  const double nlog = n * std::log2(double(n));
  return {5.0 * nlog, 1.5 * nlog};
}

}  // namespace gmat
