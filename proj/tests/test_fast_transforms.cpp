#include <doctest.h>

#include <cmath>
#include <random>

#include "gmat/fast_transforms.hpp"
#include "gmat/reference_dense.hpp"
#include "test_support.hpp"

using namespace gmat;

TEST_SUITE("fast_transforms") {

TEST_CASE("cs base case") {
  const TransformPlan plan(4);
  OpCounter ctr;
  const CosCoeffs c = cs(StructuredVector({1, 2, 3, 2}, Structure::symmetric), plan, ctr);
  CHECK(c.values == std::vector<double>{8, -2, 0});
  CHECK(ctr.additions == 5);
  CHECK(ctr.multiplications == 2);
}

TEST_CASE("sn base case") {
  const TransformPlan plan(4);
  OpCounter ctr;
  const SinCoeffs s = sn(StructuredVector({0, 5, 0, -5}, Structure::asymmetric), plan, ctr);
  CHECK(s.values == std::vector<double>{10});
  CHECK(ctr.additions == 0);
  CHECK(ctr.multiplications == 1);
  ctr.reset();
  CHECK(ctr.additions == 0);
  CHECK(ctr.multiplications == 0);
}

TEST_CASE("all-ones cosine coefficients") {
  for (int n : {4, 16, 128}) {
    const TransformPlan plan(n);
    OpCounter ctr;
    const CosCoeffs c =
        cs(StructuredVector(std::vector<double>(static_cast<std::size_t>(n), 1.0),
                            Structure::symmetric),
           plan, ctr);
    CHECK(c.values[0] == doctest::Approx(double(n)).epsilon(1e-13));
    for (std::size_t j = 1; j < c.values.size(); ++j) {
      CHECK(std::abs(c.values[j]) <= 1e-11 * n);
    }
  }
}

TEST_CASE("sn of the zero vector") {
  const TransformPlan plan(16);
  OpCounter ctr;
  const SinCoeffs s = sn(StructuredVector(std::vector<double>(16, 0.0), Structure::asymmetric),
                         plan, ctr);
  CHECK(testsup::sup_norm(s.values) == 0.0);
}

TEST_CASE("kernels match dense dot products at order 16") {
  std::mt19937_64 rng(21);
  const int n = 16;
  const TransformPlan plan(n);
  const std::vector<double> sym = testsup::random_symmetric(rng, n);
  const std::vector<double> asym = testsup::random_asymmetric(rng, n);
  OpCounter ctr;
  const CosCoeffs c = cs(StructuredVector(sym, Structure::symmetric), plan, ctr);
  const SinCoeffs s = sn(StructuredVector(asym, Structure::asymmetric), plan, ctr);
  for (int j = 0; j <= n / 2; ++j) {
    CHECK(c.values[static_cast<std::size_t>(j)] ==
          doctest::Approx(testsup::dot(sym, cosine_profile(n, j))).epsilon(1e-11));
  }
  for (int j = 1; j < n / 2; ++j) {
    CHECK(s.values[static_cast<std::size_t>(j) - 1] ==
          doctest::Approx(testsup::dot(asym, sine_profile(n, j))).epsilon(1e-11));
  }
}

TEST_CASE("predicted counts") {
  CHECK(predicted_counts_cs(4) == OpCounts{5, 2});
  CHECK(predicted_counts_sn(4) == OpCounts{0, 1});
  CHECK(predicted_counts_cs(8) == OpCounts{15, 8});
  CHECK(predicted_counts_sn(8) == OpCounts{5, 4});
  CHECK(predicted_counts_cs(64) == OpCounts{257, 126});
  CHECK_THROWS_AS(predicted_counts_cs(6), InvalidOrderError);
}

TEST_CASE("instrumented counts equal the closed forms exactly") {
  std::mt19937_64 rng(22);
  const TransformPlan plan(4096);
  for (int n = 4; n <= 4096; n *= 2) {
    const std::vector<double> raw = testsup::random_vector(rng, n);
    OpCounter cs_ctr, sn_ctr;
    cs(symmetrize(raw), plan, cs_ctr);
    sn(antisymmetrize(raw), plan, sn_ctr);
    const OpCounts cp = predicted_counts_cs(n);
    const OpCounts sp = predicted_counts_sn(n);
    CAPTURE(n);
    CHECK(cs_ctr.additions == static_cast<std::uint64_t>(cp.additions));
    CHECK(cs_ctr.multiplications == static_cast<std::uint64_t>(cp.multiplications));
    CHECK(sn_ctr.additions == static_cast<std::uint64_t>(sp.additions));
    CHECK(sn_ctr.multiplications == static_cast<std::uint64_t>(sp.multiplications));
  }
}

TEST_CASE("idsct examples") {
  const TransformPlan plan(4);
  OpCounter ctr;
  const std::vector<double> y = idsct(std::vector<double>{1, 0, 0, 0}, plan, ctr);
  CHECK(y[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(y[1] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(y[2] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(y[3] == doctest::Approx(0.0));

  const int n = 16;
  const TransformPlan plan16(n);
  const std::vector<double> ones(static_cast<std::size_t>(n), 1.0);
  const std::vector<double> z = idsct(ones, plan16, ctr);
  CHECK(z[0] == doctest::Approx(std::sqrt(double(n))).epsilon(1e-13));
  for (int j = 1; j < n; ++j) CHECK(std::abs(z[static_cast<std::size_t>(j)]) <= 1e-12 * n);
}

TEST_CASE("dsct example") {
  const TransformPlan plan(4);
  OpCounter ctr;
  const std::vector<double> y = dsct(std::vector<double>{1, 0, 0, 0}, plan, ctr);
  for (double v : y) CHECK(v == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("transforms match the dense basis products") {
  std::mt19937_64 rng(23);
  for (int n : {4, 8, 64}) {
    const TransformPlan plan(n);
    for (int trial = 0; trial < 10; ++trial) {
      const std::vector<double> x = testsup::random_vector(rng, n);
      OpCounter ctr;
      const std::vector<double> fast_fwd = idsct(x, plan, ctr);
      const std::vector<double> dense_fwd = dense_idsct(x);
      CHECK(testsup::max_abs_diff(fast_fwd, dense_fwd) <=
            1e-10 * std::max(1.0, testsup::sup_norm(dense_fwd)));
      const std::vector<double> fast_bwd = dsct(x, plan, ctr);
      const std::vector<double> dense_bwd = dense_dsct(x);
      CHECK(testsup::max_abs_diff(fast_bwd, dense_bwd) <=
            1e-10 * std::max(1.0, testsup::sup_norm(dense_bwd)));
    }
  }
}

TEST_CASE("round trip and energy") {
  std::mt19937_64 rng(24);
  for (int n : {4, 16, 256}) {
    const TransformPlan plan(n);
    const std::vector<double> x = testsup::random_vector(rng, n);
    OpCounter ctr;
    const std::vector<double> y = idsct(x, plan, ctr);
    const std::vector<double> back = dsct(y, plan, ctr);
    CHECK(testsup::max_abs_diff(back, x) <= 1e-10 * testsup::sup_norm(x));
    CHECK(testsup::norm2(y) == doctest::Approx(testsup::norm2(x)).epsilon(1e-10));
  }
}

TEST_CASE("decimation recurrence agrees with dense dot products") {
  // C_k(x) = C_k(eta x) + sec * C_k(sigma zeta x) and the mirrored index
  // takes the difference; spot check one recursion level.
  std::mt19937_64 rng(25);
  for (int n : {8, 16}) {
    const std::vector<double> x = testsup::random_symmetric(rng, n);
    const std::vector<double> ex = even_part(x);
    const auto szx = symmetrize(odd_part(x)).entries();
    const int m = n / 2;
    for (int k = 1; k < n / 4; ++k) {
      const double sec = 1.0 / (2.0 * std::cos(2.0 * std::numbers::pi * k / n));
      const double lhs = testsup::dot(x, cosine_profile(n, k));
      const double rhs = testsup::dot(ex, cosine_profile(m, k)) +
                         sec * testsup::dot(szx, cosine_profile(m, k));
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
      const double lhs_mirror = testsup::dot(x, cosine_profile(n, m - k));
      const double rhs_mirror = testsup::dot(ex, cosine_profile(m, k)) -
                                sec * testsup::dot(szx, cosine_profile(m, k));
      CHECK(lhs_mirror == doctest::Approx(rhs_mirror).epsilon(1e-12));
    }
  }
}

TEST_CASE("plan reuse and coverage") {
  const TransformPlan plan(64);
  CHECK(plan.secant(8, 1) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(plan.secant(64, 15) ==
        doctest::Approx(1.0 / (2.0 * std::cos(2.0 * std::numbers::pi * 15 / 64))));
  CHECK(plan.covers(4));
  CHECK(plan.covers(64));
  CHECK_FALSE(plan.covers(128));
  CHECK_FALSE(plan.covers(48));
  OpCounter ctr;
  CHECK_NOTHROW(idsct(std::vector<double>(16, 1.0), plan, ctr));
  const TransformPlan small(8);
  CHECK_THROWS_AS(idsct(std::vector<double>(16, 1.0), small, ctr), InvalidOrderError);
}

TEST_CASE("order and structure errors") {
  const TransformPlan plan(16);
  OpCounter ctr;
  CHECK_THROWS_AS(TransformPlan(6), InvalidOrderError);
  CHECK_THROWS_AS(TransformPlan(2), InvalidOrderError);
  CHECK_THROWS_AS(idsct(std::vector<double>(6, 1.0), plan, ctr), InvalidOrderError);
  CHECK_THROWS_AS(cs(StructuredVector::general({1, 2, 3, 2}), plan, ctr), StructureError);
  CHECK_THROWS_AS(sn(StructuredVector::general({0, 5, 0, -5}), plan, ctr), StructureError);
  CHECK_THROWS_AS(sn(StructuredVector({1, 2, 0, 2}, Structure::symmetric), plan, ctr),
                  StructureError);
}

TEST_CASE("leading-order matvec estimates are reported side by side") {
  const AsymptoticCost pair = matvec_cost_transform_pair(64);
  const AsymptoticCost pipe = matvec_cost_full_pipeline(64);
  CHECK(pair.additions == doctest::Approx(1.75 * 64 * 6));
  CHECK(pipe.additions == doctest::Approx(5.0 * 64 * 6));
  CHECK(pair.multiplications == doctest::Approx(0.5 * 64 * 6));
  CHECK(pipe.multiplications == doctest::Approx(1.5 * 64 * 6));
}

}  // TEST_SUITE
