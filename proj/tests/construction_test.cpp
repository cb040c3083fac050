#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "oracles.hpp"
#include "polarharq/construction.hpp"
#include "polarharq/errors.hpp"

namespace polarharq {
namespace {

// Genie-aided bit-channel error rates of the all-zero codeword over BPSK/AWGN
// at per-bit SNR `snr_db`, using exact belief propagation at every node.
std::vector<double> monte_carlo_error_rates(std::size_t n, double snr_db, int frames,
                                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const double sigma2 = 1.0 / (2.0 * std::pow(10.0, snr_db / 10.0));
  std::normal_distribution<double> noise(0.0, std::sqrt(sigma2));
  std::vector<double> errors(n, 0.0);
  for (int f = 0; f < frames; ++f) {
    std::vector<double> llr(n);
    for (double& v : llr) v = 2.0 * (1.0 + noise(rng)) / sigma2;
    for (std::size_t i = 0; i < n; ++i) {
      const double l = oracle::leaf_llr(llr, i, BitVector(i, 0), oracle::boxplus);
      if (l < 0) errors[i] += 1.0;
    }
  }
  for (double& e : errors) e /= frames;
  return errors;
}

TEST(Reliability, TwoChannelsOrderCheckBranchFirst) {
  for (double snr : {-5.0, 0.0, 2.0, 10.0}) {
    EXPECT_EQ(construct_reliability(2, snr), (std::vector<std::size_t>{0, 1}));
  }
}

TEST(Reliability, FourChannelsExtremes) {
  const auto rel = construct_reliability(4, 0.0);
  EXPECT_EQ(rel.front(), 0u);
  EXPECT_EQ(rel.back(), 3u);
}

TEST(Reliability, EightChannelsMatchMonteCarloOracle) {
  // Frozen from the Monte-Carlo oracle below: 0, 1, 2, 4, 3, 5, 6, 7.
  const std::vector<std::size_t> expected{0, 1, 2, 4, 3, 5, 6, 7};
  EXPECT_EQ(construct_reliability(8, 2.0), expected);

  const auto rates = monte_carlo_error_rates(8, 2.0, 40000, 5);
  // Every pair the oracle separates clearly must be ordered the same way.
  const auto rel = construct_reliability(8, 2.0);
  std::vector<std::size_t> rank(8);
  for (std::size_t r = 0; r < 8; ++r) rank[rel[r]] = r;
  for (std::size_t a = 0; a < 8; ++a) {
    for (std::size_t b = 0; b < 8; ++b) {
      const double se = std::sqrt((rates[a] + rates[b]) / 40000.0) + 1e-12;
      if (rates[a] - rates[b] > 5 * se) {
        EXPECT_LT(rank[a], rank[b]) << "channel " << a << " is worse than " << b;
      }
    }
  }
}

TEST(Reliability, IsDeterministicPermutation) {
  for (std::size_t n : {16u, 256u, 2048u}) {
    const auto a = construct_reliability(n, 2.0);
    const auto b = construct_reliability(n, 2.0);
    EXPECT_EQ(a, b);
    auto sorted = a;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> iota(n);
    std::iota(iota.begin(), iota.end(), 0u);
    EXPECT_EQ(sorted, iota);
    EXPECT_EQ(a.front(), 0u);
    EXPECT_EQ(a.back(), n - 1);
  }
}

TEST(Reliability, RejectsNonPowerOfTwo) {
  EXPECT_THROW(construct_reliability(1000, 2.0), InvalidLength);
  EXPECT_THROW(construct_reliability(0, 2.0), InvalidLength);
}

TEST(GaussianApproximation, CheckNodeMeanIsBelowInput) {
  for (double m : {0.01, 0.5, 3.0, 9.99, 10.01, 40.0, 5000.0}) {
    const double out = ga::check_node_mean(m);
    EXPECT_GT(out, 0.0);
    EXPECT_LT(out, m);
  }
  // Large means lose a little more than 2 ln 2 through the check node.
  EXPECT_NEAR(ga::check_node_mean(1000.0), 1000.0 - 4.0 * std::log(2.0), 1.0);
}

TEST(GaussianApproximation, CheckNodeIsMonotoneAcrossSegments) {
  double prev = -std::numeric_limits<double>::infinity();
  for (double lm = -60.0; lm <= 9.0; lm += 0.01) {
    const double out = ga::check_node_log_mean(lm);
    EXPECT_GT(out, prev) << lm;
    EXPECT_LT(out, lm) << lm;
    prev = out;
  }
}

// 1 - E[tanh(L/2)] by trapezoidal integration, L ~ N(m, 2m).
double exact_phi(double m) {
  const double sd = std::sqrt(2.0 * m);
  const int steps = 20000;
  const double lo = m - 12.0 * sd, hi = m + 12.0 * sd, h = (hi - lo) / steps;
  double acc = 0.0;
  for (int i = 0; i <= steps; ++i) {
    const double x = lo + i * h;
    const double z = (x - m) / sd;
    const double w = (i == 0 || i == steps) ? 0.5 : 1.0;
    acc += w * std::tanh(x / 2.0) * std::exp(-0.5 * z * z);
  }
  return 1.0 - acc * h / (sd * std::sqrt(2.0 * std::numbers::pi));
}

TEST(GaussianApproximation, CheckNodeTracksExactRecursion) {
  for (double m : {0.05, 0.3, 1.0, 2.5, 6.0, 15.0, 30.0}) {
    const double target = 1.0 - std::pow(1.0 - exact_phi(m), 2.0);
    double lo = 1e-9, hi = 2.0 * m;
    for (int it = 0; it < 100; ++it) {
      const double mid = std::sqrt(lo * hi);
      (exact_phi(mid) > target ? lo : hi) = mid;
    }
    EXPECT_NEAR(ga::check_node_mean(m) / lo, 1.0, 0.12) << m;
  }
}

TEST(GaussianApproximation, LongCodesHaveNoUnderflowTies) {
  const auto lms = bit_channel_log_means(2048, 2.0);
  for (double v : lms) EXPECT_TRUE(std::isfinite(v));
  const auto rel = construct_reliability(2048, 2.0);
  for (std::size_t i = 1; i < rel.size(); ++i) {
    if (lms[rel[i - 1]] == lms[rel[i]]) {
      // Equal means only arise from exact symmetry, never from underflow.
      EXPECT_GT(lms[rel[i]], -700.0);
    }
  }
}

TEST(BuildCodeSpec, TopReliableIndexIsInfo) {
  const std::vector<std::size_t> rel{0, 1, 2, 3};
  const CodeSpec s = build_code_spec(4, 1, 0, rel);
  EXPECT_EQ(s.bit_types, (std::vector<BitType>{BitType::frozen(), BitType::frozen(),
                                               BitType::frozen(), BitType::info()}));
  EXPECT_EQ(s.k, 1u);
}

TEST(BuildCodeSpec, RateOne) {
  const std::vector<std::size_t> rel{2, 0, 3, 1};
  const CodeSpec s = build_code_spec(4, 4, 0, rel);
  EXPECT_EQ(s.count(BitKind::Info), 4u);
}

TEST(BuildCodeSpec, EightFromGaAgreesWithOracleOrdering) {
  const CodeSpec s = construct_code(8, 4, 0, 2.0);
  // The four most reliable channels of the oracle ordering.
  EXPECT_EQ(s.info_positions(), (std::vector<std::size_t>{3, 5, 6, 7}));
  EXPECT_EQ(s.count(BitKind::Frozen), 4u);
}

TEST(BuildCodeSpec, CrcBitsTakeInformationLeaves) {
  const CodeSpec s = construct_code(2048, 1024, 24, 2.0);
  EXPECT_EQ(s.k, 1048u);
  EXPECT_EQ(s.payload_len(), 1024u);
  EXPECT_EQ(s.count(BitKind::Info), 1048u);
}

TEST(BuildCodeSpec, CapacityError) {
  const std::vector<std::size_t> rel{0, 1, 2, 3};
  EXPECT_THROW(build_code_spec(4, 4, 1, rel), CapacityError);
  EXPECT_THROW(build_code_spec(4, 3, 2, rel), CapacityError);
}

TEST(NestedReliability, RightHalfOrderIsPreserved) {
  const std::vector<std::size_t> rel{0, 1, 2, 4, 3, 5, 6, 7};
  EXPECT_EQ(nested_reliability(rel), (std::vector<std::size_t>{0, 1, 2, 3}));
  const auto big = construct_reliability(64, 2.0);
  const auto nested = nested_reliability(big);
  ASSERT_EQ(nested.size(), 32u);
  std::size_t cursor = 0;
  for (std::size_t idx : big) {
    if (idx >= 32) EXPECT_EQ(nested[cursor++], idx - 32);
  }
}

}  // namespace
}  // namespace polarharq
