#include <gtest/gtest.h>

#include "oracles.hpp"
#include "polarharq/construction.hpp"
#include "polarharq/encoder.hpp"
#include "polarharq/errors.hpp"
#include "polarharq/sc_decoder.hpp"

namespace polarharq {
namespace {

CodeSpec spec_from(std::vector<BitType> types) {
  CodeSpec s;
  s.n = types.size();
  s.bit_types = std::move(types);
  s.k = s.count(BitKind::Info);
  return s;
}

TEST(MinSum, F) {
  EXPECT_DOUBLE_EQ(f_minsum(2.0, -3.0), -2.0);
  EXPECT_DOUBLE_EQ(f_minsum(0.0, 5.0), 0.0);
  EXPECT_DOUBLE_EQ(f_minsum(-1.5, -4.0), 1.5);
}

TEST(MinSum, G) {
  EXPECT_DOUBLE_EQ(g_update(1.5, 2.0, 0), 3.5);
  EXPECT_DOUBLE_EQ(g_update(1.5, 2.0, 1), 0.5);
  EXPECT_DOUBLE_EQ(g_update(-2.0, -2.0, 1), 0.0);
}

TEST(ScDecode, AllFrozenGivesZero) {
  std::mt19937_64 rng(1);
  const CodeSpec s = spec_from(std::vector<BitType>(16, BitType::frozen()));
  const auto r = sc_decode(oracle::random_llrs(16, rng, -1.0), s);
  EXPECT_EQ(r.u_hat, BitVector(16, 0));
  EXPECT_EQ(r.traversal.leaf_visits, 16u);
  EXPECT_EQ(r.traversal.internal_visits, 15u);
}

TEST(ScDecode, TwoLeafExample) {
  const CodeSpec s = spec_from({BitType::frozen(), BitType::info()});
  const auto r = sc_decode(std::vector<double>{1.0, 3.0}, s);
  EXPECT_EQ(r.u_hat, (BitVector{0, 0}));
  EXPECT_EQ(r.x_hat, (BitVector{0, 0}));
}

TEST(ScDecode, MatchesPerBitReferenceWithPcFrozen) {
  // n = 8: info at 3, 5, 6, 7 with leaf 6 pc-frozen to leaf 3.
  std::vector<BitType> types(8, BitType::frozen());
  types[3] = types[5] = types[7] = BitType::info();
  types[6] = BitType::pc_frozen(3);
  const CodeSpec s = spec_from(types);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 2000; ++t) {
    const auto llr = oracle::random_llrs(8, rng, 0.3, 2.0);
    const auto r = sc_decode(llr, s);
    EXPECT_EQ(r.u_hat, oracle::reference_sc(llr, types));
    EXPECT_EQ(r.x_hat, polar_encode(r.u_hat));
  }
}

TEST(ScDecode, MatchesReferenceOnConstructedCodes) {
  std::mt19937_64 rng(9);
  for (std::size_t n : {16u, 64u}) {
    const CodeSpec s = construct_code(n, n / 2, 0, 2.0);
    for (int t = 0; t < 200; ++t) {
      const auto llr = oracle::random_llrs(n, rng, 0.8, 2.0);
      EXPECT_EQ(sc_decode(llr, s).u_hat, oracle::reference_sc(llr, s.bit_types));
    }
  }
}

TEST(ScDecode, NoiselessRecovery) {
  std::mt19937_64 rng(3);
  for (std::size_t n : {8u, 128u, 1024u}) {
    const CodeSpec s = construct_code(n, n / 3, 0, 2.0);
    for (int t = 0; t < 20; ++t) {
      const BitVector u = place_on_info_leaves(oracle::random_bits(s.k, rng), s);
      const BitVector x = polar_encode(u);
      std::vector<double> llr(n);
      for (std::size_t i = 0; i < n; ++i) llr[i] = x[i] ? -20.0 : 20.0;
      const auto r = sc_decode(llr, s);
      EXPECT_EQ(r.u_hat, u);
      EXPECT_EQ(r.x_hat, x);
    }
  }
}

TEST(ScDecode, RepetitionDecisionIsSignOfSum) {
  std::vector<BitType> types(16, BitType::frozen());
  types[15] = BitType::info();
  const CodeSpec s = spec_from(types);
  std::mt19937_64 rng(4);
  for (int t = 0; t < 1000; ++t) {
    const auto llr = oracle::random_llrs(16, rng, 0.0, 1.0);
    double sum = 0;
    for (double v : llr) sum += v;
    EXPECT_EQ(sc_decode(llr, s).u_hat[15], sum < 0 ? 1 : 0);
  }
}

TEST(ScDecode, Deterministic) {
  std::mt19937_64 rng(5);
  const CodeSpec s = construct_code(256, 100, 0, 2.0);
  const auto llr = oracle::random_llrs(256, rng, 0.5, 2.0);
  const auto a = sc_decode(llr, s);
  const auto b = sc_decode(llr, s);
  EXPECT_EQ(a.u_hat, b.u_hat);
  EXPECT_EQ(a.traversal, b.traversal);
}

TEST(ScDecode, Errors) {
  const CodeSpec s = spec_from({BitType::frozen(), BitType::info()});
  EXPECT_THROW(sc_decode(std::vector<double>{1.0, 2.0, 3.0}, s), InvalidLength);
  // Partner after the pc-frozen leaf cannot have been decoded.
  CodeSpec bad = spec_from({BitType::pc_frozen(1), BitType::info()});
  EXPECT_THROW(sc_decode(std::vector<double>{1.0, 2.0}, bad), SpecError);
}

}  // namespace
}  // namespace polarharq
