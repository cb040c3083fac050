#include <gtest/gtest.h>

#include "oracles.hpp"
#include "polarharq/crc.hpp"
#include "polarharq/encoder.hpp"
#include "polarharq/errors.hpp"

namespace polarharq {
namespace {

TEST(PolarEncode, Examples) {
  EXPECT_EQ(polar_encode(BitVector(16, 0)), BitVector(16, 0));
  EXPECT_EQ(polar_encode(BitVector{0, 1}), (BitVector{1, 1}));
  EXPECT_EQ(polar_encode(BitVector{0, 1, 0, 1}), (BitVector{0, 0, 1, 1}));
  EXPECT_EQ(oracle::matrix_encode(BitVector{0, 1, 0, 1}), (BitVector{0, 0, 1, 1}));
}

TEST(PolarEncode, MatchesMatrixOracle) {
  std::mt19937_64 rng(11);
  for (std::size_t n : {1u, 2u, 4u, 8u, 32u, 128u}) {
    for (int t = 0; t < 20; ++t) {
      const BitVector u = oracle::random_bits(n, rng);
      EXPECT_EQ(polar_encode(u), oracle::matrix_encode(u));
    }
  }
}

TEST(PolarEncode, SelfInverseAndLinear) {
  std::mt19937_64 rng(12);
  for (std::size_t n : {2u, 16u, 1024u}) {
    for (int t = 0; t < 50; ++t) {
      const BitVector a = oracle::random_bits(n, rng);
      const BitVector b = oracle::random_bits(n, rng);
      EXPECT_EQ(polar_encode(polar_encode(a)), a);
      BitVector sum(n);
      for (std::size_t i = 0; i < n; ++i) sum[i] = a[i] ^ b[i];
      BitVector lhs = polar_encode(sum);
      BitVector ea = polar_encode(a), eb = polar_encode(b);
      for (std::size_t i = 0; i < n; ++i) ea[i] ^= eb[i];
      EXPECT_EQ(lhs, ea);
    }
  }
}

TEST(PolarEncode, RejectsBadLength) {
  EXPECT_THROW(polar_encode(BitVector(6, 0)), InvalidLength);
  EXPECT_THROW(polar_encode(BitVector{}), InvalidLength);
}

TEST(Crc, ZeroPayloadHasZeroRemainder) {
  const BitVector data(40, 0);
  const BitVector out = crc_attach(data);
  ASSERT_EQ(out.size(), 64u);
  EXPECT_EQ(BitVector(out.begin() + 40, out.end()), BitVector(24, 0));
}

TEST(Crc, KnownRemainderOfSingleBit) {
  // 1 * x^24 mod g(x) is the generator without its leading term.
  const BitVector rem = crc_remainder(BitVector{1});
  std::uint32_t value = 0;
  for (Bit b : rem) value = (value << 1) | b;
  EXPECT_EQ(value, 0x864CFBu);
}

TEST(Crc, AttachThenCheckPasses) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const BitVector d = oracle::random_bits(1 + rng() % 600, rng);
    EXPECT_TRUE(crc_check(crc_attach(d)));
  }
}

TEST(Crc, EverySingleFlipOfFortyBitPayloadIsDetected) {
  std::mt19937_64 rng(4);
  const BitVector framed = crc_attach(oracle::random_bits(40, rng));
  for (std::size_t i = 0; i < framed.size(); ++i) {
    BitVector bad = framed;
    bad[i] ^= 1;
    EXPECT_FALSE(crc_check(bad)) << "flip at " << i;
  }
}

TEST(Crc, BurstsUpToTwentyFourBitsAreDetected) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 2000; ++t) {
    BitVector framed = crc_attach(oracle::random_bits(200, rng));
    const std::size_t len = 1 + rng() % 24;
    const std::size_t start = rng() % (framed.size() - len + 1);
    // A burst starts and ends with a flipped bit.
    framed[start] ^= 1;
    if (len > 1) framed[start + len - 1] ^= 1;
    for (std::size_t i = start + 1; i + 1 < start + len; ++i) framed[i] ^= rng() & 1u;
    EXPECT_FALSE(crc_check(framed));
  }
}

TEST(Crc, ShortInputIsInvalid) {
  EXPECT_THROW(crc_check(BitVector(24, 0)), InvalidLength);
  EXPECT_NO_THROW(crc_check(BitVector(25, 0)));
}

TEST(Crc, OtherLengthsHaveDefaults) {
  EXPECT_EQ(crc_for_length(24), kCrc24A);
  EXPECT_EQ(crc_for_length(16).width, 16u);
  EXPECT_THROW(crc_for_length(7), ConfigError);
}

TEST(LeafPlacement, RoundTrip) {
  CodeSpec s;
  s.n = 8;
  s.k = 3;
  s.bit_types.assign(8, BitType::frozen());
  s.bit_types[3] = s.bit_types[6] = s.bit_types[7] = BitType::info();
  const BitVector info{1, 0, 1};
  const BitVector u = place_on_info_leaves(info, s);
  EXPECT_EQ(u, (BitVector{0, 0, 0, 1, 0, 0, 0, 1}));
  EXPECT_EQ(extract_info_leaves(u, s), info);
  EXPECT_THROW(place_on_info_leaves(BitVector{1}, s), InvalidLength);
}

}  // namespace
}  // namespace polarharq
