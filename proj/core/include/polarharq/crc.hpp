#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "polarharq/types.hpp"

namespace polarharq {

/// Bitwise, MSB-first CRC with zero initial register and no output XOR.
/// `poly` omits the implicit x^width term.
struct CrcSpec {
  std::size_t width = 24;
  std::uint32_t poly = 0x864CFB;

  friend constexpr bool operator==(const CrcSpec&, const CrcSpec&) = default;
};

inline constexpr CrcSpec kCrc24A{24, 0x864CFB};

/// Default generator for a given CRC length (24 -> CRC24A, 16 -> CCITT,
/// 11 and 6 -> the NR uplink polynomials). Throws ConfigError otherwise.
CrcSpec crc_for_length(std::size_t width);

/// Remainder of data * x^width divided by the generator, as `width` bits.
BitVector crc_remainder(std::span<const Bit> data, const CrcSpec& crc = kCrc24A);

/// data followed by its remainder.
BitVector crc_attach(std::span<const Bit> data, const CrcSpec& crc = kCrc24A);

/// True iff the trailing `width` bits are the remainder of the rest.
/// Throws InvalidLength when the input is not longer than the CRC.
bool crc_check(std::span<const Bit> data_with_crc, const CrcSpec& crc = kCrc24A);

}  // namespace polarharq
