#include "polarharq/crc.hpp"

#include <string>

#include "polarharq/errors.hpp"

namespace polarharq {

CrcSpec crc_for_length(std::size_t width) {
  switch (width) {
    case 24: return kCrc24A;
    case 16: return {16, 0x1021};
    case 11: return {11, 0x621};
    case 6: return {6, 0x21};
    default:
      throw ConfigError("no default CRC generator for length " + std::to_string(width));
  }
}

BitVector crc_remainder(std::span<const Bit> data, const CrcSpec& crc) {
  const std::uint32_t top = std::uint32_t{1} << (crc.width - 1);
  const std::uint32_t mask = (crc.width == 32) ? 0xFFFFFFFFu : ((std::uint32_t{1} << crc.width) - 1);
  std::uint32_t reg = 0;
  for (Bit b : data) {
    const bool feedback = ((reg & top) != 0) != (b != 0);
    reg = (reg << 1) & mask;
    if (feedback) reg ^= crc.poly;
  }
  BitVector out(crc.width);
  for (std::size_t i = 0; i < crc.width; ++i) {
    out[i] = static_cast<Bit>((reg >> (crc.width - 1 - i)) & 1u);
  }
  return out;
}

BitVector crc_attach(std::span<const Bit> data, const CrcSpec& crc) {
  BitVector out(data.begin(), data.end());
  const BitVector rem = crc_remainder(data, crc);
  out.insert(out.end(), rem.begin(), rem.end());
  return out;
}

bool crc_check(std::span<const Bit> data_with_crc, const CrcSpec& crc) {
  if (data_with_crc.size() <= crc.width) {
    throw InvalidLength("CRC check needs more than " + std::to_string(crc.width) + " bits, got " +
                        std::to_string(data_with_crc.size()));
  }
  const std::size_t payload = data_with_crc.size() - crc.width;
  const BitVector rem = crc_remainder(data_with_crc.first(payload), crc);
  for (std::size_t i = 0; i < crc.width; ++i) {
    if (rem[i] != data_with_crc[payload + i]) return false;
  }
  return true;
}

}  // namespace polarharq
