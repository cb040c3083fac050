#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace polarharq {

using Bit = std::uint8_t;
using BitVector = std::vector<Bit>;
using LlrBlock = std::vector<double>;

enum class BitKind : std::uint8_t { Frozen, Info, PcFrozen };

/// Per-leaf classification. A pc-frozen leaf is frozen to the decoded value
/// of its partner, an information leaf that precedes it in decoding order.
struct BitType {
  BitKind kind = BitKind::Frozen;
  std::size_t partner = 0;

  static constexpr BitType frozen() { return {BitKind::Frozen, 0}; }
  static constexpr BitType info() { return {BitKind::Info, 0}; }
  static constexpr BitType pc_frozen(std::size_t partner_index) {
    return {BitKind::PcFrozen, partner_index};
  }

  constexpr bool is_info() const { return kind == BitKind::Info; }
  /// Frozen or pc-frozen: the value is known once the decoder reaches it.
  constexpr bool is_fixed() const { return kind != BitKind::Info; }

  friend constexpr bool operator==(const BitType& a, const BitType& b) {
    if (a.kind != b.kind) return false;
    return a.kind != BitKind::PcFrozen || a.partner == b.partner;
  }
};

/// A polar code: length, information leaf count, bit types and the
/// reliability order they were derived from.
///
/// `k` counts every information leaf, CRC bits included; the payload carried
/// per frame is `k - crc_len` bits.
struct CodeSpec {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t crc_len = 0;
  double design_snr_db = 0.0;
  std::vector<BitType> bit_types;
  /// Permutation of [0, n), least reliable first.
  std::vector<std::size_t> reliability;

  std::size_t payload_len() const { return k - crc_len; }
  std::size_t stages() const;

  /// Leaf indices of information bits in ascending order.
  std::vector<std::size_t> info_positions() const;
  std::size_t count(BitKind kind) const;

  /// Throws SpecError (or InvalidLength) if any invariant is broken.
  void validate() const;

  friend bool operator==(const CodeSpec&, const CodeSpec&) = default;
};

constexpr bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

/// log2 of a power of two; throws InvalidLength otherwise.
std::size_t log2_exact(std::size_t v);

/// Hard decision: bit 0 for LLR >= 0.
constexpr Bit hard_decision(double llr) { return llr < 0.0 ? Bit{1} : Bit{0}; }

}  // namespace polarharq
