#pragma once

#include <span>

#include "polarharq/node_class.hpp"
#include "polarharq/types.hpp"

namespace polarharq {

/// Smallest node size at which each pattern is recognised.
inline constexpr std::size_t kMinRepSpcSize = 4;
inline constexpr std::size_t kMinGroupNodeSize = 8;

/// Classifies a slice of leaf types. Pc-frozen leaves count as frozen.
/// Precedence: Rate0, Rate1, Rep, Spc, Rep2, Spc2, Rpc, Pcr, Generic.
NodeClass classify(std::span<const BitType> types);

/// Encoded pc vector of a node: polar_encode of its fixed leaf values with the
/// information leaves zeroed.
BitVector compute_node_pc(std::span<const Bit> leaf_values);

struct RepDecision {
  BitVector codeword;
  Bit info = 0;
};

/// Two repeated values recovered by a REP-2 node, in both domains.
struct Rep2Decision {
  BitVector codeword;
  Bit even = 0;  ///< repeated on even positions
  Bit odd = 0;   ///< repeated on odd positions
  /// Leaf value at N_v-2: even ^ odd.
  Bit leaf_second_last() const { return static_cast<Bit>(even ^ odd); }
  /// Leaf value at N_v-1: odd.
  Bit leaf_last() const { return odd; }
};

// Decoders aware of pc-frozen bits. `pc` is the node's encoded pc vector; an
// all-zero pc reduces each one to its classic form below.

BitVector decode_rate0(std::span<const Bit> pc);
BitVector decode_rate1(std::span<const double> l);
RepDecision decode_rep(std::span<const double> l, std::span<const Bit> pc);
Rep2Decision decode_rep2(std::span<const double> l, std::span<const Bit> pc);
/// `pc0` is the value of the node's first leaf (the parity target).
BitVector decode_spc(std::span<const double> l, Bit pc0);
BitVector decode_spc2(std::span<const double> l, std::span<const Bit> pc);
BitVector decode_rpc(std::span<const double> l, std::span<const Bit> pc);
BitVector decode_pcr(std::span<const double> l, std::span<const Bit> pc);

/// Dispatches on `cls`; Generic throws std::invalid_argument.
BitVector decode_special(NodeClass cls, std::span<const double> l, std::span<const Bit> pc);

/// The classic decoders, which assume every frozen leaf is 0.
namespace baseline {
BitVector rate0(std::size_t size);
BitVector rate1(std::span<const double> l);
BitVector rep(std::span<const double> l);
BitVector rep2(std::span<const double> l);
BitVector spc(std::span<const double> l);
BitVector spc2(std::span<const double> l);
BitVector rpc(std::span<const double> l);
BitVector pcr(std::span<const double> l);
BitVector decode(NodeClass cls, std::span<const double> l);
}  // namespace baseline

}  // namespace polarharq
