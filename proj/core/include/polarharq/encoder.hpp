#pragma once

#include <span>

#include "polarharq/types.hpp"

namespace polarharq {

/// x = u * F^{(x)m} over GF(2) with F = [[1,0],[1,1]], natural bit order.
/// The transform is its own inverse. Throws InvalidLength if |u| is not a
/// power of two.
BitVector polar_encode(std::span<const Bit> u);

/// In-place variant; `bits.size()` must be a power of two.
void polar_transform_inplace(std::span<Bit> bits);

/// Scatters `info_bits` (length spec.k) onto the information leaves in
/// ascending index order; every other leaf is 0.
BitVector place_on_info_leaves(std::span<const Bit> info_bits, const CodeSpec& spec);

/// Reads the information leaves of `u` back out, ascending index order.
BitVector extract_info_leaves(std::span<const Bit> u, const CodeSpec& spec);

}  // namespace polarharq

namespace polarharq {

/// Attaches the spec's CRC to `payload`, places it on the information leaves
/// and returns the leaf vector u (not yet encoded).
BitVector build_leaf_vector(std::span<const Bit> payload, const CodeSpec& spec);

/// build_leaf_vector followed by polar_encode.
BitVector encode_payload(std::span<const Bit> payload, const CodeSpec& spec);

}  // namespace polarharq
