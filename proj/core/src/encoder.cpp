#include "polarharq/encoder.hpp"

#include <string>

#include "polarharq/crc.hpp"
#include "polarharq/errors.hpp"

namespace polarharq {

void polar_transform_inplace(std::span<Bit> bits) {
  const std::size_t n = bits.size();
  log2_exact(n);
  // Butterfly form of x = [enc(u_l ^ u_r), enc(u_r)].
  for (std::size_t half = 1; half < n; half <<= 1) {
    for (std::size_t base = 0; base < n; base += 2 * half) {
      for (std::size_t i = base; i < base + half; ++i) bits[i] ^= bits[i + half];
    }
  }
}

BitVector polar_encode(std::span<const Bit> u) {
  BitVector x(u.begin(), u.end());
  polar_transform_inplace(x);
  return x;
}

BitVector place_on_info_leaves(std::span<const Bit> info_bits, const CodeSpec& spec) {
  if (info_bits.size() != spec.k) {
    throw InvalidLength("expected " + std::to_string(spec.k) + " information bits, got " +
                        std::to_string(info_bits.size()));
  }
  BitVector u(spec.n, 0);
  std::size_t next = 0;
  for (std::size_t i = 0; i < spec.n; ++i) {
    if (spec.bit_types[i].is_info()) u[i] = info_bits[next++];
  }
  return u;
}

BitVector extract_info_leaves(std::span<const Bit> u, const CodeSpec& spec) {
  if (u.size() != spec.n) throw InvalidLength("leaf vector length does not match the spec");
  BitVector out;
  out.reserve(spec.k);
  for (std::size_t i = 0; i < spec.n; ++i) {
    if (spec.bit_types[i].is_info()) out.push_back(u[i]);
  }
  return out;
}

BitVector build_leaf_vector(std::span<const Bit> payload, const CodeSpec& spec) {
  if (payload.size() != spec.payload_len()) {
    throw InvalidLength("expected a " + std::to_string(spec.payload_len()) +
                        "-bit payload, got " + std::to_string(payload.size()));
  }
  if (spec.crc_len == 0) return place_on_info_leaves(payload, spec);
  return place_on_info_leaves(crc_attach(payload, crc_for_length(spec.crc_len)), spec);
}

BitVector encode_payload(std::span<const Bit> payload, const CodeSpec& spec) {
  BitVector u = build_leaf_vector(payload, spec);
  polar_transform_inplace(u);
  return u;
}

}  // namespace polarharq
