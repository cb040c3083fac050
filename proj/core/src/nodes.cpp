#include "polarharq/nodes.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "polarharq/encoder.hpp"
#include "polarharq/errors.hpp"

namespace polarharq {
namespace {

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw InvalidLength(std::string(what) + ": LLR block of " + std::to_string(a) +
                        " values with a pc vector of " + std::to_string(b));
  }
}

void require_groups_of_four(std::size_t size, const char* what) {
  if (size == 0 || size % 4 != 0) {
    throw InvalidLength(std::string(what) + " needs a node size divisible by 4, got " +
                        std::to_string(size));
  }
}

void require_even(std::size_t size, const char* what) {
  if (size < 2 || size % 2 != 0) {
    throw InvalidLength(std::string(what) + " needs an even node size, got " + std::to_string(size));
  }
}

// Index of the smallest |l_j| over j = first, first + stride, ...; the lowest
// index wins ties.
std::size_t least_reliable(std::span<const double> l, std::size_t first, std::size_t stride) {
  std::size_t best = first;
  double best_mag = std::numeric_limits<double>::infinity();
  for (std::size_t j = first; j < l.size(); j += stride) {
    const double mag = std::fabs(l[j]);
    if (mag < best_mag) {
      best_mag = mag;
      best = j;
    }
  }
  return best;
}

// Wagner decoding of the interleave {first, first + stride, ...} of `out`,
// which already holds the hard decisions.
void wagner_on_interleave(std::span<const double> l, std::size_t first, std::size_t stride,
                          Bit parity_target, BitVector& out) {
  Bit parity = parity_target;
  for (std::size_t j = first; j < l.size(); j += stride) parity ^= out[j];
  if (parity != 0) out[least_reliable(l, first, stride)] ^= 1;
}

BitVector hard_decisions(std::span<const double> l) {
  BitVector out(l.size());
  for (std::size_t j = 0; j < l.size(); ++j) out[j] = hard_decision(l[j]);
  return out;
}

}  // namespace

NodeClass classify(std::span<const BitType> types) {
  const std::size_t size = types.size();
  std::size_t info = 0;
  for (const BitType& t : types) info += t.is_info() ? 1 : 0;
  if (info == 0) return NodeClass::Rate0;
  if (info == size) return NodeClass::Rate1;

  // Number of leading fixed leaves and trailing information leaves.
  std::size_t lead_fixed = 0;
  while (lead_fixed < size && types[lead_fixed].is_fixed()) ++lead_fixed;
  std::size_t trail_info = 0;
  while (trail_info < size && types[size - 1 - trail_info].is_info()) ++trail_info;
  // A contiguous pattern has every information leaf at the tail.
  const bool fixed_then_info = (lead_fixed + trail_info == size);
  if (!fixed_then_info) return NodeClass::Generic;

  if (size >= kMinRepSpcSize) {
    if (info == 1) return NodeClass::Rep;
    if (info == size - 1) return NodeClass::Spc;
  }
  if (size >= kMinGroupNodeSize) {
    if (info == 2) return NodeClass::Rep2;
    if (info == size - 2) return NodeClass::Spc2;
    if (info == size - 3) return NodeClass::Rpc;
    if (info == 3) return NodeClass::Pcr;
  }
  return NodeClass::Generic;
}

BitVector compute_node_pc(std::span<const Bit> leaf_values) { return polar_encode(leaf_values); }

BitVector decode_rate0(std::span<const Bit> pc) { return BitVector(pc.begin(), pc.end()); }

BitVector decode_rate1(std::span<const double> l) { return hard_decisions(l); }

RepDecision decode_rep(std::span<const double> l, std::span<const Bit> pc) {
  require_same_size(l.size(), pc.size(), "REP");
  // PM^1 - PM^0 = sum l_j (1 - 2 pc_j)
  double metric_gap = 0.0;
  for (std::size_t j = 0; j < l.size(); ++j) metric_gap += pc[j] ? -l[j] : l[j];
  RepDecision out;
  out.info = hard_decision(metric_gap);
  out.codeword.resize(l.size());
  for (std::size_t j = 0; j < l.size(); ++j) out.codeword[j] = out.info ^ pc[j];
  return out;
}

Rep2Decision decode_rep2(std::span<const double> l, std::span<const Bit> pc) {
  require_same_size(l.size(), pc.size(), "REP-2");
  require_even(l.size(), "REP-2");
  double even_sum = 0.0;
  double odd_sum = 0.0;
  for (std::size_t j = 0; j < l.size(); j += 2) {
    even_sum += pc[j] ? -l[j] : l[j];
    odd_sum += pc[j + 1] ? -l[j + 1] : l[j + 1];
  }
  Rep2Decision out;
  out.even = hard_decision(even_sum);
  out.odd = hard_decision(odd_sum);
  out.codeword.resize(l.size());
  for (std::size_t j = 0; j < l.size(); j += 2) {
    out.codeword[j] = out.even ^ pc[j];
    out.codeword[j + 1] = out.odd ^ pc[j + 1];
  }
  return out;
}

BitVector decode_spc(std::span<const double> l, Bit pc0) {
  BitVector out = hard_decisions(l);
  wagner_on_interleave(l, 0, 1, pc0, out);
  return out;
}

BitVector decode_spc2(std::span<const double> l, std::span<const Bit> pc) {
  require_same_size(l.size(), pc.size(), "SPC-2");
  require_even(l.size(), "SPC-2");
  Bit even_target = 0;
  Bit odd_target = 0;
  for (std::size_t j = 0; j < pc.size(); j += 2) {
    even_target ^= pc[j];
    odd_target ^= pc[j + 1];
  }
  BitVector out = hard_decisions(l);
  wagner_on_interleave(l, 0, 2, even_target, out);
  wagner_on_interleave(l, 1, 2, odd_target, out);
  return out;
}

BitVector decode_rpc(std::span<const double> l, std::span<const Bit> pc) {
  require_same_size(l.size(), pc.size(), "RPC");
  require_groups_of_four(l.size(), "RPC");
  const std::size_t size = l.size();

  // Group parities start from the pc seeds {pc_0, pc_1, pc_2, 0}.
  std::array<Bit, 4> parity{};
  for (std::size_t j = 0; j < size; ++j) {
    if (j % 4 != 3) parity[j % 4] ^= pc[j];
  }
  std::array<double, 4> weakest;
  weakest.fill(std::numeric_limits<double>::infinity());
  std::array<std::size_t, 4> weakest_at{};
  double cost_all_zero = 0.0;  // Delta_0
  double cost_all_one = 0.0;   // Delta_1
  BitVector out = hard_decisions(l);
  for (std::size_t z = 0; z < 4; ++z) {
    for (std::size_t j = z; j < size; j += 4) {
      parity[z] ^= out[j];
      const double mag = std::fabs(l[j]);
      if (mag < weakest[z]) {
        weakest_at[z] = j;
        weakest[z] = mag;
      }
    }
    if (parity[z]) {
      cost_all_zero += weakest[z];
    } else {
      cost_all_one += weakest[z];
    }
  }
  for (std::size_t z = 0; z < 4; ++z) {
    if ((cost_all_zero > cost_all_one && !parity[z]) ||
        (cost_all_zero < cost_all_one && parity[z])) {
      out[weakest_at[z]] ^= 1;
    }
  }
  return out;
}

BitVector decode_pcr(std::span<const double> l, std::span<const Bit> pc) {
  require_same_size(l.size(), pc.size(), "PCR");
  require_groups_of_four(l.size(), "PCR");
  std::array<double, 4> group_sum{};
  for (std::size_t j = 0; j < l.size(); ++j) {
    group_sum[j % 4] += pc[j] ? -l[j] : l[j];
  }
  const BitVector group_bits = decode_spc(group_sum, 0);
  BitVector out(l.size());
  for (std::size_t j = 0; j < l.size(); ++j) out[j] = group_bits[j % 4] ^ pc[j];
  return out;
}

BitVector decode_special(NodeClass cls, std::span<const double> l, std::span<const Bit> pc) {
  switch (cls) {
    case NodeClass::Rate0: return decode_rate0(pc);
    case NodeClass::Rate1: return decode_rate1(l);
    case NodeClass::Rep: return decode_rep(l, pc).codeword;
    case NodeClass::Rep2: return decode_rep2(l, pc).codeword;
    case NodeClass::Spc: {
      require_same_size(l.size(), pc.size(), "SPC");
      Bit pc0 = 0;
      for (Bit b : pc) pc0 ^= b;
      return decode_spc(l, pc0);
    }
    case NodeClass::Spc2: return decode_spc2(l, pc);
    case NodeClass::Rpc: return decode_rpc(l, pc);
    case NodeClass::Pcr: return decode_pcr(l, pc);
    case NodeClass::Generic: break;
  }
  throw std::invalid_argument("generic nodes have no special decoder");
}

namespace baseline {

BitVector rate0(std::size_t size) { return BitVector(size, 0); }

BitVector rate1(std::span<const double> l) { return hard_decisions(l); }

BitVector rep(std::span<const double> l) {
  double sum = 0.0;
  for (double v : l) sum += v;
  return BitVector(l.size(), hard_decision(sum));
}

BitVector rep2(std::span<const double> l) {
  require_even(l.size(), "REP-2");
  double even = 0.0;
  double odd = 0.0;
  for (std::size_t j = 0; j < l.size(); j += 2) {
    even += l[j];
    odd += l[j + 1];
  }
  BitVector out(l.size());
  for (std::size_t j = 0; j < l.size(); j += 2) {
    out[j] = hard_decision(even);
    out[j + 1] = hard_decision(odd);
  }
  return out;
}

BitVector spc(std::span<const double> l) {
  BitVector out = hard_decisions(l);
  wagner_on_interleave(l, 0, 1, 0, out);
  return out;
}

BitVector spc2(std::span<const double> l) {
  require_even(l.size(), "SPC-2");
  BitVector out = hard_decisions(l);
  wagner_on_interleave(l, 0, 2, 0, out);
  wagner_on_interleave(l, 1, 2, 0, out);
  return out;
}

BitVector rpc(std::span<const double> l) {
  require_groups_of_four(l.size(), "RPC");
  std::array<Bit, 4> parity{};
  std::array<double, 4> weakest;
  weakest.fill(std::numeric_limits<double>::infinity());
  std::array<std::size_t, 4> weakest_at{};
  double cost_all_zero = 0.0;
  double cost_all_one = 0.0;
  BitVector out = hard_decisions(l);
  for (std::size_t z = 0; z < 4; ++z) {
    for (std::size_t j = z; j < l.size(); j += 4) {
      parity[z] ^= out[j];
      if (std::fabs(l[j]) < weakest[z]) {
        weakest_at[z] = j;
        weakest[z] = std::fabs(l[j]);
      }
    }
    (parity[z] ? cost_all_zero : cost_all_one) += weakest[z];
  }
  for (std::size_t z = 0; z < 4; ++z) {
    const bool to_zero = cost_all_zero < cost_all_one;
    const bool to_one = cost_all_zero > cost_all_one;
    if ((to_one && !parity[z]) || (to_zero && parity[z])) out[weakest_at[z]] ^= 1;
  }
  return out;
}

BitVector pcr(std::span<const double> l) {
  require_groups_of_four(l.size(), "PCR");
  std::array<double, 4> group_sum{};
  for (std::size_t j = 0; j < l.size(); ++j) group_sum[j % 4] += l[j];
  const BitVector group_bits = spc(group_sum);
  BitVector out(l.size());
  for (std::size_t j = 0; j < l.size(); ++j) out[j] = group_bits[j % 4];
  return out;
}

BitVector decode(NodeClass cls, std::span<const double> l) {
  switch (cls) {
    case NodeClass::Rate0: return rate0(l.size());
    case NodeClass::Rate1: return rate1(l);
    case NodeClass::Rep: return rep(l);
    case NodeClass::Rep2: return rep2(l);
    case NodeClass::Spc: return spc(l);
    case NodeClass::Spc2: return spc2(l);
    case NodeClass::Rpc: return rpc(l);
    case NodeClass::Pcr: return pcr(l);
    case NodeClass::Generic: break;
  }
  throw std::invalid_argument("generic nodes have no special decoder");
}

}  // namespace baseline
}  // namespace polarharq
