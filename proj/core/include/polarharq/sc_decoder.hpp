#pragma once

#include <cmath>
#include <span>

#include "polarharq/node_class.hpp"
#include "polarharq/types.hpp"

namespace polarharq {

/// Min-sum check-node update: sign(a) sign(b) min(|a|, |b|).
inline double f_minsum(double a, double b) {
  const double mag = std::min(std::fabs(a), std::fabs(b));
  return ((a < 0.0) != (b < 0.0)) ? -mag : mag;
}

/// Variable-node update given the partial sum of the left child.
inline double g_update(double a, double b, Bit beta) { return beta ? b - a : b + a; }

struct DecodeResult {
  BitVector u_hat;  ///< leaf decisions
  BitVector x_hat;  ///< codeword estimate, polar_encode(u_hat)
  TraversalProfile traversal;
};

/// Leaf-level successive-cancellation decoding with min-sum f and exact g.
///
/// Frozen leaves decide 0, information leaves decide by hard decision and
/// pc-frozen leaves copy the decision already made for their partner. Every
/// stage-0 node is a leaf visit and every node above it an internal visit.
/// Throws InvalidLength on a size mismatch and SpecError when a pc-frozen
/// leaf is reached before its partner.
DecodeResult sc_decode(std::span<const double> llrs, const CodeSpec& spec);

}  // namespace polarharq
