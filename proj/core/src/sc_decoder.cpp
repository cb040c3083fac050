#include "polarharq/sc_decoder.hpp"

#include <string>

#include "polarharq/encoder.hpp"
#include "polarharq/errors.hpp"

namespace polarharq {
namespace {

class LeafScDecoder {
 public:
  explicit LeafScDecoder(const CodeSpec& spec)
      : spec_(spec), u_hat_(spec.n, 0), decided_(spec.n, false), beta_(spec.n, 0) {}

  void run(std::span<const double> llrs) { descend(llrs, 0); }

  DecodeResult result() && {
    DecodeResult r;
    r.x_hat = std::move(beta_);
    r.u_hat = std::move(u_hat_);
    r.traversal = profile_;
    return r;
  }

 private:
  // Writes the node's partial sums into beta_[offset, offset + size).
  void descend(std::span<const double> alpha, std::size_t offset) {
    const std::size_t size = alpha.size();
    if (size == 1) {
      beta_[offset] = decide_leaf(alpha[0], offset);
      profile_.record(NodeClass::Generic, 1);
      return;
    }
    profile_.record(NodeClass::Generic, size);
    const std::size_t half = size / 2;
    std::vector<double> child(half);
    for (std::size_t i = 0; i < half; ++i) child[i] = f_minsum(alpha[i], alpha[i + half]);
    descend(child, offset);
    for (std::size_t i = 0; i < half; ++i) {
      child[i] = g_update(alpha[i], alpha[i + half], beta_[offset + i]);
    }
    descend(child, offset + half);
    for (std::size_t i = 0; i < half; ++i) beta_[offset + i] ^= beta_[offset + half + i];
  }

  Bit decide_leaf(double llr, std::size_t index) {
    const BitType& t = spec_.bit_types[index];
    Bit bit = 0;
    switch (t.kind) {
      case BitKind::Frozen: bit = 0; break;
      case BitKind::Info: bit = hard_decision(llr); break;
      case BitKind::PcFrozen:
        if (t.partner >= spec_.n || !decided_[t.partner]) {
          throw SpecError("pc-frozen leaf " + std::to_string(index) +
                          " reached before its partner " + std::to_string(t.partner));
        }
        bit = u_hat_[t.partner];
        break;
    }
    u_hat_[index] = bit;
    decided_[index] = true;
    return bit;
  }

  const CodeSpec& spec_;
  BitVector u_hat_;
  std::vector<bool> decided_;
  BitVector beta_;
  TraversalProfile profile_;
};

}  // namespace

DecodeResult sc_decode(std::span<const double> llrs, const CodeSpec& spec) {
  if (llrs.size() != spec.n || spec.bit_types.size() != spec.n) {
    throw InvalidLength("LLR block has " + std::to_string(llrs.size()) + " values, spec has n=" +
                        std::to_string(spec.n));
  }
  log2_exact(spec.n);
  LeafScDecoder dec(spec);
  dec.run(llrs);
  return std::move(dec).result();
}

}  // namespace polarharq
