#pragma once

#include <memory>
#include <span>
#include <variant>
#include <vector>

#include "polarharq/fast_decoder.hpp"
#include "polarharq/types.hpp"

namespace polarharq {

/// A new information leaf in the left half and the right-half leaf it
/// displaced, which becomes pc-frozen with the new leaf as its partner.
struct SwapPair {
  std::size_t new_info = 0;
  std::size_t displaced = 0;
  friend bool operator==(const SwapPair&, const SwapPair&) = default;
};

/// A base code of length N and its extension to 2N by matrix extension.
struct ExtendedSpec {
  CodeSpec base;
  CodeSpec extended;
  std::vector<SwapPair> swap_map;

  std::size_t base_length() const { return base.n; }
  /// Extended-code leaves that carry the frame's information bits: the base
  /// information leaves shifted into the right half.
  std::vector<std::size_t> data_positions() const;
  /// Throws SpecError if the pairing invariants do not hold.
  void validate() const;

  friend bool operator==(const ExtendedSpec&, const ExtendedSpec&) = default;
};

/// Greedy pairing: while the most reliable unused left-half channel is
/// strictly more reliable than the least reliable remaining right-half
/// information channel, the two swap roles. Throws NestingError if `base`
/// already has pc-frozen leaves and InvalidLength on a bad permutation.
ExtendedSpec extend_bit_types(const CodeSpec& base, std::span<const std::size_t> reliability_2n);

/// First transmission: payload + CRC on the base information leaves.
BitVector encode_tx1(std::span<const Bit> payload, const CodeSpec& base);

/// Second transmission: the left half of the extended codeword. The full
/// extended codeword is [encode_tx2 || encode_tx1].
BitVector encode_tx2(std::span<const Bit> payload, const ExtendedSpec& ext);

/// Extended leaf vector for `payload`, used by encode_tx2.
BitVector extended_leaf_vector(std::span<const Bit> payload, const ExtendedSpec& ext);

/// [tx2 || tx1]: the retransmission occupies the left half.
LlrBlock assemble_llrs(std::span<const double> tx1_llrs, std::span<const double> tx2_llrs);

/// Decoders for both rounds of one extended spec. Not thread-safe.
class HarqReceiver {
 public:
  HarqReceiver(ExtendedSpec ext, DecoderMode mode);

  const ExtendedSpec& spec() const { return ext_; }
  DecoderMode mode() const { return mode_; }

  /// Decodes the base code; returns the payload if the CRC passes.
  std::optional<BitVector> decode_round1(std::span<const double> tx1_llrs,
                                         TraversalProfile* profile = nullptr);
  /// Decodes the extended code from assembled LLRs.
  std::optional<BitVector> decode_round2(std::span<const double> assembled_llrs,
                                         TraversalProfile* profile = nullptr);

 private:
  ExtendedSpec ext_;
  DecoderMode mode_;
  FastScDecoder base_decoder_;
  FastScDecoder extended_decoder_;
  std::vector<std::size_t> data_positions_;
};

struct RxTx1 {
  LlrBlock llrs;
};
struct RxTx2 {
  LlrBlock llrs;
};
using HarqEvent = std::variant<RxTx1, RxTx2>;

struct Decoded {
  BitVector payload;
  int round = 0;
};
struct RequestRetx {};
struct Failed {};
using HarqOutcome = std::variant<Decoded, RequestRetx, Failed>;

/// Receiver side of one two-round IR-HARQ exchange.
class HarqSession {
 public:
  enum class State { AwaitingTx1, AwaitingTx2, Done };

  explicit HarqSession(HarqReceiver& receiver) : receiver_(&receiver) {}

  State state() const { return state_; }
  /// Outcome of each completed round, in order.
  const std::vector<HarqOutcome>& history() const { return history_; }

  /// Throws ProtocolError on an event that is illegal in the current state.
  HarqOutcome step(HarqEvent event);

 private:
  HarqReceiver* receiver_;
  State state_ = State::AwaitingTx1;
  LlrBlock tx1_llrs_;
  std::vector<HarqOutcome> history_;
};

}  // namespace polarharq
