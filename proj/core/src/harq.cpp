#include "polarharq/harq.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "polarharq/crc.hpp"
#include "polarharq/encoder.hpp"
#include "polarharq/errors.hpp"

namespace polarharq {

std::vector<std::size_t> ExtendedSpec::data_positions() const {
  std::vector<std::size_t> pos = base.info_positions();
  for (std::size_t& p : pos) p += base.n;
  return pos;
}

void ExtendedSpec::validate() const {
  base.validate();
  extended.validate();
  const std::size_t n = base.n;
  if (extended.n != 2 * n) throw SpecError("extended code must have twice the base length");
  if (extended.k != base.k || extended.crc_len != base.crc_len) {
    throw SpecError("extended code must carry the same information bits as the base code");
  }
  if (swap_map.size() != extended.count(BitKind::PcFrozen)) {
    throw SpecError("swap map size differs from the number of pc-frozen leaves");
  }
  for (const SwapPair& p : swap_map) {
    if (!(p.new_info < n && n <= p.displaced && p.displaced < 2 * n)) {
      throw SpecError("swap pair (" + std::to_string(p.new_info) + ", " +
                      std::to_string(p.displaced) + ") does not cross the halves");
    }
    const BitType& t = extended.bit_types[p.displaced];
    if (t.kind != BitKind::PcFrozen || t.partner != p.new_info) {
      throw SpecError("swap pair does not match the extended bit types");
    }
    if (!base.bit_types[p.displaced - n].is_info()) {
      throw SpecError("displaced leaf was not an information leaf of the base code");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const BitType& right = extended.bit_types[n + i];
    const bool base_info = base.bit_types[i].is_info();
    const bool now_data = right.is_info() || right.kind == BitKind::PcFrozen;
    if (base_info != now_data) {
      throw SpecError("right half of the extended code does not reproduce the base code");
    }
  }
}

ExtendedSpec extend_bit_types(const CodeSpec& base, std::span<const std::size_t> reliability_2n) {
  base.validate();
  if (base.count(BitKind::PcFrozen) != 0) {
    throw NestingError("base code already carries pc-frozen leaves; only one extension is supported");
  }
  const std::size_t n = base.n;
  if (reliability_2n.size() != 2 * n) {
    throw InvalidLength("extension reliability must have " + std::to_string(2 * n) + " entries");
  }
  std::vector<std::size_t> rank(2 * n, 2 * n);
  for (std::size_t r = 0; r < reliability_2n.size(); ++r) {
    const std::size_t idx = reliability_2n[r];
    if (idx >= 2 * n || rank[idx] != 2 * n) {
      throw InvalidLength("extension reliability is not a permutation of [0, 2N)");
    }
    rank[idx] = r;
  }

  std::vector<std::size_t> fresh(n);
  std::iota(fresh.begin(), fresh.end(), std::size_t{0});
  std::sort(fresh.begin(), fresh.end(), [&](std::size_t a, std::size_t b) { return rank[a] > rank[b]; });

  std::vector<std::size_t> active = base.info_positions();
  for (std::size_t& p : active) p += n;
  std::sort(active.begin(), active.end(), [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; });

  ExtendedSpec ext;
  ext.base = base;
  CodeSpec& e = ext.extended;
  e.n = 2 * n;
  e.k = base.k;
  e.crc_len = base.crc_len;
  e.design_snr_db = base.design_snr_db;
  e.reliability.assign(reliability_2n.begin(), reliability_2n.end());
  e.bit_types.assign(2 * n, BitType::frozen());
  std::copy(base.bit_types.begin(), base.bit_types.end(), e.bit_types.begin() + n);

  for (std::size_t i = 0; i < std::min(fresh.size(), active.size()); ++i) {
    if (rank[fresh[i]] <= rank[active[i]]) break;
    ext.swap_map.push_back({fresh[i], active[i]});
    e.bit_types[fresh[i]] = BitType::info();
    e.bit_types[active[i]] = BitType::pc_frozen(fresh[i]);
  }
  ext.validate();
  return ext;
}

BitVector encode_tx1(std::span<const Bit> payload, const CodeSpec& base) {
  return encode_payload(payload, base);
}

BitVector extended_leaf_vector(std::span<const Bit> payload, const ExtendedSpec& ext) {
  const std::size_t n = ext.base.n;
  const BitVector right = build_leaf_vector(payload, ext.base);
  BitVector u(2 * n, 0);
  std::copy(right.begin(), right.end(), u.begin() + n);
  for (const SwapPair& p : ext.swap_map) u[p.new_info] = u[p.displaced];
  return u;
}

BitVector encode_tx2(std::span<const Bit> payload, const ExtendedSpec& ext) {
  const std::size_t n = ext.base.n;
  const BitVector u = extended_leaf_vector(payload, ext);
  BitVector left(u.begin(), u.begin() + n);
  for (std::size_t i = 0; i < n; ++i) left[i] ^= u[n + i];
  polar_transform_inplace(left);
  return left;
}

LlrBlock assemble_llrs(std::span<const double> tx1_llrs, std::span<const double> tx2_llrs) {
  if (tx1_llrs.size() != tx2_llrs.size() || tx1_llrs.empty()) {
    throw InvalidLength("both transmissions must carry the same non-zero number of LLRs");
  }
  LlrBlock out;
  out.reserve(2 * tx1_llrs.size());
  out.insert(out.end(), tx2_llrs.begin(), tx2_llrs.end());
  out.insert(out.end(), tx1_llrs.begin(), tx1_llrs.end());
  return out;
}

namespace {

std::optional<BitVector> payload_if_crc_passes(BitVector info_bits, std::size_t crc_len) {
  if (crc_len == 0) return info_bits;
  if (!crc_check(info_bits, crc_for_length(crc_len))) return std::nullopt;
  info_bits.resize(info_bits.size() - crc_len);
  return info_bits;
}

// A block without a single non-zero LLR is an erasure.
bool is_erasure(std::span<const double> llrs) {
  return std::all_of(llrs.begin(), llrs.end(), [](double v) { return v == 0.0; });
}

}  // namespace

HarqReceiver::HarqReceiver(ExtendedSpec ext, DecoderMode mode)
    : ext_(std::move(ext)),
      mode_(mode),
      base_decoder_(ext_.base, mode),
      extended_decoder_(ext_.extended, mode),
      data_positions_(ext_.data_positions()) {}

std::optional<BitVector> HarqReceiver::decode_round1(std::span<const double> tx1_llrs,
                                                     TraversalProfile* profile) {
  DecodeResult r = base_decoder_.decode(tx1_llrs);
  if (profile) *profile = r.traversal;
  if (is_erasure(tx1_llrs)) return std::nullopt;
  return payload_if_crc_passes(extract_info_leaves(r.u_hat, ext_.base), ext_.base.crc_len);
}

std::optional<BitVector> HarqReceiver::decode_round2(std::span<const double> assembled_llrs,
                                                     TraversalProfile* profile) {
  DecodeResult r = extended_decoder_.decode(assembled_llrs);
  if (profile) *profile = r.traversal;
  if (is_erasure(assembled_llrs)) return std::nullopt;
  BitVector info(data_positions_.size());
  for (std::size_t i = 0; i < info.size(); ++i) info[i] = r.u_hat[data_positions_[i]];
  return payload_if_crc_passes(std::move(info), ext_.base.crc_len);
}

HarqOutcome HarqSession::step(HarqEvent event) {
  HarqOutcome outcome;
  if (auto* tx1 = std::get_if<RxTx1>(&event)) {
    if (state_ != State::AwaitingTx1) throw ProtocolError("first transmission already received");
    if (auto payload = receiver_->decode_round1(tx1->llrs)) {
      outcome = Decoded{std::move(*payload), 1};
      state_ = State::Done;
    } else {
      outcome = RequestRetx{};
      tx1_llrs_ = std::move(tx1->llrs);
      state_ = State::AwaitingTx2;
    }
  } else {
    auto& tx2 = std::get<RxTx2>(event);
    if (state_ != State::AwaitingTx2) {
      throw ProtocolError(state_ == State::AwaitingTx1
                              ? "retransmission received before the first transmission"
                              : "session already finished");
    }
    const LlrBlock assembled = assemble_llrs(tx1_llrs_, tx2.llrs);
    if (auto payload = receiver_->decode_round2(assembled)) {
      outcome = Decoded{std::move(*payload), 2};
    } else {
      outcome = Failed{};
    }
    state_ = State::Done;
  }
  history_.push_back(outcome);
  return outcome;
}

}  // namespace polarharq
