#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "polarharq/node_class.hpp"
#include "polarharq/sc_decoder.hpp"
#include "polarharq/types.hpp"

namespace polarharq {

enum class DecoderMode {
  /// Special nodes may contain pc-frozen leaves (partner decoded earlier).
  Modified,
  /// Any subtree holding a pc-frozen leaf is traversed further instead.
  BaselineOnly,
};

std::string_view to_string(DecoderMode mode);
DecoderMode decoder_mode_from_string(std::string_view name);

/// One terminal node of the decoding tree.
struct NodeDescriptor {
  std::size_t stage = 0;
  std::size_t offset = 0;
  NodeClass cls = NodeClass::Generic;
  std::size_t size = 1;
  bool has_pc = false;  ///< contains a pc-frozen leaf

  friend bool operator==(const NodeDescriptor&, const NodeDescriptor&) = default;
};

/// Node classes a decoder is allowed to shortcut.
struct NodeSet {
  std::array<bool, kSpecialClassCount> enabled{true, true, true, true, true, true, true, true};

  static NodeSet all() { return {}; }
  /// R0, R1, REP, REP2, SPC, SPC2: the classes whose shortcut is bit-exact
  /// with min-sum SC.
  static NodeSet sc_exact();
  bool allows(NodeClass cls) const;
};

/// Top-down segmentation of the tree into terminal nodes, in decoding order.
/// Data-independent: classification depends only on the bit types.
std::vector<NodeDescriptor> plan_decoding(const CodeSpec& spec, DecoderMode mode,
                                          const NodeSet& nodes = NodeSet::all());

/// Reusable fast SC decoder. Instances own scratch buffers and are not
/// thread-safe; use one per worker.
class FastScDecoder {
 public:
  FastScDecoder(CodeSpec spec, DecoderMode mode, NodeSet nodes = NodeSet::all());

  const CodeSpec& spec() const { return spec_; }
  DecoderMode mode() const { return mode_; }
  std::span<const NodeDescriptor> plan() const { return plan_; }
  const TraversalProfile& static_profile() const { return profile_; }

  DecodeResult decode(std::span<const double> llrs);

 private:
  void decode_node(std::size_t stage, std::size_t offset);
  void decode_terminal(const NodeDescriptor& node);

  CodeSpec spec_;
  DecoderMode mode_;
  std::vector<NodeDescriptor> plan_;
  TraversalProfile profile_;

  // alpha_[s] holds the LLRs of the active node at stage s.
  std::vector<std::vector<double>> alpha_;
  BitVector beta_;
  BitVector u_hat_;
  BitVector pc_scratch_;
  std::size_t cursor_ = 0;
};

DecodeResult fast_sc_decode(std::span<const double> llrs, const CodeSpec& spec, DecoderMode mode);

/// Traversal counts of a decode without running one.
TraversalProfile profile_traversals(const CodeSpec& spec, DecoderMode mode,
                                    const NodeSet& nodes = NodeSet::all());

}  // namespace polarharq
