#include "polarharq/fast_decoder.hpp"

#include <algorithm>
#include <string>

#include "polarharq/encoder.hpp"
#include "polarharq/errors.hpp"
#include "polarharq/nodes.hpp"

namespace polarharq {

std::string_view to_string(DecoderMode mode) {
  return mode == DecoderMode::Modified ? "modified" : "baseline";
}

DecoderMode decoder_mode_from_string(std::string_view name) {
  if (name == "modified") return DecoderMode::Modified;
  if (name == "baseline") return DecoderMode::BaselineOnly;
  throw ConfigError("unknown decoder mode '" + std::string(name) + "'");
}

NodeSet NodeSet::sc_exact() {
  NodeSet s;
  s.enabled[static_cast<std::size_t>(NodeClass::Pcr)] = false;
  s.enabled[static_cast<std::size_t>(NodeClass::Rpc)] = false;
  return s;
}

bool NodeSet::allows(NodeClass cls) const {
  return cls != NodeClass::Generic && enabled[static_cast<std::size_t>(cls)];
}

namespace {

struct Planner {
  const CodeSpec& spec;
  DecoderMode mode;
  const NodeSet& nodes;
  std::vector<NodeDescriptor> out;
  std::size_t internal = 0;

  void visit(std::size_t stage, std::size_t offset) {
    const std::size_t size = std::size_t{1} << stage;
    const auto types = std::span(spec.bit_types).subspan(offset, size);
    bool has_pc = false;
    bool pc_resolved = true;
    for (const BitType& t : types) {
      if (t.kind != BitKind::PcFrozen) continue;
      has_pc = true;
      if (t.partner >= offset) pc_resolved = false;
    }
    bool eligible = mode == DecoderMode::Modified ? pc_resolved : !has_pc;
    NodeClass cls = eligible ? classify(types) : NodeClass::Generic;
    if (!nodes.allows(cls)) cls = NodeClass::Generic;
    if (cls != NodeClass::Generic || size == 1) {
      out.push_back({stage, offset, cls, size, has_pc});
      return;
    }
    ++internal;
    visit(stage - 1, offset);
    visit(stage - 1, offset + size / 2);
  }
};

}  // namespace

std::vector<NodeDescriptor> plan_decoding(const CodeSpec& spec, DecoderMode mode,
                                          const NodeSet& nodes) {
  spec.validate();
  Planner p{spec, mode, nodes, {}, 0};
  p.visit(spec.stages(), 0);
  return std::move(p.out);
}

TraversalProfile profile_traversals(const CodeSpec& spec, DecoderMode mode, const NodeSet& nodes) {
  spec.validate();
  Planner p{spec, mode, nodes, {}, 0};
  p.visit(spec.stages(), 0);
  TraversalProfile profile;
  for (const NodeDescriptor& d : p.out) profile.record(d.cls, d.size);
  profile.internal_visits = p.internal;
  return profile;
}

FastScDecoder::FastScDecoder(CodeSpec spec, DecoderMode mode, NodeSet nodes)
    : spec_(std::move(spec)), mode_(mode) {
  plan_ = plan_decoding(spec_, mode_, nodes);
  profile_ = profile_traversals(spec_, mode_, nodes);
  const std::size_t m = spec_.stages();
  alpha_.resize(m + 1);
  for (std::size_t s = 0; s <= m; ++s) alpha_[s].resize(std::size_t{1} << s);
  beta_.assign(spec_.n, 0);
  u_hat_.assign(spec_.n, 0);
  pc_scratch_.assign(spec_.n, 0);
}

DecodeResult FastScDecoder::decode(std::span<const double> llrs) {
  if (llrs.size() != spec_.n) {
    throw InvalidLength("LLR block has " + std::to_string(llrs.size()) + " values, spec has n=" +
                        std::to_string(spec_.n));
  }
  const std::size_t m = spec_.stages();
  std::copy(llrs.begin(), llrs.end(), alpha_[m].begin());
  cursor_ = 0;
  decode_node(m, 0);
  DecodeResult r;
  r.u_hat = u_hat_;
  r.x_hat = beta_;
  r.traversal = profile_;
  return r;
}

void FastScDecoder::decode_node(std::size_t stage, std::size_t offset) {
  const std::size_t size = std::size_t{1} << stage;
  const NodeDescriptor& next = plan_[cursor_];
  if (next.offset == offset && next.size == size) {
    ++cursor_;
    decode_terminal(next);
    return;
  }
  const std::size_t half = size / 2;
  const std::vector<double>& alpha = alpha_[stage];
  std::vector<double>& child = alpha_[stage - 1];
  for (std::size_t i = 0; i < half; ++i) child[i] = f_minsum(alpha[i], alpha[i + half]);
  decode_node(stage - 1, offset);
  for (std::size_t i = 0; i < half; ++i) {
    child[i] = g_update(alpha[i], alpha[i + half], beta_[offset + i]);
  }
  decode_node(stage - 1, offset + half);
  for (std::size_t i = 0; i < half; ++i) beta_[offset + i] ^= beta_[offset + half + i];
}

void FastScDecoder::decode_terminal(const NodeDescriptor& node) {
  const std::span<const double> l(alpha_[node.stage].data(), node.size);
  const auto types = std::span(spec_.bit_types).subspan(node.offset, node.size);

  if (node.cls == NodeClass::Generic) {
    // Stage-0 leaf.
    const BitType& t = types[0];
    Bit bit = 0;
    if (t.kind == BitKind::Info) {
      bit = hard_decision(l[0]);
    } else if (t.kind == BitKind::PcFrozen) {
      bit = u_hat_[t.partner];
    }
    u_hat_[node.offset] = bit;
    beta_[node.offset] = bit;
    return;
  }

  BitVector codeword;
  if (mode_ == DecoderMode::Modified) {
    const std::span<Bit> pc(pc_scratch_.data(), node.size);
    std::fill(pc.begin(), pc.end(), Bit{0});
    if (node.has_pc) {
      for (std::size_t j = 0; j < node.size; ++j) {
        if (types[j].kind == BitKind::PcFrozen) pc[j] = u_hat_[types[j].partner];
      }
      polar_transform_inplace(pc);
    }
    codeword = decode_special(node.cls, l, pc);
  } else {
    codeword = baseline::decode(node.cls, l);
  }
  std::copy(codeword.begin(), codeword.end(), beta_.begin() + node.offset);
  polar_transform_inplace(codeword);
  std::copy(codeword.begin(), codeword.end(), u_hat_.begin() + node.offset);
}

DecodeResult fast_sc_decode(std::span<const double> llrs, const CodeSpec& spec, DecoderMode mode) {
  FastScDecoder dec(spec, mode);
  return dec.decode(llrs);
}

}  // namespace polarharq
