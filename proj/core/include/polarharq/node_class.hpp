#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

namespace polarharq {

enum class NodeClass : std::uint8_t { Rate0, Rate1, Rep, Rep2, Spc, Spc2, Pcr, Rpc, Generic };

inline constexpr std::size_t kSpecialClassCount = 8;

/// Special classes in the column order used by traversal reports.
inline constexpr std::array<NodeClass, kSpecialClassCount> kSpecialClasses = {
    NodeClass::Rate0, NodeClass::Rate1, NodeClass::Rep, NodeClass::Rep2,
    NodeClass::Spc,   NodeClass::Spc2,  NodeClass::Pcr, NodeClass::Rpc};

/// Column label: R0, R1, REP, REP2, SPC, SPC2, PCR, RPC (LEAF for Generic).
std::string_view column_name(NodeClass cls);
std::string_view to_string(NodeClass cls);

/// Terminal-node counts of one decode: every special-node invocation counts
/// once under its class and every stage-0 node not handled by a special
/// decoder counts as a leaf visit. Intermediate nodes the decoder merely
/// passes through are tallied separately and excluded from total().
struct TraversalProfile {
  std::array<std::uint64_t, kSpecialClassCount> per_class{};
  std::uint64_t leaf_visits = 0;
  std::uint64_t internal_visits = 0;

  std::uint64_t& operator[](NodeClass cls);
  std::uint64_t operator[](NodeClass cls) const;

  void record(NodeClass cls, std::size_t size);

  std::uint64_t total() const;

  /// Same terminal counts; internal_visits is ignored.
  bool same_counts(const TraversalProfile& other) const {
    return per_class == other.per_class && leaf_visits == other.leaf_visits;
  }

  friend bool operator==(const TraversalProfile&, const TraversalProfile&) = default;
};

}  // namespace polarharq
