#pragma once

#include <nlohmann/json.hpp>

#include "polarharq/harq.hpp"
#include "polarharq/node_class.hpp"
#include "polarharq/simulator.hpp"
#include "polarharq/types.hpp"

namespace polarharq {

// CodeSpec document:
//   {"n", "k", "crc_len", "design_snr_db",
//    "bit_types": [{"kind": "frozen"|"info"|"pc_frozen", "partner"?: int}],
//    "reliability": [int]}
// An ExtendedSpec document carries "base", "extended" (both CodeSpec) and
// "swap_map": [[new_info, displaced], ...].

void to_json(nlohmann::json& j, const BitType& t);
void from_json(const nlohmann::json& j, BitType& t);
void to_json(nlohmann::json& j, const CodeSpec& s);
void from_json(const nlohmann::json& j, CodeSpec& s);
void to_json(nlohmann::json& j, const ExtendedSpec& s);
void from_json(const nlohmann::json& j, ExtendedSpec& s);
void to_json(nlohmann::json& j, const FerRecord& r);

/// Profile row: {"R0": .., ..., "RPC": .., "LEAF": .., "Total": ..}.
nlohmann::json profile_to_json(const TraversalProfile& p);

/// Parses either document kind; throws ConfigError on malformed input.
CodeSpec parse_code_spec(const nlohmann::json& j);
ExtendedSpec parse_extended_spec(const nlohmann::json& j);
bool is_extended_spec(const nlohmann::json& j);

}  // namespace polarharq
