#include "polarharq/serialize.hpp"

#include <string>

#include "polarharq/errors.hpp"

namespace polarharq {

using nlohmann::json;

void to_json(json& j, const BitType& t) {
  switch (t.kind) {
    case BitKind::Frozen: j = json{{"kind", "frozen"}}; break;
    case BitKind::Info: j = json{{"kind", "info"}}; break;
    case BitKind::PcFrozen: j = json{{"kind", "pc_frozen"}, {"partner", t.partner}}; break;
  }
}

void from_json(const json& j, BitType& t) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "frozen") {
    t = BitType::frozen();
  } else if (kind == "info") {
    t = BitType::info();
  } else if (kind == "pc_frozen") {
    t = BitType::pc_frozen(j.at("partner").get<std::size_t>());
  } else {
    throw ConfigError("unknown bit kind '" + kind + "'");
  }
}

void to_json(json& j, const CodeSpec& s) {
  j = json{{"n", s.n},
           {"k", s.k},
           {"crc_len", s.crc_len},
           {"design_snr_db", s.design_snr_db},
           {"bit_types", s.bit_types},
           {"reliability", s.reliability}};
}

void from_json(const json& j, CodeSpec& s) {
  s.n = j.at("n").get<std::size_t>();
  s.k = j.at("k").get<std::size_t>();
  s.crc_len = j.value("crc_len", std::size_t{0});
  s.design_snr_db = j.value("design_snr_db", 0.0);
  s.bit_types = j.at("bit_types").get<std::vector<BitType>>();
  s.reliability = j.value("reliability", std::vector<std::size_t>{});
}

void to_json(json& j, const ExtendedSpec& s) {
  json pairs = json::array();
  for (const SwapPair& p : s.swap_map) pairs.push_back({p.new_info, p.displaced});
  j = json{{"base", s.base}, {"extended", s.extended}, {"swap_map", pairs}};
}

void from_json(const json& j, ExtendedSpec& s) {
  s.base = j.at("base").get<CodeSpec>();
  s.extended = j.at("extended").get<CodeSpec>();
  s.swap_map.clear();
  for (const json& p : j.at("swap_map")) {
    s.swap_map.push_back({p.at(0).get<std::size_t>(), p.at(1).get<std::size_t>()});
  }
}

void to_json(json& j, const FerRecord& r) {
  j = json{{"eb_n0_db", r.eb_n0_db},
           {"frames", r.frames},
           {"frame_errors", r.frame_errors},
           {"fer", r.fer()},
           {"round1_successes", r.round1_successes},
           {"round1_success_rate", r.round1_success_rate()},
           {"seed", r.seed}};
}

json profile_to_json(const TraversalProfile& p) {
  json j = json::object();
  for (NodeClass cls : kSpecialClasses) j[std::string(column_name(cls))] = p[cls];
  j["LEAF"] = p.leaf_visits;
  j["Total"] = p.total();
  return j;
}

bool is_extended_spec(const json& j) { return j.is_object() && j.contains("extended"); }

CodeSpec parse_code_spec(const json& j) {
  try {
    CodeSpec s = j.get<CodeSpec>();
    s.validate();
    return s;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed code spec: ") + e.what());
  }
}

ExtendedSpec parse_extended_spec(const json& j) {
  try {
    ExtendedSpec s = j.get<ExtendedSpec>();
    s.validate();
    return s;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed extended spec: ") + e.what());
  }
}

}  // namespace polarharq
