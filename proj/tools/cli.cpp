#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "polarharq/construction.hpp"
#include "polarharq/crc.hpp"
#include "polarharq/encoder.hpp"
#include "polarharq/errors.hpp"
#include "polarharq/fast_decoder.hpp"
#include "polarharq/harq.hpp"
#include "polarharq/serialize.hpp"
#include "polarharq/simulator.hpp"

namespace polarq {

using nlohmann::json;
using namespace polarharq;

namespace {

constexpr const char* kVersion = POLARQ_VERSION;

/// Raised for bad user input; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string manifest_path(const std::string& output) { return output + ".manifest.json"; }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open " + path + " for writing");
  f << text;
  if (!f) throw UsageError("failed writing " + path);
}

json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open " + path);
  try {
    return json::parse(f);
  } catch (const json::parse_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

void write_manifest(const std::string& command, const std::vector<std::string>& argv,
                    const std::string& config_path, std::optional<std::uint64_t> seed,
                    const std::vector<std::string>& outputs, const json& extra) {
  json m;
  m["command"] = command;
  m["argv"] = argv;
  m["config_file"] = config_path;
  m["seed"] = seed ? json(*seed) : json(nullptr);
  m["outputs"] = outputs;
  m["tool_version"] = kVersion;
  m["timestamp"] = utc_timestamp();
  for (const auto& [k, v] : extra.items()) m[k] = v;
  write_text(manifest_path(outputs.front()), m.dump(2) + "\n");
}

std::optional<std::uint64_t> seed_from_env() {
  const char* v = std::getenv("POLAR_HARQ_SEED");
  if (v == nullptr || *v == '\0') return std::nullopt;
  std::size_t used = 0;
  std::uint64_t seed = 0;
  try {
    seed = std::stoull(v, &used, 0);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != std::string(v).size()) throw UsageError(std::string("invalid POLAR_HARQ_SEED: ") + v);
  return seed;
}

// A spec file holds either a CodeSpec or an ExtendedSpec document.
struct LoadedSpec {
  std::optional<ExtendedSpec> ext;
  CodeSpec spec;  // the plain spec, or the extended code of `ext`
};

LoadedSpec load_spec(const std::string& path) {
  const json j = read_json_file(path);
  LoadedSpec s;
  if (is_extended_spec(j)) {
    s.ext = parse_extended_spec(j);
    s.spec = s.ext->extended;
  } else {
    s.spec = parse_code_spec(j);
  }
  return s;
}

// ---- frame I/O -------------------------------------------------------------

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::vector<std::string> hex_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    line.erase(std::remove_if(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); }),
               line.end());
    if (line.empty() || line[0] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

BitVector bytes_to_bits(const std::string& bytes, std::size_t offset, std::size_t length) {
  BitVector bits(length);
  for (std::size_t i = 0; i < length; ++i) {
    const auto byte = static_cast<unsigned char>(bytes[offset + i / 8]);
    bits[i] = (byte >> (7 - i % 8)) & 1u;
  }
  return bits;
}

std::string bits_to_bytes(const BitVector& bits) {
  std::string out((bits.size() + 7) / 8, '\0');
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) out[i / 8] = static_cast<char>(out[i / 8] | (0x80 >> (i % 8)));
  }
  return out;
}

std::vector<BitVector> read_bit_frames(const std::string& text, std::size_t length, bool binary) {
  std::vector<BitVector> frames;
  if (binary) {
    const std::size_t bytes = (length + 7) / 8;
    if (text.size() % bytes != 0) {
      throw UsageError("frame-length mismatch: " + std::to_string(text.size()) +
                       " bytes is not a multiple of " + std::to_string(bytes));
    }
    for (std::size_t off = 0; off < text.size(); off += bytes) {
      frames.push_back(bytes_to_bits(text, off, length));
    }
    return frames;
  }
  for (const std::string& line : hex_lines(text)) frames.push_back(hex_to_bits(line, length));
  return frames;
}

std::vector<std::vector<double>> read_llr_frames(const std::string& text, std::size_t length) {
  std::istringstream ss(text);
  std::vector<double> values;
  std::string tok;
  while (ss >> tok) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw UsageError("invalid LLR value '" + tok + "'");
    values.push_back(v);
  }
  if (values.size() % length != 0) {
    throw UsageError("frame-length mismatch: " + std::to_string(values.size()) +
                     " LLRs is not a multiple of " + std::to_string(length));
  }
  std::vector<std::vector<double>> frames;
  for (std::size_t off = 0; off < values.size(); off += length) {
    frames.emplace_back(values.begin() + off, values.begin() + off + length);
  }
  return frames;
}

struct Io {
  std::istream* in;
  std::ostream* out;
  std::ifstream in_file;
  std::ofstream out_file;

  Io(const std::string& in_path, const std::string& out_path, std::istream& cin, std::ostream& cout)
      : in(&cin), out(&cout) {
    if (!in_path.empty() && in_path != "-") {
      in_file.open(in_path, std::ios::binary);
      if (!in_file) throw UsageError("cannot open " + in_path);
      in = &in_file;
    }
    if (!out_path.empty() && out_path != "-") {
      out_file.open(out_path, std::ios::binary);
      if (!out_file) throw UsageError("cannot open " + out_path + " for writing");
      out = &out_file;
    }
  }
};

// ---- construct -------------------------------------------------------------

struct ConstructArgs {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t crc = 24;
  double snr = kDefaultDesignSnrDb;
  bool extend = false;
  std::string out;
};

int cmd_construct(const ConstructArgs& a, const std::vector<std::string>& argv, std::ostream& out) {
  log2_exact(a.n);
  if (a.k < a.crc) throw UsageError("--k counts information leaves including the CRC and must be >= --crc");
  if (a.crc > 0) crc_for_length(a.crc);
  json doc;
  if (a.extend) {
    const ReproductionSetup setup = make_reproduction_setup(a.n, a.k, a.crc, a.snr);
    setup.harq.validate();
    doc = setup.harq;
  } else {
    doc = construct_code(a.n, a.k - a.crc, a.crc, a.snr);
  }
  const std::string text = doc.dump(2) + "\n";
  if (a.out.empty() || a.out == "-") {
    out << text;
  } else {
    write_text(a.out, text);
    write_manifest("construct", argv, "", std::nullopt, {a.out}, json::object());
  }
  return kExitOk;
}

// ---- encode / decode ---------------------------------------------------------

struct CodecArgs {
  std::string spec;
  std::string in;
  std::string out;
  bool binary = false;
  bool llr = false;
  bool profile = false;
  std::string mode = "modified";
  std::string tx = "full";
};

int cmd_encode(const CodecArgs& a, std::istream& cin, std::ostream& cout) {
  const LoadedSpec loaded = load_spec(a.spec);
  Io io(a.in, a.out, cin, cout);
  const CodeSpec& base = loaded.ext ? loaded.ext->base : loaded.spec;
  const std::size_t payload_len = base.payload_len();
  for (const BitVector& d : read_bit_frames(read_all(*io.in), payload_len, a.binary)) {
    BitVector x;
    if (!loaded.ext) {
      x = encode_payload(d, loaded.spec);
    } else if (a.tx == "1") {
      x = encode_tx1(d, loaded.ext->base);
    } else if (a.tx == "2") {
      x = encode_tx2(d, *loaded.ext);
    } else {
      x = encode_tx2(d, *loaded.ext);
      const BitVector tx1 = encode_tx1(d, loaded.ext->base);
      x.insert(x.end(), tx1.begin(), tx1.end());
    }
    if (a.binary) {
      *io.out << bits_to_bytes(x);
    } else {
      *io.out << bits_to_hex(x) << '\n';
    }
  }
  return kExitOk;
}

struct FrameVerdict {
  BitVector payload;
  std::optional<bool> crc_ok;  // empty when the code carries no CRC
};

FrameVerdict verdict_from_leaves(const BitVector& info_and_crc, std::size_t crc_len) {
  FrameVerdict v;
  if (crc_len == 0) {
    v.payload = info_and_crc;
    return v;
  }
  v.crc_ok = crc_check(info_and_crc, crc_for_length(crc_len));
  v.payload.assign(info_and_crc.begin(), info_and_crc.end() - static_cast<std::ptrdiff_t>(crc_len));
  return v;
}

int cmd_decode(const CodecArgs& a, std::istream& cin, std::ostream& cout, std::ostream& cerr) {
  const LoadedSpec loaded = load_spec(a.spec);
  const DecoderMode mode = decoder_mode_from_string(a.mode);
  Io io(a.in, a.out, cin, cout);
  const std::string text = read_all(*io.in);

  // Plain specs decode at their own length. Extended specs accept a first
  // round (base length) or an assembled second round (extended length).
  std::vector<std::vector<double>> frames;
  const std::size_t full = loaded.spec.n;
  std::size_t length = full;
  if (a.llr) {
    std::istringstream probe(text);
    std::size_t count = std::distance(std::istream_iterator<std::string>(probe),
                                      std::istream_iterator<std::string>());
    if (loaded.ext && count % full != 0) length = loaded.ext->base.n;
    frames = read_llr_frames(text, length);
  } else {
    if (loaded.ext && !a.binary) {
      const auto lines = hex_lines(text);
      if (!lines.empty() && lines.front().size() == (loaded.ext->base.n + 3) / 4) length = loaded.ext->base.n;
    } else if (loaded.ext && a.binary && text.size() % ((full + 7) / 8) != 0) {
      length = loaded.ext->base.n;
    }
    for (const BitVector& x : read_bit_frames(text, length, a.binary)) {
      std::vector<double> l(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) l[i] = x[i] ? -1.0 : 1.0;
      frames.push_back(std::move(l));
    }
  }

  const bool round1 = loaded.ext && length == loaded.ext->base.n;
  const CodeSpec& spec = round1 ? loaded.ext->base : loaded.spec;
  std::vector<std::size_t> positions = loaded.ext && !round1 ? loaded.ext->data_positions()
                                                             : spec.info_positions();
  FastScDecoder decoder(spec, mode);
  std::ostream& report = a.binary ? cerr : *io.out;
  bool all_ok = true;
  for (const auto& llrs : frames) {
    const DecodeResult r = decoder.decode(llrs);
    BitVector leaves(positions.size());
    for (std::size_t i = 0; i < positions.size(); ++i) leaves[i] = r.u_hat[positions[i]];
    const FrameVerdict v = verdict_from_leaves(leaves, spec.crc_len);
    if (v.crc_ok && !*v.crc_ok) all_ok = false;
    const char* word = !v.crc_ok ? "nocrc" : (*v.crc_ok ? "pass" : "fail");
    if (a.binary) {
      *io.out << bits_to_bytes(v.payload);
      report << word << '\n';
    } else {
      *io.out << bits_to_hex(v.payload) << ' ' << word << '\n';
    }
  }
  if (a.profile) report << profile_to_json(decoder.static_profile()).dump() << '\n';
  return all_ok ? kExitOk : kExitDecodeFailure;
}

// ---- profile -----------------------------------------------------------------

struct ProfileArgs {
  std::string spec;
  std::string mode = "both";
  std::string format = "table";
  std::string out;
  std::size_t n = 1024;
  std::size_t k = 1024;
  std::size_t crc = 24;
  double snr = kDefaultDesignSnrDb;
};

struct ProfileRow {
  std::string name;
  TraversalProfile profile;
};

std::string render_rows(const std::vector<ProfileRow>& rows, std::optional<double> reduction,
                        const std::string& format) {
  std::vector<std::string> columns;
  for (NodeClass cls : kSpecialClasses) columns.emplace_back(column_name(cls));
  columns.emplace_back("LEAF");
  columns.emplace_back("Total");
  std::ostringstream os;
  if (format == "json") {
    json doc;
    doc["rows"] = json::array();
    for (const auto& r : rows) {
      json row = profile_to_json(r.profile);
      row["config"] = r.name;
      doc["rows"].push_back(row);
    }
    doc["reduction_percent"] = reduction ? json(*reduction * 100.0) : json(nullptr);
    os << doc.dump(2) << '\n';
    return os.str();
  }
  if (format == "csv") {
    os << "config";
    for (const auto& c : columns) os << ',' << c;
    os << '\n';
    for (const auto& r : rows) {
      const json j = profile_to_json(r.profile);
      os << r.name;
      for (const auto& c : columns) os << ',' << j.at(c).get<std::uint64_t>();
      os << '\n';
    }
    return os.str();
  }
  if (format != "table") throw UsageError("unknown --format '" + format + "'");
  os << std::left << std::setw(10) << "config";
  for (const auto& c : columns) os << std::right << std::setw(7) << c;
  os << '\n';
  for (const auto& r : rows) {
    const json j = profile_to_json(r.profile);
    os << std::left << std::setw(10) << r.name;
    for (const auto& c : columns) os << std::right << std::setw(7) << j.at(c).get<std::uint64_t>();
    os << '\n';
  }
  if (reduction) {
    os << "traversal reduction: " << std::fixed << std::setprecision(1) << *reduction * 100.0 << "%\n";
  }
  return os.str();
}

int cmd_profile(const ProfileArgs& a, const std::vector<std::string>& argv, std::ostream& out) {
  std::vector<ProfileRow> rows;
  std::optional<double> reduction;
  const bool want_mod = a.mode == "both" || a.mode == "modified";
  const bool want_base = a.mode == "both" || a.mode == "baseline";
  if (!want_mod && !want_base) throw UsageError("unknown --mode '" + a.mode + "'");

  std::optional<ExtendedSpec> ext;
  std::optional<CodeSpec> single;
  std::optional<CodeSpec> plain;
  if (a.spec.empty()) {
    const ReproductionSetup setup = make_reproduction_setup(a.n, a.k, a.crc, a.snr);
    ext = setup.harq;
    single = setup.single;
  } else {
    LoadedSpec loaded = load_spec(a.spec);
    if (loaded.ext) {
      ext = loaded.ext;
      const CodeSpec& e = ext->extended;
      single = build_code_spec(e.n, e.payload_len(), e.crc_len,
                               construct_reliability(e.n, e.design_snr_db), e.design_snr_db);
    } else {
      plain = loaded.spec;
    }
  }

  if (ext) {
    std::optional<TraversalProfile> pa, pb;
    if (want_mod) rows.push_back({"A", *(pa = profile_traversals(ext->extended, DecoderMode::Modified))});
    if (want_base) rows.push_back({"B", *(pb = profile_traversals(ext->extended, DecoderMode::BaselineOnly))});
    if (want_mod) rows.push_back({"C", profile_traversals(*single, DecoderMode::Modified)});
    if (pa && pb && pb->total() > 0) reduction = 1.0 - static_cast<double>(pa->total()) / pb->total();
  } else {
    if (want_mod) rows.push_back({"modified", profile_traversals(*plain, DecoderMode::Modified)});
    if (want_base) rows.push_back({"baseline", profile_traversals(*plain, DecoderMode::BaselineOnly)});
  }

  const std::string text = render_rows(rows, reduction, a.format);
  if (a.out.empty() || a.out == "-") {
    out << text;
  } else {
    write_text(a.out, text);
    write_manifest("profile", argv, a.spec, std::nullopt, {a.out}, json::object());
  }
  return kExitOk;
}

// ---- simulate ------------------------------------------------------------------

struct SimulateArgs {
  std::string config;
  std::string out;
  unsigned workers = 0;
};

template <typename T>
T field_or(const json& j, const char* key, T fallback) {
  return j.contains(key) ? j.at(key).get<T>() : fallback;
}

std::vector<double> parse_snr_grid(const json& j) {
  if (j.is_array()) return j.get<std::vector<double>>();
  if (j.is_object()) {
    const double start = j.at("start").get<double>();
    const double stop = j.at("stop").get<double>();
    const double step = j.at("step").get<double>();
    if (!(step > 0.0) || stop < start) throw ConfigError("eb_n0_db range needs step > 0 and stop >= start");
    std::vector<double> grid;
    // Index-based so that the grid does not drift with accumulated rounding.
    for (std::size_t i = 0;; ++i) {
      const double v = start + static_cast<double>(i) * step;
      if (v > stop + 1e-9 * step) break;
      grid.push_back(v);
    }
    return grid;
  }
  throw ConfigError("eb_n0_db must be a list or {start, stop, step}");
}

int cmd_simulate(const SimulateArgs& a, const std::vector<std::string>& argv, std::ostream& out) {
  json cfg = read_json_file(a.config);
  // A manifest from an earlier run carries its resolved configuration.
  if (cfg.contains("command") && cfg.contains("config")) cfg = cfg.at("config");

  std::vector<Configuration> configurations;
  std::uint64_t seed = 1;
  std::vector<double> grid;
  StoppingRule stopping;
  std::size_t batch = 256;
  std::size_t n = 1024, k = 1024, crc = 24;
  double snr = kDefaultDesignSnrDb;
  std::string output = a.out;
  try {
    const json& c = cfg.contains("configurations") ? cfg.at("configurations") : cfg.at("configuration");
    if (c.is_string()) {
      configurations.push_back(configuration_from_string(c.get<std::string>()));
    } else {
      for (const auto& e : c) configurations.push_back(configuration_from_string(e.get<std::string>()));
    }
    if (configurations.empty()) throw ConfigError("no configuration given");
    const json& code = cfg.at("code");
    n = code.at("n").get<std::size_t>();
    k = code.at("k").get<std::size_t>();
    crc = field_or<std::size_t>(code, "crc_len", 24);
    snr = field_or<double>(code, "design_snr_db", kDefaultDesignSnrDb);
    grid = parse_snr_grid(cfg.at("eb_n0_db"));
    if (cfg.contains("stopping")) {
      stopping.max_errors = field_or<std::uint64_t>(cfg.at("stopping"), "max_errors", stopping.max_errors);
      stopping.max_frames = field_or<std::uint64_t>(cfg.at("stopping"), "max_frames", stopping.max_frames);
    }
    seed = field_or<std::uint64_t>(cfg, "seed", seed);
    batch = field_or<std::size_t>(cfg, "batch_size", batch);
    if (output.empty()) output = field_or<std::string>(cfg, "output", "fer.csv");
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed simulation config: ") + e.what());
  }
  if (const auto env = seed_from_env()) seed = *env;
  if (k < crc) throw ConfigError("code.k counts information leaves including the CRC and must be >= crc_len");
  if (stopping.max_frames == 0 || stopping.max_errors == 0 || batch == 0) {
    throw ConfigError("stopping limits and batch_size must be positive");
  }

  const unsigned workers = a.workers ? a.workers : std::max(1u, std::thread::hardware_concurrency());
  const ReproductionSetup setup = make_reproduction_setup(n, k, crc, snr);

  std::string csv = fer_csv_header() + "\n";
  json results;
  results["records"] = json::array();
  results["profiles"] = json::object();
  for (Configuration c : configurations) {
    SimConfig sc;
    sc.configuration = c;
    sc.setup = setup;
    sc.eb_n0_db = grid;
    sc.stopping = stopping;
    sc.seed = seed;
    sc.workers = workers;
    sc.batch_size = batch;
    for (const FerRecord& r : run_fer(sc)) {
      csv += fer_csv_row(c, r) + "\n";
      json j = r;
      j["config"] = std::string(to_string(c));
      results["records"].push_back(j);
    }
    const TraversalProfile p = c == Configuration::C
                                   ? profile_traversals(setup.single, DecoderMode::Modified)
                                   : profile_traversals(setup.harq.extended, c == Configuration::A
                                                                                ? DecoderMode::Modified
                                                                                : DecoderMode::BaselineOnly);
    results["profiles"][std::string(to_string(c))] = profile_to_json(p);
  }

  const std::filesystem::path csv_path(output);
  std::filesystem::path json_path = csv_path;
  json_path.replace_extension(".json");
  write_text(csv_path.string(), csv);
  write_text(json_path.string(), results.dump(2) + "\n");

  json resolved = cfg;
  resolved["seed"] = seed;
  resolved["output"] = output;
  json extra;
  extra["config"] = resolved;
  extra["workers"] = workers;
  write_manifest("simulate", argv, a.config, seed, {csv_path.string(), json_path.string()}, extra);
  out << csv;
  return kExitOk;
}

}  // namespace

// ---- hex helpers -----------------------------------------------------------------

std::string bits_to_hex(const std::vector<unsigned char>& bits) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string hex((bits.size() + 3) / 4, '0');
  for (std::size_t i = 0; i < hex.size(); ++i) {
    unsigned v = 0;
    for (std::size_t b = 0; b < 4; ++b) {
      const std::size_t idx = 4 * i + b;
      v = (v << 1) | (idx < bits.size() ? bits[idx] & 1u : 0u);
    }
    hex[i] = kDigits[v];
  }
  return hex;
}

std::vector<unsigned char> hex_to_bits(const std::string& hex, std::size_t length) {
  if (hex.size() != (length + 3) / 4) {
    throw UsageError("frame-length mismatch: expected " + std::to_string((length + 3) / 4) +
                     " hex digits for " + std::to_string(length) + " bits, got " +
                     std::to_string(hex.size()));
  }
  std::vector<unsigned char> bits(length);
  for (std::size_t i = 0; i < hex.size(); ++i) {
    const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(hex[i])));
    unsigned v;
    if (c >= '0' && c <= '9') {
      v = static_cast<unsigned>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      v = static_cast<unsigned>(c - 'a' + 10);
    } else {
      throw UsageError(std::string("invalid hex digit '") + hex[i] + "'");
    }
    for (std::size_t b = 0; b < 4; ++b) {
      const std::size_t idx = 4 * i + b;
      const unsigned bit = (v >> (3 - b)) & 1u;
      if (idx < length) {
        bits[idx] = static_cast<unsigned char>(bit);
      } else if (bit) {
        throw UsageError("non-zero padding bits in hex frame");
      }
    }
  }
  return bits;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polar codes with IR-HARQ aware fast SC decoding"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a code spec by Gaussian approximation");
  construct->add_option("--n", ca.n, "Code length (power of two)")->required();
  construct->add_option("--k", ca.k, "Information leaves including the CRC")->required();
  construct->add_option("--crc", ca.crc, "CRC length (0, 6, 11, 16 or 24)")->capture_default_str();
  construct->add_option("--snr", ca.snr, "Design Es/N0 in dB")->capture_default_str();
  construct->add_flag("--extend", ca.extend, "Also build the 2N matrix extension");
  construct->add_option("--out", ca.out, "Output file (stdout if omitted)");

  CodecArgs ea;
  auto* encode = app.add_subcommand("encode", "Encode payload frames");
  encode->add_option("--spec", ea.spec, "Spec JSON file")->required();
  encode->add_option("--in", ea.in, "Input file (stdin if omitted)");
  encode->add_option("--out", ea.out, "Output file (stdout if omitted)");
  encode->add_flag("--bin", ea.binary, "Raw packed bytes instead of hex lines");
  encode->add_option("--tx", ea.tx, "Extended specs: 1, 2 or full")
      ->check(CLI::IsMember({"1", "2", "full"}))
      ->capture_default_str();

  CodecArgs da;
  auto* decode = app.add_subcommand("decode", "Decode frames and check the CRC");
  decode->add_option("--spec", da.spec, "Spec JSON file")->required();
  decode->add_option("--in", da.in, "Input file (stdin if omitted)");
  decode->add_option("--out", da.out, "Output file (stdout if omitted)");
  decode->add_flag("--bin", da.binary, "Raw packed bytes instead of hex lines");
  decode->add_flag("--llr", da.llr, "Input is whitespace-separated LLRs");
  decode->add_flag("--profile", da.profile, "Print the traversal profile as JSON");
  decode->add_option("--mode", da.mode, "modified or baseline")
      ->check(CLI::IsMember({"modified", "baseline"}))
      ->capture_default_str();

  SimulateArgs sa;
  auto* simulate = app.add_subcommand("simulate", "Run a Monte-Carlo FER sweep");
  simulate->add_option("--config", sa.config, "Simulation config or manifest JSON")->required();
  simulate->add_option("--out", sa.out, "CSV output path (overrides the config)");
  simulate->add_option("--workers", sa.workers, "Worker threads (0 = all cores)")->capture_default_str();

  ProfileArgs pa;
  auto* profile = app.add_subcommand("profile", "Count node traversals per decoder configuration");
  profile->add_option("--spec", pa.spec, "Spec JSON file (default: build from --n/--k/--crc)");
  profile->add_option("--n", pa.n, "Base length when no spec is given")->capture_default_str();
  profile->add_option("--k", pa.k, "Information leaves including the CRC")->capture_default_str();
  profile->add_option("--crc", pa.crc, "CRC length")->capture_default_str();
  profile->add_option("--snr", pa.snr, "Design Es/N0 in dB")->capture_default_str();
  profile->add_option("--mode", pa.mode, "modified, baseline or both")
      ->check(CLI::IsMember({"modified", "baseline", "both"}))
      ->capture_default_str();
  profile->add_option("--format", pa.format, "table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  profile->add_option("--out", pa.out, "Output file (stdout if omitted)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*construct) return cmd_construct(ca, args, out);
    if (*encode) return cmd_encode(ea, in, out);
    if (*decode) return cmd_decode(da, in, out, err);
    if (*simulate) return cmd_simulate(sa, args, out);
    if (*profile) return cmd_profile(pa, args, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const polarharq::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace polarq
