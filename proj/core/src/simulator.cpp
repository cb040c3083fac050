#include "polarharq/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <thread>

#include "polarharq/channel.hpp"
#include "polarharq/crc.hpp"
#include "polarharq/encoder.hpp"
#include "polarharq/errors.hpp"

namespace polarharq {

std::string_view to_string(Configuration c) {
  switch (c) {
    case Configuration::A: return "A";
    case Configuration::B: return "B";
    case Configuration::C: return "C";
  }
  return "?";
}

Configuration configuration_from_string(std::string_view name) {
  if (name == "A" || name == "a") return Configuration::A;
  if (name == "B" || name == "b") return Configuration::B;
  if (name == "C" || name == "c") return Configuration::C;
  throw ConfigError("unknown configuration '" + std::string(name) + "', expected A, B or C");
}

ReproductionSetup make_reproduction_setup(std::size_t base_n, std::size_t k, std::size_t crc_len,
                                          double design_snr_db) {
  if (k < crc_len) throw CapacityError("k must include the CRC bits");
  const auto rel_2n = construct_reliability(2 * base_n, design_snr_db);
  const auto rel_n = nested_reliability(rel_2n);
  ReproductionSetup setup;
  const CodeSpec base = build_code_spec(base_n, k - crc_len, crc_len, rel_n, design_snr_db);
  setup.harq = extend_bit_types(base, rel_2n);
  setup.single = build_code_spec(2 * base_n, k - crc_len, crc_len, rel_2n, design_snr_db);
  return setup;
}

double normalization_rate(const ReproductionSetup& setup) {
  return static_cast<double>(setup.single.payload_len()) / static_cast<double>(setup.single.n);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Demodulation needs a positive variance even in the noiseless limit.
constexpr double kMinSigma2 = 1e-9;

BitVector random_bits(std::size_t count, std::mt19937_64& rng) {
  BitVector out(count);
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (i % 64 == 0) word = rng();
    out[i] = static_cast<Bit>((word >> (i % 64)) & 1u);
  }
  return out;
}

LlrBlock transmit(std::span<const Bit> codeword, double sigma2, std::mt19937_64& rng) {
  std::vector<Symbol> symbols = qpsk_modulate(codeword);
  add_noise(symbols, sigma2, rng);
  return llr_demod(symbols, std::max(sigma2, kMinSigma2));
}

}  // namespace

std::mt19937_64 frame_rng(std::uint64_t seed, std::uint64_t frame_index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(frame_index),
                    static_cast<std::uint32_t>(frame_index >> 32)};
  return std::mt19937_64(seq);
}

std::uint64_t point_seed(std::uint64_t seed, std::size_t point_index) {
  return splitmix64(seed ^ splitmix64(point_index + 1));
}

FrameSimulator::FrameSimulator(Configuration configuration, const ReproductionSetup& setup)
    : configuration_(configuration), setup_(&setup), rate_(normalization_rate(setup)) {
  if (configuration == Configuration::C) {
    single_decoder_ = std::make_unique<FastScDecoder>(setup.single, DecoderMode::Modified);
    single_info_ = setup.single.info_positions();
  } else {
    const DecoderMode mode =
        configuration == Configuration::A ? DecoderMode::Modified : DecoderMode::BaselineOnly;
    receiver_ = std::make_unique<HarqReceiver>(setup.harq, mode);
  }
}

FrameOutcome FrameSimulator::run(double eb_n0_db, std::uint64_t seed, std::uint64_t frame_index) {
  std::mt19937_64 rng = frame_rng(seed, frame_index);
  const double sigma2 = noise_variance(eb_n0_db, rate_);
  FrameOutcome outcome;

  if (configuration_ == Configuration::C) {
    const CodeSpec& spec = setup_->single;
    const BitVector payload = random_bits(spec.payload_len(), rng);
    const LlrBlock llrs = transmit(encode_payload(payload, spec), sigma2, rng);
    const DecodeResult r = single_decoder_->decode(llrs);
    BitVector info(single_info_.size());
    for (std::size_t i = 0; i < info.size(); ++i) info[i] = r.u_hat[single_info_[i]];
    bool ok = spec.crc_len == 0 || crc_check(info, crc_for_length(spec.crc_len));
    info.resize(spec.payload_len());
    outcome.error = !(ok && info == payload);
    return outcome;
  }

  const ExtendedSpec& ext = setup_->harq;
  const BitVector payload = random_bits(ext.base.payload_len(), rng);
  LlrBlock tx1 = transmit(encode_tx1(payload, ext.base), sigma2, rng);
  LlrBlock tx2 = transmit(encode_tx2(payload, ext), sigma2, rng);

  HarqSession session(*receiver_);
  HarqOutcome result = session.step(RxTx1{std::move(tx1)});
  if (std::holds_alternative<RequestRetx>(result)) result = session.step(RxTx2{std::move(tx2)});
  if (const auto* decoded = std::get_if<Decoded>(&result)) {
    const bool correct = decoded->payload == payload;
    outcome.error = !correct;
    outcome.round1_success = correct && decoded->round == 1;
  } else {
    outcome.error = true;
  }
  return outcome;
}

std::vector<FerRecord> run_fer(const SimConfig& config) {
  if (config.stopping.max_errors == 0 || config.stopping.max_frames == 0) {
    throw ConfigError("stopping rule targets must be positive");
  }
  if (config.batch_size == 0) throw ConfigError("batch size must be positive");
  const unsigned workers = std::max(1u, config.workers);

  std::vector<std::unique_ptr<FrameSimulator>> sims;
  for (unsigned w = 0; w < workers; ++w) {
    sims.push_back(std::make_unique<FrameSimulator>(config.configuration, config.setup));
  }

  std::vector<FerRecord> records;
  std::vector<FrameOutcome> batch(config.batch_size);
  for (std::size_t p = 0; p < config.eb_n0_db.size(); ++p) {
    const double snr = config.eb_n0_db[p];
    const std::uint64_t seed = point_seed(config.seed, p);
    FerRecord rec;
    rec.eb_n0_db = snr;
    rec.seed = config.seed;
    std::uint64_t next_frame = 0;
    bool done = false;
    while (!done) {
      const std::uint64_t count =
          std::min<std::uint64_t>(config.batch_size, config.stopping.max_frames - next_frame);
      auto work = [&](unsigned w) {
        for (std::uint64_t i = w; i < count; i += workers) {
          batch[i] = sims[w]->run(snr, seed, next_frame + i);
        }
      };
      if (workers == 1) {
        work(0);
      } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
      }
      for (std::uint64_t i = 0; i < count; ++i) {
        ++rec.frames;
        rec.frame_errors += batch[i].error ? 1 : 0;
        rec.round1_successes += batch[i].round1_success ? 1 : 0;
        if (rec.frame_errors >= config.stopping.max_errors) {
          done = true;
          break;
        }
      }
      next_frame += count;
      if (next_frame >= config.stopping.max_frames) done = true;
    }
    records.push_back(rec);
  }
  return records;
}

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double centre = (p + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  const double lo = successes == 0 ? 0.0 : std::max(0.0, centre - half);
  const double hi = successes == trials ? 1.0 : std::min(1.0, centre + half);
  return {lo, hi};
}

std::string fer_csv_header() { return "config,eb_n0_db,frames,errors,fer,round1_success_rate,seed"; }

std::string fer_csv_row(Configuration c, const FerRecord& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s,%.4f,%llu,%llu,%.6e,%.6e,%llu", std::string(to_string(c)).c_str(),
                r.eb_n0_db, static_cast<unsigned long long>(r.frames),
                static_cast<unsigned long long>(r.frame_errors), r.fer(), r.round1_success_rate(),
                static_cast<unsigned long long>(r.seed));
  return buf;
}

}  // namespace polarharq
