#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "polarharq/construction.hpp"
#include "polarharq/harq.hpp"
#include "polarharq/types.hpp"

namespace polarharq {

enum class Configuration {
  A,  ///< IR-HARQ, special nodes aware of pc-frozen bits
  B,  ///< IR-HARQ, unmodified special nodes only
  C,  ///< single transmission of the full-length code
};

std::string_view to_string(Configuration c);
Configuration configuration_from_string(std::string_view name);

/// The code family shared by all three configurations.
struct ReproductionSetup {
  ExtendedSpec harq;   ///< base N and its 2N extension (A and B)
  CodeSpec single;     ///< 2N code sent in one shot (C)
};

/// Builds the 2N reliability order, derives the base code from its right
/// half and extends it. `k` counts information leaves including the CRC.
ReproductionSetup make_reproduction_setup(std::size_t base_n, std::size_t k, std::size_t crc_len,
                                          double design_snr_db = kDefaultDesignSnrDb);

struct StoppingRule {
  std::uint64_t max_errors = 100;
  std::uint64_t max_frames = 100000;
};

struct SimConfig {
  Configuration configuration = Configuration::A;
  ReproductionSetup setup;
  std::vector<double> eb_n0_db;
  StoppingRule stopping;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  /// Frames evaluated between stopping checks. Part of the result contract:
  /// it never changes which frames are counted, only how work is scheduled.
  std::size_t batch_size = 256;
};

struct FerRecord {
  double eb_n0_db = 0.0;
  std::uint64_t frames = 0;
  std::uint64_t frame_errors = 0;
  std::uint64_t round1_successes = 0;
  std::uint64_t seed = 0;

  double fer() const { return frames ? static_cast<double>(frame_errors) / frames : 0.0; }
  double round1_success_rate() const {
    return frames ? static_cast<double>(round1_successes) / frames : 0.0;
  }
  friend bool operator==(const FerRecord&, const FerRecord&) = default;
};

/// Code rate the channel noise is normalised to: payload bits over all code
/// bits a frame may occupy (2N for every configuration).
double normalization_rate(const ReproductionSetup& setup);

/// Outcome of one simulated frame.
struct FrameOutcome {
  bool error = false;
  bool round1_success = false;
};

/// Reusable per-worker frame simulator.
class FrameSimulator {
 public:
  FrameSimulator(Configuration configuration, const ReproductionSetup& setup);
  FrameOutcome run(double eb_n0_db, std::uint64_t seed, std::uint64_t frame_index);

 private:
  Configuration configuration_;
  const ReproductionSetup* setup_;
  std::unique_ptr<HarqReceiver> receiver_;
  std::unique_ptr<FastScDecoder> single_decoder_;
  std::vector<std::size_t> single_info_;
  double rate_;
};

/// RNG for one frame, derived from (seed, frame index) only.
std::mt19937_64 frame_rng(std::uint64_t seed, std::uint64_t frame_index);

/// Seed of one SNR point, derived from the run seed and the point index.
std::uint64_t point_seed(std::uint64_t seed, std::size_t point_index);

/// Monte-Carlo FER per SNR point. Results depend only on the config and its
/// seed, never on the worker count.
std::vector<FerRecord> run_fer(const SimConfig& config);

/// Wilson score interval for a binomial proportion.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double v) const { return v >= lo && v <= hi; }
};
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = 1.959963984540054);

/// CSV header: config,eb_n0_db,frames,errors,fer,round1_success_rate,seed
std::string fer_csv_header();
std::string fer_csv_row(Configuration c, const FerRecord& r);

}  // namespace polarharq
