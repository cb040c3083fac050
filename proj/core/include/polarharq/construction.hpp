#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "polarharq/types.hpp"

namespace polarharq {

inline constexpr double kDefaultDesignSnrDb = 2.0;

/// Bit-channel reliability order by Gaussian-approximation density evolution.
///
/// The design SNR is the per-code-bit Es/N0 of a BPSK/AWGN channel; the
/// channel LLR mean is 4 * 10^(snr/10). Index bits are read MSB first: a 0
/// takes the check-node (f) branch and a 1 the variable-node (g) branch.
/// Returns the permutation least reliable first, ties broken by index.
std::vector<std::size_t> construct_reliability(std::size_t n, double design_snr_db);

/// Mean LLR of every bit-channel under the same approximation.
std::vector<double> bit_channel_means(std::size_t n, double design_snr_db);

/// Natural logarithm of bit_channel_means, free of underflow.
std::vector<double> bit_channel_log_means(std::size_t n, double design_snr_db);

/// Gaussian-approximation helpers, exposed for testing.
namespace ga {
double log_phi(double mean);
double check_node_mean(double mean);
double check_node_log_mean(double log_mean);
}  // namespace ga

/// Picks the k + crc_len most reliable leaves as information bits.
CodeSpec build_code_spec(std::size_t n, std::size_t k, std::size_t crc_len,
                         std::span<const std::size_t> reliability,
                         double design_snr_db = kDefaultDesignSnrDb);

/// construct_reliability followed by build_code_spec.
CodeSpec construct_code(std::size_t n, std::size_t k, std::size_t crc_len,
                        double design_snr_db = kDefaultDesignSnrDb);

/// Order of the right half of a length-2N reliability sequence, re-indexed to
/// [0, N). A base code built from it nests inside the 2N construction.
std::vector<std::size_t> nested_reliability(std::span<const std::size_t> reliability_2n);

}  // namespace polarharq
