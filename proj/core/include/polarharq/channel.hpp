#pragma once

#include <complex>
#include <random>
#include <span>
#include <vector>

#include "polarharq/types.hpp"

namespace polarharq {

using Symbol = std::complex<double>;

/// Gray-mapped unit-energy QPSK: (b_I, b_Q) -> ((1-2b_I) + i(1-2b_Q)) / sqrt(2).
/// Throws InvalidLength on an odd bit count.
std::vector<Symbol> qpsk_modulate(std::span<const Bit> bits);

/// Per-dimension noise variance for unit-energy QPSK at the given Eb/N0 and
/// code rate (information bits per channel bit). Zero at +infinity.
double noise_variance(double eb_n0_db, double rate);

/// Adds complex Gaussian noise; `rate` must lie in (0, 1].
std::vector<Symbol> awgn(std::span<const Symbol> symbols, double eb_n0_db, double rate,
                         std::mt19937_64& rng);

/// Adds noise of the given per-dimension variance.
void add_noise(std::span<Symbol> symbols, double sigma2, std::mt19937_64& rng);

/// LLR = 2 y / sigma2 per I/Q component. Throws std::invalid_argument if
/// sigma2 <= 0.
LlrBlock llr_demod(std::span<const Symbol> symbols, double sigma2);

}  // namespace polarharq
