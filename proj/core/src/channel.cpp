#include "polarharq/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "polarharq/errors.hpp"

namespace polarharq {

std::vector<Symbol> qpsk_modulate(std::span<const Bit> bits) {
  if (bits.size() % 2 != 0) throw InvalidLength("QPSK needs an even number of bits");
  const double a = 1.0 / std::sqrt(2.0);
  std::vector<Symbol> out(bits.size() / 2);
  for (std::size_t s = 0; s < out.size(); ++s) {
    out[s] = {bits[2 * s] ? -a : a, bits[2 * s + 1] ? -a : a};
  }
  return out;
}

double noise_variance(double eb_n0_db, double rate) {
  if (!(rate > 0.0 && rate <= 1.0)) throw std::invalid_argument("code rate must lie in (0, 1]");
  if (std::isinf(eb_n0_db) && eb_n0_db > 0) return 0.0;
  // Two code bits per unit-energy symbol.
  return 1.0 / (2.0 * rate * 2.0 * std::pow(10.0, eb_n0_db / 10.0));
}

void add_noise(std::span<Symbol> symbols, double sigma2, std::mt19937_64& rng) {
  if (sigma2 <= 0.0) return;
  std::normal_distribution<double> noise(0.0, std::sqrt(sigma2));
  for (Symbol& s : symbols) {
    const double re = noise(rng);
    const double im = noise(rng);
    s += Symbol(re, im);
  }
}

std::vector<Symbol> awgn(std::span<const Symbol> symbols, double eb_n0_db, double rate,
                         std::mt19937_64& rng) {
  std::vector<Symbol> out(symbols.begin(), symbols.end());
  add_noise(out, noise_variance(eb_n0_db, rate), rng);
  return out;
}

LlrBlock llr_demod(std::span<const Symbol> symbols, double sigma2) {
  if (!(sigma2 > 0.0)) throw std::invalid_argument("noise variance must be positive");
  LlrBlock out(symbols.size() * 2);
  const double scale = 2.0 / sigma2;
  for (std::size_t s = 0; s < symbols.size(); ++s) {
    out[2 * s] = scale * symbols[s].real();
    out[2 * s + 1] = scale * symbols[s].imag();
  }
  return out;
}

}  // namespace polarharq
