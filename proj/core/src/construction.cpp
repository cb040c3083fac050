#include "polarharq/construction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "polarharq/errors.hpp"

namespace polarharq {
namespace ga {

// Piecewise approximation of phi(m) = 1 - E[tanh(L/2)], L ~ N(m, 2m), evaluated
// in the log domain so that large means do not underflow. The quadratic
// segment keeps phi below 1 near zero, where Chung's fit exceeds it.
double log_phi(double mean) {
  if (mean <= 0.0) return 0.0;
  if (mean < 0.867861) return 0.0564 * mean * mean - 0.4856 * mean;
  if (mean < 10.0) return -0.4527 * std::pow(mean, 0.86) + 0.0218;
  return 0.5 * std::log(std::numbers::pi / mean) - mean / 4.0 + std::log1p(-10.0 / (7.0 * mean));
}

namespace {

constexpr double kQuadA = 0.0564;
constexpr double kQuadB = 0.4856;
constexpr double kQuadLimit = 0.867861;
// Below this mean the check-node output is b * m^2 to relative order m.
constexpr double kTinyMean = 1e-8;

double inverse_log_phi(double target) {
  if (target > log_phi(kQuadLimit)) {
    // Root of a m^2 - b m = target in the quadratic segment, cancellation free.
    return -2.0 * target / (kQuadB + std::sqrt(kQuadB * kQuadB + 4.0 * kQuadA * target));
  }
  double lo = kQuadLimit;
  double hi = 2.0 * kQuadLimit;
  while (log_phi(hi) > target) hi *= 2.0;
  for (int it = 0; it < 200 && hi - lo > 1e-13 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (log_phi(mid) > target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double check_node_log_mean(double log_mean) {
  const double mean = std::exp(log_mean);
  if (mean < kTinyMean) return 2.0 * log_mean + std::log(kQuadB);
  // phi_out = 1 - (1 - phi)^2, evaluated on whichever side keeps precision.
  const double lp = log_phi(mean);
  const double phi = std::exp(lp);
  double target;
  if (phi < 0.5) {
    target = lp + std::log1p(1.0 - phi);
  } else {
    const double q = -std::expm1(lp);
    target = std::log1p(-q * q);
  }
  return std::log(inverse_log_phi(target));
}

double check_node_mean(double mean) {
  if (mean <= 0.0) return 0.0;
  return std::exp(check_node_log_mean(std::log(mean)));
}

}  // namespace ga

std::vector<double> bit_channel_log_means(std::size_t n, double design_snr_db) {
  const std::size_t m = log2_exact(n);
  if (!std::isfinite(design_snr_db)) throw ConfigError("design SNR must be finite");
  std::vector<double> lms{std::log(4.0) + design_snr_db / 10.0 * std::log(10.0)};
  for (std::size_t s = 0; s < m; ++s) {
    std::vector<double> next(lms.size() * 2);
    for (std::size_t p = 0; p < lms.size(); ++p) {
      next[2 * p] = ga::check_node_log_mean(lms[p]);
      next[2 * p + 1] = lms[p] + std::numbers::ln2;
    }
    lms = std::move(next);
  }
  return lms;
}

std::vector<double> bit_channel_means(std::size_t n, double design_snr_db) {
  std::vector<double> means = bit_channel_log_means(n, design_snr_db);
  for (double& v : means) v = std::exp(v);
  return means;
}

std::vector<std::size_t> construct_reliability(std::size_t n, double design_snr_db) {
  const std::vector<double> lms = bit_channel_log_means(n, design_snr_db);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return lms[a] < lms[b]; });
  return order;
}

CodeSpec build_code_spec(std::size_t n, std::size_t k, std::size_t crc_len,
                         std::span<const std::size_t> reliability, double design_snr_db) {
  log2_exact(n);
  if (k + crc_len > n) {
    throw CapacityError("k + crc_len = " + std::to_string(k + crc_len) +
                        " exceeds the code length " + std::to_string(n));
  }
  if (reliability.size() != n) throw InvalidLength("reliability must have one entry per leaf");
  CodeSpec spec;
  spec.n = n;
  spec.k = k + crc_len;
  spec.crc_len = crc_len;
  spec.design_snr_db = design_snr_db;
  spec.bit_types.assign(n, BitType::frozen());
  spec.reliability.assign(reliability.begin(), reliability.end());
  for (std::size_t r = n - spec.k; r < n; ++r) {
    spec.bit_types.at(reliability[r]) = BitType::info();
  }
  spec.validate();
  return spec;
}

CodeSpec construct_code(std::size_t n, std::size_t k, std::size_t crc_len, double design_snr_db) {
  const auto rel = construct_reliability(n, design_snr_db);
  return build_code_spec(n, k, crc_len, rel, design_snr_db);
}

std::vector<std::size_t> nested_reliability(std::span<const std::size_t> reliability_2n) {
  const std::size_t two_n = reliability_2n.size();
  log2_exact(two_n);
  if (two_n < 2) throw InvalidLength("nested reliability needs length >= 2");
  const std::size_t half = two_n / 2;
  std::vector<std::size_t> out;
  out.reserve(half);
  for (std::size_t idx : reliability_2n) {
    if (idx >= half) out.push_back(idx - half);
  }
  return out;
}

}  // namespace polarharq
