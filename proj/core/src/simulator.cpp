#include "runmix/simulator.hpp"

#include <cmath>
#include <stdexcept>

#include "runmix/rng.hpp"

namespace runmix {
namespace {

constexpr long kChunkSize = 65536;

double draw_from_side(const MixtureSide& side, std::mt19937_64& rng) {
  const double pick = uniform_open(rng);
  const double u = uniform_open(rng);
  const double alpha = pick < side.weight1 ? side.alpha1 : side.alpha2;
  return side.beta + alpha * std::pow(-std::log1p(-u), 1.0 / side.gamma);
}

}  // namespace

double sample_weibull(const WeibullParams& p, double u) {
  p.validate();
  if (!(u > 0.0) || !(u < 1.0))
    throw std::domain_error("sample_weibull: u must lie in (0, 1)");
  return p.beta + p.alpha * std::pow(-std::log1p(-u), 1.0 / p.gamma);
}

SimEstimate estimate_win_pct(const MixtureParams& m, const SimConfig& cfg) {
  m.validate();
  if (cfg.num_samples < 10'000)
    throw std::invalid_argument("estimate_win_pct: num_samples must be >= 10000");

  long wins = 0;
  double sum_rs = 0.0;
  double sum_ra = 0.0;
  long remaining = cfg.num_samples;
  for (std::uint64_t chunk = 0; remaining > 0; ++chunk) {
    const long n = remaining < kChunkSize ? remaining : kChunkSize;
    std::mt19937_64 rng(splitmix64(cfg.seed ^ (chunk + 1)));
    for (long i = 0; i < n; ++i) {
      const double x = draw_from_side(m.scored, rng);
      const double y = draw_from_side(m.allowed, rng);
      if (x > y) ++wins;
      sum_rs += x;
      sum_ra += y;
    }
    remaining -= n;
  }

  SimEstimate est;
  const double n = static_cast<double>(cfg.num_samples);
  est.p_win = static_cast<double>(wins) / n;
  est.standard_error = std::sqrt(est.p_win * (1.0 - est.p_win) / n);
  est.sample_mean_rs = sum_rs / n;
  est.sample_mean_ra = sum_ra / n;
  return est;
}

}  // namespace runmix
