#pragma once

#include <cstdint>

#include "runmix/weibull.hpp"

namespace runmix {

struct SimConfig {
  long num_samples = 1'000'000;  // paired draws; must be >= 10'000
  std::uint64_t seed = 1;
};

struct SimEstimate {
  double p_win = 0.0;
  double standard_error = 0.0;  // sqrt(p(1-p)/n)
  double sample_mean_rs = 0.0;
  double sample_mean_ra = 0.0;
};

// Inverse-transform draw: beta + alpha * (-ln(1-u))^(1/gamma), u in (0, 1).
double sample_weibull(const WeibullParams& p, double u);

// Empirical P(scored > allowed) from cfg.num_samples paired draws.
//
// Sampling is split into fixed-size chunks of 65536 pairs; chunk c uses an
// engine seeded with splitmix64(seed ^ (c + 1)). The merged estimate
// therefore depends only on (seed, num_samples), no matter how chunks are
// distributed across workers. Exact float ties X == Y (measure zero under
// the continuous model, vanishingly rare in floating point) count as
// non-wins.
SimEstimate estimate_win_pct(const MixtureParams& m, const SimConfig& cfg);

}  // namespace runmix
