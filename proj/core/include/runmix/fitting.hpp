#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "runmix/game_log.hpp"
#include "runmix/weibull.hpp"

namespace runmix {

// Location is pinned to the bin scheme: integer scores sit at bin centers.
inline constexpr double kRunLocation = -0.5;

struct FitConfig {
  int num_bins = 13;
  int multistart_count = 16;
  int max_iterations = 2000;
  double convergence_tol = 1e-8;  // objective-spread stopping rule
  std::uint64_t seed = 1;
};

struct FitResult {
  MixtureParams params;
  double objective = 0.0;
  bool converged = false;
  int starts_tried = 0;
  int best_start_index = -1;
};

// Thrown when no start converges; carries the best point found anyway.
struct FitFailure : std::runtime_error {
  FitFailure(const std::string& what, FitResult incumbent)
      : std::runtime_error(what), best_incumbent(std::move(incumbent)) {}
  FitResult best_incumbent;
};

// Sum over bins of (observed - #games * bin area)^2, runs scored plus runs
// allowed. Histograms must share the bin scheme and game count, and the
// model's location must sit at the first bin's lower edge.
double ls_objective(const BinnedHistogram& rs_hist,
                    const BinnedHistogram& ra_hist, const MixtureParams& m);

// Seven free parameters (four scales, shared shape, two weights) over a
// log/logit-transformed space, multistarted Nelder-Mead, deterministic for a
// given cfg.seed. Components are canonicalized with alpha1 >= alpha2.
FitResult fit_mixture(const BinnedHistogram& rs_hist,
                      const BinnedHistogram& ra_hist, const FitConfig& cfg);

// Same objective with both weights fixed to 1 (three free parameters).
FitResult fit_single_weibull(const BinnedHistogram& rs_hist,
                             const BinnedHistogram& ra_hist,
                             const FitConfig& cfg);

// fit_mixture with a precomputed single-Weibull incumbent, so callers that
// already ran the baseline fit don't pay for it twice. The incumbent seeds
// one start, which also guarantees the mixture objective never exceeds it.
FitResult fit_mixture_seeded(const BinnedHistogram& rs_hist,
                             const BinnedHistogram& ra_hist,
                             const FitConfig& cfg,
                             const FitResult& single_incumbent);

}  // namespace runmix
