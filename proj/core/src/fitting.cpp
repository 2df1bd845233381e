#include "runmix/fitting.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "runmix/rng.hpp"
#include "runmix/simplex.hpp"
#include "runmix/special_functions.hpp"

namespace runmix {
namespace {

// Transformed-space bounds: log for scales and shape, logit for weights.
constexpr double kLogAlphaMin = -6.907755278982137;  // ln 1e-3
constexpr double kLogAlphaMax = 6.907755278982137;   // ln 1e3
constexpr double kLogGammaMin = -2.995732273553991;  // ln 0.05
constexpr double kLogGammaMax = 2.995732273553991;   // ln 20
constexpr double kLogitMax = 16.0;

double logistic(double z) { return 1.0 / (1.0 + std::exp(-z)); }

double logit(double p) {
  p = std::clamp(p, 1e-7, 1.0 - 1e-7);
  return std::log(p / (1.0 - p));
}

void check_histograms(const BinnedHistogram& rs, const BinnedHistogram& ra) {
  if (!rs.same_scheme(ra))
    throw std::invalid_argument("histograms must share the same bin scheme");
  if (std::fabs(rs.total() - ra.total()) > 1e-6 * std::max(1.0, rs.total()))
    throw std::invalid_argument(
        "runs-scored and runs-allowed histograms must count the same games");
}

double side_objective(const BinnedHistogram& hist, const MixtureSide& side,
                      double games) {
  const auto areas = bin_areas(side, hist.num_bins());
  double acc = 0.0;
  for (int k = 0; k < hist.num_bins(); ++k) {
    const double r = hist.count(k) - games * areas[k];
    acc += r * r;
  }
  return acc;
}

// z layout, mixture: [ln aRS1, ln aRS2, ln aRA1, ln aRA2, ln gamma,
//                     logit c1, logit c1'].
MixtureParams params_from_z(std::span<const double> z) {
  MixtureParams m;
  m.scored.alpha1 = std::exp(z[0]);
  m.scored.alpha2 = std::exp(z[1]);
  m.allowed.alpha1 = std::exp(z[2]);
  m.allowed.alpha2 = std::exp(z[3]);
  m.scored.gamma = m.allowed.gamma = std::exp(z[4]);
  m.scored.weight1 = logistic(z[5]);
  m.allowed.weight1 = logistic(z[6]);
  m.scored.beta = m.allowed.beta = kRunLocation;
  return m;
}

std::array<double, 7> z_from_params(const MixtureParams& m) {
  return {std::log(m.scored.alpha1),  std::log(m.scored.alpha2),
          std::log(m.allowed.alpha1), std::log(m.allowed.alpha2),
          std::log(m.scored.gamma),   logit(m.scored.weight1),
          logit(m.allowed.weight1)};
}

// z layout, single: [ln aRS, ln aRA, ln gamma].
MixtureParams params_from_z3(std::span<const double> z) {
  MixtureParams m;
  m.scored.alpha1 = m.scored.alpha2 = std::exp(z[0]);
  m.allowed.alpha1 = m.allowed.alpha2 = std::exp(z[1]);
  m.scored.gamma = m.allowed.gamma = std::exp(z[2]);
  m.scored.weight1 = m.allowed.weight1 = 1.0;
  m.scored.beta = m.allowed.beta = kRunLocation;
  return m;
}

void canonicalize_side(MixtureSide& side) {
  if (side.alpha1 < side.alpha2) {
    std::swap(side.alpha1, side.alpha2);
    side.weight1 = 1.0 - side.weight1;
  }
}

// Single-Weibull scale whose mean matches the bin-center sample mean at the
// trial shape (the first-moment identity inverted at the sample mean).
double moment_seed_alpha(double sample_mean, double gamma) {
  const double g1 = gamma_fn(1.0 + 1.0 / gamma);
  const double alpha = (sample_mean - kRunLocation) / g1;
  return std::clamp(alpha, 2e-3, 5e2);
}

struct MultistartOutcome {
  SimplexResult best;
  int best_index = -1;
  int starts = 0;
  bool any_converged = false;
};

MultistartOutcome run_multistart(
    const std::function<double(std::span<const double>)>& objective,
    const std::vector<std::vector<double>>& starts,
    std::span<const double> lo, std::span<const double> hi,
    const FitConfig& cfg) {
  SimplexOptions opts;
  opts.max_iterations = cfg.max_iterations;
  opts.tolerance = cfg.convergence_tol;

  MultistartOutcome out;
  out.starts = static_cast<int>(starts.size());
  for (size_t s = 0; s < starts.size(); ++s) {
    SimplexResult r = minimize_simplex(objective, starts[s], lo, hi, opts);
    out.any_converged = out.any_converged || r.converged;
    if (out.best_index < 0 || r.fx < out.best.fx) {
      out.best = std::move(r);
      out.best_index = static_cast<int>(s);
    }
  }
  // Polish: restart once from the incumbent; a fresh simplex escapes
  // degenerate collapse and can only improve the best vertex.
  SimplexResult polished =
      minimize_simplex(objective, out.best.x, lo, hi, opts);
  if (polished.fx < out.best.fx) {
    polished.converged = polished.converged || out.best.converged;
    out.best = std::move(polished);
  }
  out.any_converged = out.any_converged || out.best.converged;
  return out;
}

void check_fit_inputs(const BinnedHistogram& rs, const BinnedHistogram& ra,
                      const FitConfig& cfg) {
  check_histograms(rs, ra);
  if (rs.num_bins() != cfg.num_bins)
    throw std::invalid_argument("fit: histogram bin count disagrees with config");
  if (rs.total() < 20.0)
    throw std::invalid_argument(
        "fit: degenerate season, need at least 20 games");
  if (cfg.multistart_count < 1 || cfg.max_iterations < 1 ||
      !(cfg.convergence_tol > 0.0))
    throw std::invalid_argument("fit: invalid FitConfig");
}

}  // namespace

double ls_objective(const BinnedHistogram& rs_hist,
                    const BinnedHistogram& ra_hist, const MixtureParams& m) {
  check_histograms(rs_hist, ra_hist);
  m.validate();
  if (m.scored.beta != rs_hist.lower_edge(0))
    throw std::invalid_argument(
        "ls_objective: model location must equal the first bin's lower edge");
  const double games = rs_hist.total();
  return side_objective(rs_hist, m.scored, games) +
         side_objective(ra_hist, m.allowed, games);
}

FitResult fit_single_weibull(const BinnedHistogram& rs_hist,
                             const BinnedHistogram& ra_hist,
                             const FitConfig& cfg) {
  check_fit_inputs(rs_hist, ra_hist, cfg);
  const double games = rs_hist.total();
  const double mean_rs = rs_hist.mean();
  const double mean_ra = ra_hist.mean();

  auto objective = [&](std::span<const double> z) {
    const MixtureParams m = params_from_z3(z);
    return side_objective(rs_hist, m.scored, games) +
           side_objective(ra_hist, m.allowed, games);
  };

  const std::vector<double> lo = {kLogAlphaMin, kLogAlphaMin, kLogGammaMin};
  const std::vector<double> hi = {kLogAlphaMax, kLogAlphaMax, kLogGammaMax};

  std::vector<std::vector<double>> starts;
  for (double g0 : {1.4, 1.83, 2.2}) {
    starts.push_back({std::log(moment_seed_alpha(mean_rs, g0)),
                      std::log(moment_seed_alpha(mean_ra, g0)), std::log(g0)});
  }
  std::mt19937_64 rng(splitmix64(cfg.seed));
  while (static_cast<int>(starts.size()) < std::max(cfg.multistart_count, 3)) {
    const double g0 = std::exp(std::log(0.9) +
                               uniform_open(rng) * (std::log(3.0) - std::log(0.9)));
    const double mrs = moment_seed_alpha(mean_rs, g0) *
                       std::exp((uniform_open(rng) - 0.5) * 0.8);
    const double mra = moment_seed_alpha(mean_ra, g0) *
                       std::exp((uniform_open(rng) - 0.5) * 0.8);
    starts.push_back({std::log(mrs), std::log(mra), std::log(g0)});
  }

  const MultistartOutcome out = run_multistart(objective, starts, lo, hi, cfg);

  FitResult result;
  result.params = params_from_z3(out.best.x);
  result.objective = out.best.fx;
  result.converged = out.best.converged;
  result.starts_tried = out.starts;
  result.best_start_index = out.best_index;
  if (!out.any_converged)
    throw FitFailure("fit_single_weibull: no start converged", result);
  return result;
}

FitResult fit_mixture_seeded(const BinnedHistogram& rs_hist,
                             const BinnedHistogram& ra_hist,
                             const FitConfig& cfg,
                             const FitResult& single_incumbent) {
  check_fit_inputs(rs_hist, ra_hist, cfg);
  const double games = rs_hist.total();
  const double mean_rs = rs_hist.mean();
  const double mean_ra = ra_hist.mean();

  auto objective = [&](std::span<const double> z) {
    const MixtureParams m = params_from_z(z);
    return side_objective(rs_hist, m.scored, games) +
           side_objective(ra_hist, m.allowed, games);
  };

  const std::vector<double> lo = {kLogAlphaMin, kLogAlphaMin, kLogAlphaMin,
                                  kLogAlphaMin, kLogGammaMin, -kLogitMax,
                                  -kLogitMax};
  const std::vector<double> hi = {kLogAlphaMax, kLogAlphaMax, kLogAlphaMax,
                                  kLogAlphaMax, kLogGammaMax, kLogitMax,
                                  kLogitMax};

  std::vector<std::vector<double>> starts;
  // The single-Weibull solution expressed as a degenerate mixture: equal
  // scales make the weight irrelevant, so its objective carries over and the
  // mixture can never end up worse.
  {
    const auto z = z_from_params(single_incumbent.params);
    starts.emplace_back(z.begin(), z.end());
  }
  // Weight starts cover extremes: fitted weights swing over most of [0, 1]
  // from team to team.
  for (double g0 : {1.4, 1.83, 2.2}) {
    const double ars = moment_seed_alpha(mean_rs, g0);
    const double ara = moment_seed_alpha(mean_ra, g0);
    for (double w0 : {0.2, 0.5, 0.8}) {
      starts.push_back({std::log(ars * 1.3), std::log(ars * 0.75),
                        std::log(ara * 1.3), std::log(ara * 0.75),
                        std::log(g0), logit(w0), logit(w0)});
    }
  }
  std::mt19937_64 rng(splitmix64(cfg.seed));
  while (static_cast<int>(starts.size()) < std::max(cfg.multistart_count, 10)) {
    const double g0 = std::exp(std::log(0.9) +
                               uniform_open(rng) * (std::log(3.0) - std::log(0.9)));
    const double ars = moment_seed_alpha(mean_rs, g0);
    const double ara = moment_seed_alpha(mean_ra, g0);
    std::vector<double> z(7);
    z[0] = std::log(ars * std::exp((uniform_open(rng) - 0.5) * 1.4));
    z[1] = std::log(ars * std::exp((uniform_open(rng) - 0.5) * 1.4));
    z[2] = std::log(ara * std::exp((uniform_open(rng) - 0.5) * 1.4));
    z[3] = std::log(ara * std::exp((uniform_open(rng) - 0.5) * 1.4));
    z[4] = std::log(g0);
    z[5] = logit(0.02 + 0.96 * uniform_open(rng));
    z[6] = logit(0.02 + 0.96 * uniform_open(rng));
    starts.push_back(std::move(z));
  }

  const MultistartOutcome out = run_multistart(objective, starts, lo, hi, cfg);

  FitResult result;
  result.params = params_from_z(out.best.x);
  canonicalize_side(result.params.scored);
  canonicalize_side(result.params.allowed);
  result.objective = out.best.fx;
  result.converged = out.best.converged;
  result.starts_tried = out.starts;
  result.best_start_index = out.best_index;
  if (!out.any_converged)
    throw FitFailure("fit_mixture: no start converged", result);
  return result;
}

FitResult fit_mixture(const BinnedHistogram& rs_hist,
                      const BinnedHistogram& ra_hist, const FitConfig& cfg) {
  FitResult single;
  try {
    single = fit_single_weibull(rs_hist, ra_hist, cfg);
  } catch (const FitFailure& e) {
    single = e.best_incumbent;  // still a usable start
  }
  return fit_mixture_seeded(rs_hist, ra_hist, cfg, single);
}

}  // namespace runmix
