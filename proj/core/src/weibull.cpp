#include "runmix/weibull.hpp"

#include <cmath>
#include <stdexcept>

#include "runmix/special_functions.hpp"

namespace runmix {

void WeibullParams::validate() const {
  if (!std::isfinite(alpha) || alpha <= 0.0)
    throw std::invalid_argument("WeibullParams: alpha must be positive");
  if (!std::isfinite(beta))
    throw std::invalid_argument("WeibullParams: beta must be finite");
  if (!std::isfinite(gamma) || gamma <= 0.0)
    throw std::invalid_argument("WeibullParams: gamma must be positive");
}

void MixtureSide::validate() const {
  if (!std::isfinite(alpha1) || alpha1 <= 0.0 || !std::isfinite(alpha2) ||
      alpha2 <= 0.0)
    throw std::invalid_argument("MixtureSide: scales must be positive");
  if (!std::isfinite(weight1) || weight1 < 0.0 || weight1 > 1.0)
    throw std::invalid_argument("MixtureSide: weight1 must lie in [0, 1]");
  if (!std::isfinite(beta))
    throw std::invalid_argument("MixtureSide: beta must be finite");
  if (!std::isfinite(gamma) || gamma <= 0.0)
    throw std::invalid_argument("MixtureSide: gamma must be positive");
}

void MixtureParams::validate() const {
  scored.validate();
  allowed.validate();
  if (scored.beta != allowed.beta || scored.gamma != allowed.gamma)
    throw std::invalid_argument(
        "MixtureParams: scored and allowed sides must share beta and gamma");
}

double weibull_pdf(const WeibullParams& p, double x) {
  p.validate();
  if (x < p.beta) return 0.0;
  const double t = (x - p.beta) / p.alpha;
  return (p.gamma / p.alpha) * std::pow(t, p.gamma - 1.0) *
         std::exp(-std::pow(t, p.gamma));
}

double weibull_cdf(const WeibullParams& p, double x) {
  p.validate();
  if (x <= p.beta) return 0.0;
  const double t = (x - p.beta) / p.alpha;
  return -std::expm1(-std::pow(t, p.gamma));
}

std::pair<double, double> weibull_mean_var(const WeibullParams& p) {
  p.validate();
  const double g1 = gamma_fn(1.0 + 1.0 / p.gamma);
  const double g2 = gamma_fn(1.0 + 2.0 / p.gamma);
  const double mean = p.alpha * g1 + p.beta;
  const double var = p.alpha * p.alpha * (g2 - g1 * g1);
  return {mean, var};
}

double mixture_pdf(const MixtureSide& side, double x) {
  side.validate();
  return side.weight1 * weibull_pdf(side.component1(), x) +
         (1.0 - side.weight1) * weibull_pdf(side.component2(), x);
}

double mixture_cdf(const MixtureSide& side, double x) {
  side.validate();
  return side.weight1 * weibull_cdf(side.component1(), x) +
         (1.0 - side.weight1) * weibull_cdf(side.component2(), x);
}

double mixture_mean(const MixtureSide& side) {
  side.validate();
  const double g1 = gamma_fn(1.0 + 1.0 / side.gamma);
  return side.weight1 * (side.alpha1 * g1 + side.beta) +
         (1.0 - side.weight1) * (side.alpha2 * g1 + side.beta);
}

double bin_area(const MixtureSide& side, double bin_low, double bin_high) {
  side.validate();
  if (!(bin_low < bin_high))
    throw std::domain_error("bin_area: bounds must satisfy bin_low < bin_high");
  const double hi =
      std::isinf(bin_high) ? 1.0 : mixture_cdf(side, bin_high);
  return hi - mixture_cdf(side, bin_low);
}

std::vector<double> bin_areas(const MixtureSide& side, int num_bins) {
  side.validate();
  if (num_bins < 2)
    throw std::invalid_argument("bin_areas: num_bins must be >= 2");
  std::vector<double> areas(num_bins);
  double prev = mixture_cdf(side, -0.5);
  for (int k = 0; k + 1 < num_bins; ++k) {
    const double cur = mixture_cdf(side, k + 0.5);
    areas[k] = cur - prev;
    prev = cur;
  }
  areas[num_bins - 1] = 1.0 - prev;  // tail bin
  return areas;
}

double mixture_win_pct(const MixtureParams& m) {
  m.validate();
  const double g = m.scored.gamma;
  const double ws[2] = {m.scored.weight1, 1.0 - m.scored.weight1};
  const double as[2] = {m.scored.alpha1, m.scored.alpha2};
  const double wa[2] = {m.allowed.weight1, 1.0 - m.allowed.weight1};
  const double aa[2] = {m.allowed.alpha1, m.allowed.alpha2};
  double win = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      // a^g / (a^g + b^g) written as 1 / (1 + (b/a)^g) to dodge overflow
      win += ws[i] * wa[j] / (1.0 + std::pow(aa[j] / as[i], g));
    }
  }
  return win;
}

}  // namespace runmix
