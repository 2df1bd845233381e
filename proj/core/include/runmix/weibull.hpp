#pragma once

#include <utility>
#include <vector>

namespace runmix {

// Three-parameter Weibull: scale alpha > 0, location beta, shape gamma > 0.
// gamma = 1 is the exponential, gamma = 2 the Rayleigh distribution.
struct WeibullParams {
  double alpha = 1.0;
  double beta = 0.0;
  double gamma = 1.0;

  void validate() const;  // throws std::invalid_argument
};

// One side of a team's model (runs scored or runs allowed): a convex
// combination of two Weibulls sharing location and shape. weight1 is the
// mass on component 1; component 2 carries 1 - weight1.
struct MixtureSide {
  double alpha1 = 1.0;
  double alpha2 = 1.0;
  double weight1 = 1.0;
  double beta = 0.0;
  double gamma = 1.0;

  void validate() const;
  WeibullParams component1() const { return {alpha1, beta, gamma}; }
  WeibullParams component2() const { return {alpha2, beta, gamma}; }
};

// Full model for one team. Both sides must share beta and gamma; the
// closed-form win percentage requires it.
struct MixtureParams {
  MixtureSide scored;
  MixtureSide allowed;

  void validate() const;
};

double weibull_pdf(const WeibullParams& p, double x);
double weibull_cdf(const WeibullParams& p, double x);
// (mean, variance): alpha*Gamma(1 + 1/gamma) + beta and
// alpha^2*(Gamma(1 + 2/gamma) - Gamma(1 + 1/gamma)^2).
std::pair<double, double> weibull_mean_var(const WeibullParams& p);

double mixture_pdf(const MixtureSide& side, double x);
double mixture_cdf(const MixtureSide& side, double x);
double mixture_mean(const MixtureSide& side);

// Probability mass the mixture assigns to [bin_low, bin_high);
// bin_high may be +infinity. Reversed bounds throw std::domain_error.
double bin_area(const MixtureSide& side, double bin_low, double bin_high);

// Mass per bin of the unit-width half-integer scheme
// [-1/2, 1/2), [1/2, 3/2), ..., [num_bins - 3/2, +inf).
std::vector<double> bin_areas(const MixtureSide& side, int num_bins);

// Closed-form P(scored > allowed):
//   sum_ij c_i c_j' * a_RSi^g / (a_RSi^g + a_RAj^g).
// Requires the two sides to share beta and gamma.
double mixture_win_pct(const MixtureParams& m);

}  // namespace runmix
