#pragma once

#include "runmix/weibull.hpp"

namespace runmix {

// Diagnostic moment expressions for a two-component side, with
// g_i = Gamma(1 + i/gamma):
//   m1  weighted first moment (equals mixture_mean)
//   m2  weight-squared combination of the component variances
//   m3  (w^3 + (1-w)^3) times the standardized third-moment ratio
//   m4  (w^4 + (1-w)^4) times the standardized fourth-moment ratio plus a
//       6 w^2 (1-w)^2 alpha1^2 alpha2^2 (g2 - g1^2)^2 cross term
// m2..m4 are evaluated verbatim as diagnostics; they are NOT the mixture's
// textbook raw or central moments, and `runmix verify` prints them next to
// Monte Carlo estimates so the disagreement is visible rather than hidden.
struct MixtureMoments {
  double m1 = 0.0;
  double m2 = 0.0;
  double m3 = 0.0;
  double m4 = 0.0;
};

MixtureMoments mixture_moments(const MixtureSide& side);

}  // namespace runmix
