#include "runmix/moments.hpp"

#include <cmath>
#include <stdexcept>

#include "runmix/special_functions.hpp"

namespace runmix {

MixtureMoments mixture_moments(const MixtureSide& side) {
  side.validate();
  if (!(side.gamma > 0.0))
    throw std::domain_error("mixture_moments: gamma must be positive");

  const double w = side.weight1;
  const double v = 1.0 - w;
  const double a1 = side.alpha1;
  const double a2 = side.alpha2;
  const double g1 = gamma_fn(1.0 + 1.0 / side.gamma);
  const double g2 = gamma_fn(1.0 + 2.0 / side.gamma);
  const double g3 = gamma_fn(1.0 + 3.0 / side.gamma);
  const double g4 = gamma_fn(1.0 + 4.0 / side.gamma);
  const double var_unit = g2 - g1 * g1;  // variance of a unit-scale Weibull

  MixtureMoments m;
  m.m1 = w * (a1 * g1 + side.beta) + v * (a2 * g1 + side.beta);
  m.m2 = w * w * (a1 * a1 * var_unit) + v * v * (a2 * a2 * var_unit);
  m.m3 = (w * w * w + v * v * v) * (g3 - 3.0 * g1 * g2 + 2.0 * g1 * g1 * g1) /
         std::pow(var_unit, 1.5);
  m.m4 = (w * w * w * w + v * v * v * v) *
             (g4 - 4.0 * g1 * g3 + 6.0 * g2 * g1 * g1 -
              3.0 * g1 * g1 * g1 * g1) /
             (var_unit * var_unit) +
         6.0 * w * w * v * v * (a1 * a1 * a2 * a2 * var_unit * var_unit);
  return m;
}

}  // namespace runmix
