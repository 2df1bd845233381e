#pragma once

#include <cmath>
#include <stdexcept>

namespace runmix {

// Fixed-exponent run-ratio predictors the fitted model is compared against.
// james2 is the original squared form; pythwl is the 1.83-exponent variant
// published as an expanded standing.
struct BaselineKind {
  double exponent = 2.0;

  static BaselineKind james2() { return {2.0}; }
  static BaselineKind pythwl() { return {1.83}; }
  static BaselineKind custom_exponent(double e) {
    if (!std::isfinite(e) || e <= 0.0)
      throw std::domain_error("BaselineKind: exponent must be positive");
    return {e};
  }
};

// rs^e / (rs^e + ra^e) from season run totals.
inline double pyth_wl(double rs_total, double ra_total, double exponent) {
  if (!std::isfinite(rs_total) || rs_total <= 0.0 || !std::isfinite(ra_total) ||
      ra_total <= 0.0)
    throw std::domain_error("pyth_wl: run totals must be positive");
  if (!std::isfinite(exponent) || exponent <= 0.0)
    throw std::domain_error("pyth_wl: exponent must be positive");
  const double ps = std::pow(rs_total, exponent);
  const double pa = std::pow(ra_total, exponent);
  return ps / (ps + pa);
}

inline double predicted_wins(double win_pct, int games) {
  if (games <= 0) throw std::domain_error("predicted_wins: games must be positive");
  return win_pct * static_cast<double>(games);
}

}  // namespace runmix
