#pragma once

#include <functional>
#include <span>
#include <vector>

namespace runmix {

struct SimplexOptions {
  int max_iterations = 2000;
  // Stop once the simplex f-spread falls below tolerance * max(1, |f_best|).
  double tolerance = 1e-8;
  // Per-coordinate displacement used to seed the initial simplex.
  double initial_step = 0.25;
};

struct SimplexResult {
  std::vector<double> x;
  double fx = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Nelder-Mead downhill simplex with box constraints enforced by projecting
// every trial point onto [lo, hi]. The start point is vertex 0 of the initial
// simplex, so the result is never worse than f(clamp(x0)). NaN objective
// values are treated as +infinity.
SimplexResult minimize_simplex(
    const std::function<double(std::span<const double>)>& f,
    std::span<const double> x0, std::span<const double> lo,
    std::span<const double> hi, const SimplexOptions& options = {});

}  // namespace runmix
