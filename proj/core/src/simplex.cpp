#include "runmix/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace runmix {
namespace {

constexpr double kReflect = 1.0;
constexpr double kExpand = 2.0;
constexpr double kContract = 0.5;
constexpr double kShrink = 0.5;

void clamp_into(std::vector<double>& x, std::span<const double> lo,
                std::span<const double> hi) {
  for (size_t i = 0; i < x.size(); ++i) x[i] = std::clamp(x[i], lo[i], hi[i]);
}

}  // namespace

SimplexResult minimize_simplex(
    const std::function<double(std::span<const double>)>& f,
    std::span<const double> x0, std::span<const double> lo,
    std::span<const double> hi, const SimplexOptions& options) {
  const size_t n = x0.size();
  if (n == 0) throw std::invalid_argument("minimize_simplex: empty start point");
  if (lo.size() != n || hi.size() != n)
    throw std::invalid_argument("minimize_simplex: bound size mismatch");
  for (size_t i = 0; i < n; ++i)
    if (!(lo[i] <= hi[i]))
      throw std::invalid_argument("minimize_simplex: lo must not exceed hi");

  auto eval = [&](const std::vector<double>& x) {
    const double v = f(x);
    return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
  };

  // Vertex 0 is the (clamped) start point itself.
  std::vector<std::vector<double>> verts(n + 1, std::vector<double>(x0.begin(), x0.end()));
  clamp_into(verts[0], lo, hi);
  for (size_t i = 0; i < n; ++i) {
    verts[i + 1] = verts[0];
    double step = options.initial_step;
    if (verts[0][i] + step > hi[i]) step = -step;
    verts[i + 1][i] += step;
    clamp_into(verts[i + 1], lo, hi);
  }

  std::vector<double> fv(n + 1);
  for (size_t i = 0; i <= n; ++i) fv[i] = eval(verts[i]);

  std::vector<size_t> order(n + 1);
  std::vector<double> centroid(n), trial(n), trial2(n);
  bool converged = false;
  int iter = 0;

  for (; iter < options.max_iterations; ++iter) {
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return fv[a] < fv[b]; });
    const size_t best = order[0];
    const size_t worst = order[n];
    const size_t second_worst = order[n - 1];

    const double spread = fv[worst] - fv[best];
    if (spread <= options.tolerance * std::max(1.0, std::fabs(fv[best]))) {
      converged = true;
      break;
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (size_t k = 0; k <= n; ++k) {
      if (k == worst) continue;
      for (size_t i = 0; i < n; ++i) centroid[i] += verts[k][i];
    }
    for (size_t i = 0; i < n; ++i) centroid[i] /= static_cast<double>(n);

    for (size_t i = 0; i < n; ++i)
      trial[i] = centroid[i] + kReflect * (centroid[i] - verts[worst][i]);
    clamp_into(trial, lo, hi);
    const double f_reflect = eval(trial);

    if (f_reflect < fv[best]) {
      for (size_t i = 0; i < n; ++i)
        trial2[i] = centroid[i] + kExpand * (trial[i] - centroid[i]);
      clamp_into(trial2, lo, hi);
      const double f_expand = eval(trial2);
      if (f_expand < f_reflect) {
        verts[worst] = trial2;
        fv[worst] = f_expand;
      } else {
        verts[worst] = trial;
        fv[worst] = f_reflect;
      }
    } else if (f_reflect < fv[second_worst]) {
      verts[worst] = trial;
      fv[worst] = f_reflect;
    } else {
      const bool outside = f_reflect < fv[worst];
      const auto& base = outside ? trial : verts[worst];
      for (size_t i = 0; i < n; ++i)
        trial2[i] = centroid[i] + kContract * (base[i] - centroid[i]);
      clamp_into(trial2, lo, hi);
      const double f_contract = eval(trial2);
      if (f_contract < (outside ? f_reflect : fv[worst])) {
        verts[worst] = trial2;
        fv[worst] = f_contract;
      } else {
        for (size_t k = 0; k <= n; ++k) {
          if (k == best) continue;
          for (size_t i = 0; i < n; ++i)
            verts[k][i] = verts[best][i] + kShrink * (verts[k][i] - verts[best][i]);
          clamp_into(verts[k], lo, hi);
          fv[k] = eval(verts[k]);
        }
      }
    }
  }

  size_t best = 0;
  for (size_t k = 1; k <= n; ++k)
    if (fv[k] < fv[best]) best = k;

  SimplexResult result;
  result.x = verts[best];
  result.fx = fv[best];
  result.iterations = iter;
  result.converged = converged;
  return result;
}

}  // namespace runmix
