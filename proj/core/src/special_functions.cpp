#include "runmix/special_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace runmix {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLogTwoPi = 1.8378770664093454836;

// Lanczos coefficients, g = 7, 9 terms.
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

// Valid for x >= 0.5.
double log_gamma_lanczos(double x) {
  const double z = x - 1.0;
  double acc = kLanczos[0];
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (z + i);
  const double t = z + 7.5;
  return 0.5 * kLogTwoPi + (z + 0.5) * std::log(t) - t + std::log(acc);
}

// Series expansion of P(a, x), good for x < a + 1.
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int n = 0; n < 1000; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * 1e-17) break;
  }
  return sum * std::exp(-x + a * std::log(x) - log_gamma(a));
}

// Modified Lentz continued fraction for Q(a, x), good for x >= a + 1.
double gamma_q_cf(double a, double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 1000; ++i) {
    const double an = -static_cast<double>(i) * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-17) break;
  }
  return h * std::exp(-x + a * std::log(x) - log_gamma(a));
}

double chi2_pdf(double x, int df) {
  const double a = 0.5 * df;
  if (x <= 0.0) {
    if (df == 2) return 0.5;
    return df < 2 ? std::numeric_limits<double>::infinity() : 0.0;
  }
  return std::exp((a - 1.0) * std::log(x) - 0.5 * x - a * std::log(2.0) -
                  log_gamma(a));
}

// Modified Lentz continued fraction for the incomplete beta;
// call with x < (a + 1) / (a + b + 2).
double incomplete_beta_cf(double x, double a, double b) {
  constexpr double tiny = 1e-300;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 1000; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-17) break;
  }
  return h;
}

void require_df(int df, const char* fn) {
  if (df < 1) throw std::domain_error(std::string(fn) + ": df must be >= 1");
}

}  // namespace

double log_gamma(double x) {
  if (!std::isfinite(x) || x <= 0.0)
    throw std::domain_error("log_gamma: requires finite x > 0");
  if (x >= 0.5) return log_gamma_lanczos(x);
  // Reflection for (0, 0.5).
  return std::log(kPi / std::sin(kPi * x)) - log_gamma_lanczos(1.0 - x);
}

double gamma_fn(double x) {
  if (!std::isfinite(x) || x <= 0.0)
    throw std::domain_error("gamma_fn: requires finite x > 0");
  return std::exp(log_gamma(x));
}

double gamma_p(double a, double x) {
  if (!std::isfinite(a) || a <= 0.0)
    throw std::domain_error("gamma_p: requires finite a > 0");
  if (!std::isfinite(x) || x < 0.0)
    throw std::domain_error("gamma_p: requires finite x >= 0");
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) return gamma_p_series(a, x);
  return 1.0 - gamma_q_cf(a, x);
}

double gamma_q(double a, double x) {
  if (!std::isfinite(a) || a <= 0.0)
    throw std::domain_error("gamma_q: requires finite a > 0");
  if (!std::isfinite(x) || x < 0.0)
    throw std::domain_error("gamma_q: requires finite x >= 0");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_cf(a, x);
}

double chi2_cdf(double x, int df) {
  require_df(df, "chi2_cdf");
  return gamma_p(0.5 * df, 0.5 * x);
}

double chi2_sf(double x, int df) {
  require_df(df, "chi2_sf");
  if (!std::isfinite(x) || x < 0.0)
    throw std::domain_error("chi2_sf: requires finite x >= 0");
  return gamma_q(0.5 * df, 0.5 * x);
}

double chi2_inverse_cdf(double p, int df) {
  require_df(df, "chi2_inverse_cdf");
  if (!std::isfinite(p) || p <= 0.0 || p >= 1.0)
    throw std::domain_error("chi2_inverse_cdf: requires p in (0, 1)");

  double lo = 0.0;
  double hi = std::max(1.0, static_cast<double>(df));
  while (chi2_cdf(hi, df) < p) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e300) throw std::runtime_error("chi2_inverse_cdf: bracket failed");
  }

  // Bisection-safeguarded Newton.
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double f = chi2_cdf(x, df) - p;
    if (f > 0.0)
      hi = x;
    else
      lo = x;
    const double deriv = chi2_pdf(x, df);
    double next = (deriv > 0.0 && std::isfinite(deriv)) ? x - f / deriv : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::fabs(next - x) <= 1e-12 * (1.0 + std::fabs(next))) return next;
    x = next;
  }
  return x;
}

double incomplete_beta(double x, double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b) || a <= 0.0 || b <= 0.0)
    throw std::domain_error("incomplete_beta: requires a, b > 0");
  if (!std::isfinite(x) || x < 0.0 || x > 1.0)
    throw std::domain_error("incomplete_beta: requires x in [0, 1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double log_bt = log_gamma(a + b) - log_gamma(a) - log_gamma(b) +
                        a * std::log(x) + b * std::log1p(-x);
  const double bt = std::exp(log_bt);
  if (x < (a + 1.0) / (a + b + 2.0))
    return bt * incomplete_beta_cf(x, a, b) / a;
  return 1.0 - bt * incomplete_beta_cf(1.0 - x, b, a) / b;
}

double student_t_cdf(double t, double df) {
  if (!std::isfinite(df) || df <= 0.0)
    throw std::domain_error("student_t_cdf: requires df > 0");
  if (!std::isfinite(t)) throw std::domain_error("student_t_cdf: requires finite t");
  const double w = incomplete_beta(df / (t * t + df), 0.5 * df, 0.5);
  return t >= 0.0 ? 1.0 - 0.5 * w : 0.5 * w;
}

double student_t_sf(double t, double df) {
  if (!std::isfinite(df) || df <= 0.0)
    throw std::domain_error("student_t_sf: requires df > 0");
  if (!std::isfinite(t)) throw std::domain_error("student_t_sf: requires finite t");
  const double w = incomplete_beta(df / (t * t + df), 0.5 * df, 0.5);
  return t >= 0.0 ? 0.5 * w : 1.0 - 0.5 * w;
}

double student_t_quantile(double p, double df) {
  if (!std::isfinite(df) || df <= 0.0)
    throw std::domain_error("student_t_quantile: requires df > 0");
  if (!std::isfinite(p) || p <= 0.0 || p >= 1.0)
    throw std::domain_error("student_t_quantile: requires p in (0, 1)");
  if (p == 0.5) return 0.0;
  if (p < 0.5) return -student_t_quantile(1.0 - p, df);

  double lo = 0.0;
  double hi = 1.0;
  while (student_t_cdf(hi, df) < p) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e300) throw std::runtime_error("student_t_quantile: bracket failed");
  }
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (student_t_cdf(mid, df) < p)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 1e-13 * (1.0 + hi)) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace runmix
