#pragma once

namespace runmix {

// Gamma / incomplete-gamma / incomplete-beta kernel backing the chi-square
// and Student-t tail computations. All functions are pure and thread-safe.
// Argument-domain violations throw std::domain_error.

// ln Gamma(x) and Gamma(x), x > 0.
double log_gamma(double x);
double gamma_fn(double x);

// Regularized lower incomplete gamma P(a, x) and its complement Q(a, x),
// a > 0, x >= 0.
double gamma_p(double a, double x);
double gamma_q(double a, double x);

double chi2_cdf(double x, int df);
double chi2_sf(double x, int df);
// Inverse of chi2_cdf in x; p in (0, 1), absolute error below 1e-8.
double chi2_inverse_cdf(double p, int df);

// Regularized incomplete beta I_x(a, b), x in [0, 1], a, b > 0.
double incomplete_beta(double x, double a, double b);

double student_t_cdf(double t, double df);
// Upper tail P(T > t); the two-sided p-value is 2*min(sf, 1 - sf).
double student_t_sf(double t, double df);
double student_t_quantile(double p, double df);

}  // namespace runmix
