#include "runmix/simulator.hpp"

#include <cmath>
#include <random>

#include <doctest.h>

#include "runmix/rng.hpp"
#include "runmix/weibull.hpp"
#include "support/synthetic.hpp"

using namespace runmix;

TEST_SUITE_BEGIN("simulator");

TEST_CASE("inverse transform satisfies cdf(sample(u)) = u") {
  const WeibullParams p{2.3, -0.5, 1.7};
  for (double u = 0.02; u < 1.0; u += 0.02) {
    const double x = sample_weibull(p, u);
    CHECK(x >= p.beta);
    CHECK(weibull_cdf(p, x) == doctest::Approx(u).epsilon(1e-10));
  }
}

TEST_CASE("exponential quantile") {
  CHECK(sample_weibull({1.0, 0.0, 1.0}, 1.0 - std::exp(-1.0)) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("sample domain errors") {
  CHECK_THROWS_AS(sample_weibull({1.0, 0.0, 1.0}, 0.0), std::domain_error);
  CHECK_THROWS_AS(sample_weibull({1.0, 0.0, 1.0}, 1.0), std::domain_error);
  CHECK_THROWS_AS(sample_weibull({1.0, 0.0, 1.0}, -0.3), std::domain_error);
}

TEST_CASE("empirical mean matches the closed-form mean") {
  const WeibullParams p{4.2, -0.5, 1.83};
  std::mt19937_64 rng(2024);
  const long n = 1'000'000;
  double acc = 0.0, acc2 = 0.0;
  for (long i = 0; i < n; ++i) {
    const double x = sample_weibull(p, uniform_open(rng));
    acc += x;
    acc2 += x * x;
  }
  const double mean = acc / n;
  const double sd = std::sqrt(acc2 / n - mean * mean);
  const double se = sd / std::sqrt(static_cast<double>(n));
  CHECK(std::fabs(weibull_mean_var(p).first - mean) < 3.0 * se);
}

TEST_CASE("symmetric models estimate one half") {
  MixtureParams m;
  m.scored = {4.0, 4.0, 0.3, -0.5, 1.8};
  m.allowed = {4.0, 4.0, 0.9, -0.5, 1.8};
  const auto est = estimate_win_pct(m, {500'000, 7});
  CHECK(std::fabs(est.p_win - 0.5) < 3.0 * est.standard_error);
}

TEST_CASE("degenerate weights reduce to the single-Weibull formula") {
  MixtureParams m;
  m.scored = {5.0, 5.0, 1.0, -0.5, 1.9};
  m.allowed = {4.2, 4.2, 1.0, -0.5, 1.9};
  const double expected = 1.0 / (1.0 + std::pow(4.2 / 5.0, 1.9));
  const auto est = estimate_win_pct(m, {500'000, 19});
  CHECK(std::fabs(est.p_win - expected) < 3.0 * est.standard_error);
}

TEST_CASE("estimates are deterministic given the seed") {
  const auto m = testsupport::typical_params();
  const auto a = estimate_win_pct(m, {200'000, 99});
  const auto b = estimate_win_pct(m, {200'000, 99});
  CHECK(a.p_win == b.p_win);
  CHECK(a.sample_mean_rs == b.sample_mean_rs);
  const auto c = estimate_win_pct(m, {200'000, 100});
  CHECK(a.p_win != c.p_win);  // different stream
}

TEST_CASE("standard error follows the binomial formula") {
  const auto m = testsupport::typical_params();
  const auto est = estimate_win_pct(m, {50'000, 3});
  CHECK(est.standard_error ==
        doctest::Approx(std::sqrt(est.p_win * (1.0 - est.p_win) / 50'000.0))
            .epsilon(1e-12));
}

TEST_CASE("sample means track the model means") {
  const auto m = testsupport::typical_params();
  const auto est = estimate_win_pct(m, {1'000'000, 31});
  CHECK(std::fabs(est.sample_mean_rs - mixture_mean(m.scored)) < 0.02);
  CHECK(std::fabs(est.sample_mean_ra - mixture_mean(m.allowed)) < 0.02);
}

TEST_CASE("randomized grid stays within three standard errors") {
  std::mt19937_64 rng(515151);
  int within = 0;
  const int sets = 20;
  for (int k = 0; k < sets; ++k) {
    MixtureParams m;
    m.scored = {1.0 + 9.0 * uniform_open(rng), 1.0 + 9.0 * uniform_open(rng),
                uniform_open(rng), -0.5, 0.8 + 2.2 * uniform_open(rng)};
    m.allowed = {1.0 + 9.0 * uniform_open(rng), 1.0 + 9.0 * uniform_open(rng),
                 uniform_open(rng), -0.5, m.scored.gamma};
    const double closed = mixture_win_pct(m);
    const auto est = estimate_win_pct(m, {1'000'000, 1000 + k});
    if (std::fabs(est.p_win - closed) <= 3.0 * est.standard_error) ++within;
  }
  CHECK(within >= sets - 1);
}

TEST_CASE("configuration validation") {
  const auto m = testsupport::typical_params();
  CHECK_THROWS_AS(estimate_win_pct(m, {5'000, 1}), std::invalid_argument);
}

TEST_SUITE_END();
