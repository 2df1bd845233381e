#include "runmix/weibull.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "runmix/rng.hpp"
#include "runmix/simulator.hpp"
#include "support/quadrature.hpp"

using namespace runmix;

namespace {

MixtureSide make_side(double a1, double a2, double w, double beta, double g) {
  return MixtureSide{a1, a2, w, beta, g};
}

}  // namespace

TEST_SUITE_BEGIN("weibull");

TEST_CASE("pdf special cases") {
  CHECK(weibull_pdf({1.0, 0.0, 1.0}, 0.0) == doctest::Approx(1.0));
  // Rayleigh at x = 1: 2 e^{-1}
  CHECK(weibull_pdf({1.0, 0.0, 2.0}, 1.0) ==
        doctest::Approx(2.0 * std::exp(-1.0)).epsilon(1e-13));
  CHECK(weibull_pdf({2.0, -0.5, 1.8}, -0.6) == 0.0);
  CHECK(weibull_pdf({2.0, 3.0, 1.8}, 2.9999) == 0.0);
}

TEST_CASE("pdf integrates to one") {
  const WeibullParams p{2.0, -0.5, 1.8};
  const double mass = testsupport::integrate(
      [&](double x) { return weibull_pdf(p, x); }, -0.5, 60.0);
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("cdf special cases and quadrature") {
  CHECK(weibull_cdf({1.0, 0.0, 1.0}, 0.0) == 0.0);
  CHECK(weibull_cdf({1.0, 0.0, 1.0}, std::log(2.0)) ==
        doctest::Approx(0.5).epsilon(1e-13));

  const WeibullParams p{2.0, -0.5, 1.8};
  const double by_quadrature = testsupport::integrate(
      [&](double x) { return weibull_pdf(p, x); }, -0.5, 3.5);
  CHECK(weibull_cdf(p, 3.5) ==
        doctest::Approx(by_quadrature).epsilon(1e-10));
}

TEST_CASE("cdf is nondecreasing") {
  const WeibullParams p{3.7, -0.5, 0.9};
  double prev = 0.0;
  for (double x = -0.5; x < 40.0; x += 0.25) {
    const double cur = weibull_cdf(p, x);
    CHECK(cur >= prev);
    prev = cur;
  }
}

TEST_CASE("mixture pdf reductions") {
  const double x = 2.0;
  const auto degenerate = make_side(4.0, 9.0, 1.0, -0.5, 1.8);
  CHECK(mixture_pdf(degenerate, x) ==
        doctest::Approx(weibull_pdf({4.0, -0.5, 1.8}, x)).epsilon(1e-15));

  const auto equal = make_side(4.0, 4.0, 0.5, -0.5, 1.8);
  CHECK(mixture_pdf(equal, x) ==
        doctest::Approx(weibull_pdf({4.0, -0.5, 1.8}, x)).epsilon(1e-15));

  const auto generic = make_side(4.0, 2.0, 0.3, -0.5, 1.8);
  CHECK(mixture_pdf(generic, x) ==
        doctest::Approx(0.3 * weibull_pdf({4.0, -0.5, 1.8}, x) +
                        0.7 * weibull_pdf({2.0, -0.5, 1.8}, x))
            .epsilon(1e-15));
}

TEST_CASE("bin_area basics") {
  const auto side = make_side(0.5, 3.0, 0.5, -0.5, 1.8);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(bin_area(side, -0.5, inf) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(bin_area(side, 1.5, 0.5), std::domain_error);

  // Disjoint bins covering the support sum to 1.
  double sum = 0.0;
  for (int k = 0; k < 30; ++k) sum += bin_area(side, k - 0.5, k + 0.5);
  sum += bin_area(side, 29.5, inf);
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("bin_area against quadrature of the mixture density") {
  const auto side = make_side(3.0, 5.0, 0.5, -0.5, 1.8);
  const double by_quadrature = testsupport::integrate(
      [&](double x) { return mixture_pdf(side, x); }, -0.5, 0.5);
  CHECK(bin_area(side, -0.5, 0.5) ==
        doctest::Approx(by_quadrature).epsilon(1e-10));
}

TEST_CASE("bin_areas covers the partition including the tail") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 25; ++rep) {
    const auto side = make_side(1.0 + 9.0 * uniform_open(rng),
                                1.0 + 9.0 * uniform_open(rng),
                                uniform_open(rng), -0.5,
                                0.8 + 2.2 * uniform_open(rng));
    const auto areas = bin_areas(side, 13);
    REQUIRE(areas.size() == 13);
    double sum = 0.0;
    for (double a : areas) {
      CHECK(a >= 0.0);
      sum += a;
    }
    CHECK(std::fabs(sum - 1.0) < 1e-10);
  }
}

TEST_CASE("mean and variance identities") {
  auto [m_exp, v_exp] = weibull_mean_var({1.0, 0.0, 1.0});
  CHECK(m_exp == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(v_exp == doctest::Approx(1.0).epsilon(1e-12));

  auto [m_ray, v_ray] = weibull_mean_var({1.0, 0.0, 2.0});
  CHECK(m_ray == doctest::Approx(std::sqrt(3.14159265358979323846) / 2.0)
                     .epsilon(1e-12));
  CHECK(v_ray == doctest::Approx(1.0 - 3.14159265358979323846 / 4.0)
                     .epsilon(1e-12));
}

TEST_CASE("mean and variance against quadrature") {
  const WeibullParams p{4.2, -0.5, 1.83};
  const double upper = p.beta + p.alpha * std::pow(40.0, 1.0 / p.gamma);
  const double mean = testsupport::integrate(
      [&](double x) { return x * weibull_pdf(p, x); }, p.beta, upper, 1e-13);
  auto [m, v] = weibull_mean_var(p);
  CHECK(m == doctest::Approx(mean).epsilon(1e-9));
  const double var = testsupport::integrate(
      [&](double x) { return (x - m) * (x - m) * weibull_pdf(p, x); }, p.beta,
      upper, 1e-13);
  CHECK(std::fabs(v - var) < 1e-8);
}

TEST_CASE("mean/variance quadrature grid") {
  for (double gamma : {0.8, 1.0, 1.83, 2.5}) {
    for (double alpha : {1.0, 5.0}) {
      for (double beta : {-0.5, 0.0}) {
        const WeibullParams p{alpha, beta, gamma};
        const double upper =
            beta + alpha * std::pow(45.0, 1.0 / gamma);
        auto [m, v] = weibull_mean_var(p);
        const double mean_q = testsupport::integrate(
            [&](double x) { return x * weibull_pdf(p, x); }, beta, upper,
            1e-13);
        const double var_q = testsupport::integrate(
            [&](double x) { return (x - m) * (x - m) * weibull_pdf(p, x); },
            beta, upper, 1e-13);
        CHECK(std::fabs(m - mean_q) < 1e-8);
        CHECK(std::fabs(v - var_q) < 1e-8);
      }
    }
  }
}

TEST_CASE("mixture mean reductions and Monte Carlo") {
  const auto one = make_side(4.0, 9.0, 1.0, -0.5, 1.8);
  CHECK(mixture_mean(one) ==
        doctest::Approx(weibull_mean_var({4.0, -0.5, 1.8}).first)
            .epsilon(1e-14));

  const auto equal = make_side(4.0, 4.0, 0.31, -0.5, 1.8);
  CHECK(mixture_mean(equal) ==
        doctest::Approx(weibull_mean_var({4.0, -0.5, 1.8}).first)
            .epsilon(1e-14));

  // Law of large numbers: 1e6 draws, 3 standard errors.
  const auto side = make_side(6.0, 2.5, 0.4, -0.5, 1.7);
  std::mt19937_64 rng(99);
  const long n = 1'000'000;
  double acc = 0.0, acc2 = 0.0;
  for (long i = 0; i < n; ++i) {
    const auto comp =
        uniform_open(rng) < side.weight1 ? side.component1() : side.component2();
    const double x = sample_weibull(comp, uniform_open(rng));
    acc += x;
    acc2 += x * x;
  }
  const double sample_mean = acc / n;
  const double sample_sd = std::sqrt(acc2 / n - sample_mean * sample_mean);
  const double se = sample_sd / std::sqrt(static_cast<double>(n));
  CHECK(std::fabs(mixture_mean(side) - sample_mean) < 3.0 * se);
}

TEST_CASE("win percentage trivial reductions") {
  MixtureParams all_equal;
  all_equal.scored = make_side(4.0, 4.0, 0.3, -0.5, 1.8);
  all_equal.allowed = make_side(4.0, 4.0, 0.8, -0.5, 1.8);
  CHECK(mixture_win_pct(all_equal) == doctest::Approx(0.5).epsilon(1e-14));

  // Degenerate weights reproduce the single-Weibull form a^g/(a^g + b^g).
  MixtureParams degenerate;
  degenerate.scored = make_side(5.0, 1.0, 1.0, -0.5, 1.8);
  degenerate.allowed = make_side(4.0, 1.0, 1.0, -0.5, 1.8);
  const double a = std::pow(5.0, 1.8);
  const double b = std::pow(4.0, 1.8);
  CHECK(mixture_win_pct(degenerate) ==
        doctest::Approx(a / (a + b)).epsilon(1e-13));
}

TEST_CASE("win percentage matches Monte Carlo paired draws") {
  MixtureParams m;
  m.scored = make_side(5.0, 3.0, 0.5, -0.5, 1.8);
  m.allowed = make_side(4.0, 4.0, 0.7, -0.5, 1.8);
  const double closed = mixture_win_pct(m);
  const auto est = estimate_win_pct(m, {1'000'000, 1234});
  CHECK(std::fabs(est.p_win - closed) < 3.0 * est.standard_error);
}

TEST_CASE("swapping sides complements the win percentage") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    MixtureParams m;
    m.scored = make_side(1.0 + 9.0 * uniform_open(rng),
                         1.0 + 9.0 * uniform_open(rng), uniform_open(rng),
                         -0.5, 0.8 + 2.2 * uniform_open(rng));
    m.allowed = make_side(1.0 + 9.0 * uniform_open(rng),
                          1.0 + 9.0 * uniform_open(rng), uniform_open(rng),
                          -0.5, m.scored.gamma);
    MixtureParams swapped;
    swapped.scored = m.allowed;
    swapped.allowed = m.scored;
    CHECK(mixture_win_pct(swapped) ==
          doctest::Approx(1.0 - mixture_win_pct(m)).epsilon(1e-12));
  }
}

TEST_CASE("win percentage is monotone in the scales") {
  MixtureParams m;
  m.scored = make_side(5.0, 3.0, 0.4, -0.5, 1.8);
  m.allowed = make_side(4.5, 3.5, 0.6, -0.5, 1.8);
  const double base = mixture_win_pct(m);

  auto bumped = m;
  bumped.scored.alpha1 += 0.25;
  CHECK(mixture_win_pct(bumped) > base);
  bumped = m;
  bumped.scored.alpha2 += 0.25;
  CHECK(mixture_win_pct(bumped) > base);
  bumped = m;
  bumped.allowed.alpha1 += 0.25;
  CHECK(mixture_win_pct(bumped) < base);
  bumped = m;
  bumped.allowed.alpha2 += 0.25;
  CHECK(mixture_win_pct(bumped) < base);
}

TEST_CASE("mismatched shared parameters are rejected") {
  MixtureParams m;
  m.scored = make_side(5.0, 3.0, 0.4, -0.5, 1.8);
  m.allowed = make_side(4.5, 3.5, 0.6, -0.5, 1.9);
  CHECK_THROWS_AS(mixture_win_pct(m), std::invalid_argument);
  m.allowed.gamma = 1.8;
  m.allowed.beta = 0.0;
  CHECK_THROWS_AS(mixture_win_pct(m), std::invalid_argument);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(weibull_pdf({-1.0, 0.0, 1.0}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(weibull_pdf({1.0, 0.0, -1.0}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(mixture_pdf(make_side(1.0, 1.0, 1.5, 0.0, 1.0), 1.0),
                  std::invalid_argument);
}

TEST_SUITE_END();
