#include "runmix/stats_tests.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <doctest.h>

#include "runmix/rng.hpp"
#include "runmix/special_functions.hpp"
#include "support/quadrature.hpp"
#include "support/synthetic.hpp"

using namespace runmix;

namespace {

BinnedHistogram expected_histogram(const MixtureSide& side, int num_bins,
                                   double games) {
  const auto areas = bin_areas(side, num_bins);
  std::vector<double> counts(areas.size());
  for (size_t k = 0; k < areas.size(); ++k) counts[k] = games * areas[k];
  return BinnedHistogram(num_bins, std::move(counts));
}

double critical(const std::vector<ThresholdEntry>& entries, double level,
                bool bonferroni) {
  for (const auto& e : entries)
    if (e.level == level && e.bonferroni == bonferroni)
      return e.critical_value;
  FAIL("missing threshold entry");
  return 0.0;
}

}  // namespace

TEST_SUITE_BEGIN("stats_tests");

TEST_CASE("gof degrees of freedom at the default binning") {
  const auto m = testsupport::typical_params();
  const auto rs = expected_histogram(m.scored, 13, 162.0);
  const auto ra = expected_histogram(m.allowed, 13, 162.0);
  const auto gof = gof_statistic(rs, ra, m);
  CHECK(gof.df == 16);
  // Three fitted parameters for the single-Weibull model.
  CHECK(gof_statistic(rs, ra, m, 3).df == 20);
}

TEST_CASE("gof thresholds match the chi-square quantiles") {
  const auto m = testsupport::typical_params();
  const auto rs = expected_histogram(m.scored, 13, 162.0);
  const auto ra = expected_histogram(m.allowed, 13, 162.0);
  const auto gof = gof_statistic(rs, ra, m);
  CHECK(critical(gof.thresholds, 0.95, false) ==
        doctest::Approx(26.3).epsilon(0.002));
  CHECK(critical(gof.thresholds, 0.99, false) ==
        doctest::Approx(32.0).epsilon(0.002));
  CHECK(critical(gof.thresholds, 0.95, true) ==
        doctest::Approx(37.7).epsilon(0.002));
  CHECK(critical(gof.thresholds, 0.99, true) ==
        doctest::Approx(42.5).epsilon(0.002));
  for (const auto& e : gof.thresholds)
    CHECK(e.critical_value ==
          doctest::Approx(chi2_inverse_cdf(
                              e.bonferroni ? 1.0 - (1.0 - e.level) / 30
                                           : e.level,
                              16))
              .epsilon(1e-12));
}

TEST_CASE("gof statistic vanishes at perfect agreement") {
  const auto m = testsupport::typical_params();
  const auto rs = expected_histogram(m.scored, 13, 162.0);
  const auto ra = expected_histogram(m.allowed, 13, 162.0);
  const auto gof = gof_statistic(rs, ra, m);
  CHECK(gof.statistic == doctest::Approx(0.0).epsilon(1e-18));
  for (const auto& e : gof.thresholds) CHECK(e.passes);
}

TEST_CASE("gof names the bin when an expected count underflows to zero") {
  // A tiny scale puts all model mass into bin 0, yet bin 5 has games.
  MixtureParams m;
  m.scored = {0.01, 0.01, 0.5, -0.5, 3.0};
  m.allowed = {0.01, 0.01, 0.5, -0.5, 3.0};
  std::vector<double> counts(13, 0.0);
  counts[0] = 157.0;
  counts[5] = 5.0;
  const BinnedHistogram rs(13, counts);
  const BinnedHistogram ra(13, counts);
  CHECK_THROWS_WITH_AS(gof_statistic(rs, ra, m), doctest::Contains("bin 5"),
                       std::domain_error);
}

TEST_CASE("pearson statistic is permutation invariant and zero iff equal") {
  const std::vector<double> obs = {4.0, 9.0, 25.0, 1.0, 7.0};
  const std::vector<double> exp = {5.0, 8.0, 24.0, 2.0, 8.0};
  const double direct = pearson_statistic(obs, exp);

  std::vector<size_t> idx = {3, 0, 4, 1, 2};
  std::vector<double> obs_p, exp_p;
  for (size_t i : idx) {
    obs_p.push_back(obs[i]);
    exp_p.push_back(exp[i]);
  }
  CHECK(pearson_statistic(obs_p, exp_p) ==
        doctest::Approx(direct).epsilon(1e-15));

  CHECK(pearson_statistic(exp, exp) == 0.0);
  CHECK(direct > 0.0);
}

TEST_CASE("contingency table placement") {
  TeamSeason ts;
  ts.season = 2011;
  ts.team = "SEA";
  ts.games.push_back({2011, "SEA", "TEX", 3, 1});
  const auto table = build_contingency(ts);
  CHECK(table.dimension() == 12);
  CHECK(table.count(3, 1) == 1.0);
  CHECK(table.offdiag_row_total(3) == 1.0);

  ts.games.push_back({2011, "SEA", "TEX", 15, 2});
  const auto with_tail = build_contingency(ts);
  CHECK(with_tail.count(11, 2) == 1.0);
}

TEST_CASE("diagonal stays structurally zero") {
  const auto ts = testsupport::make_season(testsupport::typical_params(), 162,
                                           2011, "AAA", 3);
  const auto table = build_contingency(ts);
  double total = 0.0;
  for (int i = 0; i < 12; ++i) {
    CHECK(table.count(i, i) == 0.0);
    total += table.offdiag_row_total(i);
  }
  CHECK(total == doctest::Approx(162.0));

  TeamSeason tied;
  tied.season = 2011;
  tied.team = "BAD";
  tied.games.push_back({2011, "BAD", "X", 4, 4});
  CHECK_THROWS_AS(build_contingency(tied), std::invalid_argument);
}

TEST_CASE("independence test df and thresholds") {
  const auto ts = testsupport::make_season(testsupport::typical_params(), 162,
                                           2011, "AAA", 12345);
  const auto table = build_contingency(ts);
  REQUIRE(table.margins_positive());
  const auto res = independence_test(table);
  CHECK(res.df == 109);
  CHECK(critical(res.thresholds, 0.95, false) ==
        doctest::Approx(134.37).epsilon(0.0005));
  CHECK(critical(res.thresholds, 0.99, false) ==
        doctest::Approx(146.26).epsilon(0.0005));
  // Bonferroni entries agree with the quantile function itself.
  for (const auto& e : res.thresholds)
    CHECK(e.critical_value ==
          doctest::Approx(chi2_inverse_cdf(
                              e.bonferroni ? 1.0 - (1.0 - e.level) / 30
                                           : e.level,
                              109))
              .epsilon(1e-12));
}

TEST_CASE("scaling reproduces the off-diagonal margins") {
  const auto ts = testsupport::make_season(testsupport::typical_params(), 162,
                                           2011, "AAA", 777);
  const auto table = build_contingency(ts);
  REQUIRE(table.margins_positive());
  const auto res = independence_test(table);
  const int d = table.dimension();
  for (int i = 0; i < d; ++i) {
    double fitted = 0.0;
    for (int j = 0; j < d; ++j)
      if (j != i) fitted += res.row_params[i] * res.col_params[j];
    CHECK(std::fabs(fitted - table.offdiag_row_total(i)) < 1e-8);
  }
  for (int j = 0; j < d; ++j) {
    double fitted = 0.0;
    for (int i = 0; i < d; ++i)
      if (i != j) fitted += res.row_params[i] * res.col_params[j];
    CHECK(std::fabs(fitted - table.offdiag_col_total(j)) < 1e-8);
  }
}

TEST_CASE("a product-form table scores near zero") {
  // Construct counts = a_i * b_j off the diagonal from chosen margins.
  const int d = 12;
  ContingencyTable table(d);
  std::vector<double> a(d), b(d);
  for (int i = 0; i < d; ++i) {
    a[i] = 2.0 + 0.8 * i;
    b[i] = 3.0 + 0.5 * ((i * 5) % d);
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j) table.at(i, j) = a[i] * b[j];
  const auto res = independence_test(table);
  CHECK(res.statistic < 1e-10);

  // Rounding to integers (large counts) stays close to zero.
  ContingencyTable rounded(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j) rounded.at(i, j) = std::round(10.0 * a[i] * b[j]);
  CHECK(independence_test(rounded).statistic < 1.0);
}

TEST_CASE("empty margins are rejected") {
  const int d = 12;
  ContingencyTable table(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j && i != 7) table.at(i, j) = 4.0;  // row 7 left empty
  CHECK(!table.margins_positive());
  CHECK_THROWS_AS(independence_test(table), std::domain_error);
}

TEST_CASE("welch t-test on identical samples") {
  const std::vector<double> a = {1.0, 2.0, 3.0, 4.0, 5.0};
  const auto res = welch_t_test(a, a);
  CHECK(res.t_statistic == 0.0);
  CHECK(res.p_value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(res.mean_difference == 0.0);
  CHECK(res.ci95.first < 0.0);
  CHECK(res.ci95.second > 0.0);
}

TEST_CASE("welch t-test against a direct formula evaluation") {
  const std::vector<double> a = {1.0, 2.0, 3.0, 4.0, 5.0};
  const std::vector<double> b = {2.0, 3.0, 4.0, 5.0, 6.0};
  const auto res = welch_t_test(a, b);

  // Hand computation: both variances are 2.5 with n = 5, so
  // se = sqrt(0.5 + 0.5) = 1, t = -1, and the Welch-Satterthwaite df is 8.
  CHECK(res.mean_difference == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(res.t_statistic == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(res.df == doctest::Approx(8.0).epsilon(1e-12));

  // Independent tail oracle: integrate the t density at df 8 over [1, 81].
  auto density = [](double x) {
    const double v = 8.0;
    return std::exp(std::lgamma(0.5 * (v + 1.0)) - std::lgamma(0.5 * v)) /
           std::sqrt(v * 3.14159265358979323846) *
           std::pow(1.0 + x * x / v, -0.5 * (v + 1.0));
  };
  const double tail = testsupport::integrate(density, 1.0, 81.0);
  CHECK(res.p_value == doctest::Approx(2.0 * tail).epsilon(1e-7));
  CHECK(res.ci95.first < -1.0);
  CHECK(res.ci95.second > -1.0);
  CHECK(res.ci95.second > 0.0);  // samples this close do not separate
}

TEST_CASE("welch t-test separates clearly different samples") {
  std::vector<double> lo(40), hi(40);
  std::mt19937_64 rng(55);
  for (int i = 0; i < 40; ++i) {
    lo[i] = 2.0 + uniform_open(rng);
    hi[i] = 4.0 + 2.0 * uniform_open(rng);
  }
  const auto res = welch_t_test(hi, lo);
  CHECK(res.p_value < 0.01);
  CHECK(res.ci95.first > 0.0);
}

TEST_CASE("welch t-test antisymmetry") {
  const std::vector<double> a = {0.3, 1.9, 2.2, 5.5, 3.1};
  const std::vector<double> b = {1.4, 0.9, 4.0, 2.2};
  const auto ab = welch_t_test(a, b);
  const auto ba = welch_t_test(b, a);
  CHECK(ab.t_statistic == -ba.t_statistic);
  CHECK(ab.df == ba.df);
  CHECK(ab.p_value == doctest::Approx(ba.p_value).epsilon(1e-15));
}

TEST_CASE("welch t-test input validation") {
  const std::vector<double> constant = {2.0, 2.0, 2.0};
  const std::vector<double> ok = {1.0, 2.0, 3.0};
  CHECK_THROWS_AS(welch_t_test(constant, ok), std::domain_error);
  CHECK_THROWS_AS(welch_t_test(ok, constant), std::domain_error);
  const std::vector<double> tiny = {1.0};
  CHECK_THROWS_AS(welch_t_test(tiny, ok), std::invalid_argument);
}

TEST_SUITE_END();
