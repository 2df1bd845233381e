#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "runmix/fitting.hpp"
#include "runmix/game_log.hpp"
#include "runmix/stats_tests.hpp"

namespace runmix {

struct ReportConfig {
  FitConfig fit;
  double baseline_exponent = 1.83;
  int contingency_dimension = 12;
  int comparisons = 30;  // league-wide simultaneous tests
};

struct SampleStats {
  double mean = 0.0;
  double sd = 0.0;  // sample standard deviation
  double median = 0.0;
};

SampleStats summarize(std::vector<double> values);

struct TeamRow {
  std::string team;
  int games = 0;
  int observed_wins = 0;
  int observed_losses = 0;

  // Mixture fit.
  double predicted_win_pct = 0.0;
  double predicted_wins = 0.0;
  double games_off = 0.0;  // predicted minus observed
  double abs_games_off = 0.0;
  double gamma = 0.0;
  double c1 = 0.0;
  double c1_prime = 0.0;
  double alpha_rs1 = 0.0, alpha_rs2 = 0.0;
  double alpha_ra1 = 0.0, alpha_ra2 = 0.0;
  double objective = 0.0;
  bool fit_converged = false;
  // Achieved model means; the mean-matching condition is reported as a
  // diagnostic, not imposed during the fit.
  double fitted_mean_rs = 0.0;
  double fitted_mean_ra = 0.0;
  double observed_mean_rs = 0.0;
  double observed_mean_ra = 0.0;

  // Single-Weibull baseline fit.
  double single_win_pct = 0.0;
  double single_predicted_wins = 0.0;
  double single_games_off = 0.0;
  double single_abs_games_off = 0.0;
  double single_gamma = 0.0;
  double single_objective = 0.0;

  // Fixed-exponent baseline from season run totals.
  double pythwl_win_pct = 0.0;
  double pythwl_predicted_wins = 0.0;
  double pythwl_games_off = 0.0;
  double pythwl_abs_games_off = 0.0;

  // Goodness of fit (mixture, Pearson form).
  double gof = 0.0;
  int gof_df = 0;
  std::vector<ThresholdEntry> gof_thresholds;

  // Quasi-independence test (Pearson form). Unavailable when a run-count
  // row or column of the contingency table is empty.
  bool independence_available = false;
  double independence = 0.0;
  int independence_df = 0;
  std::vector<ThresholdEntry> independence_thresholds;
  std::string independence_note;
};

struct Aggregates {
  SampleStats gamma;
  SampleStats c1;
  SampleStats games_off;
  SampleStats abs_games_off;
  SampleStats single_games_off;
  SampleStats single_abs_games_off;
  SampleStats pythwl_games_off;
  SampleStats pythwl_abs_games_off;
};

struct SeasonReport {
  int season = 0;
  int num_bins = 13;
  std::uint64_t seed = 0;
  double baseline_exponent = 1.83;
  std::vector<TeamRow> teams;
  Aggregates aggregates;
};

// Cross-season comparison built on pooled per-team abs-games-off samples.
struct MultiSeasonReport {
  std::vector<SeasonReport> seasons;
  SampleStats pooled_mixture_abs_off;
  SampleStats pooled_single_abs_off;
  SampleStats pooled_pythwl_abs_off;
  TTestResult mixture_vs_single;
  TTestResult mixture_vs_pythwl;
  // Per-season mean abs games off of the fixed-exponent baseline minus the
  // mixture's, aligned with `seasons`.
  std::vector<double> pythwl_minus_mixture;
};

// Fit every team of one season and assemble the report. Teams are processed
// in parallel; per-team RNG seeds derive from (config seed, team name), so
// results do not depend on scheduling. Errors carry team attribution.
SeasonReport run_season(const std::vector<TeamSeason>& teams,
                        const ReportConfig& config);
// Reads a canonical CSV that must contain exactly one season.
SeasonReport run_season_csv(const std::string& path,
                            const ReportConfig& config);

MultiSeasonReport run_multi_season(const std::vector<std::string>& paths,
                                   const ReportConfig& config);

// JSON (stable key order; byte-identical for identical inputs and seed).
std::string to_json(const SeasonReport& report);
std::string to_json(const MultiSeasonReport& report);
SeasonReport season_report_from_json(const std::string& text);
MultiSeasonReport multi_season_report_from_json(const std::string& text);

void print_table(std::ostream& out, const SeasonReport& report);
void print_summary(std::ostream& out, const MultiSeasonReport& report);

// Plot-ready CSV series: per-season games-off means/sds and the
// baseline-minus-mixture difference series.
void write_plot_csvs(const std::string& directory,
                     const MultiSeasonReport& report);
void write_plot_csvs(const std::string& directory, const SeasonReport& report);

}  // namespace runmix
