#include "runmix/report.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "runmix/baselines.hpp"
#include "runmix/rng.hpp"

namespace runmix {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string team_tag(const TeamSeason& ts) {
  return "team " + ts.team + " season " + std::to_string(ts.season) + ": ";
}

TeamRow build_team_row_impl(const TeamSeason& ts, const ReportConfig& config) {
  const int num_bins = config.fit.num_bins;
  const auto scored = ts.scored();
  const auto allowed = ts.allowed();
  const BinnedHistogram rs_hist = bin_runs(scored, num_bins);
  const BinnedHistogram ra_hist = bin_runs(allowed, num_bins);

  FitConfig fit_cfg = config.fit;
  fit_cfg.seed = splitmix64(config.fit.seed ^ fnv1a(ts.team) ^
                            static_cast<std::uint64_t>(ts.season));

  const FitResult single = fit_single_weibull(rs_hist, ra_hist, fit_cfg);
  const FitResult mix = fit_mixture_seeded(rs_hist, ra_hist, fit_cfg, single);

  TeamRow row;
  row.team = ts.team;
  row.games = ts.games_played();
  row.observed_wins = ts.wins();
  row.observed_losses = row.games - row.observed_wins;

  row.predicted_win_pct = mixture_win_pct(mix.params);
  row.predicted_wins = predicted_wins(row.predicted_win_pct, row.games);
  row.games_off = row.predicted_wins - row.observed_wins;
  row.abs_games_off = std::fabs(row.games_off);
  row.gamma = mix.params.scored.gamma;
  row.c1 = mix.params.scored.weight1;
  row.c1_prime = mix.params.allowed.weight1;
  row.alpha_rs1 = mix.params.scored.alpha1;
  row.alpha_rs2 = mix.params.scored.alpha2;
  row.alpha_ra1 = mix.params.allowed.alpha1;
  row.alpha_ra2 = mix.params.allowed.alpha2;
  row.objective = mix.objective;
  row.fit_converged = mix.converged;
  row.fitted_mean_rs = mixture_mean(mix.params.scored);
  row.fitted_mean_ra = mixture_mean(mix.params.allowed);
  row.observed_mean_rs =
      static_cast<double>(ts.total_scored()) / row.games;
  row.observed_mean_ra =
      static_cast<double>(ts.total_allowed()) / row.games;

  row.single_win_pct = mixture_win_pct(single.params);
  row.single_predicted_wins = predicted_wins(row.single_win_pct, row.games);
  row.single_games_off = row.single_predicted_wins - row.observed_wins;
  row.single_abs_games_off = std::fabs(row.single_games_off);
  row.single_gamma = single.params.scored.gamma;
  row.single_objective = single.objective;

  row.pythwl_win_pct =
      pyth_wl(static_cast<double>(ts.total_scored()),
              static_cast<double>(ts.total_allowed()), config.baseline_exponent);
  row.pythwl_predicted_wins = predicted_wins(row.pythwl_win_pct, row.games);
  row.pythwl_games_off = row.pythwl_predicted_wins - row.observed_wins;
  row.pythwl_abs_games_off = std::fabs(row.pythwl_games_off);

  const GofResult gof =
      gof_statistic(rs_hist, ra_hist, mix.params, 7, config.comparisons);
  row.gof = gof.statistic;
  row.gof_df = gof.df;
  row.gof_thresholds = gof.thresholds;

  const ContingencyTable table =
      build_contingency(ts, config.contingency_dimension);
  if (table.margins_positive()) {
    const IndependenceResult ind =
        independence_test(table, config.comparisons);
    row.independence_available = true;
    row.independence = ind.statistic;
    row.independence_df = ind.df;
    row.independence_thresholds = ind.thresholds;
  } else {
    row.independence_available = false;
    row.independence_note =
        "contingency table has a run-count row or column with no "
        "off-diagonal entries; quasi-independence test not applicable";
  }
  return row;
}

TeamRow build_team_row(const TeamSeason& ts, const ReportConfig& config) {
  try {
    return build_team_row_impl(ts, config);
  } catch (const FitFailure& e) {
    throw FitFailure(team_tag(ts) + e.what(), e.best_incumbent);
  } catch (const std::domain_error& e) {
    throw std::domain_error(team_tag(ts) + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(team_tag(ts) + e.what());
  } catch (const std::exception& e) {
    throw std::runtime_error(team_tag(ts) + e.what());
  }
}

Aggregates compute_aggregates(const std::vector<TeamRow>& rows) {
  auto collect = [&](auto member) {
    std::vector<double> v;
    v.reserve(rows.size());
    for (const auto& r : rows) v.push_back(r.*member);
    return v;
  };
  Aggregates agg;
  agg.gamma = summarize(collect(&TeamRow::gamma));
  agg.c1 = summarize(collect(&TeamRow::c1));
  agg.games_off = summarize(collect(&TeamRow::games_off));
  agg.abs_games_off = summarize(collect(&TeamRow::abs_games_off));
  agg.single_games_off = summarize(collect(&TeamRow::single_games_off));
  agg.single_abs_games_off = summarize(collect(&TeamRow::single_abs_games_off));
  agg.pythwl_games_off = summarize(collect(&TeamRow::pythwl_games_off));
  agg.pythwl_abs_games_off = summarize(collect(&TeamRow::pythwl_abs_games_off));
  return agg;
}

ordered_json stats_to_json(const SampleStats& s) {
  return ordered_json{{"mean", s.mean}, {"sd", s.sd}, {"median", s.median}};
}

SampleStats stats_from_json(const ordered_json& j) {
  SampleStats s;
  s.mean = j.at("mean").get<double>();
  s.sd = j.at("sd").get<double>();
  s.median = j.at("median").get<double>();
  return s;
}

ordered_json thresholds_to_json(const std::vector<ThresholdEntry>& entries) {
  ordered_json arr = ordered_json::array();
  for (const auto& e : entries) {
    arr.push_back(ordered_json{{"level", e.level},
                               {"bonferroni", e.bonferroni},
                               {"critical_value", e.critical_value},
                               {"passes", e.passes}});
  }
  return arr;
}

std::vector<ThresholdEntry> thresholds_from_json(const ordered_json& arr) {
  std::vector<ThresholdEntry> entries;
  for (const auto& j : arr) {
    ThresholdEntry e;
    e.level = j.at("level").get<double>();
    e.bonferroni = j.at("bonferroni").get<bool>();
    e.critical_value = j.at("critical_value").get<double>();
    e.passes = j.at("passes").get<bool>();
    entries.push_back(e);
  }
  return entries;
}

ordered_json team_to_json(const TeamRow& r) {
  ordered_json j;
  j["team"] = r.team;
  j["games"] = r.games;
  j["observed_wins"] = r.observed_wins;
  j["observed_losses"] = r.observed_losses;
  j["mixture"] = ordered_json{
      {"win_pct", r.predicted_win_pct},
      {"predicted_wins", r.predicted_wins},
      {"games_off", r.games_off},
      {"abs_games_off", r.abs_games_off},
      {"gamma", r.gamma},
      {"c1", r.c1},
      {"c1_prime", r.c1_prime},
      {"alpha_rs", ordered_json::array({r.alpha_rs1, r.alpha_rs2})},
      {"alpha_ra", ordered_json::array({r.alpha_ra1, r.alpha_ra2})},
      {"objective", r.objective},
      {"converged", r.fit_converged},
      {"fitted_mean_rs", r.fitted_mean_rs},
      {"fitted_mean_ra", r.fitted_mean_ra},
      {"observed_mean_rs", r.observed_mean_rs},
      {"observed_mean_ra", r.observed_mean_ra},
  };
  j["single"] = ordered_json{
      {"win_pct", r.single_win_pct},
      {"predicted_wins", r.single_predicted_wins},
      {"games_off", r.single_games_off},
      {"abs_games_off", r.single_abs_games_off},
      {"gamma", r.single_gamma},
      {"objective", r.single_objective},
  };
  j["pythwl"] = ordered_json{
      {"win_pct", r.pythwl_win_pct},
      {"predicted_wins", r.pythwl_predicted_wins},
      {"games_off", r.pythwl_games_off},
      {"abs_games_off", r.pythwl_abs_games_off},
  };
  j["gof"] = ordered_json{{"statistic", r.gof},
                          {"df", r.gof_df},
                          {"form", "pearson"},
                          {"thresholds", thresholds_to_json(r.gof_thresholds)}};
  if (r.independence_available) {
    j["independence"] =
        ordered_json{{"available", true},
                     {"statistic", r.independence},
                     {"df", r.independence_df},
                     {"form", "pearson"},
                     {"thresholds", thresholds_to_json(r.independence_thresholds)}};
  } else {
    j["independence"] =
        ordered_json{{"available", false}, {"note", r.independence_note}};
  }
  return j;
}

TeamRow team_from_json(const ordered_json& j) {
  TeamRow r;
  r.team = j.at("team").get<std::string>();
  r.games = j.at("games").get<int>();
  r.observed_wins = j.at("observed_wins").get<int>();
  r.observed_losses = j.at("observed_losses").get<int>();
  const auto& mix = j.at("mixture");
  r.predicted_win_pct = mix.at("win_pct").get<double>();
  r.predicted_wins = mix.at("predicted_wins").get<double>();
  r.games_off = mix.at("games_off").get<double>();
  r.abs_games_off = mix.at("abs_games_off").get<double>();
  r.gamma = mix.at("gamma").get<double>();
  r.c1 = mix.at("c1").get<double>();
  r.c1_prime = mix.at("c1_prime").get<double>();
  r.alpha_rs1 = mix.at("alpha_rs").at(0).get<double>();
  r.alpha_rs2 = mix.at("alpha_rs").at(1).get<double>();
  r.alpha_ra1 = mix.at("alpha_ra").at(0).get<double>();
  r.alpha_ra2 = mix.at("alpha_ra").at(1).get<double>();
  r.objective = mix.at("objective").get<double>();
  r.fit_converged = mix.at("converged").get<bool>();
  r.fitted_mean_rs = mix.at("fitted_mean_rs").get<double>();
  r.fitted_mean_ra = mix.at("fitted_mean_ra").get<double>();
  r.observed_mean_rs = mix.at("observed_mean_rs").get<double>();
  r.observed_mean_ra = mix.at("observed_mean_ra").get<double>();
  const auto& single = j.at("single");
  r.single_win_pct = single.at("win_pct").get<double>();
  r.single_predicted_wins = single.at("predicted_wins").get<double>();
  r.single_games_off = single.at("games_off").get<double>();
  r.single_abs_games_off = single.at("abs_games_off").get<double>();
  r.single_gamma = single.at("gamma").get<double>();
  r.single_objective = single.at("objective").get<double>();
  const auto& pyth = j.at("pythwl");
  r.pythwl_win_pct = pyth.at("win_pct").get<double>();
  r.pythwl_predicted_wins = pyth.at("predicted_wins").get<double>();
  r.pythwl_games_off = pyth.at("games_off").get<double>();
  r.pythwl_abs_games_off = pyth.at("abs_games_off").get<double>();
  const auto& gof = j.at("gof");
  r.gof = gof.at("statistic").get<double>();
  r.gof_df = gof.at("df").get<int>();
  r.gof_thresholds = thresholds_from_json(gof.at("thresholds"));
  const auto& ind = j.at("independence");
  r.independence_available = ind.at("available").get<bool>();
  if (r.independence_available) {
    r.independence = ind.at("statistic").get<double>();
    r.independence_df = ind.at("df").get<int>();
    r.independence_thresholds = thresholds_from_json(ind.at("thresholds"));
  } else {
    r.independence_note = ind.at("note").get<std::string>();
  }
  return r;
}

ordered_json aggregates_to_json(const Aggregates& a) {
  ordered_json j;
  j["gamma"] = stats_to_json(a.gamma);
  j["c1"] = stats_to_json(a.c1);
  j["games_off"] = stats_to_json(a.games_off);
  j["abs_games_off"] = stats_to_json(a.abs_games_off);
  j["single_games_off"] = stats_to_json(a.single_games_off);
  j["single_abs_games_off"] = stats_to_json(a.single_abs_games_off);
  j["pythwl_games_off"] = stats_to_json(a.pythwl_games_off);
  j["pythwl_abs_games_off"] = stats_to_json(a.pythwl_abs_games_off);
  return j;
}

Aggregates aggregates_from_json(const ordered_json& j) {
  Aggregates a;
  a.gamma = stats_from_json(j.at("gamma"));
  a.c1 = stats_from_json(j.at("c1"));
  a.games_off = stats_from_json(j.at("games_off"));
  a.abs_games_off = stats_from_json(j.at("abs_games_off"));
  a.single_games_off = stats_from_json(j.at("single_games_off"));
  a.single_abs_games_off = stats_from_json(j.at("single_abs_games_off"));
  a.pythwl_games_off = stats_from_json(j.at("pythwl_games_off"));
  a.pythwl_abs_games_off = stats_from_json(j.at("pythwl_abs_games_off"));
  return a;
}

ordered_json season_to_json(const SeasonReport& report) {
  ordered_json j;
  j["season"] = report.season;
  j["num_bins"] = report.num_bins;
  j["seed"] = report.seed;
  j["baseline_exponent"] = report.baseline_exponent;
  ordered_json teams = ordered_json::array();
  for (const auto& row : report.teams) teams.push_back(team_to_json(row));
  j["teams"] = std::move(teams);
  j["aggregates"] = aggregates_to_json(report.aggregates);
  return j;
}

SeasonReport season_from_json(const ordered_json& j) {
  SeasonReport report;
  report.season = j.at("season").get<int>();
  report.num_bins = j.at("num_bins").get<int>();
  report.seed = j.at("seed").get<std::uint64_t>();
  report.baseline_exponent = j.at("baseline_exponent").get<double>();
  for (const auto& t : j.at("teams")) report.teams.push_back(team_from_json(t));
  report.aggregates = aggregates_from_json(j.at("aggregates"));
  return report;
}

ordered_json ttest_to_json(const TTestResult& t) {
  return ordered_json{{"t", t.t_statistic},
                      {"df", t.df},
                      {"p_value", t.p_value},
                      {"ci95", ordered_json::array({t.ci95.first, t.ci95.second})},
                      {"mean_difference", t.mean_difference}};
}

TTestResult ttest_from_json(const ordered_json& j) {
  TTestResult t;
  t.t_statistic = j.at("t").get<double>();
  t.df = j.at("df").get<double>();
  t.p_value = j.at("p_value").get<double>();
  t.ci95 = {j.at("ci95").at(0).get<double>(), j.at("ci95").at(1).get<double>()};
  t.mean_difference = j.at("mean_difference").get<double>();
  return t;
}

std::string verdict(const std::vector<ThresholdEntry>& entries) {
  // Most stringent threshold the statistic clears.
  for (const auto& e : entries)
    if (e.level == 0.95 && !e.bonferroni && e.passes) return "95";
  for (const auto& e : entries)
    if (e.level == 0.99 && !e.bonferroni && e.passes) return "99";
  for (const auto& e : entries)
    if (e.level == 0.95 && e.bonferroni && e.passes) return "95B";
  for (const auto& e : entries)
    if (e.level == 0.99 && e.bonferroni && e.passes) return "99B";
  return "fail";
}

void write_games_off_csv(const std::filesystem::path& path,
                         const std::vector<SeasonReport>& seasons) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "season,mixture_mean_abs_off,mixture_sd_abs_off,"
         "single_mean_abs_off,single_sd_abs_off,"
         "pythwl_mean_abs_off,pythwl_sd_abs_off\n";
  out << std::setprecision(10);
  for (const auto& s : seasons) {
    out << s.season << ',' << s.aggregates.abs_games_off.mean << ','
        << s.aggregates.abs_games_off.sd << ','
        << s.aggregates.single_abs_games_off.mean << ','
        << s.aggregates.single_abs_games_off.sd << ','
        << s.aggregates.pythwl_abs_games_off.mean << ','
        << s.aggregates.pythwl_abs_games_off.sd << '\n';
  }
}

void write_diff_csv(const std::filesystem::path& path,
                    const std::vector<SeasonReport>& seasons) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "season,pythwl_mean_abs_off_minus_mixture\n";
  out << std::setprecision(10);
  for (const auto& s : seasons) {
    out << s.season << ','
        << s.aggregates.pythwl_abs_games_off.mean -
               s.aggregates.abs_games_off.mean
        << '\n';
  }
}

}  // namespace

SampleStats summarize(std::vector<double> values) {
  if (values.empty())
    throw std::invalid_argument("summarize: empty sample");
  SampleStats s;
  double acc = 0.0;
  for (double v : values) acc += v;
  s.mean = acc / static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.sd = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  std::sort(values.begin(), values.end());
  const size_t n = values.size();
  s.median = (n % 2 == 1) ? values[n / 2]
                          : 0.5 * (values[n / 2 - 1] + values[n / 2]);
  return s;
}

SeasonReport run_season(const std::vector<TeamSeason>& teams,
                        const ReportConfig& config) {
  if (teams.empty()) throw std::invalid_argument("run_season: no teams");
  const int season = teams.front().season;
  for (const auto& ts : teams)
    if (ts.season != season)
      throw std::invalid_argument(
          "run_season: input mixes seasons " + std::to_string(season) +
          " and " + std::to_string(ts.season));

  std::vector<std::future<TeamRow>> futures;
  futures.reserve(teams.size());
  for (const auto& ts : teams) {
    futures.push_back(std::async(std::launch::async, [&ts, &config] {
      return build_team_row(ts, config);
    }));
  }

  SeasonReport report;
  report.season = season;
  report.num_bins = config.fit.num_bins;
  report.seed = config.fit.seed;
  report.baseline_exponent = config.baseline_exponent;
  report.teams.reserve(teams.size());
  for (auto& f : futures) report.teams.push_back(f.get());
  report.aggregates = compute_aggregates(report.teams);
  return report;
}

SeasonReport run_season_csv(const std::string& path,
                            const ReportConfig& config) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  auto teams = group_team_seasons(parse_game_log(in));
  if (teams.empty()) throw std::invalid_argument(path + ": no games");
  return run_season(teams, config);
}

MultiSeasonReport run_multi_season(const std::vector<std::string>& paths,
                                   const ReportConfig& config) {
  if (paths.size() < 2)
    throw std::invalid_argument("run_multi_season: need at least two seasons");

  MultiSeasonReport multi;
  for (const auto& path : paths)
    multi.seasons.push_back(run_season_csv(path, config));

  std::vector<double> mix_off, single_off, pythwl_off;
  for (const auto& s : multi.seasons) {
    for (const auto& row : s.teams) {
      mix_off.push_back(row.abs_games_off);
      single_off.push_back(row.single_abs_games_off);
      pythwl_off.push_back(row.pythwl_abs_games_off);
    }
    multi.pythwl_minus_mixture.push_back(
        s.aggregates.pythwl_abs_games_off.mean -
        s.aggregates.abs_games_off.mean);
  }
  multi.pooled_mixture_abs_off = summarize(mix_off);
  multi.pooled_single_abs_off = summarize(single_off);
  multi.pooled_pythwl_abs_off = summarize(pythwl_off);
  multi.mixture_vs_single = welch_t_test(mix_off, single_off);
  multi.mixture_vs_pythwl = welch_t_test(mix_off, pythwl_off);
  return multi;
}

std::string to_json(const SeasonReport& report) {
  return season_to_json(report).dump(2) + "\n";
}

std::string to_json(const MultiSeasonReport& report) {
  ordered_json j;
  ordered_json seasons = ordered_json::array();
  for (const auto& s : report.seasons) seasons.push_back(season_to_json(s));
  j["seasons"] = std::move(seasons);
  j["pooled"] = ordered_json{
      {"mixture_abs_off", stats_to_json(report.pooled_mixture_abs_off)},
      {"single_abs_off", stats_to_json(report.pooled_single_abs_off)},
      {"pythwl_abs_off", stats_to_json(report.pooled_pythwl_abs_off)},
      {"mixture_vs_single", ttest_to_json(report.mixture_vs_single)},
      {"mixture_vs_pythwl", ttest_to_json(report.mixture_vs_pythwl)},
  };
  ordered_json diffs = ordered_json::array();
  for (size_t i = 0; i < report.seasons.size(); ++i) {
    diffs.push_back(ordered_json{{"season", report.seasons[i].season},
                                 {"difference", report.pythwl_minus_mixture[i]}});
  }
  j["pythwl_minus_mixture"] = std::move(diffs);
  return j.dump(2) + "\n";
}

SeasonReport season_report_from_json(const std::string& text) {
  return season_from_json(ordered_json::parse(text));
}

MultiSeasonReport multi_season_report_from_json(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  MultiSeasonReport multi;
  for (const auto& s : j.at("seasons"))
    multi.seasons.push_back(season_from_json(s));
  const auto& pooled = j.at("pooled");
  multi.pooled_mixture_abs_off = stats_from_json(pooled.at("mixture_abs_off"));
  multi.pooled_single_abs_off = stats_from_json(pooled.at("single_abs_off"));
  multi.pooled_pythwl_abs_off = stats_from_json(pooled.at("pythwl_abs_off"));
  multi.mixture_vs_single = ttest_from_json(pooled.at("mixture_vs_single"));
  multi.mixture_vs_pythwl = ttest_from_json(pooled.at("mixture_vs_pythwl"));
  for (const auto& d : j.at("pythwl_minus_mixture"))
    multi.pythwl_minus_mixture.push_back(d.at("difference").get<double>());
  return multi;
}

void print_table(std::ostream& out, const SeasonReport& report) {
  out << "season " << report.season << "  (" << report.teams.size()
      << " teams, " << report.num_bins << " bins, seed " << report.seed
      << ")\n";
  out << std::left << std::setw(6) << "team" << std::right << std::setw(5)
      << "G" << std::setw(5) << "W" << std::setw(5) << "L" << std::setw(8)
      << "pWL" << std::setw(8) << "pW" << std::setw(8) << "off" << std::setw(7)
      << "|off|" << std::setw(7) << "gamma" << std::setw(6) << "c1"
      << std::setw(6) << "c1'" << std::setw(9) << "gof" << std::setw(6)
      << "ok@" << std::setw(9) << "indep" << std::setw(6) << "ok@" << "\n";
  for (const auto& r : report.teams) {
    out << std::left << std::setw(6) << r.team << std::right << std::fixed
        << std::setw(5) << r.games << std::setw(5) << r.observed_wins
        << std::setw(5) << r.observed_losses << std::setprecision(3)
        << std::setw(8) << r.predicted_win_pct << std::setprecision(1)
        << std::setw(8) << r.predicted_wins << std::showpos << std::setw(8)
        << r.games_off << std::noshowpos << std::setw(7) << r.abs_games_off
        << std::setprecision(2) << std::setw(7) << r.gamma << std::setw(6)
        << r.c1 << std::setw(6) << r.c1_prime << std::setw(9) << r.gof
        << std::setw(6) << verdict(r.gof_thresholds);
    if (r.independence_available)
      out << std::setw(9) << r.independence << std::setw(6)
          << verdict(r.independence_thresholds);
    else
      out << std::setw(9) << "n/a" << std::setw(6) << "-";
    out << "\n";
    out.unsetf(std::ios::fixed);
    out << std::setprecision(6);
  }
  const auto& a = report.aggregates;
  out << std::setprecision(4);
  out << "gamma:         mean " << a.gamma.mean << "  sd " << a.gamma.sd
      << "  median " << a.gamma.median << "\n";
  out << "c1:            mean " << a.c1.mean << "  sd " << a.c1.sd
      << "  median " << a.c1.median << "\n";
  out << "mixture |off|: mean " << a.abs_games_off.mean << "  sd "
      << a.abs_games_off.sd << "  median " << a.abs_games_off.median << "\n";
  out << "single  |off|: mean " << a.single_abs_games_off.mean << "  sd "
      << a.single_abs_games_off.sd << "  median "
      << a.single_abs_games_off.median << "\n";
  out << "pythWL  |off|: mean " << a.pythwl_abs_games_off.mean << "  sd "
      << a.pythwl_abs_games_off.sd << "  median "
      << a.pythwl_abs_games_off.median << " (exponent "
      << report.baseline_exponent << ")\n";
  out << std::setprecision(6);
}

void print_summary(std::ostream& out, const MultiSeasonReport& report) {
  out << std::setprecision(4);
  out << "season  mixture|off|  single|off|  pythWL|off|  pythWL-mixture\n";
  for (size_t i = 0; i < report.seasons.size(); ++i) {
    const auto& s = report.seasons[i];
    out << s.season << "  " << std::setw(12)
        << s.aggregates.abs_games_off.mean << "  " << std::setw(11)
        << s.aggregates.single_abs_games_off.mean << "  " << std::setw(11)
        << s.aggregates.pythwl_abs_games_off.mean << "  " << std::setw(14)
        << report.pythwl_minus_mixture[i] << "\n";
  }
  out << "pooled mixture |off|: mean " << report.pooled_mixture_abs_off.mean
      << "  sd " << report.pooled_mixture_abs_off.sd << "\n";
  out << "pooled single  |off|: mean " << report.pooled_single_abs_off.mean
      << "  sd " << report.pooled_single_abs_off.sd << "\n";
  out << "pooled pythWL  |off|: mean " << report.pooled_pythwl_abs_off.mean
      << "  sd " << report.pooled_pythwl_abs_off.sd << "\n";
  const auto& ts = report.mixture_vs_single;
  out << "mixture vs single: t " << ts.t_statistic << "  df " << ts.df
      << "  p " << ts.p_value << "  ci95 [" << ts.ci95.first << ", "
      << ts.ci95.second << "]\n";
  const auto& tp = report.mixture_vs_pythwl;
  out << "mixture vs pythWL: t " << tp.t_statistic << "  df " << tp.df
      << "  p " << tp.p_value << "  ci95 [" << tp.ci95.first << ", "
      << tp.ci95.second << "]\n";
}

void write_plot_csvs(const std::string& directory,
                     const MultiSeasonReport& report) {
  const std::filesystem::path dir(directory);
  std::filesystem::create_directories(dir);
  write_games_off_csv(dir / "games_off_by_season.csv", report.seasons);
  write_diff_csv(dir / "pythwl_minus_mixture_by_season.csv", report.seasons);
}

void write_plot_csvs(const std::string& directory, const SeasonReport& report) {
  const std::filesystem::path dir(directory);
  std::filesystem::create_directories(dir);
  const std::vector<SeasonReport> one{report};
  write_games_off_csv(dir / "games_off_by_season.csv", one);
  write_diff_csv(dir / "pythwl_minus_mixture_by_season.csv", one);
}

}  // namespace runmix
