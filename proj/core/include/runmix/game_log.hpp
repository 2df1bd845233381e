#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace runmix {

// One game from one team's perspective. Canonical logs carry every physical
// game twice, once per participant. Baseball games cannot tie, so
// runs_scored != runs_allowed always.
struct GameRecord {
  int season = 0;
  std::string team;
  std::string opponent;
  int runs_scored = 0;
  int runs_allowed = 0;
};

struct TeamSeason {
  int season = 0;
  std::string team;
  std::vector<GameRecord> games;

  int games_played() const { return static_cast<int>(games.size()); }
  int wins() const;
  long total_scored() const;
  long total_allowed() const;
  std::vector<int> scored() const;
  std::vector<int> allowed() const;
};

// Histogram over the half-integer bins [-1/2, 1/2), [1/2, 3/2), ...; the
// last bin absorbs the upper tail, so integer scores sit at bin centers.
// Counts are doubles so model-expected (fractional) counts can flow through
// the same fitting interfaces; ingestion always produces whole numbers.
class BinnedHistogram {
 public:
  explicit BinnedHistogram(int num_bins);
  BinnedHistogram(int num_bins, std::vector<double> counts);

  int num_bins() const { return num_bins_; }
  double lower_edge(int k) const;  // k - 0.5
  double upper_edge(int k) const;  // k + 0.5; +inf for the tail bin
  double center(int k) const;      // k, including the tail bin's nominal center
  double count(int k) const;
  double& count(int k);
  const std::vector<double>& counts() const { return counts_; }
  double total() const;
  // Bin-center mean (tail bin at its nominal center); used to seed fits.
  double mean() const;
  bool same_scheme(const BinnedHistogram& other) const {
    return num_bins_ == other.num_bins_;
  }

 private:
  int num_bins_;
  std::vector<double> counts_;
};

struct ParseError : std::runtime_error {
  ParseError(int line_number, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_number) + ": " + what),
        line(line_number) {}
  int line;
};

// Canonical CSV: header `season,team,opponent,runs_scored,runs_allowed`,
// one row per team-game. LF or CRLF. Malformed rows, negative runs, and
// tied scores raise ParseError with the offending line number.
std::vector<GameRecord> parse_game_log(std::istream& in);

// Group records by (season, team), ordered by season then team name.
std::vector<TeamSeason> group_team_seasons(std::vector<GameRecord> records);

BinnedHistogram bin_runs(std::span<const int> runs, int num_bins);

// Result-per-game layout `date,home,away,home_score,away_score` -> canonical
// CSV (two rows per game). The season is the year leading the date field.
void convert_game_results(std::istream& in, std::ostream& out);

}  // namespace runmix
