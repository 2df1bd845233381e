#include "runmix/game_log.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

namespace runmix {
namespace {

std::string strip_cr(std::string s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

int parse_int_field(const std::string& s, int line, const char* name) {
  if (s.empty()) throw ParseError(line, std::string(name) + " is empty");
  size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, std::string(name) + " is not an integer: '" + s + "'");
  }
  if (pos != s.size())
    throw ParseError(line, std::string(name) + " is not an integer: '" + s + "'");
  return value;
}

int parse_runs_field(const std::string& s, int line, const char* name) {
  const int value = parse_int_field(s, line, name);
  if (value < 0)
    throw ParseError(line, std::string(name) + " must be non-negative, got " + s);
  return value;
}

int parse_season_from_date(const std::string& date, int line) {
  if (date.size() < 4 || !std::all_of(date.begin(), date.begin() + 4,
                                      [](unsigned char c) { return std::isdigit(c); }))
    throw ParseError(line, "date must start with a four-digit year: '" + date + "'");
  return std::stoi(date.substr(0, 4));
}

}  // namespace

int TeamSeason::wins() const {
  int w = 0;
  for (const auto& g : games)
    if (g.runs_scored > g.runs_allowed) ++w;
  return w;
}

long TeamSeason::total_scored() const {
  long t = 0;
  for (const auto& g : games) t += g.runs_scored;
  return t;
}

long TeamSeason::total_allowed() const {
  long t = 0;
  for (const auto& g : games) t += g.runs_allowed;
  return t;
}

std::vector<int> TeamSeason::scored() const {
  std::vector<int> r;
  r.reserve(games.size());
  for (const auto& g : games) r.push_back(g.runs_scored);
  return r;
}

std::vector<int> TeamSeason::allowed() const {
  std::vector<int> r;
  r.reserve(games.size());
  for (const auto& g : games) r.push_back(g.runs_allowed);
  return r;
}

BinnedHistogram::BinnedHistogram(int num_bins)
    : num_bins_(num_bins), counts_(static_cast<size_t>(num_bins), 0.0) {
  if (num_bins < 2)
    throw std::invalid_argument("BinnedHistogram: num_bins must be >= 2");
}

BinnedHistogram::BinnedHistogram(int num_bins, std::vector<double> counts)
    : num_bins_(num_bins), counts_(std::move(counts)) {
  if (num_bins < 2)
    throw std::invalid_argument("BinnedHistogram: num_bins must be >= 2");
  if (counts_.size() != static_cast<size_t>(num_bins))
    throw std::invalid_argument("BinnedHistogram: counts size mismatch");
  for (double c : counts_)
    if (!(c >= 0.0))
      throw std::invalid_argument("BinnedHistogram: counts must be non-negative");
}

double BinnedHistogram::lower_edge(int k) const { return k - 0.5; }

double BinnedHistogram::upper_edge(int k) const {
  if (k == num_bins_ - 1) return std::numeric_limits<double>::infinity();
  return k + 0.5;
}

double BinnedHistogram::center(int k) const { return static_cast<double>(k); }

double BinnedHistogram::count(int k) const { return counts_.at(k); }

double& BinnedHistogram::count(int k) { return counts_.at(k); }

double BinnedHistogram::total() const {
  double t = 0.0;
  for (double c : counts_) t += c;
  return t;
}

double BinnedHistogram::mean() const {
  const double t = total();
  if (t <= 0.0) throw std::domain_error("BinnedHistogram::mean: empty histogram");
  double acc = 0.0;
  for (int k = 0; k < num_bins_; ++k) acc += counts_[k] * center(k);
  return acc / t;
}

std::vector<GameRecord> parse_game_log(std::istream& in) {
  std::string line;
  int line_no = 0;

  if (!std::getline(in, line)) throw ParseError(1, "missing header");
  ++line_no;
  if (strip_cr(line) != "season,team,opponent,runs_scored,runs_allowed")
    throw ParseError(1,
                     "expected header 'season,team,opponent,runs_scored,runs_allowed'");

  std::vector<GameRecord> records;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    const auto fields = split_csv(line);
    if (fields.size() != 5)
      throw ParseError(line_no, "expected 5 fields, got " +
                                    std::to_string(fields.size()));
    GameRecord rec;
    rec.season = parse_int_field(fields[0], line_no, "season");
    rec.team = fields[1];
    rec.opponent = fields[2];
    if (rec.team.empty()) throw ParseError(line_no, "team is empty");
    if (rec.opponent.empty()) throw ParseError(line_no, "opponent is empty");
    rec.runs_scored = parse_runs_field(fields[3], line_no, "runs_scored");
    rec.runs_allowed = parse_runs_field(fields[4], line_no, "runs_allowed");
    if (rec.runs_scored == rec.runs_allowed)
      throw ParseError(line_no,
                       "runs_scored equals runs_allowed (" +
                           std::to_string(rec.runs_scored) +
                           "); baseball games cannot tie");
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<TeamSeason> group_team_seasons(std::vector<GameRecord> records) {
  std::map<std::pair<int, std::string>, TeamSeason> by_key;
  for (auto& rec : records) {
    auto key = std::make_pair(rec.season, rec.team);
    auto& ts = by_key[key];
    ts.season = rec.season;
    ts.team = rec.team;
    ts.games.push_back(std::move(rec));
  }
  std::vector<TeamSeason> seasons;
  seasons.reserve(by_key.size());
  for (auto& [key, ts] : by_key) seasons.push_back(std::move(ts));
  return seasons;
}

BinnedHistogram bin_runs(std::span<const int> runs, int num_bins) {
  if (num_bins < 2)
    throw std::invalid_argument("bin_runs: num_bins must be >= 2");
  BinnedHistogram hist(num_bins);
  for (int r : runs) {
    if (r < 0) throw std::invalid_argument("bin_runs: runs must be non-negative");
    const int k = std::min(r, num_bins - 1);
    hist.count(k) += 1.0;
  }
  return hist;
}

void convert_game_results(std::istream& in, std::ostream& out) {
  std::string line;
  int line_no = 0;

  if (!std::getline(in, line)) throw ParseError(1, "missing header");
  ++line_no;
  if (strip_cr(line) != "date,home,away,home_score,away_score")
    throw ParseError(1, "expected header 'date,home,away,home_score,away_score'");

  out << "season,team,opponent,runs_scored,runs_allowed\n";
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    const auto fields = split_csv(line);
    if (fields.size() != 5)
      throw ParseError(line_no, "expected 5 fields, got " +
                                    std::to_string(fields.size()));
    const int season = parse_season_from_date(fields[0], line_no);
    const std::string& home = fields[1];
    const std::string& away = fields[2];
    if (home.empty()) throw ParseError(line_no, "home team is empty");
    if (away.empty()) throw ParseError(line_no, "away team is empty");
    const int home_score = parse_runs_field(fields[3], line_no, "home_score");
    const int away_score = parse_runs_field(fields[4], line_no, "away_score");
    if (home_score == away_score)
      throw ParseError(line_no, "tied score " + std::to_string(home_score) +
                                    "-" + std::to_string(away_score) +
                                    "; baseball games cannot tie");
    out << season << ',' << home << ',' << away << ',' << home_score << ','
        << away_score << '\n';
    out << season << ',' << away << ',' << home << ',' << away_score << ','
        << home_score << '\n';
  }
}

}  // namespace runmix
