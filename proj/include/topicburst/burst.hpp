#ifndef TOPICBURST_BURST_HPP
#define TOPICBURST_BURST_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "topicburst/term_stats.hpp"

namespace topicburst {

// Parameters of the k-state rate automaton. State i emits at rate
// min(base_rate * rate_scale^i, 1 - probability_margin); moving up j-i
// states costs (j-i) * transition_gamma * ln(n).
struct BurstConfig {
  double rate_scale = 2.0;
  double transition_gamma = 1.0;
  int num_states = 2;
  double probability_margin = 1e-6;

  void validate() const;
};

// A maximal run of years spent at or above `level`, with the cost reduction
// relative to running those years one state lower.
struct BurstInterval {
  Term term;
  int level = 1;
  int start_year = 0;
  int end_year = 0;
  double weight = 0.0;
};

struct BurstStateSequence {
  std::vector<int> states;  // optimal automaton state per year
  double total_cost = 0.0;
};

struct BurstSummary {
  Term term;
  int burst_count = 0;  // number of level-1 intervals
  int max_level = 0;
  double max_weight = 0.0;
  std::optional<int> first_burst_year;       // earliest level-1 start
  std::optional<int> max_weight_burst_year;  // start of the heaviest interval
};

// Minimum-cost state sequence for the series, computed by dynamic
// programming with the automaton starting in state 0 before the first
// year. Among equal-cost sequences the lexicographically smallest one
// (lower states first) is returned.
BurstStateSequence burst_state_sequence(const TermTimeSeries& series,
                                        const BurstConfig& config);

// Burst intervals of the optimal state sequence, one per maximal run at or
// above each level >= 1, ordered by (level, start year). A series that
// never leaves state 0 yields an empty list.
std::vector<BurstInterval> detect_bursts(const TermTimeSeries& series,
                                         const BurstConfig& config);

// All intervals must belong to one term. An empty list gives count 0 and
// no first-burst year.
BurstSummary burst_summary(const std::vector<BurstInterval>& intervals);

// Terms with at least one burst, ranked by max weight descending, ties
// broken lexicographically ascending.
std::vector<Term> rank_by_burstiness(const std::map<Term, BurstSummary>& summaries);

// CSV rows term, level, start_year, end_year, weight (6 decimals), with a
// header row.
std::string export_burst_list(const std::vector<BurstInterval>& intervals);

}  // namespace topicburst

#endif
