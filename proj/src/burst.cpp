#include "topicburst/burst.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "topicburst/text_format.hpp"

namespace topicburst {

void BurstConfig::validate() const {
  if (!(rate_scale > 1.0)) throw std::invalid_argument("rate_scale must be > 1");
  if (transition_gamma < 0.0) throw std::invalid_argument("transition_gamma must be >= 0");
  if (num_states < 2) throw std::invalid_argument("num_states must be >= 2");
  if (!(probability_margin > 0.0) || !(probability_margin < 0.5)) {
    throw std::invalid_argument("probability_margin must lie in (0, 0.5)");
  }
}

namespace {

struct CostModel {
  std::size_t years = 0;
  int states = 0;
  std::vector<double> state_rate;          // emission probability per state
  std::vector<std::vector<double>> fit;    // fit[t][i]: cost of year t in state i
  double up_step = 0.0;                    // cost per state climbed

  double transition(int from, int to) const {
    return to > from ? static_cast<double>(to - from) * up_step : 0.0;
  }
};

CostModel build_cost_model(const TermTimeSeries& series, const BurstConfig& config) {
  config.validate();
  const std::size_t n = series.docs_total.size();
  if (n == 0 || series.docs_with_term.size() != n) {
    throw std::invalid_argument("series must be non-empty with aligned counts");
  }
  long long sum_with = 0;
  long long sum_total = 0;
  for (std::size_t t = 0; t < n; ++t) {
    const long long r = series.docs_with_term[t];
    const long long d = series.docs_total[t];
    if (r < 0 || d < 0 || r > d) {
      throw std::invalid_argument("series counts must satisfy 0 <= r_t <= d_t");
    }
    sum_with += r;
    sum_total += d;
  }
  if (sum_total == 0) throw std::invalid_argument("series covers no documents");
  if (sum_with == 0) throw std::invalid_argument("series has no term occurrences");

  CostModel model;
  model.years = n;
  model.states = config.num_states;
  const double base_rate =
      static_cast<double>(sum_with) / static_cast<double>(sum_total);
  const double cap = 1.0 - config.probability_margin;
  model.state_rate.resize(config.num_states);
  for (int i = 0; i < config.num_states; ++i) {
    model.state_rate[i] = std::min(base_rate * std::pow(config.rate_scale, i), cap);
  }
  model.up_step = config.transition_gamma * std::log(static_cast<double>(n));
  model.fit.assign(n, std::vector<double>(config.num_states, 0.0));
  for (std::size_t t = 0; t < n; ++t) {
    const auto r = static_cast<double>(series.docs_with_term[t]);
    const auto d = static_cast<double>(series.docs_total[t]);
    for (int i = 0; i < config.num_states; ++i) {
      const double p = model.state_rate[i];
      // -(r ln p + (d - r) ln(1 - p)); zero-document years cost nothing.
      model.fit[t][i] = -(r * std::log(p) + (d - r) * std::log1p(-p));
    }
  }
  return model;
}

}  // namespace

BurstStateSequence burst_state_sequence(const TermTimeSeries& series,
                                        const BurstConfig& config) {
  const CostModel model = build_cost_model(series, config);
  const std::size_t n = model.years;
  const int k = model.states;

  // Suffix costs, filled back to front: suffix[t][i] is the cost of the best
  // completion from year t onward given state i at year t. Evaluation order
  // is fixed as fit + (transition + suffix) so that a candidate sequence
  // re-evaluated by the same right-to-left fold reproduces the value bit for
  // bit; ties always resolve to the lower state, which makes the chosen
  // sequence the lexicographically smallest optimum.
  std::vector<std::vector<double>> suffix(n, std::vector<double>(k, 0.0));
  for (int i = 0; i < k; ++i) suffix[n - 1][i] = model.fit[n - 1][i];
  for (std::size_t t = n - 1; t-- > 0;) {
    for (int i = 0; i < k; ++i) {
      double best = std::numeric_limits<double>::infinity();
      for (int j = 0; j < k; ++j) {
        const double candidate = model.transition(i, j) + suffix[t + 1][j];
        if (candidate < best) best = candidate;
      }
      suffix[t][i] = model.fit[t][i] + best;
    }
  }

  BurstStateSequence result;
  result.states.resize(n);
  int state = 0;
  double total = std::numeric_limits<double>::infinity();
  for (int i = 0; i < k; ++i) {
    const double candidate = model.transition(0, i) + suffix[0][i];
    if (candidate < total) {
      total = candidate;
      state = i;
    }
  }
  result.total_cost = total;
  result.states[0] = state;
  for (std::size_t t = 1; t < n; ++t) {
    int next = 0;
    double best = std::numeric_limits<double>::infinity();
    for (int j = 0; j < k; ++j) {
      const double candidate = model.transition(state, j) + suffix[t][j];
      if (candidate < best) {
        best = candidate;
        next = j;
      }
    }
    state = next;
    result.states[t] = state;
  }
  return result;
}

std::vector<BurstInterval> detect_bursts(const TermTimeSeries& series,
                                         const BurstConfig& config) {
  config.validate();
  const std::size_t n = series.docs_total.size();
  if (n == 0 || series.docs_with_term.size() != n) {
    throw std::invalid_argument("series must be non-empty with aligned counts");
  }
  long long sum_with = 0;
  for (std::size_t t = 0; t < n; ++t) {
    const long long r = series.docs_with_term[t];
    if (r < 0 || r > series.docs_total[t]) {
      throw std::invalid_argument("series counts must satisfy 0 <= r_t <= d_t");
    }
    sum_with += r;
  }
  if (sum_with == 0) return {};  // nothing ever occurs: no burst

  const CostModel model = build_cost_model(series, config);
  const BurstStateSequence sequence = burst_state_sequence(series, config);

  std::vector<BurstInterval> intervals;
  for (int level = 1; level < config.num_states; ++level) {
    std::size_t t = 0;
    while (t < n) {
      if (sequence.states[t] < level) {
        ++t;
        continue;
      }
      std::size_t start = t;
      double weight = 0.0;
      while (t < n && sequence.states[t] >= level) {
        weight += model.fit[t][level - 1] - model.fit[t][level];
        ++t;
      }
      BurstInterval interval;
      interval.term = series.term;
      interval.level = level;
      interval.start_year = series.year_min + static_cast<int>(start);
      interval.end_year = series.year_min + static_cast<int>(t) - 1;
      interval.weight = weight;
      intervals.push_back(std::move(interval));
    }
  }
  return intervals;
}

BurstSummary burst_summary(const std::vector<BurstInterval>& intervals) {
  BurstSummary summary;
  if (intervals.empty()) return summary;
  summary.term = intervals.front().term;
  for (const BurstInterval& interval : intervals) {
    if (interval.term != summary.term) {
      throw std::invalid_argument("intervals must all belong to one term");
    }
    if (interval.level == 1) {
      ++summary.burst_count;
      if (!summary.first_burst_year || interval.start_year < *summary.first_burst_year) {
        summary.first_burst_year = interval.start_year;
      }
    }
    summary.max_level = std::max(summary.max_level, interval.level);
    if (!summary.max_weight_burst_year || interval.weight > summary.max_weight ||
        (interval.weight == summary.max_weight &&
         interval.start_year < *summary.max_weight_burst_year)) {
      summary.max_weight_burst_year = interval.start_year;
    }
    summary.max_weight = std::max(summary.max_weight, interval.weight);
  }
  return summary;
}

std::vector<Term> rank_by_burstiness(const std::map<Term, BurstSummary>& summaries) {
  std::vector<std::pair<double, Term>> ranked;
  for (const auto& [term, summary] : summaries) {
    if (summary.burst_count > 0) ranked.emplace_back(summary.max_weight, term);
  }
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  std::vector<Term> result;
  result.reserve(ranked.size());
  for (auto& [weight, term] : ranked) result.push_back(std::move(term));
  return result;
}

std::string export_burst_list(const std::vector<BurstInterval>& intervals) {
  std::string out = "term,level,start_year,end_year,weight\n";
  for (const BurstInterval& interval : intervals) {
    out += csv_join({interval.term, std::to_string(interval.level),
                     std::to_string(interval.start_year),
                     std::to_string(interval.end_year),
                     format_fixed(interval.weight, 6)}) +
           "\n";
  }
  return out;
}

}  // namespace topicburst
