#ifndef TOPICBURST_TERM_STATS_HPP
#define TOPICBURST_TERM_STATS_HPP

#include <map>
#include <string>
#include <vector>

#include "topicburst/corpus.hpp"

namespace topicburst {

// Yearly document counts for one term over the corpus year range.
struct TermTimeSeries {
  Term term;
  int year_min = 0;
  std::vector<long long> docs_with_term;  // documents containing the term, per year
  std::vector<long long> docs_total;      // all documents, per year

  int year_count() const { return static_cast<int>(docs_total.size()); }
  int year_max() const { return year_min + year_count() - 1; }
  long long total_occurrences() const;
};

// Counts, for every vocabulary term, the number of documents per year whose
// extracted term set contains it. Terms absent in a year get zero.
std::map<Term, TermTimeSeries> count_series(const Corpus& corpus,
                                            const std::set<Term>& vocabulary);

// Terms ranked by total document count (descending), ties broken
// lexicographically ascending; stoplist members are skipped before ranking.
// Returns at most k terms.
std::vector<Term> top_k_frequent(const std::map<Term, TermTimeSeries>& series,
                                 std::size_t k, const std::set<Term>& stoplist);

// CSV with a header of "year" plus the term names and one row per year
// holding the per-term document counts. Column order follows the input.
std::string export_frequency_table(const std::vector<Term>& terms,
                                   const std::map<Term, TermTimeSeries>& series);

}  // namespace topicburst

#endif
