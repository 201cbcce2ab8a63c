#ifndef TOPICBURST_TESTS_SUPPORT_HPP
#define TOPICBURST_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include "topicburst/corpus.hpp"
#include "topicburst/term_stats.hpp"

namespace test_support {

inline topicburst::Document doc(std::string id, int year, long long citations,
                                std::string title = "",
                                std::vector<std::string> keywords = {}) {
  return {std::move(id), year, citations, std::move(title), std::move(keywords)};
}

inline topicburst::Corpus corpus_of(std::vector<topicburst::Document> documents) {
  topicburst::Corpus corpus;
  corpus.documents = std::move(documents);
  corpus.year_min = corpus.documents.front().year;
  corpus.year_max = corpus.documents.front().year;
  for (const auto& d : corpus.documents) {
    corpus.year_min = std::min(corpus.year_min, d.year);
    corpus.year_max = std::max(corpus.year_max, d.year);
  }
  return corpus;
}

inline topicburst::TermTimeSeries series_of(std::vector<long long> with_term,
                                            std::vector<long long> totals,
                                            int year_min = 1982,
                                            std::string term = "term") {
  topicburst::TermTimeSeries series;
  series.term = std::move(term);
  series.year_min = year_min;
  series.docs_with_term = std::move(with_term);
  series.docs_total = std::move(totals);
  return series;
}

inline std::size_t count_occurrences(const std::string& haystack,
                                     const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t pos = haystack.find(needle); pos != std::string::npos;
       pos = haystack.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

}  // namespace test_support

#endif
