#include "topicburst/term_stats.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "topicburst/text_format.hpp"

namespace topicburst {

long long TermTimeSeries::total_occurrences() const {
  return std::accumulate(docs_with_term.begin(), docs_with_term.end(), 0LL);
}

std::map<Term, TermTimeSeries> count_series(const Corpus& corpus,
                                            const std::set<Term>& vocabulary) {
  if (corpus.documents.empty()) throw std::runtime_error("empty corpus");
  const auto years = static_cast<std::size_t>(corpus.year_count());
  std::map<Term, TermTimeSeries> series;
  for (const Term& term : vocabulary) {
    TermTimeSeries& s = series[term];
    s.term = term;
    s.year_min = corpus.year_min;
    s.docs_with_term.assign(years, 0);
    s.docs_total.assign(years, 0);
  }
  std::vector<long long> totals(years, 0);
  static const std::set<Term> no_stoplist;
  for (const Document& doc : corpus.documents) {
    const auto t = static_cast<std::size_t>(doc.year - corpus.year_min);
    ++totals[t];
    for (const Term& term : extract_terms(doc, no_stoplist)) {
      auto it = series.find(term);
      if (it != series.end()) ++it->second.docs_with_term[t];
    }
  }
  for (auto& [term, s] : series) s.docs_total = totals;
  return series;
}

std::vector<Term> top_k_frequent(const std::map<Term, TermTimeSeries>& series,
                                 std::size_t k, const std::set<Term>& stoplist) {
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  std::vector<std::pair<long long, Term>> ranked;
  ranked.reserve(series.size());
  for (const auto& [term, s] : series) {
    if (stoplist.count(term)) continue;
    ranked.emplace_back(s.total_occurrences(), term);
  }
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  if (ranked.size() > k) ranked.resize(k);
  std::vector<Term> result;
  result.reserve(ranked.size());
  for (auto& [count, term] : ranked) result.push_back(std::move(term));
  return result;
}

std::string export_frequency_table(const std::vector<Term>& terms,
                                   const std::map<Term, TermTimeSeries>& series) {
  std::vector<const TermTimeSeries*> columns;
  columns.reserve(terms.size());
  for (const Term& term : terms) {
    auto it = series.find(term);
    if (it == series.end()) throw std::runtime_error("unknown term '" + term + "'");
    columns.push_back(&it->second);
  }
  std::vector<std::string> header{"year"};
  for (const Term& term : terms) header.push_back(term);
  std::string out = csv_join(header) + "\n";
  if (columns.empty()) return out;
  const TermTimeSeries& first = *columns.front();
  for (int t = 0; t < first.year_count(); ++t) {
    std::vector<std::string> row{std::to_string(first.year_min + t)};
    for (const TermTimeSeries* column : columns) {
      row.push_back(std::to_string(column->docs_with_term[t]));
    }
    out += csv_join(row) + "\n";
  }
  return out;
}

}  // namespace topicburst
