#ifndef TOPICBURST_CORPUS_HPP
#define TOPICBURST_CORPUS_HPP

#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace topicburst {

// A normalized topic term: lowercase, trimmed, internal whitespace collapsed.
using Term = std::string;

struct Document {
  std::string id;
  int year = 0;
  long long citations = 0;
  std::string title;
  std::vector<std::string> keywords;
};

struct Corpus {
  std::vector<Document> documents;
  // Year range observed at ingestion. Filters keep the original range so
  // that downstream time series stay aligned across pipeline variants.
  int year_min = 0;
  int year_max = 0;

  int year_count() const { return year_max - year_min + 1; }
};

// Reads one JSON record per line with fields id (string), year (int),
// citations (int >= 0), title (string) and keywords (array of non-empty
// strings). Errors mention the 1-based line number. An input with no
// records is rejected ("empty corpus").
Corpus load_corpus(std::istream& in);
Corpus load_corpus_file(const std::string& path);

// Serializes documents back to the line-delimited record form, one JSON
// object per line, keys in fixed order.
std::string corpus_to_records(const Corpus& corpus);

// Drops documents whose title is empty or whitespace-only.
Corpus filter_titled(const Corpus& corpus);

// Keeps, independently for each year, every document whose citation count
// reaches the ceil(fraction * N)-th highest count of that year. Documents
// tied with the boundary count are all kept.
Corpus filter_top_cited(const Corpus& corpus, double fraction);

// Lowercases and trims; collapses internal whitespace runs to one space.
Term normalize_term(std::string_view text);

// Title words split on non-alphanumeric boundaries plus keyword phrases
// kept whole, as a per-document set with stoplist members removed.
std::set<Term> extract_terms(const Document& doc, const std::set<Term>& stoplist);

// Union of extract_terms over all documents.
std::set<Term> collect_vocabulary(const Corpus& corpus, const std::set<Term>& stoplist);

// The stock exclusion list applied when no stoplist file is given.
const std::vector<Term>& default_stoplist_terms();
std::set<Term> default_stoplist();

// One term per line; blank lines and lines starting with '#' are skipped.
// Entries are normalized on read.
std::set<Term> load_stoplist(std::istream& in);
std::set<Term> load_stoplist_file(const std::string& path);

}  // namespace topicburst

#endif
