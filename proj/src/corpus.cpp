#include "topicburst/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

namespace topicburst {

namespace {

using nlohmann::json;

bool is_blank(std::string_view text) {
  return std::all_of(text.begin(), text.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

[[noreturn]] void line_error(std::size_t line_no, const std::string& what) {
  throw std::runtime_error("line " + std::to_string(line_no) + ": " + what);
}

Document parse_record(const std::string& line, std::size_t line_no) {
  json record = json::parse(line, nullptr, false);
  if (record.is_discarded() || !record.is_object()) {
    line_error(line_no, "malformed record (expected a JSON object)");
  }
  Document doc;
  if (!record.contains("id") || !record["id"].is_string()) {
    line_error(line_no, "missing or non-string field 'id'");
  }
  doc.id = record["id"].get<std::string>();
  if (doc.id.empty()) line_error(line_no, "empty document id");
  if (!record.contains("year") || !record["year"].is_number_integer()) {
    line_error(line_no, "missing or non-integer field 'year'");
  }
  doc.year = record["year"].get<int>();
  if (!record.contains("citations") || !record["citations"].is_number_integer()) {
    line_error(line_no, "missing or non-integer field 'citations'");
  }
  doc.citations = record["citations"].get<long long>();
  if (doc.citations < 0) line_error(line_no, "negative citation count");
  if (record.contains("title")) {
    if (!record["title"].is_string()) line_error(line_no, "non-string field 'title'");
    doc.title = record["title"].get<std::string>();
  }
  if (record.contains("keywords")) {
    if (!record["keywords"].is_array()) line_error(line_no, "field 'keywords' must be an array");
    for (const auto& entry : record["keywords"]) {
      if (!entry.is_string()) line_error(line_no, "keyword entries must be strings");
      std::string keyword = entry.get<std::string>();
      if (is_blank(keyword)) line_error(line_no, "empty keyword phrase");
      doc.keywords.push_back(std::move(keyword));
    }
  }
  return doc;
}

}  // namespace

Corpus load_corpus(std::istream& in) {
  Corpus corpus;
  std::unordered_set<std::string> seen_ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_blank(line)) continue;
    Document doc = parse_record(line, line_no);
    if (!seen_ids.insert(doc.id).second) {
      line_error(line_no, "duplicate document id '" + doc.id + "'");
    }
    corpus.documents.push_back(std::move(doc));
  }
  if (corpus.documents.empty()) throw std::runtime_error("empty corpus");
  corpus.year_min = corpus.documents.front().year;
  corpus.year_max = corpus.documents.front().year;
  for (const Document& doc : corpus.documents) {
    corpus.year_min = std::min(corpus.year_min, doc.year);
    corpus.year_max = std::max(corpus.year_max, doc.year);
  }
  return corpus;
}

Corpus load_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
  return load_corpus(in);
}

std::string corpus_to_records(const Corpus& corpus) {
  std::string out;
  for (const Document& doc : corpus.documents) {
    json record;
    record["id"] = doc.id;
    record["year"] = doc.year;
    record["citations"] = doc.citations;
    record["title"] = doc.title;
    record["keywords"] = doc.keywords;
    out += record.dump();
    out.push_back('\n');
  }
  return out;
}

Corpus filter_titled(const Corpus& corpus) {
  Corpus out;
  out.year_min = corpus.year_min;
  out.year_max = corpus.year_max;
  for (const Document& doc : corpus.documents) {
    if (!is_blank(doc.title)) out.documents.push_back(doc);
  }
  return out;
}

Corpus filter_top_cited(const Corpus& corpus, double fraction) {
  if (corpus.documents.empty()) throw std::runtime_error("empty corpus");
  if (!(fraction > 0.0) || fraction > 1.0) {
    throw std::invalid_argument("fraction must lie in (0, 1]");
  }
  std::map<int, std::vector<long long>> counts_by_year;
  for (const Document& doc : corpus.documents) {
    counts_by_year[doc.year].push_back(doc.citations);
  }
  // Per-year citation threshold: the ceil(fraction * N)-th highest count.
  std::map<int, long long> threshold_by_year;
  for (auto& [year, counts] : counts_by_year) {
    std::sort(counts.begin(), counts.end(), std::greater<>());
    auto quota = static_cast<std::size_t>(
        std::ceil(fraction * static_cast<double>(counts.size())));
    quota = std::clamp<std::size_t>(quota, 1, counts.size());
    threshold_by_year[year] = counts[quota - 1];
  }
  Corpus out;
  out.year_min = corpus.year_min;
  out.year_max = corpus.year_max;
  for (const Document& doc : corpus.documents) {
    if (doc.citations >= threshold_by_year[doc.year]) out.documents.push_back(doc);
  }
  return out;
}

Term normalize_term(std::string_view text) {
  Term out;
  bool pending_space = false;
  for (unsigned char c : text) {
    if (std::isspace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(static_cast<char>(std::tolower(c)));
  }
  return out;
}

std::set<Term> extract_terms(const Document& doc, const std::set<Term>& stoplist) {
  std::set<Term> terms;
  std::string word;
  auto flush_word = [&] {
    if (!word.empty()) {
      terms.insert(word);
      word.clear();
    }
  };
  for (unsigned char c : doc.title) {
    if (std::isalnum(c)) {
      word.push_back(static_cast<char>(std::tolower(c)));
    } else {
      flush_word();
    }
  }
  flush_word();
  for (const std::string& phrase : doc.keywords) {
    Term term = normalize_term(phrase);
    if (!term.empty()) terms.insert(std::move(term));
  }
  for (const Term& stop : stoplist) terms.erase(stop);
  return terms;
}

std::set<Term> collect_vocabulary(const Corpus& corpus, const std::set<Term>& stoplist) {
  std::set<Term> vocabulary;
  for (const Document& doc : corpus.documents) {
    std::set<Term> terms = extract_terms(doc, stoplist);
    vocabulary.insert(terms.begin(), terms.end());
  }
  return vocabulary;
}

const std::vector<Term>& default_stoplist_terms() {
  static const std::vector<Term> terms = {
      "support",       "u.s. gov't",       "non-u.s. gov't", "p.h.s.",
      "receptors",     "cells",            "rats",           "amino acid sequence",
      "base sequence", "cultured",
  };
  return terms;
}

std::set<Term> default_stoplist() {
  const auto& terms = default_stoplist_terms();
  return {terms.begin(), terms.end()};
}

std::set<Term> load_stoplist(std::istream& in) {
  std::set<Term> stoplist;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_blank(line) || line.front() == '#') continue;
    Term term = normalize_term(line);
    if (!term.empty()) stoplist.insert(std::move(term));
  }
  return stoplist;
}

std::set<Term> load_stoplist_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open stoplist file '" + path + "'");
  return load_stoplist(in);
}

}  // namespace topicburst
