#include "topicburst/coword.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "topicburst/text_format.hpp"

namespace topicburst {

VocabularySelection select_map_vocabulary(const std::vector<Term>& freq_ranking,
                                          const std::vector<Term>& burst_ranking,
                                          std::size_t target) {
  if (target == 0) throw std::invalid_argument("target must be at least 1");
  auto check_unique = [](const std::vector<Term>& ranking, const char* name) {
    std::unordered_set<Term> seen;
    for (const Term& term : ranking) {
      if (!seen.insert(term).second) {
        throw std::invalid_argument(std::string(name) + " ranking contains duplicates");
      }
    }
  };
  check_unique(freq_ranking, "frequency");
  check_unique(burst_ranking, "burstiness");

  std::unordered_set<Term> freq_prefix;
  std::unordered_set<Term> burst_prefix;
  std::size_t freq_depth = 0;
  std::size_t burst_depth = 0;
  std::size_t shared = 0;

  // One term at a time, frequency side first, so the intersection grows by
  // at most one per step and lands on the target exactly.
  auto extend = [&](const std::vector<Term>& ranking, std::size_t& depth,
                    std::unordered_set<Term>& own,
                    const std::unordered_set<Term>& other) {
    if (depth >= ranking.size()) return false;
    const Term& term = ranking[depth];
    ++depth;
    own.insert(term);
    if (other.count(term)) ++shared;
    return true;
  };
  while (shared < target) {
    bool grew = extend(freq_ranking, freq_depth, freq_prefix, burst_prefix);
    if (shared == target) break;
    grew = extend(burst_ranking, burst_depth, burst_prefix, freq_prefix) || grew;
    if (!grew) {
      throw std::runtime_error(
          "vocabulary target " + std::to_string(target) +
          " unreachable; rankings share only " + std::to_string(shared) + " terms");
    }
  }

  VocabularySelection selection;
  selection.freq_depth = freq_depth;
  selection.burst_depth = burst_depth;
  for (std::size_t i = 0; i < freq_depth; ++i) {
    if (burst_prefix.count(freq_ranking[i])) selection.terms.push_back(freq_ranking[i]);
  }
  return selection;
}

CoWordMatrix build_cooccurrence(const Corpus& corpus, const std::vector<Term>& terms) {
  std::unordered_map<Term, std::size_t> index;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (!index.emplace(terms[i], i).second) {
      throw std::invalid_argument("term list contains duplicates");
    }
  }
  const std::size_t m = terms.size();
  CoWordMatrix matrix;
  matrix.terms = terms;
  matrix.counts.assign(m, std::vector<long long>(m, 0));
  matrix.doc_freq.assign(m, 0);

  static const std::set<Term> no_stoplist;
  std::vector<std::size_t> present;
  for (const Document& doc : corpus.documents) {
    present.clear();
    for (const Term& term : extract_terms(doc, no_stoplist)) {
      auto it = index.find(term);
      if (it != index.end()) present.push_back(it->second);
    }
    for (std::size_t a : present) ++matrix.doc_freq[a];
    for (std::size_t x = 0; x < present.size(); ++x) {
      for (std::size_t y = x + 1; y < present.size(); ++y) {
        ++matrix.counts[present[x]][present[y]];
        ++matrix.counts[present[y]][present[x]];
      }
    }
  }
  return matrix;
}

NormalizedCoWordMatrix cosine_normalize(const CoWordMatrix& matrix) {
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    if (matrix.doc_freq[i] > 0) kept.push_back(i);
  }
  NormalizedCoWordMatrix out;
  out.terms.reserve(kept.size());
  for (std::size_t i : kept) out.terms.push_back(matrix.terms[i]);
  out.strengths.assign(kept.size(), std::vector<double>(kept.size(), 0.0));
  for (std::size_t a = 0; a < kept.size(); ++a) {
    for (std::size_t b = 0; b < kept.size(); ++b) {
      if (a == b) continue;
      const std::size_t i = kept[a];
      const std::size_t j = kept[b];
      // C / sqrt(F_i * F_j); the clamp absorbs last-ulp rounding when
      // C equals min(F_i, F_j).
      out.strengths[a][b] = std::min(
          1.0, static_cast<double>(matrix.counts[i][j]) /
                   std::sqrt(static_cast<double>(matrix.doc_freq[i]) *
                             static_cast<double>(matrix.doc_freq[j])));
    }
  }
  return out;
}

std::size_t nonzero_entry_count(const CoWordMatrix& matrix) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    for (std::size_t j = 0; j < matrix.size(); ++j) {
      if (i != j && matrix.counts[i][j] != 0) ++count;
    }
  }
  return count;
}

std::size_t nonzero_entry_count(const NormalizedCoWordMatrix& matrix) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    for (std::size_t j = 0; j < matrix.size(); ++j) {
      if (i != j && matrix.strengths[i][j] != 0.0) ++count;
    }
  }
  return count;
}

namespace {

std::vector<std::vector<std::string>> parse_matrix_rows(std::istream& in,
                                                        std::vector<Term>& terms) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("matrix: missing header line");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  terms = csv_split(line);
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    rows.push_back(csv_split(line));
    if (rows.back().size() != terms.size()) {
      throw std::runtime_error("matrix: row " + std::to_string(rows.size()) +
                               " has " + std::to_string(rows.back().size()) +
                               " fields, expected " + std::to_string(terms.size()));
    }
  }
  if (rows.size() != terms.size()) {
    throw std::runtime_error("matrix: expected " + std::to_string(terms.size()) +
                             " rows, found " + std::to_string(rows.size()));
  }
  return rows;
}

}  // namespace

std::string export_count_matrix(const CoWordMatrix& matrix) {
  std::string out = csv_join(matrix.terms) + "\n";
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    std::vector<std::string> row;
    row.reserve(matrix.size());
    for (std::size_t j = 0; j < matrix.size(); ++j) {
      row.push_back(std::to_string(i == j ? matrix.doc_freq[i] : matrix.counts[i][j]));
    }
    out += csv_join(row) + "\n";
  }
  return out;
}

std::string export_strength_matrix(const NormalizedCoWordMatrix& matrix) {
  std::string out = csv_join(matrix.terms) + "\n";
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    std::vector<std::string> row;
    row.reserve(matrix.size());
    for (std::size_t j = 0; j < matrix.size(); ++j) {
      row.push_back(format_fixed(i == j ? 1.0 : matrix.strengths[i][j], 6));
    }
    out += csv_join(row) + "\n";
  }
  return out;
}

CoWordMatrix parse_count_matrix(std::istream& in) {
  CoWordMatrix matrix;
  auto rows = parse_matrix_rows(in, matrix.terms);
  const std::size_t m = matrix.terms.size();
  matrix.counts.assign(m, std::vector<long long>(m, 0));
  matrix.doc_freq.assign(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const long long value = parse_integer(rows[i][j], "matrix entry");
      if (i == j) {
        matrix.doc_freq[i] = value;
      } else {
        matrix.counts[i][j] = value;
      }
    }
  }
  return matrix;
}

NormalizedCoWordMatrix parse_strength_matrix(std::istream& in) {
  NormalizedCoWordMatrix matrix;
  auto rows = parse_matrix_rows(in, matrix.terms);
  const std::size_t m = matrix.terms.size();
  matrix.strengths.assign(m, std::vector<double>(m, 0.0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      matrix.strengths[i][j] = i == j ? 0.0 : parse_number(rows[i][j], "matrix entry");
    }
  }
  return matrix;
}

}  // namespace topicburst
