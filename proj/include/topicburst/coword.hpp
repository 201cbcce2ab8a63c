#ifndef TOPICBURST_COWORD_HPP
#define TOPICBURST_COWORD_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "topicburst/corpus.hpp"

namespace topicburst {

// Document-level co-occurrence counts. counts[i][j] is the number of
// documents containing both term i and term j (diagonal kept at zero);
// doc_freq[i] is the number of documents containing term i at all.
struct CoWordMatrix {
  std::vector<Term> terms;
  std::vector<std::vector<long long>> counts;
  std::vector<long long> doc_freq;

  std::size_t size() const { return terms.size(); }
};

// Salton cosine strengths in [0, 1]; zero exactly where counts are zero.
struct NormalizedCoWordMatrix {
  std::vector<Term> terms;
  std::vector<std::vector<double>> strengths;

  std::size_t size() const { return terms.size(); }
};

struct VocabularySelection {
  std::vector<Term> terms;      // intersection, ordered by frequency rank
  std::size_t freq_depth = 0;   // prefix length used from the frequency ranking
  std::size_t burst_depth = 0;  // prefix length used from the burstiness ranking
};

// Grows a prefix of each ranking one term at a time (frequency first,
// then burstiness, alternating) until the two prefixes share exactly
// `target` terms. Reports the prefix depths reached. Fails if both
// rankings run out first, naming the achievable maximum.
VocabularySelection select_map_vocabulary(const std::vector<Term>& freq_ranking,
                                          const std::vector<Term>& burst_ranking,
                                          std::size_t target);

// Counts document-level co-occurrence: a document contributes at most 1 to
// any pair regardless of how often the terms repeat inside it.
CoWordMatrix build_cooccurrence(const Corpus& corpus, const std::vector<Term>& terms);

// strength_ij = C_ij / (sqrt(F_i) * sqrt(F_j)). Terms that occur in no
// document are dropped before normalizing.
NormalizedCoWordMatrix cosine_normalize(const CoWordMatrix& matrix);

// Non-zero off-diagonal entries, counting (i,j) and (j,i) separately
// (the matrix-entry convention).
std::size_t nonzero_entry_count(const CoWordMatrix& matrix);
std::size_t nonzero_entry_count(const NormalizedCoWordMatrix& matrix);

// Dense CSV: header line of terms, then one row per term. The raw count
// export carries doc_freq on the diagonal; strengths print with 6 decimals.
std::string export_count_matrix(const CoWordMatrix& matrix);
std::string export_strength_matrix(const NormalizedCoWordMatrix& matrix);
CoWordMatrix parse_count_matrix(std::istream& in);
NormalizedCoWordMatrix parse_strength_matrix(std::istream& in);

}  // namespace topicburst

#endif
