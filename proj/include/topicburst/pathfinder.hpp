#ifndef TOPICBURST_PATHFINDER_HPP
#define TOPICBURST_PATHFINDER_HPP

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "topicburst/coword.hpp"

namespace topicburst {

inline constexpr double kNoEdge = std::numeric_limits<double>::infinity();

// Symmetric distance matrix; infinity marks an absent edge, the diagonal
// is zero and never treated as an edge.
struct DissimilarityGraph {
  std::vector<std::string> labels;
  std::vector<std::vector<double>> dist;

  std::size_t size() const { return labels.size(); }
  bool has_edge(std::size_t i, std::size_t j) const {
    return i != j && dist[i][j] != kNoEdge;
  }
  void validate() const;
};

enum class DistanceMode { Reciprocal, MaxMinus };

// Turns positive similarities into edge distances: reciprocal uses 1/s,
// max-minus uses (max similarity + 1) - s. Zero similarity means no edge;
// an all-zero matrix is rejected.
DissimilarityGraph similarity_to_distance(const CoWordMatrix& matrix, DistanceMode mode);
DissimilarityGraph similarity_to_distance(const NormalizedCoWordMatrix& matrix,
                                          DistanceMode mode);

struct PfnetParams {
  // Minkowski exponent; >= 1, infinity selects max-of-links path weights.
  double minkowski_exponent = 6.0;
  // Maximum number of links in the alternative paths considered (q).
  std::size_t max_path_links = 0;

  void validate(std::size_t node_count) const;
};

// Pathfinder pruning: keeps an edge only if no path of at most
// max_path_links links connects its endpoints with a smaller Minkowski
// path weight. Ties keep the edge; kept edges keep their distances.
DissimilarityGraph pfnet(const DissimilarityGraph& graph, const PfnetParams& params);

// Undirected edge pairs (i < j), row-major order.
std::vector<std::pair<std::size_t, std::size_t>> edge_pairs(const DissimilarityGraph& graph);

struct EdgeCount {
  std::size_t undirected = 0;
  std::size_t matrix_entries = 0;  // doubled convention
};
EdgeCount edge_count(const DissimilarityGraph& graph);

// CSV rows term_a, term_b, co-occurrence count, distance (6 decimals),
// with a header row. Labels must exist in the count matrix.
std::string export_edge_list(const DissimilarityGraph& pruned, const CoWordMatrix& counts);

}  // namespace topicburst

#endif
