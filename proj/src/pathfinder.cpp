#include "topicburst/pathfinder.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "topicburst/text_format.hpp"

namespace topicburst {

namespace {

// Near-ties between an edge and its best alternative path count as ties and
// keep the edge; this absorbs rounding from the power-domain composition.
constexpr double kRetentionSlack = 1e-9;

}  // namespace

void DissimilarityGraph::validate() const {
  const std::size_t n = labels.size();
  if (dist.size() != n) throw std::invalid_argument("graph: matrix size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (dist[i].size() != n) throw std::invalid_argument("graph: matrix not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double d = dist[i][j];
      if (d != dist[j][i]) throw std::invalid_argument("graph: matrix not symmetric");
      if (!(d > 0.0)) throw std::invalid_argument("graph: distances must be positive");
    }
  }
}

void PfnetParams::validate(std::size_t node_count) const {
  if (!(minkowski_exponent >= 1.0)) {
    throw std::invalid_argument("minkowski exponent must be >= 1 (or infinite)");
  }
  if (max_path_links < 1 || (node_count > 0 && max_path_links > node_count - 1)) {
    throw std::invalid_argument("max_path_links must lie in [1, n-1]");
  }
}

namespace {

template <typename Similarity>
DissimilarityGraph distances_from(const std::vector<Term>& terms, std::size_t m,
                                  Similarity&& similarity, DistanceMode mode) {
  double max_similarity = 0.0;
  bool any = false;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      const double s = similarity(i, j);
      if (s < 0.0) throw std::invalid_argument("similarities must be non-negative");
      if (s > 0.0) {
        any = true;
        max_similarity = std::max(max_similarity, s);
      }
    }
  }
  if (!any) throw std::runtime_error("no edges: similarity matrix is all zero");

  DissimilarityGraph graph;
  graph.labels = terms;
  graph.dist.assign(m, std::vector<double>(m, kNoEdge));
  for (std::size_t i = 0; i < m; ++i) {
    graph.dist[i][i] = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      const double s = similarity(i, j);
      if (s > 0.0) {
        graph.dist[i][j] = mode == DistanceMode::Reciprocal
                               ? 1.0 / s
                               : (max_similarity + 1.0) - s;
      }
    }
  }
  return graph;
}

}  // namespace

DissimilarityGraph similarity_to_distance(const CoWordMatrix& matrix, DistanceMode mode) {
  return distances_from(
      matrix.terms, matrix.size(),
      [&](std::size_t i, std::size_t j) {
        return static_cast<double>(matrix.counts[i][j]);
      },
      mode);
}

DissimilarityGraph similarity_to_distance(const NormalizedCoWordMatrix& matrix,
                                          DistanceMode mode) {
  return distances_from(
      matrix.terms, matrix.size(),
      [&](std::size_t i, std::size_t j) { return matrix.strengths[i][j]; }, mode);
}

DissimilarityGraph pfnet(const DissimilarityGraph& graph, const PfnetParams& params) {
  graph.validate();
  const std::size_t n = graph.size();
  params.validate(n);
  if (n == 0) return graph;
  const bool max_metric = std::isinf(params.minkowski_exponent);
  const double exponent = params.minkowski_exponent;

  // Work in the r-th power domain: a path's aggregate is the plain sum of
  // per-link dist^r (max of links for infinite r), so composing paths never
  // needs intermediate roots and comparisons stay monotone.
  auto link_weight = [&](double d) {
    if (d == kNoEdge) return kNoEdge;
    return max_metric ? d : std::pow(d, exponent);
  };
  auto combine = [&](double a, double b) { return max_metric ? std::max(a, b) : a + b; };

  std::vector<std::vector<double>> link(n, std::vector<double>(n, kNoEdge));
  for (std::size_t i = 0; i < n; ++i) {
    link[i][i] = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) link[i][j] = link_weight(graph.dist[i][j]);
    }
  }

  // best[i][j]: minimum aggregate over all walks of at most `step` links.
  // Positive distances make every non-simple walk beatable by a shorter
  // sub-path, so walks and simple paths share the same minima.
  std::vector<std::vector<double>> best = link;
  std::vector<std::vector<double>> next(n, std::vector<double>(n, kNoEdge));
  for (std::size_t step = 2; step <= params.max_path_links; ++step) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        double value = best[i][j];
        for (std::size_t m = 0; m < n; ++m) {
          const double through = combine(best[i][m], link[m][j]);
          value = std::min(value, through);
        }
        next[i][j] = value;
      }
    }
    std::swap(best, next);
  }

  DissimilarityGraph pruned;
  pruned.labels = graph.labels;
  pruned.dist.assign(n, std::vector<double>(n, kNoEdge));
  for (std::size_t i = 0; i < n; ++i) {
    pruned.dist[i][i] = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || graph.dist[i][j] == kNoEdge) continue;
      const double direct = link[i][j];
      if (direct <= best[i][j] * (1.0 + kRetentionSlack)) {
        pruned.dist[i][j] = graph.dist[i][j];
      }
    }
  }
  return pruned;
}

std::vector<std::pair<std::size_t, std::size_t>> edge_pairs(
    const DissimilarityGraph& graph) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < graph.size(); ++i) {
    for (std::size_t j = i + 1; j < graph.size(); ++j) {
      if (graph.has_edge(i, j)) pairs.emplace_back(i, j);
    }
  }
  return pairs;
}

EdgeCount edge_count(const DissimilarityGraph& graph) {
  EdgeCount count;
  count.undirected = edge_pairs(graph).size();
  count.matrix_entries = 2 * count.undirected;
  return count;
}

std::string export_edge_list(const DissimilarityGraph& pruned, const CoWordMatrix& counts) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < counts.terms.size(); ++i) index[counts.terms[i]] = i;
  std::string out = "term_a,term_b,count,distance\n";
  for (auto [i, j] : edge_pairs(pruned)) {
    auto a = index.find(pruned.labels[i]);
    auto b = index.find(pruned.labels[j]);
    if (a == index.end() || b == index.end()) {
      throw std::runtime_error("edge list: label missing from count matrix");
    }
    out += csv_join({pruned.labels[i], pruned.labels[j],
                     std::to_string(counts.counts[a->second][b->second]),
                     format_fixed(pruned.dist[i][j], 6)}) +
           "\n";
  }
  return out;
}

}  // namespace topicburst
