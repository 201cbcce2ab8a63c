#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "topicburst/pathfinder.hpp"

using namespace topicburst;

namespace {

DissimilarityGraph triangle(double ab, double bc, double ac) {
  DissimilarityGraph graph;
  graph.labels = {"a", "b", "c"};
  graph.dist = {{0.0, ab, ac}, {ab, 0.0, bc}, {ac, bc, 0.0}};
  return graph;
}

PfnetParams params_of(double exponent, std::size_t links) {
  PfnetParams params;
  params.minkowski_exponent = exponent;
  params.max_path_links = links;
  return params;
}

}  // namespace

TEST_CASE("triangle pruning with r=1") {
  const auto graph = triangle(1.0, 1.0, 3.0);
  SUBCASE("q=2 prunes the long edge") {
    const auto pruned = pfnet(graph, params_of(1.0, 2));
    CHECK_FALSE(pruned.has_edge(0, 2));
    CHECK(pruned.has_edge(0, 1));
    CHECK(pruned.has_edge(1, 2));
    CHECK(edge_count(pruned).undirected == 2);
    CHECK(edge_count(pruned).matrix_entries == 4);
  }
  SUBCASE("q=1 prunes nothing") {
    const auto pruned = pfnet(graph, params_of(1.0, 1));
    CHECK(edge_count(pruned).undirected == 3);
  }
}

TEST_CASE("triangle pruning with infinite r") {
  const double inf = std::numeric_limits<double>::infinity();
  SUBCASE("path max 1 beats distance 3") {
    const auto pruned = pfnet(triangle(1.0, 1.0, 3.0), params_of(inf, 2));
    CHECK_FALSE(pruned.has_edge(0, 2));
  }
  SUBCASE("distance 0.9 survives the max-metric") {
    const auto pruned = pfnet(triangle(1.0, 1.0, 0.9), params_of(inf, 2));
    CHECK(pruned.has_edge(0, 2));
  }
  SUBCASE("exact tie keeps the edge") {
    const auto pruned = pfnet(triangle(1.0, 1.0, 1.0), params_of(inf, 2));
    CHECK(edge_count(pruned).undirected == 3);
  }
}

TEST_CASE("retained edges keep their original distances") {
  const auto graph = triangle(1.0, 2.0, 2.5);
  const auto pruned = pfnet(graph, params_of(2.0, 2));
  for (auto [i, j] : edge_pairs(pruned)) CHECK(pruned.dist[i][j] == graph.dist[i][j]);
}

TEST_CASE("similarity_to_distance modes") {
  CoWordMatrix matrix;
  matrix.terms = {"a", "b", "c"};
  matrix.counts = {{0, 4, 0}, {4, 0, 2}, {0, 2, 0}};
  matrix.doc_freq = {4, 5, 2};

  SUBCASE("reciprocal") {
    const auto graph = similarity_to_distance(matrix, DistanceMode::Reciprocal);
    CHECK(graph.dist[0][1] == 0.25);
    CHECK(graph.dist[1][2] == 0.5);
    CHECK(graph.dist[0][2] == kNoEdge);
  }
  SUBCASE("max-minus") {
    const auto graph = similarity_to_distance(matrix, DistanceMode::MaxMinus);
    CHECK(graph.dist[0][1] == 1.0);  // (4+1) - 4
    CHECK(graph.dist[1][2] == 3.0);  // (4+1) - 2
    CHECK(graph.dist[0][2] == kNoEdge);
  }
  SUBCASE("all-zero matrix is an error") {
    CoWordMatrix zero;
    zero.terms = {"a", "b"};
    zero.counts = {{0, 0}, {0, 0}};
    zero.doc_freq = {1, 1};
    CHECK_THROWS_WITH_AS(similarity_to_distance(zero, DistanceMode::Reciprocal),
                         "no edges: similarity matrix is all zero", std::runtime_error);
  }
}

TEST_CASE("both distance modes produce the same similarity rank order") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 20; ++round) {
    const std::size_t m = 3 + rng() % 4;
    CoWordMatrix matrix;
    for (std::size_t i = 0; i < m; ++i) matrix.terms.push_back("t" + std::to_string(i));
    matrix.counts.assign(m, std::vector<long long>(m, 0));
    matrix.doc_freq.assign(m, 10);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        const long long c = static_cast<long long>(rng() % 6);
        matrix.counts[i][j] = c;
        matrix.counts[j][i] = c;
      }
    }
    if (nonzero_entry_count(matrix) == 0) continue;
    const auto reciprocal = similarity_to_distance(matrix, DistanceMode::Reciprocal);
    const auto max_minus = similarity_to_distance(matrix, DistanceMode::MaxMinus);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        for (std::size_t k = 0; k < m; ++k) {
          for (std::size_t l = k + 1; l < m; ++l) {
            if (!matrix.counts[i][j] || !matrix.counts[k][l]) continue;
            // larger similarity means smaller distance in both modes
            CHECK((reciprocal.dist[i][j] < reciprocal.dist[k][l]) ==
                  (max_minus.dist[i][j] < max_minus.dist[k][l]));
          }
        }
      }
    }
  }
}

TEST_CASE("pfnet equals brute-force path enumeration on small graphs") {
  std::mt19937_64 rng(47);
  const double inf = std::numeric_limits<double>::infinity();
  for (int round = 0; round < 60; ++round) {
    const std::size_t n = 3 + rng() % 5;  // up to 7 nodes
    const auto graph = oracles::random_graph(rng, n, 0.6);
    for (double exponent : {1.0, 2.0, inf}) {
      for (std::size_t q : {std::size_t{2}, n - 1}) {
        const auto pruned = pfnet(graph, params_of(exponent, q));
        CHECK(oracles::edge_set(pruned) == oracles::pfnet_exhaustive(graph, exponent, q));
      }
    }
  }
}

TEST_CASE("pruned edges are a subset with unchanged distances") {
  std::mt19937_64 rng(53);
  for (int round = 0; round < 20; ++round) {
    const auto graph = oracles::random_graph(rng, 8, 0.5);
    const auto pruned = pfnet(graph, params_of(2.0, 7));
    for (auto [i, j] : edge_pairs(pruned)) {
      CHECK(graph.has_edge(i, j));
      CHECK(pruned.dist[i][j] == graph.dist[i][j]);
    }
  }
}

TEST_CASE("infinite r with q=n-1 recovers the minimum spanning tree") {
  std::mt19937_64 rng(59);
  const double inf = std::numeric_limits<double>::infinity();
  for (int round = 0; round < 40; ++round) {
    const std::size_t n = 3 + rng() % 6;  // up to 8 nodes
    const auto graph = oracles::random_graph(rng, n, 0.7);
    const auto pruned = pfnet(graph, params_of(inf, n - 1));
    CHECK(oracles::edge_set(pruned) == oracles::minimum_spanning_tree(graph));
  }
}

TEST_CASE("edge sets nest monotonically in r and q") {
  std::mt19937_64 rng(61);
  const double inf = std::numeric_limits<double>::infinity();
  auto subset = [](const auto& small, const auto& large) {
    return std::includes(large.begin(), large.end(), small.begin(), small.end());
  };
  for (int round = 0; round < 30; ++round) {
    const std::size_t n = 10;
    const auto graph = oracles::random_graph(rng, n, 0.4);
    const auto edges_r_inf = oracles::edge_set(pfnet(graph, params_of(inf, n - 1)));
    const auto edges_r6 = oracles::edge_set(pfnet(graph, params_of(6.0, n - 1)));
    const auto edges_r1 = oracles::edge_set(pfnet(graph, params_of(1.0, n - 1)));
    CHECK(subset(edges_r_inf, edges_r6));
    CHECK(subset(edges_r6, edges_r1));

    const auto edges_q2 = oracles::edge_set(pfnet(graph, params_of(6.0, 2)));
    const auto edges_q_full = oracles::edge_set(pfnet(graph, params_of(6.0, n - 1)));
    CHECK(subset(edges_q_full, edges_q2));
  }
}

TEST_CASE("pfnet preserves connectivity") {
  std::mt19937_64 rng(67);
  for (int round = 0; round < 20; ++round) {
    const std::size_t n = 4 + rng() % 6;
    const auto graph = oracles::random_graph(rng, n, 0.5);
    const auto pruned = pfnet(graph, params_of(6.0, n - 1));
    // breadth-first reachability from node 0 over retained edges
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> queue = {0};
    seen[0] = true;
    while (!queue.empty()) {
      const std::size_t u = queue.back();
      queue.pop_back();
      for (std::size_t v = 0; v < n; ++v) {
        if (!seen[v] && pruned.has_edge(u, v)) {
          seen[v] = true;
          queue.push_back(v);
        }
      }
    }
    for (std::size_t v = 0; v < n; ++v) CHECK(seen[v]);
  }
}

TEST_CASE("parameter validation") {
  const auto graph = triangle(1.0, 1.0, 1.0);
  CHECK_THROWS_AS(pfnet(graph, params_of(0.5, 2)), std::invalid_argument);
  CHECK_THROWS_AS(pfnet(graph, params_of(2.0, 0)), std::invalid_argument);
  CHECK_THROWS_AS(pfnet(graph, params_of(2.0, 3)), std::invalid_argument);

  DissimilarityGraph bad = graph;
  bad.dist[0][1] = -1.0;
  bad.dist[1][0] = -1.0;
  CHECK_THROWS_AS(pfnet(bad, params_of(2.0, 2)), std::invalid_argument);
}

TEST_CASE("edge list export carries counts and distances") {
  CoWordMatrix matrix;
  matrix.terms = {"genes", "rna"};
  matrix.counts = {{0, 4}, {4, 0}};
  matrix.doc_freq = {5, 6};
  const auto graph = similarity_to_distance(matrix, DistanceMode::Reciprocal);
  const auto pruned = pfnet(graph, params_of(6.0, 1));
  CHECK(export_edge_list(pruned, matrix) ==
        "term_a,term_b,count,distance\n"
        "genes,rna,4,0.250000\n");
}
