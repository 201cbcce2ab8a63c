#ifndef TOPICBURST_LAYOUT_HPP
#define TOPICBURST_LAYOUT_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "topicburst/pathfinder.hpp"

namespace topicburst {

using Point = std::array<double, 2>;
using Positions = std::vector<Point>;

struct LayoutConfig {
  double width = 1000.0;
  double height = 1000.0;
  int iterations = 500;
  std::uint64_t seed = 42;
  double spacing = 1.0;  // scales the ideal edge length k = spacing*sqrt(w*h/n)

  void validate() const;
  double ideal_length(std::size_t node_count) const;
};

// Force-directed placement: nodes repel with k^2/d, edges attract with
// d^2/k, per-iteration displacement is capped by a temperature that starts
// at width/10 and cools linearly to zero. Positions stay inside the frame
// and are a pure function of (graph, config).
Positions fruchterman_reingold(const DissimilarityGraph& graph, const LayoutConfig& config);

// Diagnostic potential
//   U = sum over edges |pi-pj|^3 / (3k) + sum over pairs k^3 / |pi-pj|,
// chosen so both terms are stationary at the pairwise equilibrium
// separation k while avoiding logarithms. Distances are floored the same
// way the force pass floors them.
double layout_energy(const DissimilarityGraph& graph, const LayoutConfig& config,
                     const Positions& positions);

// Analytic gradient of layout_energy, one vector per node.
std::vector<Point> layout_energy_gradient(const DissimilarityGraph& graph,
                                          const LayoutConfig& config,
                                          const Positions& positions);

// CSV rows term, x, y with 4 decimal places and a header row.
std::string export_positions(const std::vector<std::string>& labels,
                             const Positions& positions);

}  // namespace topicburst

#endif
