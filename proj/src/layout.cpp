#include "topicburst/layout.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "topicburst/text_format.hpp"

namespace topicburst {

namespace {

constexpr double kDistanceFloorScale = 1e-9;

// 53-bit uniform in [0, 1); implementation-defined distributions are
// avoided so identical seeds give identical layouts everywhere.
double next_uniform(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return static_cast<double>(z >> 11) * 0x1.0p-53;
}

// Stateless kick direction for coincident nodes.
Point kick_direction(std::uint64_t seed, std::size_t iteration, std::size_t i,
                     std::size_t j) {
  std::uint64_t state = seed ^ (0x100000001b3ULL * (iteration + 1));
  state ^= 0x9e3779b97f4a7c15ULL * (i + 1);
  state ^= 0xc2b2ae3d27d4eb4fULL * (j + 1);
  const double angle = 2.0 * std::numbers::pi * next_uniform(state);
  return {std::cos(angle), std::sin(angle)};
}

struct Separation {
  double distance;
  Point direction;  // unit vector from j toward i
};

Separation separate(const Positions& positions, std::size_t i, std::size_t j,
                    double floor, std::uint64_t seed, std::size_t iteration) {
  const double dx = positions[i][0] - positions[j][0];
  const double dy = positions[i][1] - positions[j][1];
  const double d = std::hypot(dx, dy);
  if (d < floor) {
    return {floor, kick_direction(seed, iteration, i, j)};
  }
  return {d, {dx / d, dy / d}};
}

}  // namespace

void LayoutConfig::validate() const {
  if (!(width > 0.0) || !(height > 0.0)) {
    throw std::invalid_argument("frame dimensions must be positive");
  }
  if (iterations < 1) throw std::invalid_argument("iterations must be >= 1");
  if (!(spacing > 0.0)) throw std::invalid_argument("spacing must be positive");
}

double LayoutConfig::ideal_length(std::size_t node_count) const {
  return spacing * std::sqrt(width * height / static_cast<double>(node_count));
}

Positions fruchterman_reingold(const DissimilarityGraph& graph,
                               const LayoutConfig& config) {
  config.validate();
  const std::size_t n = graph.size();
  if (n == 0) throw std::invalid_argument("empty graph");

  std::uint64_t rng = config.seed;
  Positions positions(n);
  for (std::size_t i = 0; i < n; ++i) {
    positions[i][0] = next_uniform(rng) * config.width;
    positions[i][1] = next_uniform(rng) * config.height;
  }

  const double k = config.ideal_length(n);
  const double floor = kDistanceFloorScale * k;
  const auto edges = edge_pairs(graph);
  const double initial_temperature = config.width / 10.0;

  std::vector<Point> displacement(n);
  for (int iteration = 0; iteration < config.iterations; ++iteration) {
    const double temperature = initial_temperature *
                               static_cast<double>(config.iterations - iteration) /
                               static_cast<double>(config.iterations);
    for (Point& d : displacement) d = {0.0, 0.0};

    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const auto [d, dir] =
            separate(positions, i, j, floor, config.seed, iteration);
        const double repulsion = k * k / d;
        displacement[i][0] += dir[0] * repulsion;
        displacement[i][1] += dir[1] * repulsion;
        displacement[j][0] -= dir[0] * repulsion;
        displacement[j][1] -= dir[1] * repulsion;
      }
    }
    for (auto [i, j] : edges) {
      const auto [d, dir] = separate(positions, i, j, floor, config.seed, iteration);
      const double attraction = d * d / k;
      displacement[i][0] -= dir[0] * attraction;
      displacement[i][1] -= dir[1] * attraction;
      displacement[j][0] += dir[0] * attraction;
      displacement[j][1] += dir[1] * attraction;
    }

    for (std::size_t i = 0; i < n; ++i) {
      const double magnitude =
          std::hypot(displacement[i][0], displacement[i][1]);
      if (magnitude > 0.0) {
        const double step = std::min(magnitude, temperature);
        positions[i][0] += displacement[i][0] / magnitude * step;
        positions[i][1] += displacement[i][1] / magnitude * step;
      }
      positions[i][0] = std::clamp(positions[i][0], 0.0, config.width);
      positions[i][1] = std::clamp(positions[i][1], 0.0, config.height);
    }
  }
  return positions;
}

double layout_energy(const DissimilarityGraph& graph, const LayoutConfig& config,
                     const Positions& positions) {
  config.validate();
  const std::size_t n = graph.size();
  if (n == 0) throw std::invalid_argument("empty graph");
  if (positions.size() != n) throw std::invalid_argument("positions/graph size mismatch");

  const double k = config.ideal_length(n);
  const double floor = kDistanceFloorScale * k;
  double energy = 0.0;
  for (auto [i, j] : edge_pairs(graph)) {
    const double d = std::max(
        std::hypot(positions[i][0] - positions[j][0], positions[i][1] - positions[j][1]),
        floor);
    energy += d * d * d / (3.0 * k);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = std::max(
          std::hypot(positions[i][0] - positions[j][0], positions[i][1] - positions[j][1]),
          floor);
      energy += k * k * k / d;
    }
  }
  return energy;
}

std::vector<Point> layout_energy_gradient(const DissimilarityGraph& graph,
                                          const LayoutConfig& config,
                                          const Positions& positions) {
  config.validate();
  const std::size_t n = graph.size();
  if (positions.size() != n) throw std::invalid_argument("positions/graph size mismatch");

  const double k = config.ideal_length(n);
  const double floor = kDistanceFloorScale * k;
  std::vector<Point> gradient(n, {0.0, 0.0});
  auto accumulate = [&](std::size_t i, std::size_t j, double magnitude_over_d) {
    const double dx = positions[i][0] - positions[j][0];
    const double dy = positions[i][1] - positions[j][1];
    gradient[i][0] += magnitude_over_d * dx;
    gradient[i][1] += magnitude_over_d * dy;
    gradient[j][0] -= magnitude_over_d * dx;
    gradient[j][1] -= magnitude_over_d * dy;
  };
  for (auto [i, j] : edge_pairs(graph)) {
    const double d = std::max(
        std::hypot(positions[i][0] - positions[j][0], positions[i][1] - positions[j][1]),
        floor);
    accumulate(i, j, d / k);  // d(d^3/(3k))/dd = d^2/k, divided by d
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = std::max(
          std::hypot(positions[i][0] - positions[j][0], positions[i][1] - positions[j][1]),
          floor);
      accumulate(i, j, -(k * k * k) / (d * d * d));
    }
  }
  return gradient;
}

std::string export_positions(const std::vector<std::string>& labels,
                             const Positions& positions) {
  if (labels.size() != positions.size()) {
    throw std::invalid_argument("labels/positions size mismatch");
  }
  std::string out = "term,x,y\n";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out += csv_join({labels[i], format_fixed(positions[i][0], 4),
                     format_fixed(positions[i][1], 4)}) +
           "\n";
  }
  return out;
}

}  // namespace topicburst
