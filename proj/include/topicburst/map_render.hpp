#ifndef TOPICBURST_MAP_RENDER_HPP
#define TOPICBURST_MAP_RENDER_HPP

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "topicburst/burst.hpp"
#include "topicburst/layout.hpp"

namespace topicburst {

struct PeriodBin {
  int first_year = 0;
  int last_year = 0;
  std::string color;
};

// Consecutive year bins covering the corpus range, each with a color.
struct PeriodPalette {
  std::vector<PeriodBin> bins;

  void validate() const;
  int year_min() const { return bins.front().first_year; }
  int year_max() const { return bins.back().last_year; }
};

// green, yellow, orange, red, black
const std::vector<std::string>& default_period_colors();

// Splits [year_min, year_max] into bin_count near-equal consecutive bins
// (earlier bins take any remainder) colored from `colors`.
PeriodPalette make_palette(int year_min, int year_max, std::size_t bin_count = 5,
                           const std::vector<std::string>& colors = default_period_colors());

// Color of the bin containing the year; out-of-range years are an error.
std::string assign_period_color(int year, const PeriodPalette& palette);

enum class NodeSizeSource { BurstLevel, BurstWeight };
enum class FillSource { FirstBurst, MaxWeightBurst };

struct NodeStyleOptions {
  NodeSizeSource size_source = NodeSizeSource::BurstLevel;
  FillSource fill_source = FillSource::FirstBurst;
  double radius_min = 4.0;
  double radius_max = 20.0;
  std::string neutral_fill = "lightgray";
  // Burst-free terms are dropped from the map unless this is set, in which
  // case they get the neutral fill and the minimum radius.
  bool include_nonbursting = false;
};

struct NodeGlyph {
  Term term;
  double x = 0.0;
  double y = 0.0;
  double radius = 0.0;
  std::string fill_color;  // period of the burst start year
  std::string ring_color;  // period of the maximum-frequency year
};

struct EdgeGlyph {
  Term term_a, term_b;
  double x1 = 0.0, y1 = 0.0, x2 = 0.0, y2 = 0.0;
  double width = 0.0;
  long long count = 0;
};

// Positions run parallel to vocab. Burst sizes map affinely onto
// [radius_min, radius_max]; the maximum-frequency year breaks ties toward
// the earliest year. Terms that never occur are an error.
std::vector<NodeGlyph> style_nodes(const std::vector<Term>& vocab,
                                   const std::map<Term, BurstSummary>& summaries,
                                   const std::map<Term, TermTimeSeries>& series,
                                   const Positions& positions,
                                   const PeriodPalette& palette,
                                   const NodeStyleOptions& options);

struct EdgeStyleOptions {
  double width_min = 1.0;
  double width_max = 6.0;
};

// One glyph per edge whose endpoints are both styled; widths map
// co-occurrence counts affinely onto [width_min, width_max]. Edge indices
// refer into labels, which runs parallel to positions.
std::vector<EdgeGlyph> style_edges(
    const std::vector<std::string>& labels,
    const std::vector<std::tuple<std::size_t, std::size_t, long long>>& edges,
    const Positions& positions, const std::vector<NodeGlyph>& nodes,
    const EdgeStyleOptions& options);

// Convenience overload reading counts out of the co-word matrix.
std::vector<EdgeGlyph> style_edges(const DissimilarityGraph& pruned,
                                   const CoWordMatrix& counts,
                                   const Positions& positions,
                                   const std::vector<NodeGlyph>& nodes,
                                   const EdgeStyleOptions& options);

struct Frame {
  double width = 1000.0;
  double height = 1000.0;
};

// Standalone SVG 1.1: edges beneath labeled nodes plus a period legend.
// Byte-for-byte deterministic for identical inputs.
std::string render_svg(const std::vector<NodeGlyph>& nodes,
                       const std::vector<EdgeGlyph>& edges, const Frame& frame,
                       const PeriodPalette& palette);

// Pajek undirected network: "*Vertices n" with 1-based quoted labels, then
// "*Edges" with index pairs and integer weights, LF line endings.
std::string export_pajek(const std::vector<std::string>& labels,
                         const std::vector<std::tuple<std::size_t, std::size_t, long long>>& edges);

struct PajekGraph {
  std::vector<std::string> labels;
  std::vector<std::tuple<std::size_t, std::size_t, long long>> edges;
};

PajekGraph parse_pajek(std::istream& in);

// Simple line chart of yearly counts for up to 12 terms.
std::string render_frequency_chart(const std::vector<Term>& terms,
                                   const std::map<Term, TermTimeSeries>& series,
                                   const PeriodPalette& palette);

}  // namespace topicburst

#endif
