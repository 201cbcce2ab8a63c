#include "topicburst/map_render.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "topicburst/text_format.hpp"

namespace topicburst {

namespace {

std::string xml_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string num(double value) { return format_fixed(value, 2); }

// Affine map onto [lo, hi]; a degenerate source range lands mid-scale.
double affine_map(double value, double value_min, double value_max, double lo, double hi) {
  if (value_max <= value_min) return (lo + hi) / 2.0;
  return lo + (value - value_min) / (value_max - value_min) * (hi - lo);
}

}  // namespace

void PeriodPalette::validate() const {
  if (bins.empty()) throw std::invalid_argument("palette has no bins");
  for (std::size_t i = 0; i < bins.size(); ++i) {
    if (bins[i].first_year > bins[i].last_year) {
      throw std::invalid_argument("palette bin with inverted year range");
    }
    if (bins[i].color.empty()) throw std::invalid_argument("palette bin without color");
    if (i > 0 && bins[i].first_year != bins[i - 1].last_year + 1) {
      throw std::invalid_argument("palette bins must tile the year range");
    }
  }
}

const std::vector<std::string>& default_period_colors() {
  static const std::vector<std::string> colors = {"green", "yellow", "orange", "red",
                                                  "black"};
  return colors;
}

PeriodPalette make_palette(int year_min, int year_max, std::size_t bin_count,
                           const std::vector<std::string>& colors) {
  if (year_min > year_max) throw std::invalid_argument("year range is inverted");
  const auto years = static_cast<std::size_t>(year_max - year_min + 1);
  bin_count = std::min(bin_count, years);
  if (bin_count == 0) throw std::invalid_argument("bin count must be >= 1");
  if (colors.size() < bin_count) {
    throw std::invalid_argument("palette needs one color per bin");
  }
  PeriodPalette palette;
  const std::size_t base = years / bin_count;
  const std::size_t remainder = years % bin_count;
  int year = year_min;
  for (std::size_t b = 0; b < bin_count; ++b) {
    const auto width = static_cast<int>(base + (b < remainder ? 1 : 0));
    palette.bins.push_back({year, year + width - 1, colors[b]});
    year += width;
  }
  palette.validate();
  return palette;
}

std::string assign_period_color(int year, const PeriodPalette& palette) {
  palette.validate();
  for (const PeriodBin& bin : palette.bins) {
    if (year >= bin.first_year && year <= bin.last_year) return bin.color;
  }
  throw std::runtime_error("year " + std::to_string(year) +
                           " outside the palette range " +
                           std::to_string(palette.year_min()) + "-" +
                           std::to_string(palette.year_max()));
}

std::vector<NodeGlyph> style_nodes(const std::vector<Term>& vocab,
                                   const std::map<Term, BurstSummary>& summaries,
                                   const std::map<Term, TermTimeSeries>& series,
                                   const Positions& positions,
                                   const PeriodPalette& palette,
                                   const NodeStyleOptions& options) {
  if (positions.size() != vocab.size()) {
    throw std::invalid_argument("positions must cover the vocabulary");
  }

  struct Pending {
    std::size_t index;
    const BurstSummary* summary;  // null for burst-free terms
    double size_value = 0.0;
  };
  std::vector<Pending> pending;
  double size_min = 0.0;
  double size_max = 0.0;
  bool any_bursting = false;
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    auto it = summaries.find(vocab[i]);
    const bool bursting = it != summaries.end() && it->second.burst_count > 0;
    if (!bursting && !options.include_nonbursting) continue;
    Pending p{i, bursting ? &it->second : nullptr};
    if (bursting) {
      p.size_value = options.size_source == NodeSizeSource::BurstLevel
                         ? static_cast<double>(it->second.max_level)
                         : it->second.max_weight;
      if (!any_bursting) {
        size_min = size_max = p.size_value;
        any_bursting = true;
      } else {
        size_min = std::min(size_min, p.size_value);
        size_max = std::max(size_max, p.size_value);
      }
    }
    pending.push_back(p);
  }

  std::vector<NodeGlyph> nodes;
  nodes.reserve(pending.size());
  for (const Pending& p : pending) {
    const Term& term = vocab[p.index];
    auto series_it = series.find(term);
    if (series_it == series.end()) {
      throw std::runtime_error("term '" + term + "' missing from the series");
    }
    const TermTimeSeries& s = series_it->second;
    long long best_count = -1;
    int best_year = s.year_min;
    for (int t = 0; t < s.year_count(); ++t) {
      if (s.docs_with_term[t] > best_count) {
        best_count = s.docs_with_term[t];
        best_year = s.year_min + t;
      }
    }
    if (best_count <= 0) {
      throw std::runtime_error("term '" + term + "' has zero total frequency");
    }

    NodeGlyph node;
    node.term = term;
    node.x = positions[p.index][0];
    node.y = positions[p.index][1];
    node.ring_color = assign_period_color(best_year, palette);
    if (p.summary != nullptr) {
      const int fill_year = options.fill_source == FillSource::FirstBurst
                                ? p.summary->first_burst_year.value()
                                : p.summary->max_weight_burst_year.value();
      node.fill_color = assign_period_color(fill_year, palette);
      node.radius = affine_map(p.size_value, size_min, size_max, options.radius_min,
                               options.radius_max);
    } else {
      node.fill_color = options.neutral_fill;
      node.radius = options.radius_min;
    }
    nodes.push_back(std::move(node));
  }
  return nodes;
}

std::vector<EdgeGlyph> style_edges(
    const std::vector<std::string>& labels,
    const std::vector<std::tuple<std::size_t, std::size_t, long long>>& weighted,
    const Positions& positions, const std::vector<NodeGlyph>& nodes,
    const EdgeStyleOptions& options) {
  if (positions.size() != labels.size()) {
    throw std::invalid_argument("positions must cover the labels");
  }
  std::set<std::string> styled;
  for (const NodeGlyph& node : nodes) styled.insert(node.term);

  std::vector<EdgeGlyph> edges;
  for (const auto& [i, j, count] : weighted) {
    if (i >= labels.size() || j >= labels.size()) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (!styled.count(labels[i]) || !styled.count(labels[j])) continue;
    EdgeGlyph edge;
    edge.term_a = labels[i];
    edge.term_b = labels[j];
    edge.x1 = positions[i][0];
    edge.y1 = positions[i][1];
    edge.x2 = positions[j][0];
    edge.y2 = positions[j][1];
    edge.count = count;
    edges.push_back(std::move(edge));
  }
  long long count_min = 0;
  long long count_max = 0;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (e == 0) {
      count_min = count_max = edges[e].count;
    } else {
      count_min = std::min(count_min, edges[e].count);
      count_max = std::max(count_max, edges[e].count);
    }
  }
  for (EdgeGlyph& edge : edges) {
    edge.width = affine_map(static_cast<double>(edge.count),
                            static_cast<double>(count_min),
                            static_cast<double>(count_max), options.width_min,
                            options.width_max);
  }
  return edges;
}

std::vector<EdgeGlyph> style_edges(const DissimilarityGraph& pruned,
                                   const CoWordMatrix& counts,
                                   const Positions& positions,
                                   const std::vector<NodeGlyph>& nodes,
                                   const EdgeStyleOptions& options) {
  std::unordered_map<std::string, std::size_t> count_index;
  for (std::size_t i = 0; i < counts.terms.size(); ++i) count_index[counts.terms[i]] = i;
  std::vector<std::tuple<std::size_t, std::size_t, long long>> weighted;
  for (auto [i, j] : edge_pairs(pruned)) {
    auto a = count_index.find(pruned.labels[i]);
    auto b = count_index.find(pruned.labels[j]);
    if (a == count_index.end() || b == count_index.end()) {
      throw std::runtime_error("edge label missing from the count matrix");
    }
    weighted.emplace_back(i, j, counts.counts[a->second][b->second]);
  }
  return style_edges(pruned.labels, weighted, positions, nodes, options);
}

namespace {

void append_legend(std::string& svg, const PeriodPalette& palette, double x, double y) {
  svg += "  <g font-family=\"sans-serif\" font-size=\"11\">\n";
  svg += "    <text x=\"" + num(x) + "\" y=\"" + num(y) + "\">Periods</text>\n";
  double row_y = y + 8.0;
  for (const PeriodBin& bin : palette.bins) {
    svg += "    <rect x=\"" + num(x) + "\" y=\"" + num(row_y) +
           "\" width=\"12\" height=\"12\" fill=\"" + xml_escape(bin.color) +
           "\" stroke=\"gray\"/>\n";
    svg += "    <text x=\"" + num(x + 16.0) + "\" y=\"" + num(row_y + 10.0) + "\">" +
           std::to_string(bin.first_year) + "-" + std::to_string(bin.last_year) +
           "</text>\n";
    row_y += 16.0;
  }
  svg += "  </g>\n";
}

}  // namespace

std::string render_svg(const std::vector<NodeGlyph>& nodes,
                       const std::vector<EdgeGlyph>& edges, const Frame& frame,
                       const PeriodPalette& palette) {
  palette.validate();
  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         num(frame.width) + "\" height=\"" + num(frame.height) + "\" viewBox=\"0 0 " +
         num(frame.width) + " " + num(frame.height) + "\">\n";
  for (const EdgeGlyph& edge : edges) {
    svg += "  <line x1=\"" + num(edge.x1) + "\" y1=\"" + num(edge.y1) + "\" x2=\"" +
           num(edge.x2) + "\" y2=\"" + num(edge.y2) +
           "\" stroke=\"gray\" stroke-width=\"" + num(edge.width) + "\"/>\n";
  }
  for (const NodeGlyph& node : nodes) {
    svg += "  <circle cx=\"" + num(node.x) + "\" cy=\"" + num(node.y) + "\" r=\"" +
           num(node.radius) + "\" fill=\"" + xml_escape(node.fill_color) +
           "\" stroke=\"" + xml_escape(node.ring_color) + "\" stroke-width=\"2.5\"/>\n";
  }
  svg += "  <g font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\">\n";
  for (const NodeGlyph& node : nodes) {
    svg += "    <text x=\"" + num(node.x) + "\" y=\"" +
           num(node.y - node.radius - 3.0) + "\">" + xml_escape(node.term) +
           "</text>\n";
  }
  svg += "  </g>\n";
  append_legend(svg, palette, 8.0, 16.0);
  svg += "</svg>\n";
  return svg;
}

std::string export_pajek(
    const std::vector<std::string>& labels,
    const std::vector<std::tuple<std::size_t, std::size_t, long long>>& edges) {
  std::string out = "*Vertices " + std::to_string(labels.size()) + "\n";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].find('"') != std::string::npos) {
      throw std::invalid_argument("label not representable in pajek: '" + labels[i] + "'");
    }
    out += std::to_string(i + 1) + " \"" + labels[i] + "\"\n";
  }
  out += "*Edges\n";
  for (const auto& [i, j, weight] : edges) {
    if (i >= labels.size() || j >= labels.size()) {
      throw std::invalid_argument("pajek edge endpoint out of range");
    }
    out += std::to_string(i + 1) + " " + std::to_string(j + 1) + " " +
           std::to_string(weight) + "\n";
  }
  return out;
}

PajekGraph parse_pajek(std::istream& in) {
  PajekGraph graph;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("pajek: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line.rfind("*Vertices", 0) != 0) {
    throw std::runtime_error("pajek: expected '*Vertices' header");
  }
  const auto count = static_cast<std::size_t>(
      parse_integer(line.substr(std::string("*Vertices ").size()), "vertex count"));
  for (std::size_t i = 0; i < count; ++i) {
    if (!std::getline(in, line)) throw std::runtime_error("pajek: truncated vertex list");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first_quote = line.find('"');
    const auto last_quote = line.rfind('"');
    if (first_quote == std::string::npos || last_quote <= first_quote) {
      throw std::runtime_error("pajek: malformed vertex line '" + line + "'");
    }
    graph.labels.push_back(line.substr(first_quote + 1, last_quote - first_quote - 1));
  }
  if (!std::getline(in, line)) throw std::runtime_error("pajek: missing '*Edges' section");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line.rfind("*Edges", 0) != 0) {
    throw std::runtime_error("pajek: expected '*Edges', found '" + line + "'");
  }
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::size_t a = 0;
    std::size_t b = 0;
    long long weight = 0;
    if (!(fields >> a >> b >> weight) || a < 1 || b < 1 || a > count || b > count) {
      throw std::runtime_error("pajek: malformed edge line '" + line + "'");
    }
    graph.edges.emplace_back(a - 1, b - 1, weight);
  }
  return graph;
}

std::string render_frequency_chart(const std::vector<Term>& terms,
                                   const std::map<Term, TermTimeSeries>& series,
                                   const PeriodPalette& palette) {
  palette.validate();
  if (terms.size() > 12) {
    throw std::invalid_argument("frequency chart is limited to 12 terms");
  }
  std::vector<const TermTimeSeries*> picked;
  for (const Term& term : terms) {
    auto it = series.find(term);
    if (it == series.end()) throw std::runtime_error("term '" + term + "' missing from the series");
    picked.push_back(&it->second);
  }

  const double width = 800.0;
  const double height = 480.0;
  const double left = 56.0;
  const double right = width - 180.0;  // legend column
  const double top = 32.0;
  const double bottom = height - 48.0;

  long long peak = 1;
  int years = 1;
  int year_min = 0;
  if (!picked.empty()) {
    years = picked.front()->year_count();
    year_min = picked.front()->year_min;
    for (const TermTimeSeries* s : picked) {
      for (long long v : s->docs_with_term) peak = std::max(peak, v);
    }
  }
  auto x_at = [&](int t) {
    return years == 1 ? (left + right) / 2.0
                      : left + (right - left) * static_cast<double>(t) /
                            static_cast<double>(years - 1);
  };
  auto y_at = [&](long long v) {
    return bottom - (bottom - top) * static_cast<double>(v) / static_cast<double>(peak);
  };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         num(width) + "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width) +
         " " + num(height) + "\">\n";
  svg += "  <line x1=\"" + num(left) + "\" y1=\"" + num(bottom) + "\" x2=\"" +
         num(right) + "\" y2=\"" + num(bottom) + "\" stroke=\"black\"/>\n";
  svg += "  <line x1=\"" + num(left) + "\" y1=\"" + num(top) + "\" x2=\"" + num(left) +
         "\" y2=\"" + num(bottom) + "\" stroke=\"black\"/>\n";
  svg += "  <g font-family=\"sans-serif\" font-size=\"10\">\n";
  if (!picked.empty()) {
    for (int t = 0; t < years; ++t) {
      svg += "    <text x=\"" + num(x_at(t)) + "\" y=\"" + num(bottom + 14.0) +
             "\" text-anchor=\"middle\">" + std::to_string(year_min + t) + "</text>\n";
    }
  }
  svg += "    <text x=\"" + num(left - 8.0) + "\" y=\"" + num(bottom) +
         "\" text-anchor=\"end\">0</text>\n";
  svg += "    <text x=\"" + num(left - 8.0) + "\" y=\"" + num(top + 4.0) +
         "\" text-anchor=\"end\">" + std::to_string(peak) + "</text>\n";
  svg += "    <text x=\"" + num((left + right) / 2.0) + "\" y=\"" +
         num(height - 12.0) + "\" text-anchor=\"middle\">year</text>\n";
  svg += "    <text x=\"" + num(left) + "\" y=\"" + num(top - 12.0) +
         "\">documents</text>\n";
  svg += "  </g>\n";

  static const std::vector<std::string> dashes = {"", "6,3", "2,2"};
  const std::size_t color_count = palette.bins.size();
  for (std::size_t i = 0; i < picked.size(); ++i) {
    const std::string& color = palette.bins[i % color_count].color;
    const std::string& dash = dashes[(i / color_count) % dashes.size()];
    std::string points;
    for (int t = 0; t < picked[i]->year_count(); ++t) {
      if (t > 0) points.push_back(' ');
      points += num(x_at(t)) + "," + num(y_at(picked[i]->docs_with_term[t]));
    }
    svg += "  <polyline fill=\"none\" stroke=\"" + xml_escape(color) +
           "\" stroke-width=\"1.5\"";
    if (!dash.empty()) svg += " stroke-dasharray=\"" + dash + "\"";
    svg += " points=\"" + points + "\"/>\n";
  }

  svg += "  <g font-family=\"sans-serif\" font-size=\"11\">\n";
  double legend_y = top;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string& color = palette.bins[i % color_count].color;
    svg += "    <rect x=\"" + num(right + 12.0) + "\" y=\"" + num(legend_y - 9.0) +
           "\" width=\"12\" height=\"4\" fill=\"" + xml_escape(color) + "\"/>\n";
    svg += "    <text x=\"" + num(right + 30.0) + "\" y=\"" + num(legend_y) + "\">" +
           xml_escape(terms[i]) + "</text>\n";
    legend_y += 16.0;
  }
  svg += "  </g>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace topicburst
