#include "topicburst/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "topicburst/digest.hpp"
#include "topicburst/text_format.hpp"

namespace fs = std::filesystem;

namespace topicburst {

namespace {

namespace schema {
constexpr const char* kCorpus = "topicburst/corpus/1";
constexpr const char* kTermSeries = "topicburst/term-series/1";
constexpr const char* kBurstSummary = "topicburst/burst-summary/1";
constexpr const char* kVocabulary = "topicburst/vocabulary/1";
constexpr const char* kCowordCounts = "topicburst/coword-counts/1";
constexpr const char* kCowordStrengths = "topicburst/coword-strengths/1";
constexpr const char* kPrunedEdges = "topicburst/pruned-edges/1";
constexpr const char* kPositions = "topicburst/positions/1";
}  // namespace schema

constexpr const char* kDocsSentinel = "__docs__";

std::string slurp_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void spill_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file '" + path.string() + "'");
  out << content;
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

std::string trim(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  return std::string(text.substr(begin, end - begin));
}

std::vector<std::string> split_lines(const std::string& content) {
  std::vector<std::string> lines;
  std::istringstream in(content);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

}  // namespace

std::set<Term> PipelineConfig::stoplist() const {
  switch (stoplist_source) {
    case StoplistSource::Default: return default_stoplist();
    case StoplistSource::None: return {};
    case StoplistSource::File: return load_stoplist_file(stoplist_path);
  }
  return {};
}

void PipelineConfig::validate() const {
  if (input_path.empty()) throw std::invalid_argument("config: input path missing");
  if (output_dir.empty()) throw std::invalid_argument("config: output directory missing");
  if (!(top_cited_fraction > 0.0) || top_cited_fraction > 1.0) {
    throw std::invalid_argument("config: fraction must lie in (0, 1]");
  }
  if (vocabulary_target < 1) throw std::invalid_argument("config: target must be >= 1");
  burst.validate();
  layout.validate();
  if (!(pfnet_exponent >= 1.0)) {
    throw std::invalid_argument("config: pfnet_r must be >= 1 (or 'inf')");
  }
  if (palette_bins < 1) throw std::invalid_argument("config: palette_bins must be >= 1");
  if (!palette_colors.empty() && palette_colors.size() < palette_bins) {
    throw std::invalid_argument("config: palette_colors must cover palette_bins");
  }
  if (chart_terms < 1 || chart_terms > 12) {
    throw std::invalid_argument("config: chart_terms must lie in [1, 12]");
  }
  if (node_style.radius_min <= 0.0 || node_style.radius_max < node_style.radius_min) {
    throw std::invalid_argument("config: node radius range is invalid");
  }
  if (edge_style.width_min <= 0.0 || edge_style.width_max < edge_style.width_min) {
    throw std::invalid_argument("config: edge width range is invalid");
  }
}

PipelineConfig load_pipeline_config(const std::string& path) {
  const fs::path config_path(path);
  std::ifstream in(config_path);
  if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
  const fs::path base = config_path.parent_path();
  auto resolve = [&](const std::string& value) {
    fs::path p(value);
    return p.is_absolute() ? p.string() : (base / p).lexically_normal().string();
  };

  PipelineConfig config;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("config line " + std::to_string(line_no) +
                               ": expected 'key = value'");
    }
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (value.empty()) {
      throw std::runtime_error("config line " + std::to_string(line_no) +
                               ": empty value for '" + key + "'");
    }
    if (key == "input") {
      config.input_path = resolve(value);
    } else if (key == "output") {
      config.output_dir = resolve(value);
    } else if (key == "fraction") {
      config.top_cited_fraction = parse_number(value, key);
    } else if (key == "stoplist") {
      if (value == "default") {
        config.stoplist_source = StoplistSource::Default;
      } else if (value == "none") {
        config.stoplist_source = StoplistSource::None;
      } else {
        config.stoplist_source = StoplistSource::File;
        config.stoplist_path = resolve(value);
      }
    } else if (key == "burst_s") {
      config.burst.rate_scale = parse_number(value, key);
    } else if (key == "burst_gamma") {
      config.burst.transition_gamma = parse_number(value, key);
    } else if (key == "burst_k") {
      config.burst.num_states = static_cast<int>(parse_integer(value, key));
    } else if (key == "burst_epsilon") {
      config.burst.probability_margin = parse_number(value, key);
    } else if (key == "target") {
      config.vocabulary_target = static_cast<std::size_t>(parse_integer(value, key));
    } else if (key == "matrix") {
      if (value == "raw") {
        config.matrix_mode = MatrixMode::Raw;
      } else if (value == "cosine") {
        config.matrix_mode = MatrixMode::Cosine;
      } else {
        throw std::runtime_error("config: matrix must be 'raw' or 'cosine'");
      }
    } else if (key == "distance") {
      if (value == "reciprocal") {
        config.distance_mode = DistanceMode::Reciprocal;
      } else if (value == "max-minus") {
        config.distance_mode = DistanceMode::MaxMinus;
      } else {
        throw std::runtime_error("config: distance must be 'reciprocal' or 'max-minus'");
      }
    } else if (key == "pfnet_r") {
      config.pfnet_exponent = (value == "inf" || value == "infinity")
                                  ? std::numeric_limits<double>::infinity()
                                  : parse_number(value, key);
    } else if (key == "pfnet_q") {
      config.pfnet_max_links = static_cast<std::size_t>(parse_integer(value, key));
    } else if (key == "layout_width") {
      config.layout.width = parse_number(value, key);
    } else if (key == "layout_height") {
      config.layout.height = parse_number(value, key);
    } else if (key == "layout_iterations") {
      config.layout.iterations = static_cast<int>(parse_integer(value, key));
    } else if (key == "layout_seed") {
      config.layout.seed = static_cast<std::uint64_t>(parse_integer(value, key));
    } else if (key == "layout_c") {
      config.layout.spacing = parse_number(value, key);
    } else if (key == "palette_bins") {
      config.palette_bins = static_cast<std::size_t>(parse_integer(value, key));
    } else if (key == "palette_colors") {
      config.palette_colors.clear();
      for (const std::string& color : csv_split(value)) {
        config.palette_colors.push_back(trim(color));
      }
    } else if (key == "node_size_source") {
      if (value == "level") {
        config.node_style.size_source = NodeSizeSource::BurstLevel;
      } else if (value == "weight") {
        config.node_style.size_source = NodeSizeSource::BurstWeight;
      } else {
        throw std::runtime_error("config: node_size_source must be 'level' or 'weight'");
      }
    } else if (key == "fill_source") {
      if (value == "first-burst") {
        config.node_style.fill_source = FillSource::FirstBurst;
      } else if (value == "max-weight-burst") {
        config.node_style.fill_source = FillSource::MaxWeightBurst;
      } else {
        throw std::runtime_error(
            "config: fill_source must be 'first-burst' or 'max-weight-burst'");
      }
    } else if (key == "include_nonbursting") {
      if (value == "true") {
        config.node_style.include_nonbursting = true;
      } else if (value == "false") {
        config.node_style.include_nonbursting = false;
      } else {
        throw std::runtime_error("config: include_nonbursting must be true or false");
      }
    } else if (key == "node_radius_min") {
      config.node_style.radius_min = parse_number(value, key);
    } else if (key == "node_radius_max") {
      config.node_style.radius_max = parse_number(value, key);
    } else if (key == "neutral_fill") {
      config.node_style.neutral_fill = value;
    } else if (key == "edge_width_min") {
      config.edge_style.width_min = parse_number(value, key);
    } else if (key == "edge_width_max") {
      config.edge_style.width_max = parse_number(value, key);
    } else if (key == "chart_terms") {
      config.chart_terms = static_cast<std::size_t>(parse_integer(value, key));
    } else {
      throw std::runtime_error("config line " + std::to_string(line_no) +
                               ": unknown key '" + key + "'");
    }
  }
  return config;
}

// ---------------------------------------------------------------------------
// Artifact IO

std::string read_artifact(const PipelineConfig& config, const std::string& name,
                          const std::string& expected_schema) {
  const fs::path path = fs::path(config.output_dir) / name;
  if (!fs::exists(path)) {
    throw std::runtime_error("artifact '" + name +
                             "' not found; run the producing stage first");
  }
  std::string content = slurp_file(path);
  const auto newline = content.find('\n');
  const std::string first =
      newline == std::string::npos ? content : content.substr(0, newline);
  std::string found;
  if (first.rfind("# schema: ", 0) == 0) {
    found = first.substr(std::string("# schema: ").size());
  } else if (!first.empty() && first.front() == '{') {
    const auto j = nlohmann::json::parse(first, nullptr, false);
    if (!j.is_discarded() && j.is_object() && j.contains("schema")) {
      found = j["schema"].get<std::string>();
    }
  }
  if (found != expected_schema) {
    throw std::runtime_error("artifact '" + name + "': expected schema '" +
                             expected_schema + "', found '" +
                             (found.empty() ? "none" : found) + "'");
  }
  return newline == std::string::npos ? std::string() : content.substr(newline + 1);
}

void write_artifact(const PipelineConfig& config, const std::string& name,
                    const std::string& schema, const std::string& content) {
  std::string prefixed;
  if (name.size() > 6 && name.substr(name.size() - 6) == ".jsonl") {
    prefixed = std::string("{\"schema\":\"") + schema + "\"}\n" + content;
  } else if (schema.empty()) {
    prefixed = content;
  } else {
    prefixed = "# schema: " + schema + "\n" + content;
  }
  spill_file(fs::path(config.output_dir) / name, prefixed);
}

// ---------------------------------------------------------------------------
// Stage-file formats

namespace {

std::string render_term_series(const std::map<Term, TermTimeSeries>& series) {
  if (series.empty()) throw std::runtime_error("term series is empty");
  const TermTimeSeries& first = series.begin()->second;
  std::vector<std::string> header{"term"};
  for (int t = 0; t < first.year_count(); ++t) {
    header.push_back(std::to_string(first.year_min + t));
  }
  std::string out = csv_join(header) + "\n";
  std::vector<std::string> docs_row{kDocsSentinel};
  for (long long d : first.docs_total) docs_row.push_back(std::to_string(d));
  out += csv_join(docs_row) + "\n";
  for (const auto& [term, s] : series) {
    if (term == kDocsSentinel) {
      throw std::runtime_error("term collides with the reserved row name");
    }
    std::vector<std::string> row{term};
    for (long long r : s.docs_with_term) row.push_back(std::to_string(r));
    out += csv_join(row) + "\n";
  }
  return out;
}

}  // namespace

std::map<Term, TermTimeSeries> parse_term_series(const std::string& content) {
  const auto lines = split_lines(content);
  if (lines.size() < 2) throw std::runtime_error("term series: missing header or totals");
  const auto header = csv_split(lines[0]);
  if (header.size() < 2 || header[0] != "term") {
    throw std::runtime_error("term series: malformed header");
  }
  const int year_min = static_cast<int>(parse_integer(header[1], "year"));
  const std::size_t years = header.size() - 1;
  for (std::size_t c = 0; c < years; ++c) {
    if (parse_integer(header[1 + c], "year") != year_min + static_cast<long long>(c)) {
      throw std::runtime_error("term series: years must be contiguous");
    }
  }
  const auto totals_row = csv_split(lines[1]);
  if (totals_row.size() != header.size() || totals_row[0] != kDocsSentinel) {
    throw std::runtime_error("term series: missing document totals row");
  }
  std::vector<long long> totals(years);
  for (std::size_t c = 0; c < years; ++c) {
    totals[c] = parse_integer(totals_row[1 + c], "document total");
  }
  std::map<Term, TermTimeSeries> series;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto row = csv_split(lines[i]);
    if (row.size() != header.size()) {
      throw std::runtime_error("term series: row " + std::to_string(i + 1) +
                               " has the wrong field count");
    }
    TermTimeSeries s;
    s.term = row[0];
    s.year_min = year_min;
    s.docs_total = totals;
    s.docs_with_term.resize(years);
    for (std::size_t c = 0; c < years; ++c) {
      s.docs_with_term[c] = parse_integer(row[1 + c], "term count");
    }
    series.emplace(row[0], std::move(s));
  }
  return series;
}

std::map<Term, BurstSummary> parse_burst_summaries(const std::string& content) {
  const auto lines = split_lines(content);
  if (lines.empty()) throw std::runtime_error("burst summary: missing header");
  std::map<Term, BurstSummary> summaries;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto row = csv_split(lines[i]);
    if (row.size() != 6) {
      throw std::runtime_error("burst summary: row " + std::to_string(i + 1) +
                               " has the wrong field count");
    }
    BurstSummary summary;
    summary.term = row[0];
    summary.burst_count = static_cast<int>(parse_integer(row[1], "burst count"));
    summary.max_level = static_cast<int>(parse_integer(row[2], "max level"));
    summary.max_weight = parse_number(row[3], "max weight");
    if (!row[4].empty()) {
      summary.first_burst_year = static_cast<int>(parse_integer(row[4], "first burst year"));
    }
    if (!row[5].empty()) {
      summary.max_weight_burst_year =
          static_cast<int>(parse_integer(row[5], "max weight burst year"));
    }
    summaries.emplace(summary.term, std::move(summary));
  }
  return summaries;
}

std::vector<Term> parse_vocabulary(const std::string& content) {
  std::vector<Term> terms;
  for (const std::string& line : split_lines(content)) {
    if (line.empty() || line.front() == '#') continue;
    terms.push_back(line);
  }
  return terms;
}

std::vector<std::tuple<Term, Term, long long, double>> parse_edge_list(
    const std::string& content) {
  const auto lines = split_lines(content);
  if (lines.empty()) throw std::runtime_error("edge list: missing header");
  std::vector<std::tuple<Term, Term, long long, double>> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto row = csv_split(lines[i]);
    if (row.size() != 4) {
      throw std::runtime_error("edge list: row " + std::to_string(i + 1) +
                               " has the wrong field count");
    }
    edges.emplace_back(row[0], row[1], parse_integer(row[2], "edge count"),
                       parse_number(row[3], "edge distance"));
  }
  return edges;
}

std::pair<std::vector<std::string>, Positions> parse_positions(const std::string& content) {
  const auto lines = split_lines(content);
  if (lines.empty()) throw std::runtime_error("positions: missing header");
  std::vector<std::string> labels;
  Positions positions;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto row = csv_split(lines[i]);
    if (row.size() != 3) {
      throw std::runtime_error("positions: row " + std::to_string(i + 1) +
                               " has the wrong field count");
    }
    labels.push_back(row[0]);
    positions.push_back({parse_number(row[1], "x"), parse_number(row[2], "y")});
  }
  return {std::move(labels), std::move(positions)};
}

// ---------------------------------------------------------------------------
// Manifest

std::string Manifest::to_json() const {
  nlohmann::json j;
  j["schema"] = "topicburst/manifest/1";
  j["artifacts"] = nlohmann::json::object();
  for (const auto& [name, digest] : artifacts) j["artifacts"][name] = digest;
  j["partial"] = partial;
  return j.dump(2) + "\n";
}

Manifest Manifest::from_json_text(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  if (!j.is_object() || j.value("schema", "") != "topicburst/manifest/1") {
    throw std::runtime_error("manifest: unrecognized schema");
  }
  Manifest manifest;
  for (const auto& [name, digest] : j.at("artifacts").items()) {
    manifest.artifacts[name] = digest.get<std::string>();
  }
  for (const auto& name : j.at("partial")) {
    manifest.partial.push_back(name.get<std::string>());
  }
  return manifest;
}

Manifest read_manifest(const PipelineConfig& config) {
  const fs::path path = fs::path(config.output_dir) / artifact::kManifest;
  if (!fs::exists(path)) return {};
  return Manifest::from_json_text(slurp_file(path));
}

namespace {

void write_manifest(const PipelineConfig& config, const Manifest& manifest) {
  spill_file(fs::path(config.output_dir) / artifact::kManifest, manifest.to_json());
}

void record_outputs(const PipelineConfig& config, const std::vector<std::string>& names) {
  Manifest manifest = read_manifest(config);
  for (const std::string& name : names) {
    const std::string content = slurp_file(fs::path(config.output_dir) / name);
    manifest.artifacts[name] = sha256_hex(content);
    std::erase(manifest.partial, name);
  }
  write_manifest(config, manifest);
}

void flag_partial_outputs(const PipelineConfig& config,
                          const std::vector<std::string>& names) {
  Manifest manifest = read_manifest(config);
  bool flagged = false;
  for (const std::string& name : names) {
    if (fs::exists(fs::path(config.output_dir) / name) &&
        !manifest.artifacts.count(name)) {
      if (std::find(manifest.partial.begin(), manifest.partial.end(), name) ==
          manifest.partial.end()) {
        manifest.partial.push_back(name);
        flagged = true;
      }
    }
  }
  std::sort(manifest.partial.begin(), manifest.partial.end());
  if (flagged || !manifest.artifacts.empty()) write_manifest(config, manifest);
}

// ---------------------------------------------------------------------------
// Stages

void stage_ingest(const PipelineConfig& config) {
  Corpus corpus = load_corpus_file(config.input_path);
  corpus = filter_titled(corpus);
  if (corpus.documents.empty()) {
    throw std::runtime_error("no titled documents left after filtering");
  }
  corpus = filter_top_cited(corpus, config.top_cited_fraction);
  write_artifact(config, artifact::kCorpus, schema::kCorpus, corpus_to_records(corpus));
}

Corpus read_corpus_artifact(const PipelineConfig& config) {
  const std::string content = read_artifact(config, artifact::kCorpus, schema::kCorpus);
  std::istringstream in(content);
  return load_corpus(in);
}

void stage_freq(const PipelineConfig& config) {
  const Corpus corpus = read_corpus_artifact(config);
  const std::set<Term> vocabulary = collect_vocabulary(corpus, {});
  const auto series = count_series(corpus, vocabulary);
  write_artifact(config, artifact::kTermSeries, schema::kTermSeries,
                 render_term_series(series));
  const auto top = top_k_frequent(series, config.chart_terms, config.stoplist());
  write_artifact(config, artifact::kFreqTable, "", export_frequency_table(top, series));
}

void stage_burst(const PipelineConfig& config) {
  const auto series =
      parse_term_series(read_artifact(config, artifact::kTermSeries, schema::kTermSeries));
  std::vector<BurstInterval> all_intervals;
  std::map<Term, BurstSummary> summaries;
  for (const auto& [term, s] : series) {
    if (s.total_occurrences() == 0) continue;
    const auto intervals = detect_bursts(s, config.burst);
    if (intervals.empty()) continue;
    summaries.emplace(term, burst_summary(intervals));
    all_intervals.insert(all_intervals.end(), intervals.begin(), intervals.end());
  }
  write_artifact(config, artifact::kBursts, "", export_burst_list(all_intervals));
  std::string summary_csv =
      "term,burst_count,max_level,max_weight,first_burst_year,max_weight_burst_year\n";
  for (const auto& [term, summary] : summaries) {
    summary_csv +=
        csv_join({term, std::to_string(summary.burst_count),
                  std::to_string(summary.max_level), format_fixed(summary.max_weight, 9),
                  summary.first_burst_year ? std::to_string(*summary.first_burst_year) : "",
                  summary.max_weight_burst_year
                      ? std::to_string(*summary.max_weight_burst_year)
                      : ""}) +
        "\n";
  }
  write_artifact(config, artifact::kBurstSummary, schema::kBurstSummary, summary_csv);
}

void stage_select(const PipelineConfig& config) {
  const auto series =
      parse_term_series(read_artifact(config, artifact::kTermSeries, schema::kTermSeries));
  const auto summaries = parse_burst_summaries(
      read_artifact(config, artifact::kBurstSummary, schema::kBurstSummary));
  const auto freq_ranking = top_k_frequent(series, series.size(), config.stoplist());
  const auto burst_ranking = rank_by_burstiness(summaries);
  const auto selection =
      select_map_vocabulary(freq_ranking, burst_ranking, config.vocabulary_target);
  std::string content = "# freq_depth: " + std::to_string(selection.freq_depth) +
                        "\n# burst_depth: " + std::to_string(selection.burst_depth) + "\n";
  for (const Term& term : selection.terms) content += term + "\n";
  write_artifact(config, artifact::kVocabulary, schema::kVocabulary, content);
}

void stage_coword(const PipelineConfig& config) {
  const Corpus corpus = read_corpus_artifact(config);
  const auto vocabulary =
      parse_vocabulary(read_artifact(config, artifact::kVocabulary, schema::kVocabulary));
  const CoWordMatrix matrix = build_cooccurrence(corpus, vocabulary);
  write_artifact(config, artifact::kCowordRaw, schema::kCowordCounts,
                 export_count_matrix(matrix));
  write_artifact(config, artifact::kCowordCosine, schema::kCowordStrengths,
                 export_strength_matrix(cosine_normalize(matrix)));
}

void stage_pfnet(const PipelineConfig& config) {
  std::istringstream raw_in(
      read_artifact(config, artifact::kCowordRaw, schema::kCowordCounts));
  const CoWordMatrix raw = parse_count_matrix(raw_in);
  DissimilarityGraph graph;
  if (config.matrix_mode == MatrixMode::Raw) {
    graph = similarity_to_distance(raw, config.distance_mode);
  } else {
    std::istringstream cosine_in(
        read_artifact(config, artifact::kCowordCosine, schema::kCowordStrengths));
    graph = similarity_to_distance(parse_strength_matrix(cosine_in), config.distance_mode);
  }
  PfnetParams params;
  params.minkowski_exponent = config.pfnet_exponent;
  params.max_path_links =
      config.pfnet_max_links == 0 ? graph.size() - 1 : config.pfnet_max_links;
  const DissimilarityGraph pruned = pfnet(graph, params);
  write_artifact(config, artifact::kPrunedEdges, schema::kPrunedEdges,
                 export_edge_list(pruned, raw));
}

DissimilarityGraph graph_from_edges(
    const std::vector<Term>& vocabulary,
    const std::vector<std::tuple<Term, Term, long long, double>>& edges) {
  std::map<Term, std::size_t> index;
  for (std::size_t i = 0; i < vocabulary.size(); ++i) index[vocabulary[i]] = i;
  DissimilarityGraph graph;
  graph.labels = vocabulary;
  graph.dist.assign(vocabulary.size(), std::vector<double>(vocabulary.size(), kNoEdge));
  for (std::size_t i = 0; i < vocabulary.size(); ++i) graph.dist[i][i] = 0.0;
  for (const auto& [a, b, count, distance] : edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end() || ib == index.end()) {
      throw std::runtime_error("edge term missing from the vocabulary: '" +
                               (ia == index.end() ? a : b) + "'");
    }
    graph.dist[ia->second][ib->second] = distance;
    graph.dist[ib->second][ia->second] = distance;
  }
  return graph;
}

void stage_layout(const PipelineConfig& config) {
  const auto vocabulary =
      parse_vocabulary(read_artifact(config, artifact::kVocabulary, schema::kVocabulary));
  const auto edges =
      parse_edge_list(read_artifact(config, artifact::kPrunedEdges, schema::kPrunedEdges));
  const DissimilarityGraph graph = graph_from_edges(vocabulary, edges);
  const Positions positions = fruchterman_reingold(graph, config.layout);
  write_artifact(config, artifact::kPositions, schema::kPositions,
                 export_positions(vocabulary, positions));
}

void stage_render(const PipelineConfig& config) {
  const auto vocabulary =
      parse_vocabulary(read_artifact(config, artifact::kVocabulary, schema::kVocabulary));
  const auto series =
      parse_term_series(read_artifact(config, artifact::kTermSeries, schema::kTermSeries));
  const auto summaries = parse_burst_summaries(
      read_artifact(config, artifact::kBurstSummary, schema::kBurstSummary));
  const auto edges =
      parse_edge_list(read_artifact(config, artifact::kPrunedEdges, schema::kPrunedEdges));
  auto [labels, positions] =
      parse_positions(read_artifact(config, artifact::kPositions, schema::kPositions));
  if (labels != vocabulary) {
    throw std::runtime_error("positions do not match the vocabulary; rerun layout");
  }
  if (series.empty()) throw std::runtime_error("term series is empty");

  const TermTimeSeries& reference = series.begin()->second;
  const PeriodPalette palette = make_palette(
      reference.year_min, reference.year_max(), config.palette_bins,
      config.palette_colors.empty() ? default_period_colors() : config.palette_colors);

  const auto nodes =
      style_nodes(vocabulary, summaries, series, positions, palette, config.node_style);

  std::map<Term, std::size_t> index;
  for (std::size_t i = 0; i < vocabulary.size(); ++i) index[vocabulary[i]] = i;
  std::vector<std::tuple<std::size_t, std::size_t, long long>> weighted;
  for (const auto& [a, b, count, distance] : edges) {
    weighted.emplace_back(index.at(a), index.at(b), count);
  }
  const auto edge_glyphs =
      style_edges(vocabulary, weighted, positions, nodes, config.edge_style);

  const Frame frame{config.layout.width, config.layout.height};
  write_artifact(config, artifact::kMapSvg, "",
                 render_svg(nodes, edge_glyphs, frame, palette));
  write_artifact(config, artifact::kMapPajek, "", export_pajek(vocabulary, weighted));
  const auto top = top_k_frequent(series, config.chart_terms, config.stoplist());
  write_artifact(config, artifact::kFreqChart, "",
                 render_frequency_chart(top, series, palette));
}

}  // namespace

const std::vector<Stage>& pipeline_stages() {
  static const std::vector<Stage> stages = {
      {"ingest", {artifact::kCorpus}, stage_ingest},
      {"freq", {artifact::kTermSeries, artifact::kFreqTable}, stage_freq},
      {"burst", {artifact::kBursts, artifact::kBurstSummary}, stage_burst},
      {"select", {artifact::kVocabulary}, stage_select},
      {"coword", {artifact::kCowordRaw, artifact::kCowordCosine}, stage_coword},
      {"pfnet", {artifact::kPrunedEdges}, stage_pfnet},
      {"layout", {artifact::kPositions}, stage_layout},
      {"render", {artifact::kMapSvg, artifact::kMapPajek, artifact::kFreqChart},
       stage_render},
  };
  return stages;
}

void run_stage(const std::string& name, const PipelineConfig& config) {
  config.validate();
  const auto& stages = pipeline_stages();
  const auto it = std::find_if(stages.begin(), stages.end(),
                               [&](const Stage& s) { return s.name == name; });
  if (it == stages.end()) throw std::invalid_argument("unknown stage '" + name + "'");
  fs::create_directories(config.output_dir);
  try {
    it->run(config);
    record_outputs(config, it->outputs);
  } catch (const std::exception& e) {
    flag_partial_outputs(config, it->outputs);
    throw std::runtime_error("stage " + name + ": " + e.what());
  }
}

Manifest run_pipeline(const PipelineConfig& config) {
  config.validate();
  for (const Stage& stage : pipeline_stages()) run_stage(stage.name, config);
  return read_manifest(config);
}

}  // namespace topicburst
