#ifndef TOPICBURST_PIPELINE_HPP
#define TOPICBURST_PIPELINE_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "topicburst/burst.hpp"
#include "topicburst/coword.hpp"
#include "topicburst/corpus.hpp"
#include "topicburst/layout.hpp"
#include "topicburst/map_render.hpp"
#include "topicburst/pathfinder.hpp"
#include "topicburst/term_stats.hpp"

namespace topicburst {

enum class MatrixMode { Raw, Cosine };
enum class StoplistSource { Default, None, File };

struct PipelineConfig {
  std::string input_path;
  std::string output_dir;
  double top_cited_fraction = 0.10;
  StoplistSource stoplist_source = StoplistSource::Default;
  std::string stoplist_path;
  BurstConfig burst;
  std::size_t vocabulary_target = 50;
  MatrixMode matrix_mode = MatrixMode::Raw;
  DistanceMode distance_mode = DistanceMode::Reciprocal;
  double pfnet_exponent = 6.0;
  std::size_t pfnet_max_links = 0;  // 0 means n-1
  LayoutConfig layout;
  std::size_t palette_bins = 5;
  std::vector<std::string> palette_colors;  // empty means the stock colors
  NodeStyleOptions node_style;
  EdgeStyleOptions edge_style;
  std::size_t chart_terms = 10;

  std::set<Term> stoplist() const;
  void validate() const;
};

// Flat key = value file; '#' starts a comment. Relative paths are resolved
// against the config file's directory. Unknown keys are errors.
PipelineConfig load_pipeline_config(const std::string& path);

// Artifact file names inside the output directory.
namespace artifact {
inline constexpr const char* kCorpus = "corpus_filtered.jsonl";
inline constexpr const char* kTermSeries = "term_series.csv";
inline constexpr const char* kFreqTable = "freq_table.csv";
inline constexpr const char* kBursts = "bursts.csv";
inline constexpr const char* kBurstSummary = "burst_summary.csv";
inline constexpr const char* kVocabulary = "vocabulary.txt";
inline constexpr const char* kCowordRaw = "coword_raw.csv";
inline constexpr const char* kCowordCosine = "coword_cosine.csv";
inline constexpr const char* kPrunedEdges = "pruned_edges.csv";
inline constexpr const char* kPositions = "positions.csv";
inline constexpr const char* kMapSvg = "map.svg";
inline constexpr const char* kMapPajek = "map.net";
inline constexpr const char* kFreqChart = "freq_chart.svg";
inline constexpr const char* kManifest = "manifest.json";
}  // namespace artifact

struct Manifest {
  std::map<std::string, std::string> artifacts;  // name -> sha256
  std::vector<std::string> partial;              // flagged incomplete outputs

  std::string to_json() const;
  static Manifest from_json_text(const std::string& text);
};

struct Stage {
  std::string name;
  std::vector<std::string> outputs;
  std::function<void(const PipelineConfig&)> run;
};

// ingest, freq, burst, select, coword, pfnet, layout, render — in pipeline
// order. Each reads the previous stage's artifacts from the output
// directory, writes its own, and records them in the manifest.
const std::vector<Stage>& pipeline_stages();

// Runs one named stage including its manifest update.
void run_stage(const std::string& name, const PipelineConfig& config);

// Runs all stages in order. A failing stage aborts with its name and cause
// after flagging whatever partial outputs it left in the manifest.
Manifest run_pipeline(const PipelineConfig& config);

// Stage-file helpers (exposed for tests and the CLI).
std::string read_artifact(const PipelineConfig& config, const std::string& name,
                          const std::string& expected_schema);
void write_artifact(const PipelineConfig& config, const std::string& name,
                    const std::string& schema, const std::string& content);
Manifest read_manifest(const PipelineConfig& config);

std::map<Term, TermTimeSeries> parse_term_series(const std::string& content);
std::map<Term, BurstSummary> parse_burst_summaries(const std::string& content);
std::vector<Term> parse_vocabulary(const std::string& content);
std::vector<std::tuple<Term, Term, long long, double>> parse_edge_list(
    const std::string& content);
std::pair<std::vector<std::string>, Positions> parse_positions(const std::string& content);

}  // namespace topicburst

#endif
