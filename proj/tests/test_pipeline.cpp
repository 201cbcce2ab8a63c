#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "test_support.hpp"
#include "topicburst/pipeline.hpp"

using namespace topicburst;
namespace fs = std::filesystem;

namespace {

const std::string kFixtureDir = TOPICBURST_FIXTURE_DIR;

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("topicburst_" + tag + "_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter++));
    fs::remove_all(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string str() const { return path.string(); }
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

PipelineConfig fixture_config(const std::string& out_dir) {
  PipelineConfig config = load_pipeline_config(kFixtureDir + "/pipeline.conf");
  config.output_dir = out_dir;
  return config;
}

const std::vector<std::string>& all_artifacts() {
  static const std::vector<std::string> names = {
      artifact::kCorpus,      artifact::kTermSeries, artifact::kFreqTable,
      artifact::kBursts,      artifact::kBurstSummary, artifact::kVocabulary,
      artifact::kCowordRaw,   artifact::kCowordCosine, artifact::kPrunedEdges,
      artifact::kPositions,   artifact::kMapSvg,     artifact::kMapPajek,
      artifact::kFreqChart,
  };
  return names;
}

}  // namespace

TEST_CASE("config file loads with fixture settings") {
  const PipelineConfig config = fixture_config("unused");
  CHECK(config.top_cited_fraction == 0.5);
  CHECK(config.vocabulary_target == 8);
  CHECK(config.pfnet_exponent == 6.0);
  CHECK(config.layout.seed == 20240101);
  CHECK(config.chart_terms == 6);
  CHECK(config.matrix_mode == MatrixMode::Raw);
  // input resolves relative to the config file
  CHECK(fs::path(config.input_path).filename() == "corpus.jsonl");
  CHECK(fs::exists(config.input_path));
}

TEST_CASE("unknown config keys are rejected") {
  TempDir dir("badcfg");
  fs::create_directories(dir.path);
  const fs::path cfg = dir.path / "bad.conf";
  std::ofstream(cfg) << "input = x.jsonl\nnot_a_key = 1\n";
  CHECK_THROWS_WITH_AS(load_pipeline_config(cfg.string()),
                       "config line 2: unknown key 'not_a_key'", std::runtime_error);
}

TEST_CASE("run_pipeline writes every artifact plus a manifest") {
  TempDir dir("run");
  const Manifest manifest = run_pipeline(fixture_config(dir.str()));
  CHECK(manifest.partial.empty());
  for (const auto& name : all_artifacts()) {
    INFO("artifact ", name);
    CHECK(manifest.artifacts.count(name) == 1);
    CHECK(fs::exists(dir.path / name));
  }
  CHECK(fs::exists(dir.path / artifact::kManifest));

  SUBCASE("repeated runs are byte-identical") {
    TempDir again("run2");
    run_pipeline(fixture_config(again.str()));
    for (const auto& name : all_artifacts()) {
      INFO("artifact ", name);
      CHECK(slurp(dir.path / name) == slurp(again.path / name));
    }
    CHECK(slurp(dir.path / artifact::kManifest) ==
          slurp(again.path / artifact::kManifest));
  }

  SUBCASE("a different seed moves the layout but not the counts") {
    TempDir reseeded("reseed");
    PipelineConfig config = fixture_config(reseeded.str());
    config.layout.seed = 7;
    run_pipeline(config);
    CHECK(slurp(dir.path / artifact::kTermSeries) ==
          slurp(reseeded.path / artifact::kTermSeries));
    CHECK(slurp(dir.path / artifact::kPrunedEdges) ==
          slurp(reseeded.path / artifact::kPrunedEdges));
    CHECK(slurp(dir.path / artifact::kPositions) !=
          slurp(reseeded.path / artifact::kPositions));
  }
}

TEST_CASE("cosine and max-minus modes run end to end") {
  TempDir dir("cosine");
  PipelineConfig config = fixture_config(dir.str());
  config.matrix_mode = MatrixMode::Cosine;
  config.distance_mode = DistanceMode::MaxMinus;
  config.node_style.size_source = NodeSizeSource::BurstWeight;
  config.node_style.include_nonbursting = true;
  const Manifest manifest = run_pipeline(config);
  CHECK(manifest.partial.empty());
  CHECK(fs::exists(dir.path / artifact::kMapSvg));
  // cosine distances differ from the raw-count ones
  TempDir raw_dir("rawmode");
  PipelineConfig raw = fixture_config(raw_dir.str());
  run_pipeline(raw);
  CHECK(slurp(dir.path / artifact::kPrunedEdges) !=
        slurp(raw_dir.path / artifact::kPrunedEdges));
}

TEST_CASE("stage-wise execution reproduces the whole pipeline") {
  TempDir whole("whole");
  run_pipeline(fixture_config(whole.str()));

  TempDir staged("staged");
  const PipelineConfig config = fixture_config(staged.str());
  for (const auto& stage : pipeline_stages()) run_stage(stage.name, config);

  for (const auto& name : all_artifacts()) {
    INFO("artifact ", name);
    CHECK(slurp(whole.path / name) == slurp(staged.path / name));
  }
  CHECK(slurp(whole.path / artifact::kManifest) ==
        slurp(staged.path / artifact::kManifest));
}

TEST_CASE("fraction 1 with no stoplist keeps the full corpus vocabulary") {
  TempDir dir("full");
  PipelineConfig config = fixture_config(dir.str());
  config.top_cited_fraction = 1.0;
  config.stoplist_source = StoplistSource::None;
  run_stage("ingest", config);
  run_stage("freq", config);

  const auto series =
      parse_term_series(read_artifact(config, artifact::kTermSeries,
                                      "topicburst/term-series/1"));
  const Corpus corpus = filter_titled(load_corpus_file(config.input_path));
  const auto expected = collect_vocabulary(corpus, {});
  CHECK(series.size() == expected.size());
  for (const auto& term : expected) CHECK(series.count(term) == 1);
}

TEST_CASE("unreadable input aborts before writing anything") {
  TempDir dir("noinput");
  PipelineConfig config = fixture_config(dir.str());
  config.input_path = "/nonexistent/corpus.jsonl";
  CHECK_THROWS_WITH_AS(run_pipeline(config),
                       "stage ingest: cannot open input file '/nonexistent/corpus.jsonl'",
                       std::runtime_error);
  CHECK_FALSE(fs::exists(dir.path / artifact::kManifest));
  CHECK_FALSE(fs::exists(dir.path / artifact::kCorpus));
}

TEST_CASE("stages demand their upstream artifacts") {
  TempDir dir("gap");
  const PipelineConfig config = fixture_config(dir.str());
  CHECK_THROWS_AS(run_stage("burst", config), std::runtime_error);
  try {
    run_stage("burst", config);
  } catch (const std::exception& e) {
    CHECK(std::string(e.what()).find("run the producing stage first") !=
          std::string::npos);
  }
}

TEST_CASE("schema mismatches name both schemas") {
  TempDir dir("schema");
  const PipelineConfig config = fixture_config(dir.str());
  run_stage("ingest", config);
  run_stage("freq", config);
  // clobber the series artifact with a different schema
  std::ofstream(dir.path / artifact::kTermSeries)
      << "# schema: topicburst/positions/1\nterm,x,y\n";
  try {
    run_stage("burst", config);
    FAIL("expected a schema error");
  } catch (const std::exception& e) {
    const std::string what = e.what();
    CHECK(what.find("expected schema 'topicburst/term-series/1'") != std::string::npos);
    CHECK(what.find("found 'topicburst/positions/1'") != std::string::npos);
  }
}

TEST_CASE("render accepts a zero-edge network") {
  TempDir dir("zeroedge");
  const PipelineConfig config = fixture_config(dir.str());
  run_pipeline(config);
  // keep only the schema line and header: every edge pruned away
  std::ofstream(dir.path / artifact::kPrunedEdges)
      << "# schema: topicburst/pruned-edges/1\nterm_a,term_b,count,distance\n";
  run_stage("layout", config);
  run_stage("render", config);
  const std::string svg = slurp(dir.path / artifact::kMapSvg);
  CHECK(svg.find("<circle") != std::string::npos);
  CHECK(svg.find("<line") == std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("corrupted stage files abort the consuming stage") {
  TempDir dir("corrupt");
  const PipelineConfig config = fixture_config(dir.str());
  for (const auto& stage : pipeline_stages()) {
    if (stage.name == "render") break;
    run_stage(stage.name, config);
  }
  std::ofstream(dir.path / artifact::kBurstSummary)
      << "# schema: topicburst/burst-summary/1\n"
      << "term,burst_count,max_level,max_weight,first_burst_year,max_weight_burst_year\n"
      << "broken\n";
  CHECK_THROWS_AS(run_stage("render", config), std::runtime_error);
  const Manifest manifest = read_manifest(config);
  CHECK(manifest.artifacts.count(artifact::kMapSvg) == 0);
}

TEST_CASE("failed stages flag partial outputs in the manifest") {
  TempDir dir("partial");
  const PipelineConfig config = fixture_config(dir.str());
  for (const auto& stage : pipeline_stages()) {
    if (stage.name == "render") break;
    run_stage(stage.name, config);
  }
  // a vocabulary label no pajek file can hold: render writes the SVG, then
  // fails on the network export, leaving the SVG as a partial output
  {
    std::ofstream out(dir.path / artifact::kVocabulary, std::ios::app);
    out << "un\"quotable\n";
  }
  run_stage("layout", config);
  CHECK_THROWS_AS(run_stage("render", config), std::runtime_error);
  const Manifest manifest = read_manifest(config);
  CHECK(manifest.artifacts.count(artifact::kMapSvg) == 0);
  CHECK(std::find(manifest.partial.begin(), manifest.partial.end(),
                  std::string(artifact::kMapSvg)) != manifest.partial.end());
}

TEST_CASE("the command line tool runs end to end") {
  TempDir dir("cli");
  const std::string command = std::string(TOPICBURST_CLI_PATH) + " run --config " +
                              kFixtureDir + "/pipeline.conf --out " + dir.str() +
                              " > /dev/null";
  REQUIRE(std::system(command.c_str()) == 0);
  CHECK(fs::exists(dir.path / artifact::kMapSvg));
  CHECK(fs::exists(dir.path / artifact::kManifest));

  // a stage invocation on top of the run artifacts succeeds too
  const std::string stage_command = std::string(TOPICBURST_CLI_PATH) +
                                    " render --config " + kFixtureDir +
                                    "/pipeline.conf --out " + dir.str() + " > /dev/null";
  CHECK(std::system(stage_command.c_str()) == 0);

  // --seed reruns the layout stage with different coordinates
  const std::string positions_before = slurp(dir.path / artifact::kPositions);
  const std::string reseed_command = std::string(TOPICBURST_CLI_PATH) +
                                     " layout --config " + kFixtureDir +
                                     "/pipeline.conf --out " + dir.str() +
                                     " --seed 99 > /dev/null";
  CHECK(std::system(reseed_command.c_str()) == 0);
  CHECK(slurp(dir.path / artifact::kPositions) != positions_before);

  const std::string failing = std::string(TOPICBURST_CLI_PATH) +
                              " run --config /nonexistent.conf 2> /dev/null";
  CHECK(std::system(failing.c_str()) != 0);
}
