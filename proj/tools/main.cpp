#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <map>
#include <string>

#include "topicburst/pipeline.hpp"

namespace {

const std::map<std::string, std::string>& stage_descriptions() {
  static const std::map<std::string, std::string> descriptions = {
      {"run", "run the whole pipeline and write the artifact manifest"},
      {"ingest", "load records, drop untitled documents, keep the top-cited share"},
      {"freq", "build per-term yearly series and the frequency table"},
      {"burst", "detect bursts per term and summarize them"},
      {"select", "intersect frequency and burstiness rankings into the map vocabulary"},
      {"coword", "build the raw and cosine-normalized co-word matrices"},
      {"pfnet", "prune the co-word network with pathfinder scaling"},
      {"layout", "compute force-directed node positions"},
      {"render", "write the SVG map, pajek network and frequency chart"},
  };
  return descriptions;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"topicburst: map frequent and bursting topics in a publication corpus"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_override;
  std::uint64_t seed_override = 0;

  std::vector<std::string> commands = {"run"};
  for (const auto& stage : topicburst::pipeline_stages()) commands.push_back(stage.name);
  for (const std::string& name : commands) {
    CLI::App* sub = app.add_subcommand(name, stage_descriptions().at(name));
    sub->add_option("--config", config_path, "pipeline config file")->required();
    sub->add_option("--seed", seed_override, "override the layout seed");
    sub->add_option("--out", out_override, "override the output directory");
  }

  CLI11_PARSE(app, argc, argv);
  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();

  try {
    topicburst::PipelineConfig config = topicburst::load_pipeline_config(config_path);
    if (!out_override.empty()) config.output_dir = out_override;
    if (sub->count("--seed") > 0) config.layout.seed = seed_override;

    if (command == "run") {
      const topicburst::Manifest manifest = topicburst::run_pipeline(config);
      for (const auto& [name, digest] : manifest.artifacts) {
        std::cout << digest << "  " << name << "\n";
      }
      std::cout << manifest.artifacts.size() << " artifacts in " << config.output_dir
                << "\n";
    } else {
      topicburst::run_stage(command, config);
      for (const auto& stage : topicburst::pipeline_stages()) {
        if (stage.name != command) continue;
        for (const std::string& name : stage.outputs) {
          std::cout << "wrote " << name << "\n";
        }
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
