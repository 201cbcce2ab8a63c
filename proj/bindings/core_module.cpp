#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "topicburst/pipeline.hpp"

namespace py = pybind11;
using namespace topicburst;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Topic and topic-burst mapping for time-stamped publication corpora";

  py::class_<Document>(m, "Document")
      .def(py::init<>())
      .def(py::init([](std::string id, int year, long long citations, std::string title,
                       std::vector<std::string> keywords) {
             return Document{std::move(id), year, citations, std::move(title),
                             std::move(keywords)};
           }),
           py::arg("id"), py::arg("year"), py::arg("citations"), py::arg("title") = "",
           py::arg("keywords") = std::vector<std::string>{})
      .def_readwrite("id", &Document::id)
      .def_readwrite("year", &Document::year)
      .def_readwrite("citations", &Document::citations)
      .def_readwrite("title", &Document::title)
      .def_readwrite("keywords", &Document::keywords);

  py::class_<Corpus>(m, "Corpus")
      .def(py::init<>())
      .def_readwrite("documents", &Corpus::documents)
      .def_readwrite("year_min", &Corpus::year_min)
      .def_readwrite("year_max", &Corpus::year_max)
      .def("__len__", [](const Corpus& c) { return c.documents.size(); });

  m.def("load_corpus", [](const std::string& text) {
    std::istringstream in(text);
    return load_corpus(in);
  }, py::arg("text"), "Parse line-delimited JSON records into a corpus");
  m.def("load_corpus_file", &load_corpus_file, py::arg("path"));
  m.def("filter_titled", &filter_titled, py::arg("corpus"));
  m.def("filter_top_cited", &filter_top_cited, py::arg("corpus"), py::arg("fraction"));
  m.def("extract_terms", &extract_terms, py::arg("document"),
        py::arg("stoplist") = std::set<Term>{});
  m.def("collect_vocabulary", &collect_vocabulary, py::arg("corpus"),
        py::arg("stoplist") = std::set<Term>{});
  m.def("default_stoplist", &default_stoplist);
  m.def("normalize_term", &normalize_term, py::arg("text"));

  py::class_<TermTimeSeries>(m, "TermTimeSeries")
      .def(py::init<>())
      .def_readwrite("term", &TermTimeSeries::term)
      .def_readwrite("year_min", &TermTimeSeries::year_min)
      .def_readwrite("docs_with_term", &TermTimeSeries::docs_with_term)
      .def_readwrite("docs_total", &TermTimeSeries::docs_total)
      .def("total_occurrences", &TermTimeSeries::total_occurrences);

  m.def("count_series", &count_series, py::arg("corpus"), py::arg("vocabulary"));
  m.def("top_k_frequent", &top_k_frequent, py::arg("series"), py::arg("k"),
        py::arg("stoplist") = std::set<Term>{});
  m.def("export_frequency_table", &export_frequency_table, py::arg("terms"),
        py::arg("series"));

  py::class_<BurstConfig>(m, "BurstConfig")
      .def(py::init<>())
      .def_readwrite("rate_scale", &BurstConfig::rate_scale)
      .def_readwrite("transition_gamma", &BurstConfig::transition_gamma)
      .def_readwrite("num_states", &BurstConfig::num_states)
      .def_readwrite("probability_margin", &BurstConfig::probability_margin);

  py::class_<BurstInterval>(m, "BurstInterval")
      .def_readonly("term", &BurstInterval::term)
      .def_readonly("level", &BurstInterval::level)
      .def_readonly("start_year", &BurstInterval::start_year)
      .def_readonly("end_year", &BurstInterval::end_year)
      .def_readonly("weight", &BurstInterval::weight)
      .def("__repr__", [](const BurstInterval& b) {
        return "BurstInterval(term='" + b.term + "', level=" + std::to_string(b.level) +
               ", start=" + std::to_string(b.start_year) +
               ", end=" + std::to_string(b.end_year) + ")";
      });

  py::class_<BurstSummary>(m, "BurstSummary")
      .def_readonly("term", &BurstSummary::term)
      .def_readonly("burst_count", &BurstSummary::burst_count)
      .def_readonly("max_level", &BurstSummary::max_level)
      .def_readonly("max_weight", &BurstSummary::max_weight)
      .def_readonly("first_burst_year", &BurstSummary::first_burst_year)
      .def_readonly("max_weight_burst_year", &BurstSummary::max_weight_burst_year);

  m.def("detect_bursts", &detect_bursts, py::arg("series"),
        py::arg("config") = BurstConfig{});
  m.def("burst_state_sequence", [](const TermTimeSeries& series, const BurstConfig& config) {
    const auto result = burst_state_sequence(series, config);
    return py::make_tuple(result.states, result.total_cost);
  }, py::arg("series"), py::arg("config") = BurstConfig{});
  m.def("burst_summary", &burst_summary, py::arg("intervals"));
  m.def("rank_by_burstiness", &rank_by_burstiness, py::arg("summaries"));
  m.def("export_burst_list", &export_burst_list, py::arg("intervals"));

  py::class_<CoWordMatrix>(m, "CoWordMatrix")
      .def_readonly("terms", &CoWordMatrix::terms)
      .def_readonly("counts", &CoWordMatrix::counts)
      .def_readonly("doc_freq", &CoWordMatrix::doc_freq);

  py::class_<NormalizedCoWordMatrix>(m, "NormalizedCoWordMatrix")
      .def_readonly("terms", &NormalizedCoWordMatrix::terms)
      .def_readonly("strengths", &NormalizedCoWordMatrix::strengths);

  py::class_<VocabularySelection>(m, "VocabularySelection")
      .def_readonly("terms", &VocabularySelection::terms)
      .def_readonly("freq_depth", &VocabularySelection::freq_depth)
      .def_readonly("burst_depth", &VocabularySelection::burst_depth);

  m.def("select_map_vocabulary", &select_map_vocabulary, py::arg("freq_ranking"),
        py::arg("burst_ranking"), py::arg("target"));
  m.def("build_cooccurrence", &build_cooccurrence, py::arg("corpus"), py::arg("terms"));
  m.def("cosine_normalize", &cosine_normalize, py::arg("matrix"));
  m.def("nonzero_entry_count",
        py::overload_cast<const CoWordMatrix&>(&nonzero_entry_count), py::arg("matrix"));
  m.def("nonzero_entry_count",
        py::overload_cast<const NormalizedCoWordMatrix&>(&nonzero_entry_count),
        py::arg("matrix"));

  py::class_<DissimilarityGraph>(m, "DissimilarityGraph")
      .def(py::init<>())
      .def_readwrite("labels", &DissimilarityGraph::labels)
      .def_readwrite("dist", &DissimilarityGraph::dist)
      .def("__len__", &DissimilarityGraph::size);

  py::enum_<DistanceMode>(m, "DistanceMode")
      .value("RECIPROCAL", DistanceMode::Reciprocal)
      .value("MAX_MINUS", DistanceMode::MaxMinus);

  py::class_<PfnetParams>(m, "PfnetParams")
      .def(py::init<>())
      .def_readwrite("minkowski_exponent", &PfnetParams::minkowski_exponent)
      .def_readwrite("max_path_links", &PfnetParams::max_path_links);

  m.def("similarity_to_distance",
        py::overload_cast<const CoWordMatrix&, DistanceMode>(&similarity_to_distance),
        py::arg("matrix"), py::arg("mode") = DistanceMode::Reciprocal);
  m.def("similarity_to_distance",
        py::overload_cast<const NormalizedCoWordMatrix&, DistanceMode>(
            &similarity_to_distance),
        py::arg("matrix"), py::arg("mode") = DistanceMode::Reciprocal);
  m.def("pfnet", &pfnet, py::arg("graph"), py::arg("params"));
  m.def("edge_pairs", &edge_pairs, py::arg("graph"));
  m.def("edge_count", [](const DissimilarityGraph& graph) {
    const auto count = edge_count(graph);
    return py::make_tuple(count.undirected, count.matrix_entries);
  }, py::arg("graph"));

  py::class_<LayoutConfig>(m, "LayoutConfig")
      .def(py::init<>())
      .def_readwrite("width", &LayoutConfig::width)
      .def_readwrite("height", &LayoutConfig::height)
      .def_readwrite("iterations", &LayoutConfig::iterations)
      .def_readwrite("seed", &LayoutConfig::seed)
      .def_readwrite("spacing", &LayoutConfig::spacing);

  m.def("fruchterman_reingold", &fruchterman_reingold, py::arg("graph"),
        py::arg("config") = LayoutConfig{});
  m.def("layout_energy", &layout_energy, py::arg("graph"), py::arg("config"),
        py::arg("positions"));
  m.def("export_positions", &export_positions, py::arg("labels"), py::arg("positions"));

  py::class_<PeriodPalette>(m, "PeriodPalette");
  m.def("make_palette", &make_palette, py::arg("year_min"), py::arg("year_max"),
        py::arg("bin_count") = 5,
        py::arg("colors") = default_period_colors());
  m.def("assign_period_color", &assign_period_color, py::arg("year"), py::arg("palette"));

  py::enum_<NodeSizeSource>(m, "NodeSizeSource")
      .value("BURST_LEVEL", NodeSizeSource::BurstLevel)
      .value("BURST_WEIGHT", NodeSizeSource::BurstWeight);
  py::enum_<FillSource>(m, "FillSource")
      .value("FIRST_BURST", FillSource::FirstBurst)
      .value("MAX_WEIGHT_BURST", FillSource::MaxWeightBurst);

  py::class_<NodeStyleOptions>(m, "NodeStyleOptions")
      .def(py::init<>())
      .def_readwrite("size_source", &NodeStyleOptions::size_source)
      .def_readwrite("fill_source", &NodeStyleOptions::fill_source)
      .def_readwrite("radius_min", &NodeStyleOptions::radius_min)
      .def_readwrite("radius_max", &NodeStyleOptions::radius_max)
      .def_readwrite("neutral_fill", &NodeStyleOptions::neutral_fill)
      .def_readwrite("include_nonbursting", &NodeStyleOptions::include_nonbursting);

  py::class_<NodeGlyph>(m, "NodeGlyph")
      .def_readonly("term", &NodeGlyph::term)
      .def_readonly("x", &NodeGlyph::x)
      .def_readonly("y", &NodeGlyph::y)
      .def_readonly("radius", &NodeGlyph::radius)
      .def_readonly("fill_color", &NodeGlyph::fill_color)
      .def_readonly("ring_color", &NodeGlyph::ring_color);

  py::class_<EdgeGlyph>(m, "EdgeGlyph")
      .def_readonly("term_a", &EdgeGlyph::term_a)
      .def_readonly("term_b", &EdgeGlyph::term_b)
      .def_readonly("width", &EdgeGlyph::width)
      .def_readonly("count", &EdgeGlyph::count);

  py::class_<EdgeStyleOptions>(m, "EdgeStyleOptions")
      .def(py::init<>())
      .def_readwrite("width_min", &EdgeStyleOptions::width_min)
      .def_readwrite("width_max", &EdgeStyleOptions::width_max);

  py::class_<Frame>(m, "Frame")
      .def(py::init<>())
      .def_readwrite("width", &Frame::width)
      .def_readwrite("height", &Frame::height);

  m.def("style_nodes", &style_nodes, py::arg("vocab"), py::arg("summaries"),
        py::arg("series"), py::arg("positions"), py::arg("palette"),
        py::arg("options") = NodeStyleOptions{});
  m.def("style_edges",
        py::overload_cast<const DissimilarityGraph&, const CoWordMatrix&,
                          const Positions&, const std::vector<NodeGlyph>&,
                          const EdgeStyleOptions&>(&style_edges),
        py::arg("pruned"), py::arg("counts"), py::arg("positions"), py::arg("nodes"),
        py::arg("options") = EdgeStyleOptions{});
  m.def("render_svg", &render_svg, py::arg("nodes"), py::arg("edges"), py::arg("frame"),
        py::arg("palette"));
  m.def("export_pajek", &export_pajek, py::arg("labels"), py::arg("edges"));
  m.def("parse_pajek", [](const std::string& text) {
    std::istringstream in(text);
    const PajekGraph graph = parse_pajek(in);
    return py::make_tuple(graph.labels, graph.edges);
  }, py::arg("text"));
  m.def("render_frequency_chart", &render_frequency_chart, py::arg("terms"),
        py::arg("series"), py::arg("palette"));

  py::class_<Manifest>(m, "Manifest")
      .def_readonly("artifacts", &Manifest::artifacts)
      .def_readonly("partial", &Manifest::partial);

  m.def("load_pipeline_config", &load_pipeline_config, py::arg("path"));
  py::class_<PipelineConfig>(m, "PipelineConfig")
      .def(py::init<>())
      .def_readwrite("input_path", &PipelineConfig::input_path)
      .def_readwrite("output_dir", &PipelineConfig::output_dir)
      .def_readwrite("vocabulary_target", &PipelineConfig::vocabulary_target)
      .def_readwrite("layout", &PipelineConfig::layout)
      .def_readwrite("chart_terms", &PipelineConfig::chart_terms);
  m.def("run_pipeline", &run_pipeline, py::arg("config"));
  m.def("run_stage", &run_stage, py::arg("name"), py::arg("config"));
}
