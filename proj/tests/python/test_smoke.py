"""Smoke tests for the python bindings: a miniature end-to-end flow."""

import json
import math
import os

import pytest

import topicburst as tb

FIXTURE_DIR = os.environ.get("TOPICBURST_FIXTURE_DIR")


def make_corpus():
    records = []
    doc_id = 0
    for year in range(1982, 1992):
        for slot in range(6):
            doc_id += 1
            words = ["gene", "cell"]
            if slot < 2:
                words.append("protein")
            if 1986 <= year <= 1988 and slot < 4:
                words.append("cloning")
            records.append({
                "id": f"d{doc_id}",
                "year": year,
                "citations": doc_id % 7,
                "title": " ".join(words),
                "keywords": ["cell line"] if slot == 0 else [],
            })
    return "\n".join(json.dumps(r) for r in records) + "\n"


def test_corpus_roundtrip():
    corpus = tb.load_corpus(make_corpus())
    assert len(corpus) == 60
    assert corpus.year_min == 1982
    assert corpus.year_max == 1991

    titled = tb.filter_titled(corpus)
    assert len(titled) == 60
    top = tb.filter_top_cited(corpus, 0.5)
    assert 0 < len(top) <= 60

    terms = tb.extract_terms(corpus.documents[0])
    assert "gene" in terms
    assert "cell line" in terms


def test_burst_detection():
    corpus = tb.load_corpus(make_corpus())
    series = tb.count_series(corpus, {"cloning", "gene"})
    bursts = tb.detect_bursts(series["cloning"])
    assert len(bursts) == 1
    assert bursts[0].level == 1
    assert 1985 <= bursts[0].start_year <= 1987
    assert bursts[0].weight > 0
    assert tb.detect_bursts(series["gene"]) == []

    states, cost = tb.burst_state_sequence(series["cloning"])
    assert len(states) == 10
    assert math.isfinite(cost)


def test_coword_pfnet_layout_svg():
    corpus = tb.load_corpus(make_corpus())
    vocab = ["gene", "cell", "protein", "cloning"]
    matrix = tb.build_cooccurrence(corpus, vocab)
    assert matrix.counts[0][1] == 60  # gene and cell share every document

    normalized = tb.cosine_normalize(matrix)
    assert normalized.strengths[0][1] == pytest.approx(1.0)

    graph = tb.similarity_to_distance(matrix)
    params = tb.PfnetParams()
    params.minkowski_exponent = float("inf")
    params.max_path_links = len(vocab) - 1
    pruned = tb.pfnet(graph, params)
    undirected, doubled = tb.edge_count(pruned)
    assert doubled == 2 * undirected
    assert 3 <= undirected <= 6

    config = tb.LayoutConfig()
    config.width = 200.0
    config.height = 200.0
    config.iterations = 100
    config.seed = 9
    positions = tb.fruchterman_reingold(pruned, config)
    assert positions == tb.fruchterman_reingold(pruned, config)
    assert all(0 <= x <= 200 and 0 <= y <= 200 for x, y in positions)

    palette = tb.make_palette(1982, 1991)
    assert tb.assign_period_color(1983, palette) == "green"

    series = tb.count_series(corpus, set(vocab))
    summaries = {"cloning": tb.burst_summary(tb.detect_bursts(series["cloning"]))}
    nodes = tb.style_nodes(vocab, summaries, series, positions, palette)
    assert [n.term for n in nodes] == ["cloning"]
    edges = tb.style_edges(pruned, matrix, positions, nodes)
    frame = tb.Frame()
    frame.width = 200.0
    frame.height = 200.0
    svg = tb.render_svg(nodes, edges, frame, palette)
    assert svg.count("<circle") == 1
    assert svg.startswith("<?xml")

    net = tb.export_pajek(vocab, [(0, 1, 60)])
    labels, parsed_edges = tb.parse_pajek(net)
    assert labels == vocab
    assert parsed_edges == [(0, 1, 60)]


def test_errors_translate():
    with pytest.raises(RuntimeError):
        tb.load_corpus("")
    corpus = tb.load_corpus(make_corpus())
    with pytest.raises(ValueError):
        tb.filter_top_cited(corpus, 0.0)


@pytest.mark.skipif(FIXTURE_DIR is None, reason="fixture dir not provided")
def test_pipeline_on_fixture(tmp_path):
    config = tb.load_pipeline_config(os.path.join(FIXTURE_DIR, "pipeline.conf"))
    config.output_dir = str(tmp_path / "out")
    manifest = tb.run_pipeline(config)
    assert "map.svg" in manifest.artifacts
    assert manifest.partial == []
    assert (tmp_path / "out" / "map.svg").exists()
