"""Config parsing, grid expansion, normalization fixed point, CLI subcommands."""

import pytest

from gridwalk import Metric, NetworkKind, PolicyKind
from gridwalk.cli import main
from gridwalk.config import parse_config
from gridwalk.errors import (
    BadValueError,
    MissingRequiredError,
    UnknownKeyError,
)

MINIMAL = (
    "network=small-world\nnodes=500\nsources=5\ntargets=50\nwalkers=5\n"
    "policy=centrality\nmetric=degree\nseed=42\n"
)


# --- parse_config ---


def test_parse_minimal_single_cell():
    parsed = parse_config(MINIMAL)
    assert len(parsed.cells) == 1
    cell = parsed.cells[0]
    assert cell.generator.kind is NetworkKind.SMALL_WORLD
    assert cell.generator.n == 500
    assert cell.policy.kind is PolicyKind.CENTRALITY
    assert cell.policy.metric is Metric.DEGREE
    assert (cell.n_sources, cell.n_targets, cell.n_walkers) == (5, 50, 5)
    assert cell.master_seed == 42


def test_parse_bad_value_reports_line():
    with pytest.raises(BadValueError, match="line 1"):
        parse_config("nodes=abc\n")


def test_parse_list_expansion():
    parsed = parse_config("network=random\nnodes=20\nsources=5,10\nseed=1\n")
    assert len(parsed.cells) == 2
    assert [c.n_sources for c in parsed.cells] == [5, 10]
    # walkers pair with sources when unset
    assert [c.n_walkers for c in parsed.cells] == [5, 10]


def test_parse_unknown_key():
    with pytest.raises(UnknownKeyError, match="line 2"):
        parse_config("network=random\nbogus=1\n")


def test_parse_duplicate_key():
    with pytest.raises(BadValueError, match="duplicate"):
        parse_config("network=random\nnetwork=random\n")


def test_parse_missing_required():
    with pytest.raises(MissingRequiredError, match="network"):
        parse_config("nodes=10\n")
    with pytest.raises(MissingRequiredError, match="nodes"):
        parse_config("network=random\n")


def test_parse_seed_must_be_scalar():
    with pytest.raises(BadValueError, match="seed"):
        parse_config("network=random\nnodes=10\nseed=1,2\n")


def test_parse_validates_generator_params():
    with pytest.raises(BadValueError, match="k must be even"):
        parse_config("network=small-world\nnodes=10\nk=3\nseed=1\n")


def test_policy_metric_flattening():
    parsed = parse_config(
        "network=random\nnodes=20\npolicy=random-walk,centrality\n"
        "metric=degree,closeness\nseed=1\n"
    )
    labels = [c.policy.label() for c in parsed.cells]
    assert labels == ["random-walk", "centrality/degree", "centrality/closeness"]


def test_inapplicable_generator_axes_collapse():
    parsed = parse_config("network=random\nnodes=20\nk=4,6\nseed=1\n")
    assert len(parsed.cells) == 1


def test_normalization_fixed_point():
    for text in (
        MINIMAL,
        "network=random\nnodes=20,30\npolicy=random-walk,centrality\nseed=7\n",
        "network=scale-free\nnodes=50\nm=2\nrepetitions=3\nseed=9\n",
    ):
        first = parse_config(text)
        second = parse_config(first.normalized)
        assert second.normalized == first.normalized
        assert [c.config_id for c in second.cells] == [c.config_id for c in first.cells]
        assert second.cells == first.cells


def test_flag_overrides_beat_file_values():
    parsed = parse_config(MINIMAL, overrides={"nodes": "100", "metric": "closeness"})
    assert parsed.cells[0].generator.n == 100
    assert parsed.cells[0].policy.metric is Metric.CLOSENESS


# --- CLI ---


def run_cli(*argv):
    return main(list(argv))


def test_cli_generate_writes_files_and_prints_clustering(tmp_path, capsys):
    code = run_cli(
        "generate", "--network", "small-world", "--nodes", "20", "--k", "4",
        "--p-rewire", "0", "--seed", "42", "--out", str(tmp_path),
    )
    assert code == 0
    out = capsys.readouterr().out
    assert "mean_clustering=0.5" in out
    edgelist = (tmp_path / "graph.edgelist").read_bytes()
    graphml = (tmp_path / "graph.graphml").read_bytes()
    assert edgelist and graphml

    # byte-identical on rerun
    run_cli(
        "generate", "--network", "small-world", "--nodes", "20", "--k", "4",
        "--p-rewire", "0", "--seed", "42", "--out", str(tmp_path),
    )
    assert (tmp_path / "graph.edgelist").read_bytes() == edgelist
    assert (tmp_path / "graph.graphml").read_bytes() == graphml


def test_cli_generate_random_complete(tmp_path, capsys):
    code = run_cli(
        "generate", "--network", "random", "--nodes", "10", "--p-edge", "1",
        "--seed", "1", "--out", str(tmp_path),
    )
    assert code == 0
    assert "nodes=10 edges=45" in capsys.readouterr().out
    graphml = (tmp_path / "graph.graphml").read_text()
    assert graphml.count("<node ") == 10
    assert graphml.count("<edge ") == 45


def test_cli_missing_seed_is_usage_error(tmp_path, capsys):
    code = run_cli("generate", "--network", "random", "--nodes", "10", "--out", str(tmp_path))
    assert code == 1
    assert "seed" in capsys.readouterr().err


def test_cli_unknown_config_key_exits_1(tmp_path, capsys):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("network=random\nnodes=10\nwat=1\nseed=1\n")
    code = run_cli("sweep", "--config", str(cfg), "--out", str(tmp_path / "out"))
    assert code == 1
    assert "unknown key" in capsys.readouterr().err


def test_cli_simulate_single_cell(tmp_path, capsys):
    cfg = tmp_path / "sim.cfg"
    cfg.write_text(
        "network=random\nnodes=2\np-edge=1\nsources=1\ntargets=1\nwalkers=1\n"
        "repetitions=1\nseed=5\n"
    )
    code = run_cli("simulate", "--config", str(cfg), "--out", str(tmp_path / "out"))
    assert code == 0
    raw = (tmp_path / "out" / "raw.csv").read_text()
    assert len(raw.strip().split("\n")) == 2
    series = (tmp_path / "out" / "series-run000.csv").read_text()
    assert series == "tick,visited_nodes,visited_targets\n1,2,1\n"
    assert "status=complete" in capsys.readouterr().out


def test_cli_simulate_rejects_multi_cell(tmp_path, capsys):
    cfg = tmp_path / "sim.cfg"
    cfg.write_text("network=random\nnodes=20,30\nseed=5\n")
    code = run_cli("simulate", "--config", str(cfg), "--out", str(tmp_path / "out"))
    assert code == 1


def test_cli_sweep_outputs_and_determinism(tmp_path, capsys):
    cfg = tmp_path / "sweep.cfg"
    cfg.write_text(
        "network=small-world\nnodes=30\nsources=2\ntargets=4\nwalkers=2\n"
        "policy=random-walk,centrality\nmetric=degree\nrepetitions=3\n"
        "dead-end=random-any-neighbor\nseed=11\n"
    )
    out1, out2 = tmp_path / "out1", tmp_path / "out2"
    assert run_cli("sweep", "--config", str(cfg), "--out", str(out1)) == 0
    assert run_cli("sweep", "--config", str(cfg), "--out", str(out2)) == 0
    for name in ("raw.csv", "summary.csv", "time_reduction.csv", "config.normalized"):
        assert (out1 / name).read_bytes() == (out2 / name).read_bytes()
    svgs = sorted(p.name for p in out1.glob("*.svg"))
    assert len(svgs) == 2
    for svg in svgs:
        assert (out1 / svg).read_bytes() == (out2 / svg).read_bytes()
    reduction = (out1 / "time_reduction.csv").read_text().strip().split("\n")
    assert reduction[0] == "network,metric,reduction_pct"
    assert len(reduction) == 2


def test_cli_sweep_without_baseline_notes_empty_reduction(tmp_path, capsys):
    cfg = tmp_path / "sweep.cfg"
    cfg.write_text(
        "network=random\nnodes=20\nsources=2\ntargets=3\nwalkers=2\n"
        "policy=centrality\nmetric=degree\nrepetitions=2\nseed=3\n"
    )
    code = run_cli("sweep", "--config", str(cfg), "--out", str(tmp_path / "out"))
    assert code == 0
    err = capsys.readouterr().err
    assert "no random-walk baseline" in err
    body = (tmp_path / "out" / "time_reduction.csv").read_text()
    assert body == "network,metric,reduction_pct\n"


def test_cli_export_roundtrip(tmp_path, capsys):
    edges = tmp_path / "g.edgelist"
    edges.write_text("0 1\n1 2\n")
    out = tmp_path / "g.graphml"
    code = run_cli("export", "--edges", str(edges), "--out", str(out), "--metric", "degree")
    assert code == 0
    text = out.read_text()
    assert text.count("<node ") == 3
    assert 'attr.name="degree"' in text


def test_cli_export_missing_file_exits_2(tmp_path, capsys):
    code = run_cli("export", "--edges", str(tmp_path / "nope.txt"), "--out", str(tmp_path / "o"))
    assert code == 2


def test_cli_usage_error_exits_1(capsys):
    assert main(["frobnicate"]) == 1
