"""Command-line front end: generate | centrality | simulate | sweep | export.

Every flag mirrors a config key; flags override config-file values. All
randomness flows from the seed, which is required for any command that
generates or simulates. Exit codes: 0 success, 1 usage/config error,
2 runtime error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from ._kernels import BACKEND
from .centrality import Metric, centrality_csv, compute
from .config import KEYS, parse_config, parse_lines
from .errors import ConfigError, GridwalkError, MissingRequiredError
from .experiments import (
    raw_csv,
    reduction_csv,
    reduction_rows,
    series_csv,
    summarize,
    summary_csv,
    sweep,
)
from .generators import generate
from .graphio import edge_list_text, graphml_text, parse_edge_list
from .rng import RNG_ALGORITHM
from .svg import render_series_svg

_METRICS = {m.value: m for m in Metric}


class _Parser(argparse.ArgumentParser):
    # Usage errors are exit code 1, not argparse's default 2.
    def error(self, message):
        self.print_usage(sys.stderr)
        raise ConfigError(message)


def _add_config_flags(parser: argparse.ArgumentParser) -> None:
    for key in KEYS:
        parser.add_argument(f"--{key}", metavar="VALUE", help=f"override config key {key}")
    parser.add_argument("--config", metavar="FILE", help="key=value config file")


def _collect(args) -> tuple[str, dict[str, str]]:
    text = ""
    if args.config:
        text = Path(args.config).read_text(encoding="utf-8")
    overrides = {}
    for key in KEYS:
        value = getattr(args, key.replace("-", "_"))
        if value is not None:
            overrides[key] = value
    return text, overrides


def _parse(args, require_seed: bool = True):
    text, overrides = _collect(args)
    parsed = parse_config(text, overrides)
    if require_seed and "seed" not in (set(parse_lines(text)) | set(overrides)):
        raise MissingRequiredError("seed is required (reproducibility over convenience)")
    return parsed


def _single_generator(parsed):
    specs = {cell.generator for cell in parsed.cells}
    if len(specs) != 1:
        raise ConfigError(f"this command needs a single network spec, grid has {len(specs)}")
    return next(iter(specs)).resolved()


def _write(path: Path, data: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(data)


def cmd_generate(args) -> int:
    parsed = _parse(args)
    spec = _single_generator(parsed)
    g = generate(spec)
    out = Path(args.out)
    _write(out / "graph.edgelist", edge_list_text(g))
    _write(out / "graph.graphml", graphml_text(g))
    print(
        f"network={spec.kind.value} nodes={g.node_count} edges={g.edge_count}"
        f" mean_clustering={g.mean_clustering():.6g}"
    )
    return 0


def cmd_centrality(args) -> int:
    parsed = _parse(args)
    spec = _single_generator(parsed)
    g = generate(spec)
    csv = centrality_csv(g, eigen_max_iter=max(1000, 100 * g.node_count))
    out = Path(args.out)
    _write(out / "centrality.csv", csv)
    print(f"wrote centrality for {g.node_count} nodes to {out / 'centrality.csv'}")
    return 0


def cmd_simulate(args) -> int:
    parsed = _parse(args)
    if len(parsed.cells) != 1:
        raise ConfigError(f"simulate needs a 1-cell grid, got {len(parsed.cells)} cells")
    cfg = parsed.cells[0]
    outcomes = sweep([cfg])
    out = Path(args.out)
    _write(out / "raw.csv", raw_csv(outcomes))
    _, results = outcomes[0]
    for r in results:
        _write(out / f"series-run{r.run_index:03d}.csv", series_csv(r.series))
        print(
            f"run={r.run_index} seed={r.derived_seed} ticks={r.ticks}"
            f" delivered={r.delivered_targets}/{r.total_targets}"
            f" rate={r.delivery_rate_pct:.6g}% status={r.status.value}"
        )
    return 0


def cmd_sweep(args) -> int:
    parsed = _parse(args)
    outcomes = sweep(parsed.cells)
    summaries = [summarize(cfg, results) for cfg, results in outcomes]
    rows = reduction_rows(outcomes)
    if rows is None:
        print(
            "note: no random-walk baseline in the grid; time-reduction report is empty",
            file=sys.stderr,
        )
    out = Path(args.out)
    _write(out / "raw.csv", raw_csv(outcomes))
    _write(out / "summary.csv", summary_csv(summaries))
    _write(out / "time_reduction.csv", reduction_csv(rows))
    _write(out / "config.normalized", parsed.normalized)
    _write(
        out / "metadata.json",
        json.dumps(
            {"kernel_backend": BACKEND, "rng": RNG_ALGORITHM, "version": __version__},
            indent=2,
            sort_keys=True,
        )
        + "\n",
    )
    for (cfg, results), summary in zip(outcomes, summaries):
        _write(out / f"{cfg.config_id}.svg", render_series_svg(results[0].series, cfg.config_id))
        print(
            f"{cfg.config_id}: runs={summary.runs} ticks_mean={summary.ticks_mean:.6g}"
            f" delivery_mean={summary.delivery_mean:.6g}% stalls={summary.stall_count}"
        )
    return 0


def cmd_export(args) -> int:
    g = parse_edge_list(Path(args.edges).read_text(encoding="utf-8"))
    table = None
    if args.metric:
        table = compute(
            g, _METRICS[args.metric], **(
                {"max_iter": max(1000, 100 * g.node_count)}
                if _METRICS[args.metric] is Metric.EIGENVECTOR
                else {}
            ),
        )
    _write(Path(args.out), graphml_text(g, table))
    print(f"wrote {g.node_count} nodes, {g.edge_count} edges to {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gridwalk", description=__doc__)
    parser.add_argument("--version", action="version", version=f"gridwalk {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, needs_out in (
        ("generate", cmd_generate, True),
        ("centrality", cmd_centrality, True),
        ("simulate", cmd_simulate, True),
        ("sweep", cmd_sweep, True),
    ):
        p = sub.add_parser(name)
        _add_config_flags(p)
        if needs_out:
            p.add_argument("--out", required=True, metavar="DIR", help="output directory")
        p.set_defaults(fn=fn)

    p = sub.add_parser("export")
    p.add_argument("--edges", required=True, metavar="FILE", help="edge-list input")
    p.add_argument("--out", required=True, metavar="FILE", help="GraphML output path")
    p.add_argument("--metric", choices=sorted(_METRICS), help="attach a centrality attribute")
    p.set_defaults(fn=cmd_export)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (GridwalkError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())
