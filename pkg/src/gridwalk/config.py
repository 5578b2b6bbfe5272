"""Line-oriented key=value config files and grid expansion.

Every key except `seed` accepts a comma-separated list and becomes a sweep
axis; the grid is the cartesian product in canonical key order. The
random-walk policy ignores the metric axis, so those cells collapse to one.
Unknown keys are errors, never warnings.

parse_config() echoes a normalized form whose re-parse is a fixed point.
Defaults that depend on other cell values (p-edge = 4/(n-1), max-ticks =
100*n, walkers paired with sources) are left implicit in the echo so the
echo stays valid when those axes are lists.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .centrality import Metric
from .errors import BadValueError, MissingRequiredError, UnknownKeyError
from .experiments import DEFAULT_REPETITIONS, ExperimentConfig
from .generators import GeneratorSpec, NetworkKind
from .routing import DeadEnd, PolicyKind, RoutingPolicy
from .errors import GridwalkError

# Canonical key order; also the normalization echo order.
KEYS = [
    "network",
    "nodes",
    "k",
    "p-rewire",
    "m",
    "p-edge",
    "seed",
    "sources",
    "targets",
    "walkers",
    "policy",
    "metric",
    "avoid-visited",
    "dead-end",
    "repetitions",
    "max-ticks",
]

_NETWORKS = {kind.value: kind for kind in NetworkKind}
_POLICIES = {kind.value: kind for kind in PolicyKind}
_METRICS = {m.value: m for m in Metric}
_DEAD_ENDS = {d.value: d for d in DeadEnd}


@dataclass
class ParsedConfig:
    cells: list[ExperimentConfig]
    normalized: str


def _parse_int(key, raw, where):
    try:
        return int(raw)
    except ValueError:
        raise BadValueError(f"{where}: {key} expects an integer, got {raw!r}") from None


def _parse_float(key, raw, where):
    try:
        return float(raw)
    except ValueError:
        raise BadValueError(f"{where}: {key} expects a number, got {raw!r}") from None


def _parse_bool(key, raw, where):
    if raw == "true":
        return True
    if raw == "false":
        return False
    raise BadValueError(f"{where}: {key} expects true or false, got {raw!r}")


def _parse_enum(key, raw, table, where):
    if raw not in table:
        raise BadValueError(
            f"{where}: {key} must be one of {', '.join(sorted(table))}; got {raw!r}"
        )
    return table[raw]


_PARSERS = {
    "network": lambda raw, where: _parse_enum("network", raw, _NETWORKS, where),
    "nodes": lambda raw, where: _parse_int("nodes", raw, where),
    "k": lambda raw, where: _parse_int("k", raw, where),
    "p-rewire": lambda raw, where: _parse_float("p-rewire", raw, where),
    "m": lambda raw, where: _parse_int("m", raw, where),
    "p-edge": lambda raw, where: _parse_float("p-edge", raw, where),
    "seed": lambda raw, where: _parse_int("seed", raw, where),
    "sources": lambda raw, where: _parse_int("sources", raw, where),
    "targets": lambda raw, where: _parse_int("targets", raw, where),
    "walkers": lambda raw, where: _parse_int("walkers", raw, where),
    "policy": lambda raw, where: _parse_enum("policy", raw, _POLICIES, where),
    "metric": lambda raw, where: _parse_enum("metric", raw, _METRICS, where),
    "avoid-visited": lambda raw, where: _parse_bool("avoid-visited", raw, where),
    "dead-end": lambda raw, where: _parse_enum("dead-end", raw, _DEAD_ENDS, where),
    "repetitions": lambda raw, where: _parse_int("repetitions", raw, where),
    "max-ticks": lambda raw, where: _parse_int("max-ticks", raw, where),
}


def parse_lines(text: str) -> dict[str, tuple[str, str]]:
    """Raw key -> (value string, location) map; blank and # lines skipped."""
    out: dict[str, tuple[str, str]] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise BadValueError(f"line {lineno}: expected key=value, got {stripped!r}")
        key, _, value = stripped.partition("=")
        key = key.strip()
        value = value.strip()
        if key not in KEYS:
            raise UnknownKeyError(f"line {lineno}: unknown key {key!r}")
        if key in out:
            raise BadValueError(f"line {lineno}: duplicate key {key!r}")
        out[key] = (value, f"line {lineno}")
    return out


def _parse_values(raw: dict[str, tuple[str, str]]) -> dict[str, list]:
    """Typed, list-expanded values keyed by canonical key."""
    values: dict[str, list] = {}
    for key, (text, where) in raw.items():
        parser = _PARSERS[key]
        if key == "seed":
            if "," in text:
                raise BadValueError(f"{where}: seed takes a single value, not a list")
            values[key] = [parser(text, where)]
            continue
        parts = [p.strip() for p in text.split(",")]
        if any(not p for p in parts):
            raise BadValueError(f"{where}: empty list item in {key}")
        values[key] = [parser(p, where) for p in parts]
    return values


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, (NetworkKind, PolicyKind, Metric, DeadEnd)):
        return value.value
    return str(value)


def _normalize(values: dict[str, list]) -> str:
    lines = []
    for key in KEYS:
        if key in values:
            lines.append(f"{key}={','.join(_fmt(v) for v in values[key])}")
    return "\n".join(lines) + "\n"


def parse_config(text: str, overrides: dict[str, str] | None = None) -> ParsedConfig:
    """Validate a config (plus flag overrides) into a grid of cells.

    Overrides take precedence over file values and go through the same
    validation; keys are the canonical config keys.
    """
    raw = parse_lines(text)
    for key, value in (overrides or {}).items():
        if key not in KEYS:
            raise UnknownKeyError(f"flag override: unknown key {key!r}")
        raw[key] = (value, f"--{key}")
    values = _parse_values(raw)

    for required in ("network", "nodes"):
        if required not in values:
            raise MissingRequiredError(f"missing required key {required!r}")

    # Value-independent defaults, echoed explicitly.
    values.setdefault("k", [4])
    values.setdefault("p-rewire", [0.1])
    values.setdefault("m", [1])
    values.setdefault("sources", [5])
    values.setdefault("targets", [50])
    values.setdefault("policy", [PolicyKind.RANDOM_WALK])
    values.setdefault("metric", [Metric.DEGREE])
    values.setdefault("avoid-visited", [True])
    values.setdefault("dead-end", [DeadEnd.DIE])
    values.setdefault("repetitions", [DEFAULT_REPETITIONS])

    normalized = _normalize(values)
    cells = _expand(values)
    return ParsedConfig(cells=cells, normalized=normalized)


def _expand(values: dict[str, list]) -> list[ExperimentConfig]:
    seed = values.get("seed", [0])[0]
    axes = [
        values["network"],
        values["nodes"],
        values["k"],
        values["p-rewire"],
        values["m"],
        values.get("p-edge", [None]),
        values["sources"],
        values["targets"],
        values.get("walkers", [None]),
        values["policy"],
        values["metric"],
        values["avoid-visited"],
        values["dead-end"],
        values["repetitions"],
        values.get("max-ticks", [None]),
    ]
    cells: list[ExperimentConfig] = []
    seen: set[tuple] = set()
    for (
        network, nodes, k, p_rewire, m, p_edge, sources, targets, walkers,
        policy_kind, metric, avoid, dead_end, repetitions, max_ticks,
    ) in itertools.product(*axes):
        spec = GeneratorSpec(
            kind=network,
            n=nodes,
            k=k if network is NetworkKind.SMALL_WORLD else None,
            p_rewire=p_rewire if network is NetworkKind.SMALL_WORLD else None,
            m=m if network is NetworkKind.SCALE_FREE else None,
            p_edge=p_edge if network is NetworkKind.RANDOM else None,
            seed=seed,
        )
        policy = RoutingPolicy(
            kind=policy_kind,
            metric=metric if policy_kind is PolicyKind.CENTRALITY else None,
            avoid_visited=avoid,
            dead_end=dead_end,
        )
        n_walkers = walkers if walkers is not None else sources
        key = (
            spec.kind, spec.n, spec.k, spec.p_rewire, spec.m, spec.p_edge,
            sources, targets, n_walkers, policy, repetitions, max_ticks,
        )
        if key in seen:
            continue  # inapplicable axes collapse (e.g. metric under random-walk)
        seen.add(key)
        try:
            spec.validate()
        except GridwalkError as exc:
            raise BadValueError(str(exc)) from exc
        if sources < 1 or targets < 1:
            raise BadValueError("sources and targets must be >= 1")
        if n_walkers < 1:
            raise BadValueError("walkers must be >= 1")
        if repetitions < 1:
            raise BadValueError("repetitions must be >= 1")
        if max_ticks is not None and max_ticks < 1:
            raise BadValueError("max-ticks must be >= 1")
        label = policy.kind.value
        if policy.kind is PolicyKind.CENTRALITY:
            label += f"-{policy.metric.value}"
        cells.append(
            ExperimentConfig(
                config_id=f"c{len(cells):03d}-{spec.kind.value}-n{spec.n}-{label}",
                generator=spec,
                n_sources=sources,
                n_targets=targets,
                n_walkers=n_walkers,
                policy=policy,
                repetitions=repetitions,
                max_ticks=max_ticks,
                master_seed=seed,
            )
        )
    return cells
