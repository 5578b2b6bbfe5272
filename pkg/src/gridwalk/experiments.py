"""Parameter-sweep engine: seeded runs, aggregation, time-reduction report.

Every run is a pure function of its ExperimentConfig: per-run seeds are
derived from (master_seed, run index), and generation, role placement and
the walk each draw from their own purpose-tagged stream. Re-running any
config reproduces every RunResult field bit-for-bit.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace

from .centrality import Metric, compute
from .errors import (
    ComponentTooSmallError,
    DivisionByZeroError,
    EmptyGridError,
    GridwalkError,
    RunError,
    ZeroTargetsError,
)
from .generators import GeneratorSpec, generate
from .graph import Graph, Role
from .rng import derive_rng, derive_seed
from .routing import DeadEnd, PolicyKind, RoutingPolicy, SimState, Status, run

log = logging.getLogger(__name__)

DEFAULT_REPETITIONS = 10


@dataclass(frozen=True)
class ExperimentConfig:
    """One grid cell: network recipe + placement + policy + replication."""

    config_id: str
    generator: GeneratorSpec
    n_sources: int
    n_targets: int
    n_walkers: int
    policy: RoutingPolicy
    repetitions: int = DEFAULT_REPETITIONS
    max_ticks: int | None = None  # None -> 100 * node count
    master_seed: int = 0

    def resolved_max_ticks(self) -> int:
        # Guard against die-policy stalls wandering forever on random graphs.
        return self.max_ticks if self.max_ticks is not None else 100 * self.generator.n


@dataclass
class RunResult:
    run_index: int
    derived_seed: int
    ticks: int
    delivered_targets: int
    total_targets: int
    delivery_rate_pct: float
    status: Status
    reason: str | None
    series: list[tuple[int, int]]


@dataclass
class SweepSummary:
    config: ExperimentConfig
    runs: int
    ticks_mean: float
    ticks_min: int
    ticks_max: int
    ticks_stddev: float
    delivery_mean: float
    delivery_min: float
    delivery_max: float
    delivery_stddev: float
    stall_count: int


def place_roles(g: Graph, n_sources: int, n_targets: int, seed: int) -> Graph:
    """Sample distinct source/target nodes from the largest component.

    Uniform without replacement via the seeded stream; the first n_sources
    picks become sources, the rest targets, everything else plain.
    """
    component = sorted(g.largest_component())
    need = n_sources + n_targets
    if need > len(component):
        raise ComponentTooSmallError(
            f"largest component has {len(component)} nodes, need {need}"
        )
    if len(component) < g.node_count:
        log.info(
            "placement restricted to largest component (%d of %d nodes)",
            len(component),
            g.node_count,
        )
    rng = derive_rng(seed, "roles")
    chosen = rng.sample(component, need)
    g.roles = [Role.PLAIN] * g.node_count
    for v in chosen[:n_sources]:
        g.roles[v] = Role.SOURCE
    for v in chosen[n_sources:]:
        g.roles[v] = Role.TARGET
    return g


def delivery_rate(delivered: int, total: int) -> float:
    """Average delivery rate in percent: 100 * delivered / total."""
    if total < 1:
        raise ZeroTargetsError("delivery rate needs at least one target")
    if not 0 <= delivered <= total:
        raise ZeroTargetsError(f"delivered={delivered} outside [0, {total}]")
    return 100.0 * delivered / total


def time_reduction(rw_mean_ticks: float, cr_mean_ticks: float) -> float:
    """Percent tick reduction of centrality routing vs the random-walk mean.

    Negative when centrality routing is slower.
    """
    if rw_mean_ticks <= 0:
        raise DivisionByZeroError("random-walk mean ticks must be positive")
    return 100.0 * (rw_mean_ticks - cr_mean_ticks) / rw_mean_ticks


def _single_run(cfg: ExperimentConfig, run_index: int) -> RunResult:
    run_seed = derive_seed(cfg.master_seed, "run", run_index)
    gen_spec = replace(cfg.generator.resolved(), seed=derive_seed(run_seed, "gen"))
    g = generate(gen_spec)
    place_roles(g, cfg.n_sources, cfg.n_targets, run_seed)
    table = None
    if cfg.policy.kind is PolicyKind.CENTRALITY:
        # Eigenvector needs a deeper budget than the small-graph default: the
        # spectral gap of n=500 small worlds puts convergence near 1000 steps.
        kwargs = {"max_iter": max(1000, 100 * g.node_count)} if cfg.policy.metric is Metric.EIGENVECTOR else {}
        table = compute(g, cfg.policy.metric, **kwargs)
    state = SimState(g, cfg.policy, cfg.n_walkers, run_seed, table)
    outcome = run(state, cfg.resolved_max_ticks())
    if cfg.policy.avoid_visited and cfg.policy.dead_end is DeadEnd.DIE:
        # Every non-final tick visits a fresh node, so ticks are bounded by
        # the placement component's size.
        component = len(g.largest_component())
        assert outcome.ticks <= component, (
            f"avoid+die run took {outcome.ticks} ticks on a {component}-node component"
        )
    delivered = state.visited_targets
    return RunResult(
        run_index=run_index,
        derived_seed=run_seed,
        ticks=outcome.ticks,
        delivered_targets=delivered,
        total_targets=cfg.n_targets,
        delivery_rate_pct=delivery_rate(delivered, cfg.n_targets),
        status=outcome.status,
        reason=outcome.reason,
        series=outcome.series,
    )


def run_config(cfg: ExperimentConfig) -> list[RunResult]:
    """All repetitions of one config, ordered by run index."""
    results = []
    for i in range(cfg.repetitions):
        try:
            results.append(_single_run(cfg, i))
        except GridwalkError as exc:
            raise RunError(i, exc) from exc
    return results


def _mean(xs) -> float:
    return sum(xs) / len(xs)


def _pstdev(xs) -> float:
    mu = _mean(xs)
    return (sum((x - mu) ** 2 for x in xs) / len(xs)) ** 0.5


def summarize(cfg: ExperimentConfig, results: list[RunResult]) -> SweepSummary:
    """Aggregate one config's runs; stddev is population (ddof=0)."""
    ticks = [r.ticks for r in results]
    rates = [r.delivery_rate_pct for r in results]
    return SweepSummary(
        config=cfg,
        runs=len(results),
        ticks_mean=_mean(ticks),
        ticks_min=min(ticks),
        ticks_max=max(ticks),
        ticks_stddev=_pstdev(ticks),
        delivery_mean=_mean(rates),
        delivery_min=min(rates),
        delivery_max=max(rates),
        delivery_stddev=_pstdev(rates),
        stall_count=sum(1 for r in results if r.status is Status.STALLED),
    )


def sweep(cells: list[ExperimentConfig]) -> list[tuple[ExperimentConfig, list[RunResult]]]:
    """Execute every grid cell sequentially, deterministic order."""
    if not cells:
        raise EmptyGridError("sweep grid is empty")
    return [(cfg, run_config(cfg)) for cfg in cells]


def reduction_rows(
    outcomes: list[tuple[ExperimentConfig, list[RunResult]]],
) -> list[tuple[str, str, float]] | None:
    """(network, metric, reduction_pct) rows vs the random-walk baseline.

    Ticks are pooled per (network, policy/metric) across the whole sweep
    before comparing means, so each network family gets one aggregate row
    per metric regardless of how many source/target cells were swept.
    Returns None when no random-walk baseline exists anywhere in the sweep.
    """
    rw_ticks: dict[str, list[int]] = {}
    cr_ticks: dict[tuple[str, str], list[int]] = {}
    for cfg, results in outcomes:
        network = cfg.generator.kind.value
        ticks = [r.ticks for r in results]
        if cfg.policy.kind is PolicyKind.RANDOM_WALK:
            rw_ticks.setdefault(network, []).extend(ticks)
        else:
            cr_ticks.setdefault((network, cfg.policy.metric.value), []).extend(ticks)
    if not rw_ticks:
        return None
    rows = []
    for (network, metric), ticks in sorted(cr_ticks.items()):
        if network not in rw_ticks:
            continue
        rows.append(
            (network, metric, time_reduction(_mean(rw_ticks[network]), _mean(ticks)))
        )
    return rows


# --- CSV serialization (schemas are part of the external interface) ---

RAW_HEADER = (
    "config_id,run_index,network,nodes,k,p_rewire,m,p_edge,sources,targets,"
    "walkers,policy,metric,avoid_visited,dead_end,seed,ticks,delivered,"
    "total_targets,delivery_rate_pct,status"
)

SUMMARY_HEADER = (
    "config_id,network,nodes,k,p_rewire,m,p_edge,sources,targets,walkers,"
    "policy,metric,avoid_visited,dead_end,master_seed,repetitions,"
    "ticks_mean,ticks_min,ticks_max,ticks_stddev,"
    "delivery_mean,delivery_min,delivery_max,delivery_stddev,stall_count"
)

REDUCTION_HEADER = "network,metric,reduction_pct"


def _opt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, float):
        return repr(x)
    return str(x)


def _config_fields(cfg: ExperimentConfig) -> list[str]:
    gen = cfg.generator.resolved()
    policy = cfg.policy
    return [
        gen.kind.value,
        str(gen.n),
        _opt(gen.k),
        _opt(gen.p_rewire),
        _opt(gen.m),
        _opt(gen.p_edge),
        str(cfg.n_sources),
        str(cfg.n_targets),
        str(cfg.n_walkers),
        policy.kind.value,
        policy.metric.value if policy.metric is not None else "",
        "true" if policy.avoid_visited else "false",
        policy.dead_end.value,
    ]


def raw_csv(outcomes: list[tuple[ExperimentConfig, list[RunResult]]]) -> str:
    lines = [RAW_HEADER]
    for cfg, results in outcomes:
        fields = _config_fields(cfg)
        for r in results:
            lines.append(
                ",".join(
                    [cfg.config_id, str(r.run_index)]
                    + fields
                    + [
                        str(r.derived_seed),
                        str(r.ticks),
                        str(r.delivered_targets),
                        str(r.total_targets),
                        f"{r.delivery_rate_pct:.12g}",
                        r.status.value,
                    ]
                )
            )
    return "\n".join(lines) + "\n"


def summary_csv(summaries: list[SweepSummary]) -> str:
    lines = [SUMMARY_HEADER]
    for s in summaries:
        cfg = s.config
        lines.append(
            ",".join(
                [cfg.config_id]
                + _config_fields(cfg)
                + [
                    str(cfg.master_seed),
                    str(cfg.repetitions),
                    f"{s.ticks_mean:.12g}",
                    str(s.ticks_min),
                    str(s.ticks_max),
                    f"{s.ticks_stddev:.12g}",
                    f"{s.delivery_mean:.12g}",
                    f"{s.delivery_min:.12g}",
                    f"{s.delivery_max:.12g}",
                    f"{s.delivery_stddev:.12g}",
                    str(s.stall_count),
                ]
            )
        )
    return "\n".join(lines) + "\n"


def reduction_csv(rows: list[tuple[str, str, float]] | None) -> str:
    lines = [REDUCTION_HEADER]
    for network, metric, pct in rows or []:
        lines.append(f"{network},{metric},{pct:.12g}")
    return "\n".join(lines) + "\n"


def series_csv(series: list[tuple[int, int]]) -> str:
    """Per-tick series: tick,visited_nodes,visited_targets."""
    lines = ["tick,visited_nodes,visited_targets"]
    for i, (nodes, targets) in enumerate(series, start=1):
        lines.append(f"{i},{nodes},{targets}")
    return "\n".join(lines) + "\n"
