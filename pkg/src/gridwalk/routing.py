"""Walker agents: uniform random walk and greedy max-centrality routing.

Walkers start on source nodes and traverse edges until every target node has
been visited, no walker is left alive, or the tick budget runs out. Visited
flags live on the graph and are shared by all walkers of one simulation; a
SimState is single-owner and must not be shared across concurrent runs.

Per-step work only inspects the walker's neighbor list and the precomputed
centrality table; centrality is computed once at setup, never in the loop.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .centrality import CentralityTable, Metric
from .errors import MissingCentralityError, NoSourcesError, NotRunningError
from .graph import Graph, Role
from .rng import derive_rng


class PolicyKind(Enum):
    RANDOM_WALK = "random-walk"
    CENTRALITY = "centrality"


class DeadEnd(Enum):
    DIE = "die"
    RANDOM_ANY = "random-any-neighbor"


class Status(Enum):
    RUNNING = "running"
    COMPLETE = "complete"
    STALLED = "stalled"


@dataclass(frozen=True)
class RoutingPolicy:
    """What a walker does each tick.

    avoid_visited=True restricts candidate moves to unvisited neighbors (the
    model's sensing rule); False is the memoryless walk. dead_end applies
    when avoidance leaves no candidate: DIE removes the walker, RANDOM_ANY
    escapes to a uniformly random neighbor.
    """

    kind: PolicyKind
    metric: Metric | None = None
    avoid_visited: bool = True
    dead_end: DeadEnd = DeadEnd.DIE

    def __post_init__(self):
        if self.kind is PolicyKind.CENTRALITY and self.metric is None:
            raise MissingCentralityError("centrality policy needs a metric")

    def label(self) -> str:
        if self.kind is PolicyKind.RANDOM_WALK:
            return "random-walk"
        return f"centrality/{self.metric.value}"


@dataclass
class Walker:
    id: int
    location: int
    finished: bool = False
    trail: list[int] = field(default_factory=list)


@dataclass
class RunOutcome:
    ticks: int
    status: Status
    reason: str | None  # None | "no-walkers" | "budget"
    series: list[tuple[int, int]]
    alive_walkers: int


def init_walkers(g: Graph, n_walkers: int) -> list[Walker]:
    """Round-robin walkers over sources ascending; marks every source visited."""
    sources = g.source_nodes()
    if not sources:
        raise NoSourcesError("graph has no source nodes")
    if n_walkers < 1:
        raise NoSourcesError(f"n_walkers must be >= 1, got {n_walkers}")
    for s in sources:
        g.visited[s] = True
    walkers = []
    for i in range(n_walkers):
        loc = sources[i % len(sources)]
        walkers.append(Walker(id=i, location=loc, trail=[loc]))
    return walkers


class SimState:
    """One simulation run: graph, walkers, policy, tick counters, series."""

    def __init__(
        self,
        graph: Graph,
        policy: RoutingPolicy,
        n_walkers: int,
        seed: int,
        centrality: CentralityTable | None = None,
    ):
        if policy.kind is PolicyKind.CENTRALITY:
            if centrality is None:
                raise MissingCentralityError("centrality policy needs a precomputed table")
            if centrality.metric is not policy.metric:
                raise MissingCentralityError(
                    f"table metric {centrality.metric.value} != policy metric {policy.metric.value}"
                )
        self.graph = graph
        self.policy = policy
        self.centrality = centrality
        self.rng = derive_rng(seed, "walk")
        self.walkers = init_walkers(graph, n_walkers)
        self.tick_count = 0
        self.series: list[tuple[int, int]] = []
        self.stall_reason: str | None = None
        self._targets = set(graph.target_nodes())
        self.visited_nodes = sum(graph.visited)
        self.visited_targets = sum(1 for t in self._targets if graph.visited[t])
        self.status = self._recompute_status()

    @property
    def total_targets(self) -> int:
        return len(self._targets)

    def alive_count(self) -> int:
        return sum(1 for w in self.walkers if not w.finished)

    def _recompute_status(self) -> Status:
        if self.visited_targets == len(self._targets):
            return Status.COMPLETE
        if self.alive_count() == 0:
            self.stall_reason = "no-walkers"
            return Status.STALLED
        return Status.RUNNING

    def _mark(self, v: int) -> None:
        if not self.graph.visited[v]:
            self.graph.visited[v] = True
            self.visited_nodes += 1
            if v in self._targets:
                self.visited_targets += 1


def _pick(rng, candidates: list[int]) -> int:
    # Consumes the stream only when there is an actual choice.
    if len(candidates) == 1:
        return candidates[0]
    return candidates[rng.randrange(len(candidates))]


def _move(state: SimState, walker: Walker, dest: int) -> None:
    walker.location = dest
    walker.trail.append(dest)
    state._mark(dest)


def _dead_end(state: SimState, walker: Walker, neighbors: list[int]) -> None:
    if state.policy.dead_end is DeadEnd.DIE:
        walker.finished = True
    else:
        _move(state, walker, _pick(state.rng, neighbors))


def step_random_walk(state: SimState, walker: Walker) -> Walker:
    """One uniform-random move; honors avoid_visited and the dead-end rule."""
    neighbors = state.graph.sorted_neighbors(walker.location)
    if not neighbors:
        walker.finished = True
        return walker
    if state.policy.avoid_visited:
        candidates = [v for v in neighbors if not state.graph.visited[v]]
        if not candidates:
            _dead_end(state, walker, neighbors)
            return walker
    else:
        candidates = neighbors
    _move(state, walker, _pick(state.rng, candidates))
    return walker


def step_centrality_walk(state: SimState, walker: Walker) -> Walker:
    """Greedy move to the max-centrality candidate, ties broken uniformly."""
    if state.centrality is None:
        raise MissingCentralityError("no centrality table on this simulation")
    neighbors = state.graph.sorted_neighbors(walker.location)
    if not neighbors:
        walker.finished = True
        return walker
    if state.policy.avoid_visited:
        candidates = [v for v in neighbors if not state.graph.visited[v]]
        if not candidates:
            _dead_end(state, walker, neighbors)
            return walker
    else:
        candidates = neighbors
    scores = state.centrality.scores
    best = [candidates[0]]
    best_score = scores[candidates[0]]
    for v in candidates[1:]:
        sv = scores[v]
        if sv > best_score:
            best = [v]
            best_score = sv
        elif sv == best_score:
            best.append(v)
    _move(state, walker, _pick(state.rng, best))
    return walker


def tick(state: SimState) -> SimState:
    """Step every alive walker once (ascending id), record the tick series."""
    if state.status is not Status.RUNNING:
        raise NotRunningError(f"tick() on terminal state {state.status.value}")
    stepper = (
        step_random_walk
        if state.policy.kind is PolicyKind.RANDOM_WALK
        else step_centrality_walk
    )
    for walker in state.walkers:
        if not walker.finished:
            stepper(state, walker)
    state.tick_count += 1
    state.series.append((state.visited_nodes, state.visited_targets))
    state.status = state._recompute_status()
    return state


def run(state: SimState, max_ticks: int) -> RunOutcome:
    """tick() until terminal or the budget runs out; budget exhaustion stalls."""
    if max_ticks < 1:
        raise NotRunningError(f"max_ticks must be >= 1, got {max_ticks}")
    while state.status is Status.RUNNING and state.tick_count < max_ticks:
        tick(state)
    if state.status is Status.RUNNING:
        state.status = Status.STALLED
        state.stall_reason = "budget"
    reason = state.stall_reason if state.status is Status.STALLED else None
    return RunOutcome(
        ticks=state.tick_count,
        status=state.status,
        reason=reason,
        series=list(state.series),
        alive_walkers=state.alive_count(),
    )
