"""gridwalk: seeded agent-based routing over synthetic complex networks.

Small-world, scale-free and random topologies; walkers route from producer
nodes to consumer nodes by uniform random walk or greedy max-centrality
moves; a sweep engine reproduces the experiment grid with deterministic
per-run seeding. BFS-heavy kernels run on a compiled core when available
(see gridwalk._kernels.BACKEND).
"""

__version__ = "0.1.0"

from ._kernels import BACKEND as KERNEL_BACKEND
from .centrality import (
    CentralityTable,
    Metric,
    betweenness_centrality,
    closeness_centrality,
    degree_centrality,
    eigenvector_centrality,
)
from .experiments import (
    ExperimentConfig,
    RunResult,
    SweepSummary,
    delivery_rate,
    place_roles,
    run_config,
    summarize,
    sweep,
    time_reduction,
)
from .generators import (
    GeneratorSpec,
    NetworkKind,
    gen_random,
    gen_scale_free,
    gen_small_world,
    generate,
)
from .graph import DistanceVector, Graph, Role
from .routing import (
    DeadEnd,
    PolicyKind,
    RoutingPolicy,
    RunOutcome,
    SimState,
    Status,
    Walker,
    init_walkers,
    run,
    step_centrality_walk,
    step_random_walk,
    tick,
)

__all__ = [
    "__version__",
    "KERNEL_BACKEND",
    "Graph",
    "Role",
    "DistanceVector",
    "GeneratorSpec",
    "NetworkKind",
    "gen_random",
    "gen_scale_free",
    "gen_small_world",
    "generate",
    "CentralityTable",
    "Metric",
    "degree_centrality",
    "closeness_centrality",
    "betweenness_centrality",
    "eigenvector_centrality",
    "RoutingPolicy",
    "PolicyKind",
    "DeadEnd",
    "Status",
    "Walker",
    "SimState",
    "RunOutcome",
    "init_walkers",
    "step_random_walk",
    "step_centrality_walk",
    "tick",
    "run",
    "ExperimentConfig",
    "RunResult",
    "SweepSummary",
    "place_roles",
    "delivery_rate",
    "run_config",
    "summarize",
    "sweep",
    "time_reduction",
]
