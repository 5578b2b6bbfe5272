"""The four node-importance measures used for analysis export and routing.

Closeness is the harmonic sum over reachable nodes (1/dist, unreachable
contributes 0). Betweenness is the raw unordered-pair sum with endpoints
excluded, no normalization. Eigenvector is the dominant adjacency
eigenvector from power iteration; the iteration runs on A+I, which has the
same eigenvectors but converges on bipartite graphs where plain A
oscillates. All are pure read-only functions over Graph.

A module-level counter records how many tables have been computed, so the
simulation layer can assert centrality is evaluated once per run and never
inside the walk loop.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import _kernels
from .errors import NoEdgesError, NotConvergedError
from .graph import Graph

DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITER = 1000


class Metric(Enum):
    DEGREE = "degree"
    CLOSENESS = "closeness"
    BETWEENNESS = "betweenness"
    EIGENVECTOR = "eigenvector"


@dataclass
class CentralityTable:
    metric: Metric
    scores: list[float]


_compute_calls = 0


def computation_count() -> int:
    """How many centrality tables have been computed since the last reset."""
    return _compute_calls


def reset_computation_count() -> None:
    global _compute_calls
    _compute_calls = 0


def _count() -> None:
    global _compute_calls
    _compute_calls += 1


def degree_centrality(g: Graph) -> CentralityTable:
    _count()
    return CentralityTable(Metric.DEGREE, [float(g.degree(v)) for v in range(g.node_count)])


def closeness_centrality(g: Graph) -> CentralityTable:
    """score(i) = sum over reachable t != i of 1/dist(i, t)."""
    _count()
    indptr, indices = g.csr()
    return CentralityTable(Metric.CLOSENESS, _kernels.harmonic_closeness(indptr, indices).tolist())


def betweenness_centrality(g: Graph) -> CentralityTable:
    """score(i) = sum over unordered pairs {s,t}, s,t != i, of sigma_st(i)/sigma_st."""
    _count()
    indptr, indices = g.csr()
    return CentralityTable(Metric.BETWEENNESS, _kernels.betweenness(indptr, indices).tolist())


def eigenvector_centrality(
    g: Graph, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER
) -> CentralityTable:
    """Dominant adjacency eigenvector, L2-normalized, all entries >= 0.

    Power iteration from the uniform positive vector, normalized each step;
    converged when successive iterates differ by less than tol in max-norm.
    Raises NotConvergedError when max_iter is exhausted -- never returns a
    partial result.
    """
    _count()
    indptr, indices = g.csr()
    n = g.node_count
    if len(indices) == 0:
        raise NoEdgesError("eigenvector centrality needs at least one edge")
    degrees = np.diff(indptr)
    rows = np.repeat(np.arange(n, dtype=np.int32), degrees)
    x = np.full(n, 1.0 / np.sqrt(n))
    for _ in range(max_iter):
        # (A + I) x: spectral shift keeps the Perron eigenvector, converges
        # where bipartite spectra make plain A oscillate.
        nxt = np.bincount(rows, weights=x[indices], minlength=n) + x
        nxt /= np.linalg.norm(nxt)
        if np.max(np.abs(nxt - x)) < tol:
            return CentralityTable(Metric.EIGENVECTOR, nxt.tolist())
        x = nxt
    raise NotConvergedError(f"power iteration did not converge in {max_iter} iterations")


def compute(g: Graph, metric: Metric, **kwargs) -> CentralityTable:
    if metric is Metric.DEGREE:
        return degree_centrality(g)
    if metric is Metric.CLOSENESS:
        return closeness_centrality(g)
    if metric is Metric.BETWEENNESS:
        return betweenness_centrality(g)
    return eigenvector_centrality(g, **kwargs)


def centrality_csv(g: Graph, eigen_tol: float = DEFAULT_TOL, eigen_max_iter: int = DEFAULT_MAX_ITER) -> str:
    """CSV with one row per node: node_id,degree,closeness,betweenness,eigenvector.

    Values carry 12 significant digits.
    """
    deg = degree_centrality(g).scores
    clo = closeness_centrality(g).scores
    bet = betweenness_centrality(g).scores
    eig = eigenvector_centrality(g, tol=eigen_tol, max_iter=eigen_max_iter).scores
    lines = ["node_id,degree,closeness,betweenness,eigenvector"]
    for v in range(g.node_count):
        lines.append(
            f"{v},{deg[v]:.12g},{clo[v]:.12g},{bet[v]:.12g},{eig[v]:.12g}"
        )
    return "\n".join(lines) + "\n"
