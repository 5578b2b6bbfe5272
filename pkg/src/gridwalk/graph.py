"""Undirected simple-graph kernel.

Nodes are dense integer ids 0..n-1. Producers and consumers are role tags on
nodes, not separate collections. The graph is meant to be immutable after
generation except for the per-node visited flags, which a single simulation
owns; read-only queries are safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import _kernels
from .errors import DuplicateEdgeError, OutOfRangeError, SelfLoopError


class Role(Enum):
    PLAIN = "plain"
    SOURCE = "source"
    TARGET = "target"


@dataclass
class DistanceVector:
    """Hop distances from one origin; None is the unreachable sentinel."""

    origin: int
    dist: list[int | None]

    def __getitem__(self, v: int) -> int | None:
        return self.dist[v]


class Graph:
    """Adjacency-set graph: no self-loops, no parallel edges, symmetric."""

    __slots__ = ("node_count", "_adj", "roles", "visited", "_csr", "_sorted_adj")

    def __init__(self, node_count: int):
        if node_count < 0:
            raise OutOfRangeError(f"node_count must be >= 0, got {node_count}")
        self.node_count = node_count
        self._adj: list[set[int]] = [set() for _ in range(node_count)]
        self.roles: list[Role] = [Role.PLAIN] * node_count
        self.visited: list[bool] = [False] * node_count
        self._csr: tuple[np.ndarray, np.ndarray] | None = None
        self._sorted_adj: list[list[int]] | None = None

    # --- construction ---

    def _check_node(self, v: int) -> None:
        if not 0 <= v < self.node_count:
            raise OutOfRangeError(f"node {v} out of range [0, {self.node_count})")

    def add_edge(self, u: int, v: int) -> None:
        self._check_node(u)
        self._check_node(v)
        if u == v:
            raise SelfLoopError(f"self-loop at node {u}")
        if v in self._adj[u]:
            raise DuplicateEdgeError(f"edge ({u}, {v}) already present")
        self._adj[u].add(v)
        self._adj[v].add(u)
        self._csr = None
        self._sorted_adj = None

    def has_edge(self, u: int, v: int) -> bool:
        self._check_node(u)
        self._check_node(v)
        return v in self._adj[u]

    @classmethod
    def from_edges(cls, node_count: int, edges) -> "Graph":
        g = cls(node_count)
        for u, v in edges:
            g.add_edge(u, v)
        return g

    # --- queries ---

    def neighbors(self, v: int) -> set[int]:
        self._check_node(v)
        return set(self._adj[v])

    def degree(self, v: int) -> int:
        self._check_node(v)
        return len(self._adj[v])

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self._adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted."""
        return [(u, v) for u in range(self.node_count) for v in sorted(self._adj[u]) if u < v]

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """Cached CSR adjacency (indptr, indices), neighbors sorted ascending."""
        if self._csr is None:
            indptr = np.zeros(self.node_count + 1, dtype=np.int32)
            for v in range(self.node_count):
                indptr[v + 1] = indptr[v] + len(self._adj[v])
            indices = np.empty(int(indptr[-1]), dtype=np.int32)
            pos = 0
            for v in range(self.node_count):
                for w in sorted(self._adj[v]):
                    indices[pos] = w
                    pos += 1
            self._csr = (indptr, indices)
        return self._csr

    def sorted_neighbors(self, v: int) -> list[int]:
        """Ascending neighbor list; cached, shared by the routing hot loop."""
        if self._sorted_adj is None:
            self._sorted_adj = [sorted(a) for a in self._adj]
        return self._sorted_adj[v]

    def bfs_distances(self, s: int) -> DistanceVector:
        """Exact unweighted hop distances from s."""
        self._check_node(s)
        indptr, indices = self.csr()
        raw = _kernels.bfs_distances(indptr, indices, s)
        return DistanceVector(origin=s, dist=[None if d < 0 else int(d) for d in raw])

    def shortest_path_counts(self, s: int) -> tuple[list[int], list[int | None]]:
        """Per-node count of distinct shortest s->v paths, plus hop distances."""
        self._check_node(s)
        indptr, indices = self.csr()
        sigma, dist = _kernels.shortest_path_counts(indptr, indices, s)
        return (
            [int(x) for x in sigma],
            [None if d < 0 else int(d) for d in dist],
        )

    def clustering_coefficient(self, v: int) -> float:
        """Fraction of the v-neighborhood's possible edges that exist; 0 if deg < 2."""
        self._check_node(v)
        nbrs = sorted(self._adj[v])
        deg = len(nbrs)
        if deg < 2:
            return 0.0
        links = 0
        for i in range(deg):
            adj_i = self._adj[nbrs[i]]
            for j in range(i + 1, deg):
                if nbrs[j] in adj_i:
                    links += 1
        return links / (deg * (deg - 1) / 2)

    def mean_clustering(self) -> float:
        if self.node_count == 0:
            return 0.0
        return sum(self.clustering_coefficient(v) for v in range(self.node_count)) / self.node_count

    def largest_component(self) -> set[int]:
        """Max-cardinality connected component; ties go to the smallest node id."""
        seen = [False] * self.node_count
        best: list[int] = []
        for s in range(self.node_count):
            if seen[s]:
                continue
            comp = [s]
            seen[s] = True
            head = 0
            while head < len(comp):
                v = comp[head]
                head += 1
                for w in self._adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
            if len(comp) > len(best):
                best = comp
        return set(best)

    # --- roles / visited ---

    def nodes_with_role(self, role: Role) -> list[int]:
        return [v for v in range(self.node_count) if self.roles[v] is role]

    def source_nodes(self) -> list[int]:
        return self.nodes_with_role(Role.SOURCE)

    def target_nodes(self) -> list[int]:
        return self.nodes_with_role(Role.TARGET)

    def reset_visited(self) -> None:
        self.visited = [False] * self.node_count
