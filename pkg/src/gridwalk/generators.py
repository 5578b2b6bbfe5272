"""Seeded construction of the three simulated topologies.

All generators are deterministic: an identical GeneratorSpec (including the
seed) produces a byte-identical edge list. Each generator draws from its own
purpose-tagged stream so one code path cannot perturb another.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .errors import InvalidKError, InvalidMError, InvalidProbabilityError
from .graph import Graph
from .rng import derive_rng


class NetworkKind(Enum):
    SMALL_WORLD = "small-world"
    SCALE_FREE = "scale-free"
    RANDOM = "random"


@dataclass(frozen=True)
class GeneratorSpec:
    """One network recipe; kind-specific parameters are None when unused."""

    kind: NetworkKind
    n: int
    k: int | None = None          # small-world: even ring-lattice degree
    p_rewire: float | None = None  # small-world: rewiring probability
    m: int | None = None          # scale-free: edges per new node
    p_edge: float | None = None   # random: independent edge probability
    seed: int = 0

    def resolved(self) -> "GeneratorSpec":
        """Fill kind-appropriate defaults: k=4, p_rewire=0.1, m=1, p_edge=4/(n-1)."""
        if self.kind is NetworkKind.SMALL_WORLD:
            return GeneratorSpec(
                kind=self.kind,
                n=self.n,
                k=4 if self.k is None else self.k,
                p_rewire=0.1 if self.p_rewire is None else self.p_rewire,
                seed=self.seed,
            )
        if self.kind is NetworkKind.SCALE_FREE:
            return GeneratorSpec(
                kind=self.kind,
                n=self.n,
                m=1 if self.m is None else self.m,
                seed=self.seed,
            )
        p = self.p_edge
        if p is None:
            p = 4.0 / (self.n - 1) if self.n > 1 else 0.0
        return GeneratorSpec(kind=self.kind, n=self.n, p_edge=p, seed=self.seed)

    def validate(self) -> None:
        """Raise the matching generator error for out-of-contract parameters."""
        spec = self.resolved()
        if spec.n < 1:
            raise InvalidKError(f"node count must be >= 1, got {spec.n}")
        if spec.kind is NetworkKind.SMALL_WORLD:
            if spec.k % 2 != 0 or not 2 <= spec.k < spec.n:
                raise InvalidKError(f"k must be even with 2 <= k < n, got k={spec.k}, n={spec.n}")
            if not 0.0 <= spec.p_rewire <= 1.0:
                raise InvalidProbabilityError(f"p_rewire must be in [0, 1], got {spec.p_rewire}")
        elif spec.kind is NetworkKind.SCALE_FREE:
            if spec.n < 2:
                raise InvalidMError(f"scale-free generation needs n >= 2, got {spec.n}")
            if not 1 <= spec.m < spec.n:
                raise InvalidMError(f"m must satisfy 1 <= m < n, got m={spec.m}, n={spec.n}")
        else:
            if not 0.0 <= spec.p_edge <= 1.0:
                raise InvalidProbabilityError(f"p_edge must be in [0, 1], got {spec.p_edge}")


def gen_random(n: int, p_edge: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p): each unordered pair is an edge with probability p.

    The seeded stream is consumed in pair order (0,1), (0,2), ..., (n-2, n-1).
    """
    if not 0.0 <= p_edge <= 1.0:
        raise InvalidProbabilityError(f"p_edge must be in [0, 1], got {p_edge}")
    rng = derive_rng(seed, "gen-random")
    g = Graph(n)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p_edge:
                g.add_edge(u, v)
    return g


def gen_scale_free(n: int, m: int, seed: int) -> Graph:
    """Barabasi-Albert growth from a single seed edge between nodes 0 and 1.

    Each new node attaches to m distinct existing nodes picked with
    probability proportional to current degree (capped at the number of
    existing nodes while the graph is still smaller than m). The result is
    always connected; with m=1 it is a tree.
    """
    if n < 2:
        raise InvalidMError(f"scale-free generation needs n >= 2, got {n}")
    if not 1 <= m < n:
        raise InvalidMError(f"m must satisfy 1 <= m < n, got m={m}, n={n}")
    rng = derive_rng(seed, "gen-scale-free")
    g = Graph(n)
    g.add_edge(0, 1)
    # One pool entry per unit of degree: uniform picks are degree-proportional.
    pool = [0, 1]
    for new in range(2, n):
        want = min(m, new)
        chosen: set[int] = set()
        while len(chosen) < want:
            cand = pool[rng.randrange(len(pool))]
            if cand not in chosen:
                chosen.add(cand)
        for t in sorted(chosen):
            g.add_edge(new, t)
            pool.append(t)
        pool.extend([new] * want)
    return g


def gen_small_world(n: int, k: int, p_rewire: float, seed: int) -> Graph:
    """Watts-Strogatz: ring lattice with each edge's far endpoint rewired.

    Node i starts wired to i+-1..i+-k/2 (mod n). Every lattice edge (i, j) is
    considered once in ascending (i, offset) order; with probability p_rewire
    its far endpoint j is replaced by a uniformly random non-neighbor of i.
    Keeps the edge when no valid replacement is found, so |E| = n*k/2 always.
    """
    if k % 2 != 0 or not 2 <= k < n:
        raise InvalidKError(f"k must be even with 2 <= k < n, got k={k}, n={n}")
    if not 0.0 <= p_rewire <= 1.0:
        raise InvalidProbabilityError(f"p_rewire must be in [0, 1], got {p_rewire}")
    rng = derive_rng(seed, "gen-small-world")
    g = Graph(n)
    half = k // 2
    for i in range(n):
        for off in range(1, half + 1):
            j = (i + off) % n
            if not g.has_edge(i, j):
                g.add_edge(i, j)
    adj = [g.neighbors(i) for i in range(n)]
    for i in range(n):
        for off in range(1, half + 1):
            j = (i + off) % n
            if rng.random() >= p_rewire:
                continue
            new_end = None
            for _ in range(n):
                cand = rng.randrange(n)
                if cand != i and cand not in adj[i]:
                    new_end = cand
                    break
            if new_end is None:
                continue
            adj[i].discard(j)
            adj[j].discard(i)
            adj[i].add(new_end)
            adj[new_end].add(i)
    out = Graph(n)
    for u in range(n):
        for v in adj[u]:
            if u < v:
                out.add_edge(u, v)
    return out


def generate(spec: GeneratorSpec) -> Graph:
    """Build the graph a resolved GeneratorSpec describes."""
    spec = spec.resolved()
    if spec.kind is NetworkKind.SMALL_WORLD:
        return gen_small_world(spec.n, spec.k, spec.p_rewire, spec.seed)
    if spec.kind is NetworkKind.SCALE_FREE:
        return gen_scale_free(spec.n, spec.m, spec.seed)
    return gen_random(spec.n, spec.p_edge, spec.seed)
