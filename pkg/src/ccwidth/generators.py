"""Deterministic graph and clique-sum instance generators.

All randomness flows through an explicit ``random.Random`` seeded by the
caller, so a fixed seed reproduces every instance bit for bit.  The
clique-sum generator pairs two random graphs with optimal covers from
the exact solver and a uniformly chosen shared clique, which makes the
recorded input widths true clique cover widths rather than artifacts of
an arbitrary cover choice.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, build_graph, is_clique
from .layout import OrderedCliqueCover, cover_width
from .solvers import DEFAULT_CCW_LIMIT, ccw_exact


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    return build_graph(n, list(combinations(range(n), 2)))


def star_graph(leaves: int) -> Graph:
    """Star with center 0 and the given number of leaves."""
    if leaves < 0:
        raise ValueError("leaf count must be nonnegative")
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must be in [0, 1], got {p}")
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return build_graph(n, edges)


@dataclass(frozen=True)
class CliqueSumInstance:
    """Two graphs with covers and the injective shared-clique map."""

    g1: Graph
    c1: OrderedCliqueCover
    g2: Graph
    c2: OrderedCliqueCover
    shared: dict[int, int]

    @property
    def w1(self) -> int:
        return cover_width(self.c1)

    @property
    def w2(self) -> int:
        return cover_width(self.c2)


def path_sum_instance(t: int) -> CliqueSumInstance:
    """Two paths on 2t+1 vertices glued at their middle vertices.

    Covers are optimal-witness covers from the exact solver; the size
    limit is lifted internally because path partitions (matchings) stay
    tiny at these sizes.
    """
    if t < 1:
        raise ValueError("path half-length t must be >= 1")
    n = 2 * t + 1
    g = path_graph(n)
    witness = ccw_exact(g, limit=max(DEFAULT_CCW_LIMIT, n)).witness
    return CliqueSumInstance(g1=g, c1=witness, g2=g, c2=witness, shared={t: t})


def _cliques_of_size(g: Graph, k: int) -> list[tuple[int, ...]]:
    return [c for c in combinations(range(g.n), k) if is_clique(g, c)]


def random_clique_sum_instance(
    rng: random.Random,
    n_lo: int = 3,
    n_hi: int = 8,
    shared_max: int = 3,
    p_lo: float = 0.2,
    p_hi: float = 0.8,
    min_total_width: int = 0,
    ccw_limit: int | None = DEFAULT_CCW_LIMIT,
    max_attempts: int = 1000,
) -> CliqueSumInstance:
    """Random clique-sum instance with oracle covers and a random shared clique.

    Draws side sizes and edge probabilities, computes optimal covers,
    picks a shared clique size in 1..shared_max (falling back to smaller
    sizes when one side has no clique that large), and identifies the
    two cliques by a random bijection.  Redraws until the total cover
    width reaches ``min_total_width``.
    """
    if not 1 <= n_lo <= n_hi:
        raise ValueError(f"bad side size range [{n_lo}, {n_hi}]")
    if shared_max < 1:
        raise ValueError("shared clique size must be at least 1")
    for _ in range(max_attempts):
        g1 = random_graph(rng.randint(n_lo, n_hi), rng.uniform(p_lo, p_hi), rng)
        g2 = random_graph(rng.randint(n_lo, n_hi), rng.uniform(p_lo, p_hi), rng)
        c1 = ccw_exact(g1, limit=ccw_limit).witness
        c2 = ccw_exact(g2, limit=ccw_limit).witness
        if cover_width(c1) + cover_width(c2) < min_total_width:
            continue
        k = rng.randint(1, min(shared_max, g1.n, g2.n))
        while k > 1 and not (_cliques_of_size(g1, k) and _cliques_of_size(g2, k)):
            k -= 1
        side1 = list(rng.choice(_cliques_of_size(g1, k)))
        side2 = list(rng.choice(_cliques_of_size(g2, k)))
        rng.shuffle(side2)
        shared = dict(zip(side1, side2))
        return CliqueSumInstance(g1=g1, c1=c1, g2=g2, c2=c2, shared=shared)
    raise ValueError(
        f"could not draw an instance with total width >= {min_total_width} "
        f"in {max_attempts} attempts"
    )


def generate(kind: str, **params):
    """Dispatch generator: returns a Graph or a CliqueSumInstance.

    Kinds: path (t), complete (n), star (leaves), random (n, p, seed),
    random-clique-sum (seed plus the keyword options of
    :func:`random_clique_sum_instance`), path-sum (t).
    """
    if kind == "path":
        t = int(params["t"])
        if t < 1:
            raise ValueError("path half-length t must be >= 1")
        return path_graph(2 * t + 1)
    if kind == "complete":
        return complete_graph(int(params["n"]))
    if kind == "star":
        return star_graph(int(params["leaves"]))
    if kind == "random":
        rng = random.Random(f"ccwidth-random-{params['seed']}")
        return random_graph(int(params["n"]), float(params["p"]), rng)
    if kind == "path-sum":
        return path_sum_instance(int(params["t"]))
    if kind == "random-clique-sum":
        rng = random.Random(f"ccwidth-instance-{params.pop('seed')}")
        return random_clique_sum_instance(rng, **params)
    raise ValueError(f"unknown generator kind: {kind!r}")
