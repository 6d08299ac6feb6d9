"""Shared test fixtures and independent brute-force oracles.

The oracles here deliberately avoid the library's search code paths:
bandwidth is minimized over raw permutations, clique cover width over an
independent restricted-growth partition enumeration crossed with part
permutations, and the scalar parameters over plain subset enumeration.
They anchor the solvers' expected values.
"""

from __future__ import annotations

import itertools
import random

from ccwidth import Graph, build_graph


def brute_bandwidth(g: Graph) -> int:
    best = None
    edges = g.edges()
    for perm in itertools.permutations(range(g.n)):
        pos = {v: i for i, v in enumerate(perm)}
        width = max((abs(pos[u] - pos[v]) for u, v in edges), default=0)
        if best is None or width < best:
            best = width
    assert best is not None
    return best


def _all_clique_partitions(g: Graph):
    """Independent partition enumeration: restricted growth strings."""
    n = g.n
    if n == 0:
        yield []
        return

    def grow(assignment: list[int], classes: int):
        v = len(assignment)
        if v == n:
            parts: list[list[int]] = [[] for _ in range(classes)]
            for vert, cls in enumerate(assignment):
                parts[cls].append(vert)
            yield parts
            return
        for cls in range(classes + 1):
            yield from grow(assignment + [cls], max(classes, cls + 1))

    for parts in grow([], 0):
        if all(
            g.has_edge(u, v)
            for part in parts
            for u, v in itertools.combinations(part, 2)
        ):
            yield parts


def brute_ccw(g: Graph) -> int:
    best = None
    edges = g.edges()
    for parts in _all_clique_partitions(g):
        for perm in itertools.permutations(parts):
            idx = {}
            for i, part in enumerate(perm):
                for v in part:
                    idx[v] = i
            width = max((abs(idx[u] - idx[v]) for u, v in edges), default=0)
            if best is None or width < best:
                best = width
    assert best is not None
    return best


def brute_clique_number(g: Graph) -> int:
    best = 0
    for size in range(1, g.n + 1):
        for sub in itertools.combinations(range(g.n), size):
            if all(g.has_edge(u, v) for u, v in itertools.combinations(sub, 2)):
                best = size
    return best


def brute_star_number(g: Graph) -> int:
    best = 0
    for center in range(g.n):
        nbrs = sorted(g.neighbors(center))
        for size in range(1, len(nbrs) + 1):
            for sub in itertools.combinations(nbrs, size):
                if not any(
                    g.has_edge(u, v) for u, v in itertools.combinations(sub, 2)
                ):
                    best = max(best, size)
    return best


def random_graph_corpus(seed: str, count: int, n_lo: int, n_hi: int):
    """Seeded list of random graphs for cross-checking corpora."""
    out = []
    for i in range(count):
        rng = random.Random(f"{seed}-{i}")
        n = rng.randint(n_lo, n_hi)
        p = rng.uniform(0.15, 0.85)
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < p
        ]
        out.append(build_graph(n, edges))
    return out


def all_labeled_graphs(n: int):
    """Every labeled graph on n vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
        yield build_graph(n, edges)
