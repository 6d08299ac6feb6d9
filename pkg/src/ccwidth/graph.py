"""Immutable undirected simple graphs on vertices 0..n-1.

Adjacency is kept both as per-vertex frozensets (the public view) and as
per-vertex bitmasks, which the exact solvers use for fast subset tests.
Graphs never change after construction, so they are safe to share between
threads and to use as dict keys.

Also provides the two NP-hard scalar parameters needed by the width
inequalities (clique number and induced star number, both computed
exactly), the clique sum of two graphs glued along a shared clique, and
the plain-text edge-list format.
"""

from __future__ import annotations

from typing import Iterable


class Graph:
    """Undirected simple graph: no loops, no parallel edges, vertices 0..n-1."""

    __slots__ = ("n", "_adj", "_bits")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        self.n = n
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u} not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u].add(v)
            adj[v].add(u)
        self._adj: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in adj)
        self._bits: tuple[int, ...] = tuple(
            sum(1 << w for w in s) for s in self._adj
        )

    @property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        return self._adj

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return self._adj[v]

    def neighbor_bits(self, v: int) -> int:
        """Neighborhood of v as a bitmask (bit w set iff vw is an edge)."""
        return self._bits[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self._adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in sorted(self._adj[u]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(s) for s in self._adj) // 2

    def vertices(self) -> range:
        return range(self.n)

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ValueError(f"vertex {v} out of range for n={self.n}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph, rejecting loops and out-of-range indices.

    Duplicate edges (in either orientation) collapse to a single edge.
    """
    return Graph(n, edges)


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    """True iff every two distinct vertices of the set are adjacent.

    The empty set and singletons count as cliques.
    """
    vs = sorted(set(vertices))
    for v in vs:
        g._check_vertex(v)
    for i, u in enumerate(vs):
        ubits = g.neighbor_bits(u)
        for v in vs[i + 1 :]:
            if not (ubits >> v) & 1:
                return False
    return True


def clique_sum_map(g1: Graph, g2: Graph, shared: dict[int, int]) -> dict[int, int]:
    """Vertex map from g2 into the clique sum's numbering.

    Vertices of g1 keep their indices; unshared g2 vertices are appended
    in g2-index order after them.
    """
    inverse = {v2: v1 for v1, v2 in shared.items()}
    mapping: dict[int, int] = {}
    nxt = g1.n
    for v2 in range(g2.n):
        if v2 in inverse:
            mapping[v2] = inverse[v2]
        else:
            mapping[v2] = nxt
            nxt += 1
    return mapping


def clique_sum(g1: Graph, g2: Graph, shared: dict[int, int]) -> Graph:
    """Glue g1 and g2 along a shared clique and return the union graph.

    ``shared`` maps g1 vertices onto the g2 vertices they are identified
    with; it must be injective and its domain/image must induce cliques
    in g1/g2 respectively.  An empty map degenerates to disjoint union.
    The result keeps g1's vertex numbering and appends unshared g2
    vertices in g2-index order.
    """
    if len(set(shared.values())) != len(shared):
        raise ValueError("shared vertex map must be injective")
    for v1, v2 in shared.items():
        g1._check_vertex(v1)
        g2._check_vertex(v2)
    if not is_clique(g1, shared.keys()):
        raise ValueError("shared set does not induce a clique in the first graph")
    if not is_clique(g2, shared.values()):
        raise ValueError("shared set does not induce a clique in the second graph")
    mapping = clique_sum_map(g1, g2, shared)
    n = g1.n + g2.n - len(shared)
    edges = list(g1.edges())
    edges.extend((mapping[u], mapping[v]) for u, v in g2.edges())
    return Graph(n, edges)


def clique_number(g: Graph) -> int:
    """Size of a maximum clique, 0 for the empty graph.

    Branch-and-bound over candidate bitmasks; exact, intended for the
    small graphs this toolkit targets.
    """
    best = 0

    def extend(cand: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        while cand:
            if size + bin(cand).count("1") <= best:
                return
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            extend(cand & g.neighbor_bits(v), size + 1)

    extend((1 << g.n) - 1, 0)
    return best


def _mis_size(bits: int, g: Graph, memo: dict[int, int]) -> int:
    """Maximum independent set size within the vertex bitmask ``bits``."""
    if bits == 0:
        return 0
    cached = memo.get(bits)
    if cached is not None:
        return cached
    # Branch on a vertex of maximum degree inside the candidate set.
    rest = bits
    pick, pick_deg = -1, -1
    while rest:
        v = (rest & -rest).bit_length() - 1
        rest &= rest - 1
        d = bin(g.neighbor_bits(v) & bits).count("1")
        if d > pick_deg:
            pick, pick_deg = v, d
    if pick_deg == 0:
        result = bin(bits).count("1")
    else:
        without = _mis_size(bits & ~(1 << pick), g, memo)
        with_pick = 1 + _mis_size(bits & ~(1 << pick) & ~g.neighbor_bits(pick), g, memo)
        result = max(without, with_pick)
    memo[bits] = result
    return result


def star_number(g: Graph) -> int:
    """Largest number of leaves of an induced star subgraph.

    Equals the maximum over vertices v of the maximum independent set
    size inside N(v); 0 when the graph has no edges.  Exact search over
    neighborhoods; practical up to neighborhood size ~25.
    """
    if g.n == 0:
        raise ValueError("star number is undefined for the empty graph")
    best = 0
    memo: dict[int, int] = {}
    for v in range(g.n):
        nb = g.neighbor_bits(v)
        if nb:
            best = max(best, _mis_size(nb, g, memo))
    return best


def format_edge_list(g: Graph) -> str:
    """Edge-list text format: "n m" then one "u v" line per edge, sorted."""
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format produced by :func:`format_edge_list`."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty edge-list input")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError(f"bad edge-list header: {lines[0]!r}")
    n, m = int(header[0]), int(header[1])
    if len(lines) - 1 < m:
        raise ValueError(f"expected {m} edge lines, got {len(lines) - 1}")
    edges = []
    for ln in lines[1 : m + 1]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line: {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph(n, edges)
