"""Linear orderings, ordered clique covers, and their widths.

A linear ordering of a graph is a permutation of its vertices; its width
is the largest index gap over edges.  An ordered clique cover partitions
the vertex set into cliques c_0..c_t; its width is the largest |j - i|
over edges with one endpoint in c_i and the other in c_j.  Contracting
each clique to a single vertex gives the cover's quotient graph, whose
bandwidth under the identity ordering equals the cover width.

Width over an empty edge set is 0 by convention, so a single-clique
cover of a complete graph has width 0.

Covers carry a reference to the graph they partition, so a cover object
is a self-validating certificate.  ``validate_cover`` is the non-raising
checker used on untrusted (e.g. file-loaded) clique lists.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph


class LinearOrdering:
    """A permutation of the vertices 0..n-1 with its inverse."""

    __slots__ = ("order", "position")

    def __init__(self, order: Sequence[int]):
        order = tuple(order)
        n = len(order)
        position = [-1] * n
        for idx, v in enumerate(order):
            if not 0 <= v < n or position[v] != -1:
                raise ValueError(f"not a permutation of 0..{n - 1}: {order}")
            position[v] = idx
        self.order: tuple[int, ...] = order
        self.position: tuple[int, ...] = tuple(position)

    @classmethod
    def identity(cls, n: int) -> "LinearOrdering":
        return cls(range(n))

    def reversed(self) -> "LinearOrdering":
        return LinearOrdering(tuple(reversed(self.order)))

    def __len__(self) -> int:
        return len(self.order)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearOrdering):
            return NotImplemented
        return self.order == other.order

    def __hash__(self) -> int:
        return hash(self.order)

    def __repr__(self) -> str:
        return f"LinearOrdering({list(self.order)})"


@dataclass(frozen=True)
class CoverCheck:
    """Result of a cover validity check; falsy when invalid, with a reason."""

    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def validate_cover(g: Graph, cliques: Sequence[Iterable[int]]) -> CoverCheck:
    """Check that ``cliques`` is an ordered partition of V(g) into cliques.

    Never raises; returns a falsy :class:`CoverCheck` carrying the first
    problem found (out-of-range vertex, empty class, duplicate vertex,
    uncovered vertex, or a non-clique class).
    """
    seen: set[int] = set()
    materialized: list[list[int]] = []
    for pos, cl in enumerate(cliques):
        vs = sorted(set(cl))
        if not vs:
            return CoverCheck(False, f"empty clique at position {pos}")
        for v in vs:
            if not 0 <= v < g.n:
                return CoverCheck(False, f"vertex {v} out of range for n={g.n}")
            if v in seen:
                return CoverCheck(False, f"duplicate vertex {v}")
            seen.add(v)
        materialized.append(vs)
    for v in range(g.n):
        if v not in seen:
            return CoverCheck(False, f"vertex {v} uncovered")
    for pos, vs in enumerate(materialized):
        for i, u in enumerate(vs):
            ubits = g.neighbor_bits(u)
            for v in vs[i + 1 :]:
                if not (ubits >> v) & 1:
                    return CoverCheck(
                        False,
                        f"class at position {pos} is not a clique: "
                        f"{u} and {v} are not adjacent",
                    )
    return CoverCheck(True)


class OrderedCliqueCover:
    """An ordered partition of V(G) into cliques, bound to its graph.

    Construction validates the partition and raises ``ValueError`` on any
    violation, so existing instances are always well-formed.
    """

    __slots__ = ("graph", "cliques", "_index_of")

    def __init__(self, graph: Graph, cliques: Sequence[Iterable[int]]):
        materialized = tuple(frozenset(cl) for cl in cliques)
        check = validate_cover(graph, materialized)
        if not check:
            raise ValueError(f"invalid clique cover: {check.reason}")
        self.graph = graph
        self.cliques: tuple[frozenset[int], ...] = materialized
        index_of = [0] * graph.n
        for idx, cl in enumerate(materialized):
            for v in cl:
                index_of[v] = idx
        self._index_of: tuple[int, ...] = tuple(index_of)

    @property
    def size(self) -> int:
        """Number of cliques (t + 1 for cliques c_0..c_t)."""
        return len(self.cliques)

    def clique_index(self, v: int) -> int:
        """Index of the clique containing vertex v."""
        self.graph._check_vertex(v)
        return self._index_of[v]

    def reversed(self) -> "OrderedCliqueCover":
        return OrderedCliqueCover(self.graph, tuple(reversed(self.cliques)))

    def as_sorted_tuples(self) -> tuple[tuple[int, ...], ...]:
        """Canonical form: each clique as a sorted tuple, in cover order."""
        return tuple(tuple(sorted(cl)) for cl in self.cliques)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OrderedCliqueCover):
            return NotImplemented
        return self.graph == other.graph and self.cliques == other.cliques

    def __hash__(self) -> int:
        return hash((self.graph, self.cliques))

    def __repr__(self) -> str:
        return f"OrderedCliqueCover({[sorted(c) for c in self.cliques]})"


def ordering_width(g: Graph, ordering: LinearOrdering | Sequence[int]) -> int:
    """Width of a linear ordering: max index gap over edges, 0 if edgeless."""
    if not isinstance(ordering, LinearOrdering):
        ordering = LinearOrdering(ordering)
    if len(ordering) != g.n:
        raise ValueError(f"ordering has {len(ordering)} entries, graph has {g.n}")
    pos = ordering.position
    width = 0
    for u, v in g.edges():
        gap = abs(pos[u] - pos[v])
        if gap > width:
            width = gap
    return width


def cover_width(c: OrderedCliqueCover) -> int:
    """Width of an ordered clique cover: max |j - i| over cross edges."""
    idx = c._index_of
    width = 0
    for u, v in c.graph.edges():
        gap = abs(idx[u] - idx[v])
        if gap > width:
            width = gap
    return width


def cover_graph(c: OrderedCliqueCover) -> Graph:
    """Quotient graph: one vertex per clique, adjacent iff a cross edge exists."""
    idx = c._index_of
    edges = set()
    for u, v in c.graph.edges():
        i, j = idx[u], idx[v]
        if i != j:
            edges.add((min(i, j), max(i, j)))
    return Graph(c.size, sorted(edges))


def format_cover(cliques: Sequence[Iterable[int]]) -> str:
    """Cover text format: "cover N", then one sorted vertex line per clique."""
    rows = [sorted(cl) for cl in cliques]
    lines = [f"cover {len(rows)}"]
    lines.extend(" ".join(str(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def parse_cover_lines(lines: Sequence[str]) -> list[list[int]]:
    """Parse cover-format lines into raw clique lists (no graph validation)."""
    if not lines:
        raise ValueError("empty cover input")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "cover":
        raise ValueError(f"bad cover header: {lines[0]!r}")
    count = int(head[1])
    if len(lines) - 1 < count:
        raise ValueError(f"expected {count} clique lines, got {len(lines) - 1}")
    return [[int(tok) for tok in lines[i + 1].split()] for i in range(count)]


def parse_cover(text: str, graph: Graph) -> OrderedCliqueCover:
    """Parse the cover text format and validate it against ``graph``."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    return OrderedCliqueCover(graph, parse_cover_lines(lines))


def format_ordering(ordering: LinearOrdering) -> str:
    """Ordering text format: "ordering n" then the permutation on one line."""
    return (
        f"ordering {len(ordering)}\n"
        + " ".join(str(v) for v in ordering.order)
        + "\n"
    )


def parse_ordering(text: str) -> LinearOrdering:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty ordering input")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "ordering":
        raise ValueError(f"bad ordering header: {lines[0]!r}")
    n = int(head[1])
    if len(lines) < 2:
        raise ValueError("missing ordering line")
    order = [int(tok) for tok in lines[1].split()]
    if len(order) != n:
        raise ValueError(f"expected {n} entries, got {len(order)}")
    return LinearOrdering(order)
