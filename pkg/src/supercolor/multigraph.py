"""Loopless multigraphs with dense vertex ids and stable integer edge ids.

Parallel edges are first-class objects: every edge has its own id, so a
coloring is a map edge-id -> color even among parallel edges.  Self-loops are
rejected at construction because every algorithm in this package names two
distinct endpoints of each edge.  All objects are immutable after
construction and every query is pure, so instances may be shared freely.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable


class _GraphQueries:
    """Query mixin shared by full graphs and edge-subgraph views.

    Concrete classes provide ``n``, ``edge_ids()``, ``endpoints()`` and
    ``incident()``; everything else is derived.
    """

    n: int

    def edge_ids(self) -> tuple[int, ...]:
        raise NotImplementedError

    def endpoints(self, e: int) -> tuple[int, int]:
        raise NotImplementedError

    def incident(self, v: int) -> tuple[int, ...]:
        """Edge ids incident to v, ascending."""
        raise NotImplementedError

    @property
    def edge_count(self) -> int:
        return len(self.edge_ids())

    def vertices(self) -> range:
        return range(self.n)

    def _check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise ValueError(f"invalid vertex id {v!r} (n={self.n})")

    def other_end(self, e: int, v: int) -> int:
        a, b = self.endpoints(e)
        if v == a:
            return b
        if v == b:
            return a
        raise ValueError(f"vertex {v} is not an endpoint of edge {e}")

    def degree(self, v: int) -> int:
        """Number of edges incident to v (parallel edges each count)."""
        self._check_vertex(v)
        return len(self.incident(v))

    def multiplicity_at(self, v: int) -> int:
        """Largest parallel class at v: max over neighbors u of |edges v-u|."""
        self._check_vertex(v)
        counts = Counter(self.other_end(e, v) for e in self.incident(v))
        return max(counts.values(), default=0)

    def multiplicity(self) -> int:
        """Largest parallel class over all vertex pairs; 0 if edgeless."""
        return max((self.multiplicity_at(v) for v in self.vertices()), default=0)

    def max_degree(self) -> int:
        return max((self.degree(v) for v in self.vertices()), default=0)

    def is_stable(self, vs: Iterable[int]) -> bool:
        """True iff no edge has both endpoints in vs."""
        s = set(vs)
        for v in s:
            self._check_vertex(v)
        return not any(a in s and b in s for a, b in (self.endpoints(e) for e in self.edge_ids()))


class Multigraph(_GraphQueries):
    """A loopless multigraph on vertices 0..n-1 with edge ids 0..m-1.

    Edge ids follow construction order, which is also the order of the
    ``edges`` array in the JSON graph format.
    """

    __slots__ = ("n", "_pairs", "_incident")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"vertex count must be a nonnegative integer, got {n!r}")
        self.n = n
        pairs = []
        incident: list[list[int]] = [[] for _ in range(n)]
        for eid, edge in enumerate(edges):
            a, b = edge
            if not (isinstance(a, int) and isinstance(b, int)):
                raise ValueError(f"edge {eid} has non-integer endpoints {edge!r}")
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"edge {eid} endpoints {edge!r} out of range (n={n})")
            if a == b:
                raise ValueError(f"edge {eid} is a self-loop at vertex {a}; loops are rejected")
            pairs.append((a, b))
            incident[a].append(eid)
            incident[b].append(eid)
        self._pairs = tuple(pairs)
        self._incident = tuple(tuple(ids) for ids in incident)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._pairs

    def edge_ids(self) -> tuple[int, ...]:
        return tuple(range(len(self._pairs)))

    @property
    def edge_count(self) -> int:
        return len(self._pairs)

    def endpoints(self, e: int) -> tuple[int, int]:
        if not isinstance(e, int) or not 0 <= e < len(self._pairs):
            raise ValueError(f"invalid edge id {e!r} (m={len(self._pairs)})")
        return self._pairs[e]

    def incident(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._incident[v]

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, m={self.edge_count})"


class EdgeSubgraph(_GraphQueries):
    """Read-only view of a host graph restricted to some edges and vertices.

    Kept edges retain their original ids, so colorings computed on the view
    line up with the host graph.  Vertices outside the restriction remain in
    the universe but are isolated in the view.
    """

    __slots__ = ("base", "n", "_keep", "_keep_set", "_incident", "_vertex_set")

    def __init__(self, base: _GraphQueries, keep_edges: Iterable[int], vertex_set=None):
        self.base = base
        self.n = base.n
        vs = frozenset(range(base.n) if vertex_set is None else vertex_set)
        for v in vs:
            base._check_vertex(v)
        self._vertex_set = vs
        keep = []
        incident: dict[int, list[int]] = {}
        for e in sorted(set(keep_edges)):
            a, b = base.endpoints(e)
            if a not in vs or b not in vs:
                raise ValueError(f"edge {e} has an endpoint outside the vertex restriction")
            keep.append(e)
            incident.setdefault(a, []).append(e)
            incident.setdefault(b, []).append(e)
        self._keep = tuple(keep)
        self._keep_set = frozenset(keep)
        self._incident = {v: tuple(ids) for v, ids in incident.items()}

    @property
    def vertex_set(self) -> frozenset:
        return self._vertex_set

    def edge_ids(self) -> tuple[int, ...]:
        return self._keep

    def endpoints(self, e: int) -> tuple[int, int]:
        if e not in self._keep_set:
            raise ValueError(f"edge id {e!r} is not part of this subgraph view")
        return self.base.endpoints(e)

    def incident(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._incident.get(v, ())

    def __repr__(self) -> str:
        return f"EdgeSubgraph(n={self.n}, m={self.edge_count})"


def induced_undirected_subgraph(g: _GraphQueries, oriented: Iterable[int] = (), w: Iterable[int] | None = None) -> EdgeSubgraph:
    """View of g containing the non-oriented edges spanned by vertex set w.

    ``oriented`` lists edge ids to drop; ``w`` defaults to all vertices.
    Original edge ids are preserved.
    """
    dropped = set(oriented)
    vs = frozenset(range(g.n) if w is None else w)
    keep = [e for e in g.edge_ids()
            if e not in dropped and all(x in vs for x in g.endpoints(e))]
    return EdgeSubgraph(g, keep, vs)
