"""Edge orientation pipeline for the general degree/multiplicity coloring bound.

For any multigraph and any palette size k there is a coloring such that every
vertex v sees at least

    min(deg(v), k - mu(v))        colors when deg(v) <= k, and
    min(deg(v) - mu(v), k)        colors when deg(v) >= k,

where mu(v) is the largest parallel class at v.  The construction works in
three stages:

1. orient some edges among the high-degree vertices (deg > k), walking
   simple cycles and leaf-to-leaf paths until each high-degree vertex has
   shed min(deg(v) - k, mu(v)) outgoing edges or no walkable edges remain;
2. run the demand solver on the undirected remainder H with demands derived
   from the case formula above (lowered by the in-degree for high-degree
   vertices, clamped at zero);
3. sweep the oriented edges in id order, giving each one a color absent at
   its head, or color 1 when the head already shows all k colors.

Stage 2's instance provably satisfies the demand solver's preconditions;
this module checks them anyway and aborts with an internal error if they
ever fail.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from . import demand
from .errors import ensure
from .multigraph import EdgeSubgraph, _GraphQueries, induced_undirected_subgraph

Trace = demand.Trace


@dataclass
class OrientationState:
    """Outcome of the orientation stage.

    ``oriented`` maps each oriented edge id to its (tail, head).  ``w_initial``
    holds the high-degree vertices the stage started from, ``w_final`` the
    ones still active at termination.
    """

    graph: _GraphQueries
    k: int
    oriented: dict[int, tuple[int, int]] = field(default_factory=dict)
    w_initial: frozenset = frozenset()
    w_final: frozenset = frozenset()
    removed: dict[int, int] = field(default_factory=dict)  # vertex -> out-degree at removal

    def out_degree(self, v: int) -> int:
        return sum(1 for t, _ in self.oriented.values() if t == v)

    def in_degree(self, v: int) -> int:
        return sum(1 for _, h in self.oriented.values() if h == v)

    def remainder(self) -> EdgeSubgraph:
        """The undirected remainder H with original edge ids."""
        return induced_undirected_subgraph(self.graph, self.oriented.keys())


def _available_adjacency(g: _GraphQueries, oriented, w):
    """Per-vertex lists of (edge id, other end) over unoriented edges in g[w]."""
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in sorted(w)}
    for e in g.edge_ids():
        if e in oriented:
            continue
        a, b = g.endpoints(e)
        if a in w and b in w:
            adj[a].append((e, b))
            adj[b].append((e, a))
    for v in adj:
        adj[v].sort()
    return adj


def _find_cycle(adj):
    """Simple cycle in the available multigraph (parallel pairs count).

    Deterministic: DFS from the smallest vertex, smallest edge id first.
    Returns (vertices, edges) with edges[i] joining vertices[i] to
    vertices[i+1] (cyclically), or None.
    """
    seen_edges: set[int] = set()
    iters: dict[int, object] = {}
    for root in adj:
        if root in iters or not adj[root]:
            continue
        iters[root] = iter(adj[root])
        stack = [root]
        path_edges: list[int] = []
        pos = {root: 0}
        while stack:
            v = stack[-1]
            step = None
            for e, w in iters[v]:
                if e in seen_edges:
                    continue
                seen_edges.add(e)
                step = (e, w)
                break
            if step is None:
                stack.pop()
                pos.pop(v, None)
                if path_edges:
                    path_edges.pop()
                continue
            e, w = step
            if w in pos:
                i = pos[w]
                return stack[i:], path_edges[i:] + [e]
            if w in iters:
                continue
            iters[w] = iter(adj[w])
            stack.append(w)
            pos[w] = len(stack) - 1
            path_edges.append(e)
    return None


def _find_path(adj):
    """Leaf-to-leaf path in the available forest, grown from both ends.

    Both endpoints end up with no available edges outside the path, which is
    exactly what the orientation stage requires of a path.
    """
    start = min(v for v, lst in adj.items() if lst)

    def walk(v0, banned):
        verts = [v0]
        edges = []
        used = set(banned)
        while True:
            ext = None
            for e, w in adj[verts[-1]]:
                if e not in used:
                    ext = (e, w)
                    break
            if ext is None:
                return verts, edges
            used.add(ext[0])
            edges.append(ext[0])
            verts.append(ext[1])
    fwd_v, fwd_e = walk(start, ())
    back_v, back_e = walk(start, fwd_e)
    # stitch: back end ... start ... forward end
    verts = list(reversed(back_v)) + fwd_v[1:]
    edges = list(reversed(back_e)) + fwd_e
    for endpoint in (verts[0], verts[-1]):
        outside = [e for e, _ in adj[endpoint] if e not in set(edges)]
        ensure(not outside, "path endpoint touches available edges outside the path",
               endpoint=endpoint, outside=outside)
    return verts, edges


def orient_edges(g: _GraphQueries, k: int) -> OrientationState:
    """Run the orientation stage to termination."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    w = {v for v in g.vertices() if g.degree(v) >= k + 1}
    st = OrientationState(graph=g, k=k, w_initial=frozenset(w))
    targets = {v: min(g.degree(v) - k, g.multiplicity_at(v)) for v in w}
    out = {v: 0 for v in w}

    while True:
        adj = _available_adjacency(g, st.oriented, w)
        if not any(adj.values()):
            break
        found = _find_cycle(adj)
        if found is None:
            found = _find_path(adj)
        verts, edges = found
        for i, e in enumerate(edges):
            tail = verts[i]
            head = verts[(i + 1) % len(verts)] if len(edges) == len(verts) else verts[i + 1]
            ensure(st.oriented.get(e) is None, "edge oriented twice", edge=e)
            ensure({tail, head} == set(g.endpoints(e)), "walk edge endpoints mismatch", edge=e)
            st.oriented[e] = (tail, head)
            out[tail] += 1
        for v in sorted(w):
            if out[v] == targets[v]:
                w.discard(v)
                st.removed[v] = out[v]

    st.w_final = frozenset(w)
    for v, d in st.removed.items():
        ensure(d == targets[v], "vertex left the active set off-target", vertex=v)
    for v in st.w_initial:
        ensure(st.out_degree(v) <= targets[v], "orientation overshot a vertex", vertex=v)
    return st


def build_demands(st: OrientationState, k: int | None = None) -> demand.DemandInstance:
    """Demand instance on the undirected remainder H.

    Demands follow the two-case formula keyed on deg(v) <= k, lowered by the
    in-degree for high-degree vertices.  Values are kept unclamped: a
    negative demand is vacuous for the output, but clamping it to zero could
    push the vertex into the overloaded set and break its stability, which
    the remainder instance is guaranteed to have only for the raw values
    (the in-degree can exceed min(deg - mu, k)).
    """
    g = st.graph
    k = st.k if k is None else k
    c = []
    for v in g.vertices():
        deg = g.degree(v)
        mu = g.multiplicity_at(v)
        if deg <= k:
            val = min(deg, k - mu)
        else:
            val = min(deg - mu, k) - st.in_degree(v)
        c.append(val)
    return demand.DemandInstance(st.remainder(), k, tuple(c))


def gupta_general_color(g: _GraphQueries, k: int, *, trace: Trace = None,
                        stats: dict | None = None) -> dict[int, int]:
    """Total coloring meeting both degree-case guarantees at every vertex."""
    st = orient_edges(g, k)
    inst = build_demands(st)

    h = inst.graph
    for v in g.vertices():
        ensure(inst.c[v] <= min(h.degree(v), k),
               "derived demand exceeds min(remainder degree, k)", vertex=v)
    s = demand.overloaded_vertices(inst)
    for e in h.edge_ids():
        a, b = h.endpoints(e)
        ensure(not (a in s and b in s),
               "derived overloaded set is not stable in the remainder", edge=e)

    coloring = demand.solve(inst, trace=trace, stats=stats)

    for e in sorted(st.oriented):
        head = st.oriented[e][1]
        used = {coloring[f] for f in g.incident(head) if f in coloring}
        col = next((col for col in range(1, k + 1) if col not in used), 1)
        ensure(col not in used or len(used) >= k,
               "oriented-edge sweep would lose a color at its head", edge=e)
        coloring[e] = col
        if trace:
            trace({"event": "oriented_edge", "edge": e, "head": head, "color": col})

    bad = verify_gupta(g, k, coloring)
    ensure(not bad, "pipeline output failed the two-case verification", vertices=bad)
    return coloring


def verify_gupta(g: _GraphQueries, k: int, coloring: Mapping[int, int]) -> list[int]:
    """Vertices violating either degree-case guarantee (empty list = ok)."""
    seen: list[set] = [set() for _ in range(g.n)]
    for e in g.edge_ids():
        if e not in coloring:
            raise ValueError(f"coloring is not total: edge {e} missing")
        col = coloring[e]
        if not isinstance(col, int) or not 1 <= col <= k:
            raise ValueError(f"edge {e} has color {col!r} outside [1..{k}]")
        a, b = g.endpoints(e)
        seen[a].add(col)
        seen[b].add(col)
    bad = []
    for v in g.vertices():
        deg = g.degree(v)
        mu = g.multiplicity_at(v)
        got = len(seen[v])
        if deg <= k and got < min(deg, k - mu):
            bad.append(v)
        elif deg >= k and got < min(deg - mu, k):
            bad.append(v)
    return bad
