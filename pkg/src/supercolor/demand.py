"""Demand-driven edge coloring by fan rotation and two-color trail exchange.

Given a multigraph, a palette [1..k] and per-vertex demands c(v), the solver
builds a total edge coloring in which every vertex v sees at least c(v)
distinct colors.  The input must satisfy two preconditions: c(v) <= min(deg(v), k)
for every v, and the "overloaded" vertices with c(v) + mu(v) > k must form a
stable set (mu(v) is the largest parallel class at v).  With c(v) = deg(v)
and k = max_degree + multiplicity the output is a proper edge coloring, which
recovers the classical Vizing bound.

The engine colors edges one at a time while preserving, at every vertex, the
slack inequality

    (uncolored edges at v) + (distinct colors at v) >= c(v).

When a new edge cannot be colored directly, a fan of colored edges around a
pivot vertex is grown (each fan color missing at the previous far endpoint),
and if rotating the fan is still blocked, a maximal trail alternating in two
colors is swapped, Kempe style.  Depending on where the trail ends, one of a
small family of recolorings applies; each is followed by a full recheck of
the slack inequality.  One trail ending can force the pivot to be re-seated
at an overloaded vertex and the augmentation restarted; stability of the
overloaded set guarantees this happens at most once per edge, and the code
checks that bound.

All of the branch-level facts the recolorings rely on are enforced with
``ensure`` checks: a failure aborts with diagnostics and means a bug in this
module, never a property of valid input.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping

from .errors import HypothesisViolation, ensure
from .multigraph import Multigraph, _GraphQueries

Trace = Callable[[dict], None] | None


@dataclass(frozen=True)
class DemandInstance:
    """A multigraph with a palette size k and per-vertex color demands.

    Demands are integers; nonpositive demands are vacuous for the output
    guarantee but still enter the overloaded-set computation, which is what
    the orientation pipeline relies on (its derived demands can be negative).
    """

    graph: _GraphQueries
    k: int
    c: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 1:
            raise ValueError(f"k must be a positive integer, got {self.k!r}")
        c = tuple(self.c)
        if len(c) != self.graph.n:
            raise ValueError(f"demand vector has length {len(c)}, expected {self.graph.n}")
        if any(not isinstance(x, int) for x in c):
            raise ValueError("demands must be integers")
        object.__setattr__(self, "c", c)


def overloaded_vertices(inst: DemandInstance) -> frozenset:
    """Vertices whose demand plus local multiplicity exceeds the palette."""
    g = inst.graph
    return frozenset(v for v in g.vertices() if inst.c[v] + g.multiplicity_at(v) > inst.k)


def validate(inst: DemandInstance) -> list[str]:
    """Check the solver preconditions; return a report (empty means ok).

    Demands above min(deg, k) are rejected, not clamped, so the solver's
    contract matches its guarantee exactly.
    """
    g = inst.graph
    report = []
    for v in g.vertices():
        bound = min(g.degree(v), inst.k)
        if inst.c[v] > bound:
            report.append(f"vertex {v}: demand {inst.c[v]} exceeds min(deg, k) = {bound}")
    s = overloaded_vertices(inst)
    for e in g.edge_ids():
        a, b = g.endpoints(e)
        if a in s and b in s:
            report.append(
                f"edge {e} joins overloaded vertices {a} and {b}: "
                f"the overloaded set {sorted(s)} is not stable")
    return report


class PartialEdgeColoring:
    """Mutable partial edge coloring that tracks per-vertex slack.

    ``color`` maps colored edge ids to colors in [1..k]; everything else is
    uncolored.  The externally observable invariant is slack(v) >= 0 for all
    v, i.e. uncolored(v) + distinct(v) >= c(v).
    """

    def __init__(self, inst: DemandInstance):
        self.inst = inst
        g = inst.graph
        self.color: dict[int, int] = {}
        self._uncolored_at = [g.degree(v) for v in range(g.n)]
        self._palette_at: list[dict[int, int]] = [{} for _ in range(g.n)]

    @property
    def colored(self) -> set:
        return set(self.color)

    def uncolored_at(self, v: int) -> int:
        return self._uncolored_at[v]

    def distinct_at(self, v: int) -> int:
        return len(self._palette_at[v])

    def colors_at(self, v: int):
        """Set of colors currently present on colored edges at v."""
        return self._palette_at[v].keys()

    def slack(self, v: int) -> int:
        return self._uncolored_at[v] + len(self._palette_at[v]) - self.inst.c[v]

    def lowest_missing_color(self, v: int) -> int | None:
        present = self._palette_at[v]
        for col in range(1, self.inst.k + 1):
            if col not in present:
                return col
        return None

    def set_color(self, e: int, col: int) -> None:
        """Color or recolor edge e."""
        g = self.inst.graph
        old = self.color.get(e)
        for v in g.endpoints(e):
            if old is not None:
                self._drop_palette(v, old)
            else:
                self._uncolored_at[v] -= 1
            self._palette_at[v][col] = self._palette_at[v].get(col, 0) + 1
        self.color[e] = col

    def unset_color(self, e: int) -> None:
        g = self.inst.graph
        old = self.color.pop(e)
        for v in g.endpoints(e):
            self._drop_palette(v, old)
            self._uncolored_at[v] += 1

    def _drop_palette(self, v: int, col: int) -> None:
        pal = self._palette_at[v]
        pal[col] -= 1
        if pal[col] == 0:
            del pal[col]

    def slack_violations(self) -> list[int]:
        return [v for v in self.inst.graph.vertices() if self.slack(v) < 0]

    def assert_slack(self, where: str) -> None:
        bad = self.slack_violations()
        ensure(not bad, f"slack inequality violated after {where}", vertices=bad)


def _pick_pivot(state: PartialEdgeColoring, s: frozenset, e0: int) -> tuple[int, int]:
    """Seat the pivot x so the far endpoint is never overloaded.

    If one endpoint is overloaded it must be the pivot; otherwise the lower
    id breaks the tie.
    """
    a, b = state.inst.graph.endpoints(e0)
    ensure(not (a in s and b in s), "both endpoints of an uncolored edge are overloaded",
           edge=e0, endpoints=(a, b))
    if b in s:
        return b, a
    if a in s:
        return a, b
    return (a, b) if a < b else (b, a)


class _Fan:
    """Fan of edges around the pivot x.

    ``edges[0]`` is the uncolored seed; for i >= 1, ``colors[i]`` is the
    color of ``edges[i]`` and misses the previous far endpoint ``tips[i-1]``.
    """

    def __init__(self, x: int, e0: int, y0: int):
        self.x = x
        self.edges = [e0]
        self.tips = [y0]
        self.colors: list[int | None] = [None]
        self.members = {e0}

    @property
    def last(self) -> int:
        return len(self.edges) - 1

    def extension_color_ok(self, state: PartialEdgeColoring, col: int) -> bool:
        """Candidate color must miss the current tip and avoid colors already
        fanned in at repeats of that tip."""
        tip = self.tips[-1]
        if col in state.colors_at(tip):
            return False
        m = self.last
        for j in range(m):
            if self.tips[j] == tip and self.colors[j + 1] == col:
                return False
        return True

    def append(self, e: int, y: int, col: int) -> None:
        self.edges.append(e)
        self.tips.append(y)
        self.colors.append(col)
        self.members.add(e)


def _grow_fan(state: PartialEdgeColoring, s: frozenset, x: int, e0: int, y0: int) -> _Fan:
    """Grow the fan greedily (lowest edge id first) until no extension fits."""
    g = state.inst.graph
    fan = _Fan(x, e0, y0)
    while True:
        chosen = None
        for e in g.incident(x):
            if e in fan.members or e not in state.color:
                continue
            col = state.color[e]
            if not fan.extension_color_ok(state, col):
                continue
            y = g.other_end(e, x)
            if y in s or state.slack(y) != 0:
                continue
            chosen = (e, y, col)
            break
        if chosen is None:
            return fan
        fan.append(*chosen)


def _assert_fan_valid(state: PartialEdgeColoring, s: frozenset, fan: _Fan) -> None:
    """Recheck the five fan conditions from scratch at construction exit."""
    ensure(fan.edges[0] not in state.color, "fan seed must be uncolored")
    seen = set()
    for i, e in enumerate(fan.edges):
        ensure(e not in seen, "fan edges must be distinct", edge=e)
        seen.add(e)
        if i >= 1:
            ensure(e in state.color, "fan edges beyond the seed must be colored", edge=e)
            ensure(state.color[e] == fan.colors[i], "fan color bookkeeping out of date", edge=e)
            ensure(fan.colors[i] not in state.colors_at(fan.tips[i - 1]),
                   "fan color must miss the previous far endpoint", index=i)
    m = fan.last
    for i in range(m):
        for j in range(i + 1, m):
            if fan.tips[i] == fan.tips[j]:
                ensure(fan.colors[i + 1] != fan.colors[j + 1],
                       "repeated fan tips must receive distinct colors", tips=(i, j))
    for i, y in enumerate(fan.tips):
        ensure(y not in s, "fan far endpoints must not be overloaded", vertex=y)
        ensure(state.slack(y) == 0, "fan far endpoints must be slack-tight", vertex=y)


def _grow_trail(state: PartialEdgeColoring, start: int, first_color: int, second_color: int):
    """Maximal trail from start alternating the two colors, lowest edge id first.

    Returns (edges, final_vertex).  Edges are never reused; vertices may be.
    """
    g = state.inst.graph
    cur = start
    need = first_color
    used = set()
    trail = []
    while True:
        nxt = None
        for e in g.incident(cur):
            if e in used:
                continue
            if state.color.get(e) == need:
                nxt = e
                break
        if nxt is None:
            return trail, cur
        used.add(nxt)
        trail.append(nxt)
        cur = g.other_end(nxt, cur)
        need = second_color if need == first_color else first_color


def _swap_trail(state: PartialEdgeColoring, trail: list[int], a: int, b: int) -> None:
    for e in trail:
        state.set_color(e, b if state.color[e] == a else a)


def _rotate_fan(state: PartialEdgeColoring, fan: _Fan, upto: int) -> None:
    """Give each fan edge below ``upto`` the color of its successor."""
    for i in range(upto):
        state.set_color(fan.edges[i], fan.colors[i + 1])


def augment(state: PartialEdgeColoring, e0: int, *, trace: Trace = None,
            stats: dict | None = None) -> None:
    """Color one more edge while preserving the slack inequality.

    ``e0`` must be uncolored.  After the call the colored set has grown by
    exactly one edge (a trail ending at an overloaded vertex may transfer the
    "new" slot to a different edge mid-flight, but the net growth is one).
    """
    inst = state.inst
    if e0 in state.color:
        raise ValueError(f"edge {e0} is already colored")
    s = overloaded_vertices(inst)
    before = len(state.color)

    pending: int | None = e0
    restarts = 0
    while pending is not None:
        pending = _attempt(state, s, pending, trace, stats)
        state.assert_slack("augmentation step")
        if pending is not None:
            restarts += 1
            ensure(restarts <= 1, "pivot re-seating happened twice for one edge", edge=e0)
            if stats is not None:
                stats["restart"] = stats.get("restart", 0) + 1

    ensure(len(state.color) == before + 1, "augmentation must color exactly one new edge")


def _attempt(state: PartialEdgeColoring, s: frozenset, e0: int, trace: Trace,
             stats: dict | None) -> int | None:
    """One augmentation pass.

    Returns None when the colored set grew.  Otherwise the pivot was
    re-seated: the trail ended at the pivot and its last edge leads to an
    overloaded vertex, so that edge was uncolored and its id is returned for
    the caller to finish (the overloaded vertex becomes the new pivot, and
    stability guarantees the follow-up pass cannot re-seat again).
    """
    inst = state.inst
    g = inst.graph
    k = inst.k

    x, y0 = _pick_pivot(state, s, e0)

    def bump(key):
        if stats is not None:
            stats[key] = stats.get(key, 0) + 1

    # Direct extension: the far endpoint has slack to burn.
    if state.slack(y0) > 0:
        col = state.lowest_missing_color(x)
        if col is None:
            col = 1
        state.set_color(e0, col)
        bump("direct")
        if trace:
            trace({"event": "direct", "edge": e0, "color": col})
        return None

    fan = _grow_fan(state, s, x, e0, y0)
    _assert_fan_valid(state, s, fan)
    tip = fan.tips[-1]
    ensure(inst.c[tip] + g.multiplicity_at(tip) <= k,
           "fan tip must satisfy demand + multiplicity <= k", tip=tip)
    ensure(k - state.distinct_at(tip) >= g.multiplicity_at(tip),
           "free colors at the fan tip must cover its multiplicity", tip=tip)

    # Next fan color: missing at the tip and distinct from colors fanned in
    # at earlier occurrences of the tip.
    forbidden = {fan.colors[i + 1] for i in range(fan.last) if fan.tips[i] == tip}
    alpha_next = None
    for col in range(1, k + 1):
        if col not in state.colors_at(tip) and col not in forbidden:
            alpha_next = col
            break
    ensure(alpha_next is not None, "no admissible next fan color at the tip", tip=tip)

    if state.distinct_at(x) == k:
        # Pivot saturated: any color keeps it satisfied; use the fan's first
        # color, which misses y0.
        col = fan.colors[1] if fan.last >= 1 else alpha_next
        state.set_color(e0, col)
        bump("saturated_pivot")
        if trace:
            trace({"event": "saturated_pivot", "edge": e0, "color": col})
        return None

    beta = state.lowest_missing_color(x)

    if beta not in state.colors_at(tip):
        # Rotate the whole fan and close it with beta.
        _rotate_fan(state, fan, fan.last)
        state.set_color(fan.edges[fan.last], beta)
        bump("fan_rotation")
        if trace:
            trace({"event": "fan_rotation", "edges": list(fan.edges), "close": beta})
        return None

    trail, t = _grow_trail(state, tip, beta, alpha_next)
    ensure(len(trail) >= 1, "trail must contain at least one edge", tip=tip)
    cond_missing = (alpha_next not in state.colors_at(t)) or (beta not in state.colors_at(t))
    trail_colors_at_t = {state.color[e] for e in trail if t in g.endpoints(e)}
    cond_closed = {alpha_next, beta} <= trail_colors_at_t
    ensure(cond_missing != cond_closed,
           "trail end must miss a swap color or close on both, exclusively",
           end=t, missing=cond_missing, closed=cond_closed)

    if t == x:
        return _trail_at_pivot(state, s, fan, trail, alpha_next, beta, bump, trace)

    if t in fan.tips[:-1]:
        i = fan.tips.index(t)
        if alpha_next in state.colors_at(t):
            _swap_trail(state, trail, alpha_next, beta)
            _rotate_fan(state, fan, fan.last)
            state.set_color(fan.edges[fan.last], beta)
            bump("trail_tip_swap_full")
            if trace:
                trace({"event": "trail_tip_swap_full", "end": t})
        else:
            ensure(state.color[trail[-1]] == beta,
                   "trail into a fan tip missing the next color must end on beta", end=t)
            _swap_trail(state, trail, alpha_next, beta)
            _rotate_fan(state, fan, i)
            state.set_color(fan.edges[i], beta)
            bump("trail_tip_swap_partial")
            if trace:
                trace({"event": "trail_tip_swap_partial", "end": t, "stop": i})
        return None

    # Trail ends away from the pivot and from every earlier fan tip.
    _swap_trail(state, trail, alpha_next, beta)
    _rotate_fan(state, fan, fan.last)
    state.set_color(fan.edges[fan.last], beta)
    bump("trail_free_end")
    if trace:
        trace({"event": "trail_free_end", "end": t})
    return None


def _trail_at_pivot(state: PartialEdgeColoring, s: frozenset, fan: _Fan, trail: list[int],
                    alpha_next: int, beta: int, bump, trace: Trace) -> int | None:
    """The trail ended at the pivot; resolve via its last edge.

    Returns the id of a freshly uncolored edge when the pivot must be
    re-seated, else None.
    """
    g = state.inst.graph
    x = fan.x
    f_last = trail[-1]
    ensure(state.color[f_last] == alpha_next,
           "a trail can only reach the pivot on the next fan color", edge=f_last)
    y = g.other_end(f_last, x)

    if y in fan.tips[:-1]:
        # The last trail edge is itself a fan edge; swap the trail and rotate
        # the fan up to it.
        ensure(f_last in fan.members and f_last != fan.edges[0] and f_last != fan.edges[-1],
               "trail edge into the pivot must be an interior fan edge", edge=f_last)
        i = fan.edges.index(f_last)
        _swap_trail(state, trail, alpha_next, beta)
        _rotate_fan(state, fan, i)
        bump("trail_pivot_fan_edge")
        if trace:
            trace({"event": "trail_pivot_fan_edge", "edge": f_last})
        return None

    if y in s:
        # Rotate the fan fully (closing with the next color), uncolor the
        # last trail edge and hand it back for a pass pivoted at y.
        _rotate_fan(state, fan, fan.last)
        state.set_color(fan.edges[fan.last], alpha_next)
        state.unset_color(f_last)
        bump("trail_pivot_reseat")
        if trace:
            trace({"event": "trail_pivot_reseat", "edge": f_last, "new_pivot": y})
        return f_last

    ensure(state.slack(y) > 0,
           "non-overloaded vertex before the pivot must have positive slack", vertex=y)
    _rotate_fan(state, fan, fan.last)
    state.set_color(fan.edges[fan.last], alpha_next)
    state.set_color(f_last, beta)
    bump("trail_pivot_strict")
    if trace:
        trace({"event": "trail_pivot_strict", "edge": f_last})
    return None


def solve(inst: DemandInstance, *, trace: Trace = None, stats: dict | None = None) -> dict[int, int]:
    """Color every edge so each vertex v sees at least c(v) distinct colors.

    Raises HypothesisViolation when validate() reports problems.  The result
    maps every edge id to a color in [1..k] and always passes verify().
    """
    report = validate(inst)
    if report:
        raise HypothesisViolation(report)
    state = PartialEdgeColoring(inst)
    state.assert_slack("initial state")
    for e in inst.graph.edge_ids():
        if e not in state.color:
            augment(state, e, trace=trace, stats=stats)
            if stats is not None:
                stats["augmentations"] = stats.get("augmentations", 0) + 1
    bad = verify(inst, state.color)
    ensure(not bad, "solver output failed demand verification", vertices=bad)
    return dict(state.color)


def verify(inst: DemandInstance, coloring: Mapping[int, int]) -> list[int]:
    """Vertices whose demand is unmet (empty list means the coloring is ok).

    The coloring must be total on the instance's edges with colors in [1..k].
    """
    g = inst.graph
    seen: list[set] = [set() for _ in range(g.n)]
    for e in g.edge_ids():
        if e not in coloring:
            raise ValueError(f"coloring is not total: edge {e} missing")
        col = coloring[e]
        if not isinstance(col, int) or not 1 <= col <= inst.k:
            raise ValueError(f"edge {e} has color {col!r} outside [1..{inst.k}]")
        a, b = g.endpoints(e)
        seen[a].add(col)
        seen[b].add(col)
    return [v for v in g.vertices() if len(seen[v]) < inst.c[v]]


def is_proper(g: _GraphQueries, coloring: Mapping[int, int]) -> bool:
    """True iff edges sharing a vertex always have distinct colors."""
    for v in g.vertices():
        cols = [coloring[e] for e in g.incident(v)]
        if len(cols) != len(set(cols)):
            return False
    return True


def vizing_bound(g: _GraphQueries) -> int:
    """Palette size max_degree + multiplicity that always suffices."""
    return g.max_degree() + g.multiplicity()


def vizing_color(g: _GraphQueries, *, trace: Trace = None, stats: dict | None = None) -> dict[int, int]:
    """Proper edge coloring with at most max_degree + multiplicity colors.

    Runs the demand solver with c(v) = deg(v): then no vertex is overloaded
    and meeting every demand forces properness.
    """
    k = max(1, vizing_bound(g))
    inst = DemandInstance(g, k, tuple(g.degree(v) for v in g.vertices()))
    coloring = solve(inst, trace=trace, stats=stats)
    ensure(is_proper(g, coloring), "full-demand coloring must be proper")
    return coloring


def gupta_stable_color(g: _GraphQueries, k: int, *, trace: Trace = None,
                       stats: dict | None = None) -> dict[int, int]:
    """Coloring with |colors at v| >= min(deg(v), k) for every v.

    Requires the vertices with deg(v) + mu(v) > k to form a stable set;
    otherwise a HypothesisViolation is raised.
    """
    inst = DemandInstance(g, k, tuple(min(g.degree(v), k) for v in g.vertices()))
    return solve(inst, trace=trace, stats=stats)
