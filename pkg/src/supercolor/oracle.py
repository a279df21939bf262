"""Brute-force feasibility oracles and seeded instance generators.

The oracles enumerate colorings exhaustively (with sound pruning) and are
deliberately independent of the constructive solvers: they certify solver
outputs on desk-scale instances and pin down tightness results such as the
six-color requirement of the triangle with doubled edges.

Enumeration fixes the first edge/element to color 1: relabeling colors
preserves every distinct-color count, so the restriction loses nothing and
shrinks the search several-fold.  Instances whose raw search space k^m
exceeds the budget are refused up front.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import demand, families, supermodular
from .demand import DemandInstance
from .errors import BudgetExceeded, GenerationFailure
from .families import FamilyInstance
from .multigraph import Multigraph, _GraphQueries

DEFAULT_BUDGET = 5_000_000


@dataclass(frozen=True)
class SearchBudget:
    """Enumeration cap and generator seed, bundled for batch runs."""

    max_assignments: int = DEFAULT_BUDGET
    seed: int = 0


def _check_budget(k: int, count: int, budget: int | None) -> int:
    cap = DEFAULT_BUDGET if budget is None else budget
    if count > 0 and k ** count > cap:
        raise BudgetExceeded(
            f"search space {k}^{count} exceeds the budget of {cap} assignments")
    return cap


def brute_force_edge(inst: DemandInstance, budget: int | None = None):
    """Exhaustive feasibility check for a demand instance.

    Returns (feasible, witness): witness is a total edge coloring meeting
    every demand, or None.  Prunes any partial coloring under which some
    vertex can no longer meet its demand.
    """
    g = inst.graph
    edges = list(g.edge_ids())
    _check_budget(inst.k, len(edges), budget)

    uncolored = {v: g.degree(v) for v in g.vertices()}
    palette = {v: {} for v in g.vertices()}
    coloring: dict[int, int] = {}

    def feasible_at(v) -> bool:
        return uncolored[v] + len(palette[v]) >= inst.c[v]

    def assign(e, col) -> bool:
        coloring[e] = col
        ok = True
        for v in g.endpoints(e):
            uncolored[v] -= 1
            palette[v][col] = palette[v].get(col, 0) + 1
            ok = ok and feasible_at(v)
        return ok

    def retract(e):
        col = coloring.pop(e)
        for v in g.endpoints(e):
            uncolored[v] += 1
            palette[v][col] -= 1
            if palette[v][col] == 0:
                del palette[v][col]

    def search(i: int) -> bool:
        if i == len(edges):
            return True
        e = edges[i]
        top = 1 if i == 0 else inst.k
        for col in range(1, top + 1):
            if assign(e, col):
                if search(i + 1):
                    return True
            retract(e)
        return False

    if any(not feasible_at(v) for v in g.vertices()):
        return False, None
    if search(0):
        witness = dict(coloring)
        return True, witness
    return False, None


def brute_force_family(inst: FamilyInstance, budget: int | None = None):
    """Exhaustive feasibility check for a family instance.

    Returns (feasible, witness) with witness a total element assignment, or
    None.  Prunes when some set can no longer reach its requirement.
    """
    _check_budget(inst.k, inst.ground, budget)
    sets = inst.sets
    touching = [[i for i, x in enumerate(sets) if (x >> u) & 1]
                for u in range(inst.ground)]
    pi: dict[int, int] = {}

    def short(i: int) -> bool:
        return supermodular.f_value(sets[i], pi) < inst.g[i]

    def search(u: int) -> bool:
        if u == inst.ground:
            return True
        top = 1 if u == 0 else inst.k
        for col in range(1, top + 1):
            pi[u] = col
            if not any(short(i) for i in touching[u]) and search(u + 1):
                return True
            del pi[u]
        return False

    if any(short(i) for i in range(len(sets))):
        return False, None
    if search(0):
        return True, dict(pi)
    return False, None


def chromatic_index(g: _GraphQueries, budget: int | None = None) -> int:
    """Exact minimum palette size admitting a proper edge coloring.

    Searches k upward from the max degree; the degree-plus-multiplicity
    bound caps the search.  Edgeless graphs need zero colors.
    """
    if g.edge_count == 0:
        return 0
    lo = g.max_degree()
    hi = lo + g.multiplicity()
    for k in range(max(1, lo), hi + 1):
        inst = DemandInstance(g, k, tuple(g.degree(v) for v in g.vertices()))
        feasible, _ = brute_force_edge(inst, budget)
        if feasible:
            return k
    raise AssertionError("degree-plus-multiplicity palette must suffice")


# ---------------------------------------------------------------------------
# Seeded generators


def gen_multigraph(n: int, m: int, max_mult: int, seed: int) -> Multigraph:
    """Random loopless multigraph with per-pair multiplicity <= max_mult."""
    if n < 2 and m > 0:
        raise ValueError("need at least two vertices to place edges")
    if max_mult < 1 and m > 0:
        raise ValueError("max_mult must be positive")
    cap = max_mult * n * (n - 1) // 2
    if m > cap:
        raise GenerationFailure(f"cannot place {m} edges with multiplicity cap {max_mult}")
    rng = random.Random(seed)
    counts: dict[tuple[int, int], int] = {}
    edges = []
    while len(edges) < m:
        a = rng.randrange(n)
        b = rng.randrange(n)
        if a == b:
            continue
        pair = (min(a, b), max(a, b))
        if counts.get(pair, 0) >= max_mult:
            continue
        counts[pair] = counts.get(pair, 0) + 1
        edges.append((a, b))
    return Multigraph(n, edges)


def gen_demand(g: _GraphQueries, k: int, seed: int, max_tries: int = 200) -> DemandInstance:
    """Random valid demand instance on g: draws c(v) <= min(deg, k) and
    redraws until the overloaded set is stable."""
    rng = random.Random(seed)
    for _ in range(max_tries):
        c = tuple(rng.randint(0, min(g.degree(v), k)) for v in g.vertices())
        inst = DemandInstance(g, k, c)
        if not demand.validate(inst):
            return inst
    raise GenerationFailure(
        f"no stable demand vector found for k={k} in {max_tries} tries")


_FAMILY_SHAPES = ("stars", "intervals", "laminar", "random-filtered")


def gen_family(ground: int, k: int, shape: str, seed: int,
               max_tries: int = 300) -> FamilyInstance:
    """Random family instance of the requested shape, guaranteed to pass the
    set-family solver's hypothesis validation."""
    if shape not in _FAMILY_SHAPES:
        raise ValueError(f"unknown shape {shape!r}; pick one of {_FAMILY_SHAPES}")
    rng = random.Random(seed)
    for attempt in range(max_tries):
        inst = _gen_family_once(ground, k, shape, rng)
        if inst is not None and not supermodular.validate(inst):
            return inst
    raise GenerationFailure(f"no valid {shape} family found in {max_tries} tries")


def _gen_family_once(ground: int, k: int, shape: str, rng: random.Random):
    if shape == "stars":
        n = rng.randint(2, max(2, ground))
        try:
            g = gen_multigraph(n, ground, max_mult=min(3, k + 1), seed=rng.randrange(1 << 30))
            inst = gen_demand(g, k, seed=rng.randrange(1 << 30))
        except GenerationFailure:
            return None
        return families.from_graph_stars(g, inst.c, k)

    if shape == "intervals":
        lo_t = max(1, ground - k)
        if lo_t > ground - 1:
            return None
        t = rng.randint(lo_t, ground - 1)
        sets = []
        g_vals = []
        for i in range(ground):
            for j in range(i, ground):
                sets.append(families.mask_of(range(i, j + 1)))
                g_vals.append(max(0, (j - i + 1) - t))
        return FamilyInstance(ground, tuple(sets), tuple(g_vals), k)

    if shape == "laminar":
        blocks: list[tuple[int, int]] = []

        def split(lo, hi):
            blocks.append((lo, hi))
            if hi - lo >= 2 and rng.random() < 0.8:
                mid = rng.randint(lo + 1, hi - 1)
                split(lo, mid)
                split(mid, hi)

        split(0, ground)
        sets = []
        g_vals = []
        seen = set()
        for lo, hi in blocks:
            mask = families.mask_of(range(lo, hi))
            if mask in seen:
                continue
            seen.add(mask)
            sets.append(mask)
            g_vals.append(rng.randint(0, min(hi - lo, k)))
        return FamilyInstance(ground, tuple(sets), tuple(g_vals), k)

    # random-filtered: arbitrary distinct subsets with bounded requirements,
    # kept only if the full hypothesis validation passes.
    count = rng.randint(1, min(8, 2 ** ground - 1))
    universe = list(range(1, 2 ** ground))
    masks = rng.sample(universe, count)
    g_vals = [rng.randint(0, min(m.bit_count(), k)) for m in masks]
    return FamilyInstance(ground, tuple(masks), tuple(g_vals), k)
